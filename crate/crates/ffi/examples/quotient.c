/* cc -Icrates/ffi/include crates/ffi/examples/quotient.c -Ltarget/debug -lcorequot_ffi */
#include <stdio.h>
#include "corequot.h"

int main(int argc, char **argv) {
    const char *text = argc > 1 ? argv[1] : "4,3,1,1";
    CqPartition *y = NULL, *core = NULL, *q0 = NULL, *q1 = NULL;
    if (cq_partition_parse(text, &y) != CQ_STATUS_OK) {
        fprintf(stderr, "error: %s\n", cq_last_error_message());
        return 2;
    }
    cq_two_quotient(y, &core, &q0, &q1);
    char *s[3];
    cq_partition_to_string(core, &s[0]);
    cq_partition_to_string(q0, &s[1]);
    cq_partition_to_string(q1, &s[2]);
    printf("core (%s), quotient (%s), (%s)\n", s[0], s[1], s[2]);

    CqPolynomial *f = NULL;
    char *pretty = NULL;
    cq_schur(y, true, &f);
    cq_polynomial_to_string(f, &pretty);
    printf("reduced Schur: %s\n", pretty);

    for (int i = 0; i < 3; i++) cq_string_free(s[i]);
    cq_string_free(pretty);
    cq_polynomial_free(f);
    cq_partition_free(y);
    cq_partition_free(core);
    cq_partition_free(q0);
    cq_partition_free(q1);
    return 0;
}
