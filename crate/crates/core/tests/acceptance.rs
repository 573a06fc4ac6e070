//! Acceptance suite. Each test is one exit criterion; it prints a single
//! PASS/FAIL line with its runtime and budget.
//!
//! Run with `cargo test -p corequot --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use clap::Parser;
use corequot::characters::{count_odd_partitions, CharacterEvaluator, CycleType};
use corequot::cli::{execute, CommandRequest, Status};
use corequot::littlewood_richardson::{lr_coefficient, lr_expand_product};
use corequot::partitions::enumerate_partitions;
use corequot::symfunc::schur_expand;
use corequot::theorems::{self, partitions_up_to, verify_theorem2, verify_theorem3, Weight};
use corequot::vertex::{self, odd_monomials_up_to, OddPolynomial, Operator};
use corequot::{reduced_schur, schur, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use common::{cycle_lengths, determinantal_character, domino_parities, p, permutations};

fn criterion(id: u32, name: &str, budget: Duration, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let verdict = match (&outcome, elapsed <= budget) {
        (Ok(()), true) => "PASS",
        _ => "FAIL",
    };
    println!("[{verdict}] criterion {id:>2}: {name} ({elapsed:.2?}, budget {budget:?})");
    if let Err(msg) = outcome {
        panic!("criterion {id} failed: {msg}");
    }
    assert!(elapsed <= budget, "criterion {id} exceeded its budget: {elapsed:?} > {budget:?}");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_01_worked_example() {
    let y = p(&[4, 3, 1, 1]);
    let request = CommandRequest::try_parse_from(["corequot", "quotient", "4,3,1,1"]).unwrap();
    criterion(1, "quotient of 4,3,1,1", Duration::from_millis(1), || {
        let beta = y.beta_set(4).map_err(|e| e.to_string())?;
        let t = y.two_quotient();
        ensure(beta.entries() == [7, 5, 2, 1], || format!("beta-set {:?}", beta.entries()))?;
        ensure(t.core == p(&[2, 1]), || format!("core {}", t.core))?;
        ensure(t.quotient0 == p(&[1]), || format!("quotient0 {}", t.quotient0))?;
        ensure(t.quotient1 == p(&[1, 1]), || format!("quotient1 {}", t.quotient1))?;
        let payload = execute(&request).report.payload.ok_or("no payload")?;
        ensure(payload["beta_set"] == serde_json::json!([7, 5, 2, 1]), || payload.to_string())?;
        ensure(payload["core"] == "2,1", || payload.to_string())?;
        ensure(payload["quotient0"] == "1", || payload.to_string())?;
        ensure(payload["quotient1"] == "1,1", || payload.to_string())
    });
}

#[test]
fn criterion_02_degree_four_table() {
    criterion(2, "degree-4 reduced Schur table", Duration::from_millis(10), || {
        let table = [
            (p(&[4]), "1/24·t1^4 + t1·t3"),
            (p(&[1, 1, 1, 1]), "1/24·t1^4 + t1·t3"),
            (p(&[3, 1]), "1/8·t1^4"),
            (p(&[2, 1, 1]), "1/8·t1^4"),
            (p(&[2, 2]), "1/12·t1^4 - t1·t3"),
        ];
        for (shape, want) in table {
            let got = reduced_schur(&shape);
            ensure(got.to_string() == want, || format!("S^red[{shape}] = {got}, want {want}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_03_theorem2_ranks() {
    criterion(3, "basis rank equals p(n) for r <= 3, n <= 6", Duration::from_secs(120), || {
        for r in 0..=3 {
            for n in 0..=6 {
                let rep = verify_theorem2(Weight::new(r, n));
                let p_n = enumerate_partitions(n).len();
                ensure(rep.rank == p_n && rep.pass, || {
                    format!("weight (r={r}, n={n}): rank {} vs p(n) = {p_n}", rep.rank)
                })?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_theorem3() {
    criterion(4, "LR formula equals exact decomposition for |Y| <= 14", Duration::from_secs(600), || {
        let all = partitions_up_to(14);
        ensure(all.len() == 508, || format!("{} partitions enumerated", all.len()))?;
        for y in &all {
            let rep = verify_theorem3(y);
            ensure(rep.matches, || {
                format!("{y}: formula {:?} solved {:?}", rep.formula, rep.solved)
            })?;
        }
        let s = |parts: &[usize]| reduced_schur(&p(parts));
        ensure(s(&[4]) == s(&[1, 1, 1, 1]), || "S(4) != S(1^4)".into())?;
        ensure(s(&[3, 1]) == s(&[2, 1, 1]), || "S(3,1) != S(2,1^2)".into())?;
        ensure(s(&[2, 2]) == &s(&[2, 1, 1]) - &s(&[4]), || "S(2^2) != S(2,1^2) - S(4)".into())
    });
}

#[test]
fn criterion_05_multiplicities() {
    criterion(5, "Σ p(n) over weights of degree d equals p_odd(d), d <= 40", Duration::from_secs(1), || {
        let rep = theorems::multiplicity_report(40);
        ensure(rep.pass && rep.rows.len() == 41, || "multiplicity report failed".into())?;
        // independent recount: enumerate the weights by brute force
        for d in 0..=40usize {
            let mut total = BigInt::zero();
            for r in 0..=d {
                for n in 0..=d {
                    if 2 * n + r * (r + 1) / 2 == d {
                        total += corequot::characters::count_partitions(n);
                    }
                }
            }
            ensure(total == count_odd_partitions(d), || format!("degree {d}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_gauss_identity() {
    criterion(6, "q-series identity to order 80", Duration::from_secs(1), || {
        let rep = theorems::gauss_series_check(80);
        ensure(rep.pass && rep.lhs.len() == 81, || "series differ".into())?;
        for (n, c) in rep.rhs.iter().enumerate() {
            ensure(*c == count_odd_partitions(n).to_string(), || format!("coefficient {n}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_characters() {
    criterion(7, "character orthogonality (<= 8) and permutation oracle (<= 6)", Duration::from_secs(60), || {
        for n in 0..=8 {
            let shapes = enumerate_partitions(n);
            let classes: Vec<CycleType> = shapes.iter().cloned().map(CycleType::new).collect();
            let table: Vec<Vec<BigInt>> = shapes
                .iter()
                .map(|s| {
                    let mut ev = CharacterEvaluator::new();
                    classes.iter().map(|c| ev.character(s, c).unwrap()).collect()
                })
                .collect();
            for (i, row_i) in table.iter().enumerate() {
                for (j, row_j) in table.iter().enumerate() {
                    let mut sum = BigRational::zero();
                    for (k, class) in classes.iter().enumerate() {
                        sum += BigRational::new(&row_i[k] * &row_j[k], class.centralizer_order());
                    }
                    let want = if i == j { BigRational::one() } else { BigRational::zero() };
                    ensure(sum == want, || format!("<{}, {}> = {sum}", shapes[i], shapes[j]))?;
                }
            }
            for (k, class) in classes.iter().enumerate() {
                let col: BigInt = table.iter().map(|row| &row[k] * &row[k]).sum();
                ensure(col == class.centralizer_order(), || format!("column {class}"))?;
            }
        }
        for n in 0..=6 {
            for shape in enumerate_partitions(n) {
                let mut ev = CharacterEvaluator::new();
                for perm in permutations(n) {
                    let cycles = cycle_lengths(&perm);
                    let class = CycleType::new(Partition::new(cycles.clone()).unwrap());
                    let mn = ev.character(&shape, &class).unwrap();
                    let oracle = determinantal_character(&shape, &cycles);
                    ensure(mn == oracle, || format!("χ_{shape}({class}): {mn} vs {oracle}"))?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_lr_oracle() {
    criterion(8, "LR expansion equals Schur product expansion for |μ|+|ν| <= 8", Duration::from_secs(120), || {
        for total in 0..=8 {
            for a in 0..=total {
                for mu in enumerate_partitions(a) {
                    for nu in enumerate_partitions(total - a) {
                        let lr = lr_expand_product(&mu, &nu);
                        let product = &schur(&mu) * &schur(&nu);
                        let expanded = schur_expand(&product, total).map_err(|e| e.to_string())?;
                        let as_rational: BTreeMap<Partition, BigRational> = lr
                            .iter()
                            .map(|(k, &v)| (k.clone(), BigRational::from_integer(v.into())))
                            .collect();
                        ensure(as_rational == expanded, || format!("S_{mu} · S_{nu}"))?;
                        for lambda in enumerate_partitions(total) {
                            ensure(
                                lr_coefficient(&lambda, &mu, &nu) == lr_coefficient(&lambda, &nu, &mu),
                                || format!("symmetry at {lambda}/{mu},{nu}"),
                            )?;
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_vertex_relations() {
    criterion(9, "Heisenberg and vertex brackets on monomials of degree <= 10", Duration::from_secs(120), || {
        let int = |n: i64| BigRational::from_integer(n.into());
        let odd: Vec<i64> = (-7..=7).filter(|j: &i64| j % 2 != 0).collect();
        for &i in &odd {
            for &j in &odd {
                let want = if i + j == 0 { vec![(Operator::Identity, int(i))] } else { vec![] };
                let bad = vertex::check_relation(Operator::Heisenberg(i), Operator::Heisenberg(j), &want, 10)
                    .map_err(|e| e.to_string())?;
                ensure(bad.is_none(), || format!("[a{i}, a{j}] fails on {}", bad.unwrap()))?;
            }
        }
        for &j in &odd {
            for k in -4..=4 {
                let want = vec![(Operator::Vertex(j + k), int(2))];
                let bad = vertex::check_relation(Operator::Heisenberg(j), Operator::Vertex(k), &want, 10)
                    .map_err(|e| e.to_string())?;
                ensure(bad.is_none(), || format!("[a{j}, X{k}] fails on {}", bad.unwrap()))?;
            }
        }
        for mono in odd_monomials_up_to(10) {
            let f = OddPolynomial::monomial(mono.clone()).unwrap();
            for k in -4..=4i64 {
                let g = vertex::vertex_apply(k, &f);
                let want = mono.degree() as i64 - k;
                ensure(g.as_poly().terms().all(|(m, _)| m.degree() as i64 == want), || {
                    format!("X{k} on {mono} is not of degree {want}")
                })?;
            }
        }
        let x0 = vertex::vertex_apply(0, &OddPolynomial::one());
        ensure(x0.to_string() == "-1/2", || format!("X0(1) = {x0}"))
    });
}

#[test]
fn criterion_10_two_sign() {
    criterion(10, "2-sign independent of removal order for |Y| <= 10", Duration::from_secs(60), || {
        for y in partitions_up_to(10) {
            let parities = domino_parities(y.parts());
            ensure(parities.len() == 1, || format!("{y}: parities {parities:?}"))?;
            let q = *parities.iter().next().unwrap();
            let want = if q == 0 { 1 } else { -1 };
            ensure(y.two_sign().value() == want, || format!("{y}: sign {}", y.two_sign()))?;
        }
        Ok(())
    });
}

#[test]
fn verification_commands_exit_cleanly() {
    // the CLI paths exercised by the criteria report pass
    for argv in [
        vec!["corequot", "verify", "theorem3", "--max-size", "10"],
        vec!["corequot", "verify", "theorem2", "--r", "1", "--n", "3"],
        vec!["corequot", "verify", "multiplicity", "--max-degree", "40"],
        vec!["corequot", "verify", "gauss", "--order", "80"],
    ] {
        let run = execute(&CommandRequest::try_parse_from(argv.clone()).unwrap());
        assert_eq!(run.report.status, Status::Pass, "{argv:?}");
    }
}
