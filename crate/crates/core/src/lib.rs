//! Exact combinatorics of the basic A₁⁽¹⁾-module: 2-cores and 2-quotients,
//! reduced Schur functions, Littlewood–Richardson coefficients, the
//! vertex-operator action, and checks of the weight-space decompositions.

pub mod characters;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod littlewood_richardson;
pub mod partitions;
pub mod symfunc;
pub mod theorems;
pub mod vertex;

pub use error::{Error, Result};
pub use partitions::{staircase, BetaSet, Partition, Sign, Triplet};
pub use symfunc::{reduced_schur, schur, GradedPolynomial, Monomial};
pub use theorems::Weight;
