//! Exact integer and rational linear algebra.

mod matrix;
mod signature;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use signature::{signature, SignatureTriple};
pub use snf::{kernel_basis, smith_normal_form, SnfResult};
pub use solve::{solve_rational, RationalSolution, RationalSolver};

pub(crate) use signature::check_symmetric;
