//! Exact symbolic computation of the pairing <nabla e_n, e_mu h_nu> through
//! the modified Macdonald eigenbasis of nabla, entirely independent of the
//! sandpile and parking routes.

mod expr;
mod macdonald;
mod partition;
mod poly;
mod ratio;

pub use expr::{Basis, SymFuncExpr};
pub use macdonald::{SymFuncOracle, DEFAULT_ORACLE_MAX_N, HARD_ORACLE_MAX_N};
pub use partition::{
    add_horizontal_strip, add_vertical_strip, character, partitions_of, Partition,
};
pub use poly::ZPoly;
pub use ratio::QtRational;
