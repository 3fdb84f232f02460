//! Sandpile model on clique-independent graphs, the (level, delay)
//! bistatistic on sorted recurrent configurations, the bijection onto parking
//! functions carrying (level, delay) to (area, pmaj), and an independent
//! symbolic oracle for the same generating polynomials via the modified
//! Macdonald eigenbasis.
//!
//! Everything is exact: integer grain counts, integer bivariate polynomials
//! in q and t, and exact rational-function arithmetic inside the oracle.

pub mod bijection;
pub mod error;
pub mod graph;
pub mod parking;
pub mod qt;
pub mod sandpile;
pub mod sorted;
pub mod symfunc;
pub mod toppling;

pub use error::{Error, Result};
pub use graph::{CliqueIndependentGraph, Composition};
pub use qt::QtPolynomial;
pub use sandpile::Configuration;
