//! Exact genus-`g` Tutte polynomials of matroids on up to 24 elements.
//!
//! - [`matroid`]: rank oracles, rank tables, the `R`/`Q` and `S`/`S'`
//!   constructions, axiom checks and brute-force isomorphism.
//! - [`poly`]: sparse integer polynomials over the genus-`g` variables.
//! - [`tutte`]: the classical Tutte polynomial (three ways) and the genus-`g`
//!   enumeration engine.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod matroid;
pub mod poly;
pub mod tutte;
