//! Relative R-polynomials and relative Kazhdan-Lusztig polynomials for the
//! Hermitian symmetric quotients `W/W_J`.
//!
//! The [`closedform`] module evaluates R-polynomials from marked skew
//! diagrams; [`oracle`] computes the same polynomials by Deodhar's recursion
//! inside the Weyl group, and [`verify`] compares the two.

pub mod closedform;
pub mod diagrams;
pub mod error;
pub mod invariance;
pub mod oracle;
pub mod poly;
pub mod sorting;
pub mod verify;

pub use error::{Error, Result};
