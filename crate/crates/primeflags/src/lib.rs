//! Exact arithmetic for quantum spectra of partial flag varieties and for the
//! prime-constrained composition sequences `lcyr`, `tlcyr` and `ell`.
//!
//! Everything is exact (big integers and rationals) except the Fabry-Lindelöf
//! probes in [`boundary`], which use arbitrary-precision binary floats.

pub mod arith;
pub mod boundary;
pub mod compositions;
pub mod diagonals;
mod error;
pub mod polyring;
pub mod quantum;
pub mod sequences;
pub mod walkgraphs;
pub mod witnesses;

pub use error::{Error, Result};
