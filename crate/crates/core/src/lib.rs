//! Exact realization of multi-parameter quantum groups as quantum
//! quasi-symmetric algebras.

pub mod cartan;
pub mod error;
pub mod grouplike;
pub mod qqsa;
pub mod repr;
pub mod scalars;
pub mod twist;
pub mod uq;

pub use error::{Error, Result};
