//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator factor `{factor}` vanishes under the assignment")]
    VanishingDenominator { factor: String },

    #[error("cannot specialize: {0}")]
    Specialization(String),

    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),

    #[error("parameter constraint violated at {pairs:?}")]
    ConstraintViolation { pairs: Vec<(usize, usize)> },

    #[error("datum is not of recognized finite type")]
    NotFiniteType,

    #[error("vector {0} is not in the positive root cone")]
    NotPositive(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("q_binomial requires k <= n, got n = {n}, k = {k}")]
    BinomialRange { n: u32, k: u32 },

    #[error("element lies outside the Borel subalgebra: {0}")]
    OutsideBorel(String),

    #[error("ideal reduction undecided at bound {bound}")]
    Undecided { bound: usize },

    #[error("closure not reached within {depth} lowering steps")]
    NotClosed { depth: usize },

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("root-of-unity hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("bicharacter gauge violated: {0}")]
    Gauge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
