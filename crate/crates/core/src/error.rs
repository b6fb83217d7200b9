use thiserror::Error;

use crate::algebra::Var;

/// Errors raised by the exact-arithmetic and counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VarMismatch { left: Var, right: Var },

    #[error("modulus mismatch: q^{left}-1 vs q^{right}-1")]
    ModulusMismatch { left: usize, right: usize },

    #[error("modulus degree must be at least 2, got {0}")]
    ModulusTooSmall(usize),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("expected an odd prime, got {0}")]
    NotOddPrime(usize),

    #[error("enumeration bound exceeded: n = {n} > {max}")]
    EnumerationBound { n: usize, max: usize },

    #[error("residue index j = {j} out of range for p = {p}")]
    ResidueIndex { j: usize, p: usize },

    #[error("k = {k} out of range for n = {n}")]
    EntryIndex { n: usize, k: usize },

    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: String },

    #[error("denominator must have constant term 1")]
    IllFormedDenominator,

    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
