use thiserror::Error;

/// Errors reported by field construction, element I/O and the construction
/// preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree >= 1 with coefficients in [0, p)")]
    NotMonic,
    #[error("modulus is reducible (has an irreducible factor of degree {factor_degree})")]
    Reducible { factor_degree: usize },
    #[error("field too large: p^n must fit in 63 bits")]
    FieldTooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus is not primitive; generator powers g^k are unavailable")]
    NotPrimitive,
    #[error("{k} does not divide the extension degree {n}")]
    NotADivisor { k: usize, n: usize },
    #[error("element does not lie in the subfield of degree {k}")]
    NotInSubfield { k: usize },
    #[error("exponent {d} out of range [0, {bound})")]
    OutOfRange { d: u64, bound: u64 },
    #[error("binomial coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("frobenius power r={r} must satisfy 1 <= r < n={n}")]
    InvalidFrobeniusPower { r: usize, n: usize },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("extension degree must be even")]
    OddDegree,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("construction is defined over ternary fields only (p = 3)")]
    NotTernary,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("extension degree too small: {0}")]
    DegreeTooSmall(&'static str),
    #[error("u must lie outside the prime field")]
    UInPrimeField,
    #[error("spectrum is not bent")]
    NotBent,
    #[error("operation requires a single-variable domain")]
    PairDomainUnsupported,
    #[error("table has wrong length or an entry outside [0, p)")]
    BadTable,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
