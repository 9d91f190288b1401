use thiserror::Error;

/// Contract violations raised by the constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("natural numbers start at 1, got 0")]
    ZeroNatural,
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(i64),
    #[error("{d} does not divide {n}")]
    NotADivisor { n: u64, d: u64 },
    #[error("interval family needs rho in {{2, 3}}, got {0}")]
    InvalidFamily(i64),
    #[error("unsupported root of unity order {0}")]
    UnsupportedOrder(u32),
    #[error("operation is not defined for order {0}")]
    OrderMismatch(u32),
    #[error("quadratic form ({a}, {b}, {c}) is not positive definite")]
    NotPositiveDefinite { a: i64, b: i64, c: i64 },
    #[error("series orders differ: {0} vs {1}")]
    OrderDiffers(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
