use thiserror::Error;

/// Errors raised by the library.
///
/// Several variants can only fire when an internal identity fails. They are
/// surfaced as errors rather than panics so a caller can report them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    RemainderNonzero,
    #[error("series coefficient at (t^{t}, x^{x}) is not an integer")]
    NonIntegerCoefficient { t: usize, x: usize },
    #[error("invalid series factor (1 - t^{a} x^{b})")]
    InvalidFactor { a: usize, b: usize },
    #[error("bad parameters for family {family}: {reason}")]
    BadFamilyParams { family: &'static str, reason: &'static str },
    #[error("coprimality required: gcd({k}, {m}) must be 1")]
    CoprimalityRequired { k: u32, m: u32 },
    #[error("k = {k} admits {count} vanishing sums of {m}-th roots of unity; the tables need none")]
    VanishingSums { k: u32, m: u32, count: usize },
    #[error("(binom(n+k, n) - d) = {value} is not divisible by {modulus}")]
    NonIntegralDimension { value: u64, modulus: u32 },
    #[error("constant-term reduction failed at degree {degree}")]
    DegenerateReduction { degree: usize },
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cokernel slice at degree {degree} has dimension {dim} beyond the expected support")]
    StabilizationFailed { degree: usize, dim: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
