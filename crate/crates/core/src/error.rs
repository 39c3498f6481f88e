//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrime(u64),
    #[error("chain ring depth m = {0} is below the minimum of 2")]
    DepthTooSmall(u32),
    #[error("modulus polynomial is reducible over F_{0}")]
    ReduciblePolynomial(u64),
    #[error("invalid ring parameters: {0}")]
    InvalidRing(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("index {index} out of range 0..{limit}")]
    IndexOutOfRange { index: u64, limit: u64 },
    #[error("enumeration of {needed} items exceeds the guard of {guard} (set CHAINCODES_MAX_ENUM to raise it)")]
    EnumerationTooLarge { needed: u128, guard: u64 },
    #[error("code must contain at least two codewords")]
    TrivialCode,
    #[error("code has no nonzero codeword")]
    EmptyCode,
    #[error("cardinality {0} is not a power of q = {1}")]
    NotPowerOfQ(u64, u64),
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parameter characterization violated: {0}")]
    CharacterizationViolated(String),
    #[error("t = {t} outside the valid range 1..={k0}")]
    InvalidT { t: u32, k0: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid weights: need 0 < min <= max, got min = {min}, max = {max}")]
    InvalidWeights { min: u64, max: u64 },
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("weight {0} does not occur in the code")]
    WeightNotPresent(u64),
    #[error("graph is not strongly regular: {0}")]
    NotSrg(String),
    #[error("graph is not strongly walk-regular: {0}")]
    NotSwrg(String),
    #[error("set is not a triple sum set: {0}")]
    NotTss(String),
    #[error("set is not stable under unit multiplication: missing {0}")]
    NotUnitStable(String),
    #[error("vector {0} has no unit coordinate")]
    NotRegularVector(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
