use thiserror::Error;

use crate::matrix::Matrix;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Field construction with a composite or unit modulus.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Syndrome keys are one byte per entry, so moduli must fit in a u8.
    #[error("modulus {0} exceeds the supported maximum of 255")]
    ModulusTooLarge(u64),
    /// Mixed-modulus arithmetic is never coerced.
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{op}: shape mismatch, {lhs_rows}x{lhs_cols} against {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },
    #[error("zero has no multiplicative inverse")]
    NoInverse,
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not a codeword of this code")]
    NotACodeword,
    #[error("code has dimension 0, so it has no nonzero codeword")]
    EmptyCode,
    /// Two weight-1 errors share a syndrome, or a weight-1 error has
    /// syndrome zero. Either way the minimum distance is below 3 and
    /// single-error correction is impossible.
    #[error("ambiguous syndrome: {0} (minimum distance is below 3)")]
    AmbiguousSyndrome(String),
    /// The received word has a nonzero syndrome that no weight-1 error
    /// produces: more than one symbol error, or a code with d < 3.
    #[error("uncorrectable word: syndrome matches no weight-1 error")]
    Uncorrectable { syndrome: Matrix },
    #[error("enumeration needs {needed} words, over the limit of {limit}")]
    EnumerationLimit { needed: u128, limit: u128 },
    #[error("invalid mask: {0}")]
    InvalidMask(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("brute-force group enumeration is capped at {cap} vertices, got {n}")]
    PermutationCap { n: usize, cap: usize },
    #[error("permutation is not an automorphism of the given graph")]
    NotAutomorphism,
    #[error("{0}")]
    Precondition(String),
    /// A property the construction guarantees failed to hold on concrete
    /// inputs. Carries the witness so the failure can be reported.
    #[error("diagnostic: {0}")]
    Diagnostic(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
