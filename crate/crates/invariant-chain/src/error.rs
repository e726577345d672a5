//! Error type shared by every module of the crate.

use crate::var::VarRef;
use thiserror::Error;

/// Errors produced by construction, arithmetic, and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Indeterminate indices start at 1.
    #[error("invalid indeterminate index {0} (indices start at 1)")]
    InvalidIndex(u32),

    /// Operands live in different coefficient domains (characteristic or
    /// truncation degree differ).
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// A substitution map is missing the image of a variable that occurs.
    #[error("incomplete substitution: no image for {0}")]
    IncompleteSubstitution(VarRef),

    /// Division by the zero rational function.
    #[error("division by zero")]
    DivisionByZero,

    /// Inversion of a series whose constant term is zero.
    #[error("series is not a unit: constant term is zero")]
    NonUnit,

    /// Retruncation cannot raise the truncation degree.
    #[error("cannot extend truncation from degree {have} to {want}")]
    CannotExtend { have: u32, want: u32 },

    /// Matrix shape violation (non-square input or dimension mismatch).
    #[error("shape error: {0}")]
    Shape(String),

    /// Linear solve on a singular matrix.
    #[error("singular matrix")]
    Singular,

    /// An automorphism power outside the configured iteration budget.
    #[error("power {k} exceeds the configured limit {limit}")]
    PowerLimit { k: i64, limit: u32 },

    /// The derivation engine needs truncation degree >= 4.
    #[error("insufficient truncation degree {have}, need at least {need}")]
    InsufficientTrunc { have: u32, need: u32 },

    /// Invalid input to a classification or configuration routine.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text-grammar parse failure.
    #[error("parse error: {0}")]
    Parse(String),

    /// A verification assertion failed; the witness explains where.
    #[error("verification failed: {0}")]
    Verification(String),

    /// An internal invariant was violated; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
