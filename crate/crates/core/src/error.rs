use alloc::string::String;

/// Errors raised anywhere in the core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("context mismatch: {0}")]
    Context(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured step or term budget ran out. The input is not wrong,
    /// it is just too large for the configured limits.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Generic-choice computations disagreed between seeds.
    #[error("seed instability: {0}")]
    SeedInstability(String),

    /// The ideal is the unit ideal, so the scheme it cuts out is empty.
    #[error("empty scheme: the ideal is (1)")]
    EmptyScheme,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Data violates a structural invariant (bad poset, free stratum with
    /// nonzero Euler characteristic, unknown labels, ...).
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
