//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong in exact computations on monomials,
/// series, and algebra presentations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in polynomial rings with different variable counts.
    #[error("ambient dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A weight vector entry was zero (weights must be >= 1 so each graded
    /// component stays finite-dimensional).
    #[error("weight vector entry {index} is zero; all weights must be >= 1")]
    ZeroWeight { index: usize },

    /// A matrix order failed the column criterion: the first row with a
    /// nonzero entry in some column must be positive there, otherwise some
    /// variable would compare below 1.
    #[error("invalid monomial order: first nonzero entry in column {column} is negative")]
    InvalidOrder { column: usize },

    /// Leading term of the zero polynomial requested.
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    /// A generator violated a presentation invariant.
    #[error("invalid generator at position {index}: {reason}")]
    InvalidGenerator { index: usize, reason: String },

    /// A matrix was not rectangular or an index was out of range.
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    /// `pivot_order` was not a permutation of the column indices.
    #[error("pivot order is not a permutation of 0..{cols}")]
    BadPivotOrder { cols: usize },

    /// Enumeration would store more elements than the configured cap.
    #[error("capacity exceeded: {count} elements over the configured limit {limit}")]
    CapacityExceeded { count: usize, limit: usize },

    /// Bounded search for a monoid factorization ran out of nodes.
    #[error("factorization search exceeded its node budget of {budget}")]
    SearchBudget { budget: usize },

    /// Subduction did not terminate within the allowed number of steps.
    #[error("subduction did not finish within {max_steps} steps; remainder still reducible")]
    SubductionBudget { max_steps: usize },

    /// A series operation hit a precondition violation.
    #[error("series precondition violated: {0}")]
    SeriesPrecondition(String),

    /// Multiplying a series by (1 - t^h) produced a negative coefficient:
    /// the degree-h element is not regular at this truncation.
    #[error("not a regular element: coefficient at degree {degree} becomes negative")]
    NotRegular { degree: usize },

    /// A series coefficient was negative where a Poincare series was expected.
    #[error("negative coefficient at degree {degree} in a Poincare series")]
    NegativeCoefficient { degree: usize },

    /// Text input failed to parse.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Unknown gallery case id.
    #[error("unknown case id `{id}`; valid ids: {valid}")]
    UnknownCase { id: String, valid: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
