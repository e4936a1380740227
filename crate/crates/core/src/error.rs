use thiserror::Error;

/// Errors reported by validating constructors, parsers and guarded
/// enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A cycle list does not describe a partial matching on `{1, .., n}`.
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    /// An integer matrix fails the window rank-matrix characterization.
    #[error("invalid rank matrix: {0}")]
    InvalidRankMatrix(String),

    /// A pair of columns does not form a standard two-column tableau.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// Matrix is not strictly upper triangular where required, or sizes
    /// disagree.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Operands live over different ambient sizes `n`.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An enumeration-based operation was asked to run past its configured
    /// ceiling.
    #[error("guard exceeded: {operation} requested n = {requested}, ceiling is {ceiling}")]
    GuardExceeded {
        operation: &'static str,
        requested: usize,
        ceiling: usize,
    },

    /// A cover move was applied to an involution other than its recorded
    /// source.
    #[error("move mismatch: {0}")]
    MoveMismatch(String),

    /// Text input (cycle list, polynomial, tableau, JSON form) failed to
    /// parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A one-parameter conjugate kept a positive power of the parameter, so
    /// it has no limit at infinity.
    #[error("no limit: positive power of the parameter survives at entry ({row}, {col})")]
    PositivePower { row: usize, col: usize },
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
