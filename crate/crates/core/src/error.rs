//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while building or parsing an instance.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("vertex index {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} has non-positive weight {2}")]
    NonPositiveWeight(usize, usize, String),
    #[error("community {0} is empty")]
    EmptyCommunity(usize),
    #[error("weight budget must be positive, got {0}")]
    NonPositiveBudget(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A line-level parse failure of the instance or solution format.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn number(text: &str) -> Self {
        ParseError::new(0, format!("invalid number {text:?}"))
    }

    pub(crate) fn at(mut self, line: usize) -> Self {
        if self.line == 0 {
            self.line = line;
        }
        self
    }
}

/// Errors raised by the solvers. Each solver rejects instances outside its
/// regime instead of silently answering.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("{found} relevant edges exceed the enumeration cap {cap}")]
    RelevantEdgeLimit { found: usize, cap: usize },
    #[error("algorithm requires unit edge weights")]
    NotUnweighted,
    #[error("algorithm requires the {expected} property")]
    PropertyMismatch { expected: &'static str },
    #[error("tree-support applies only to instances with t = 0, got t = {t}")]
    WrongParameterRegime { t: i64 },
    #[error("deletion search requires k = m - ell (= {expected}), got k = {got}")]
    DeletionCountMismatch { expected: i64, got: usize },
    #[error("interrupted")]
    Interrupted,
}

/// Errors from the instance generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("graph is not regular: vertex {0} has degree {1}, vertex {2} has degree {3}")]
    NotRegular(usize, usize, usize, usize),
    #[error("could not sample a community with a universal vertex after {0} retries")]
    GenerationFailed(usize),
    #[error("{0}")]
    InvalidParameter(String),
}
