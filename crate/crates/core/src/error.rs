use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("dangling identifier: {0}")]
    DanglingId(String),
    #[error("unsupported substitution {outer} o{pos} {inner}")]
    UnsupportedSubstitution {
        outer: String,
        pos: usize,
        inner: String,
    },
    #[error("typing violation: {0}")]
    TypingViolation(String),
    #[error("search bound exceeded: {what} has size {size}, bound {bound}")]
    SearchBoundExceeded {
        what: String,
        size: usize,
        bound: usize,
    },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("multiple solutions: {0}")]
    MultipleSolutions(String),
    #[error("universality broken: {0}")]
    UniversalityBroken(String),
    #[error("inconsistent verdicts: {0}")]
    InconsistentVerdicts(String),
    #[error("axiom transfer failure: {0}")]
    AxiomTransferFailure(String),
    #[error("no isomorphism found: {0}")]
    NoIsomorphismFound(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("version mismatch: {0}")]
    VersionMismatch(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

impl Error {
    /// True for errors that can only arise from a bug in this library,
    /// never from a well-formed but failing input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InconsistentVerdicts(_) | Error::UniversalityBroken(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
