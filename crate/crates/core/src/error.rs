use thiserror::Error;

/// Errors raised by group computations and the verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle string {input:?}: {reason}")]
    Cycle { input: String, reason: String },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("element is not in the group")]
    NotInGroup,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a partition of the domain: {0}")]
    NotPartition(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("chief factors belong to different groups")]
    ForeignFactor,
    #[error("not a chief factor: {0}")]
    NotChiefFactor(String),
    #[error("chief factor is Frattini")]
    FrattiniFactor,
    #[error("no normal subgroup realizes the monolithic quotient")]
    EmptyCrown,
    #[error("{limit} exceeded: {what}")]
    CapExceeded { limit: &'static str, what: String },
    #[error("subgroup violates Scott's lemma: {0}")]
    ScottViolation(String),
    #[error("catalog line {line}: {reason}")]
    Catalog { line: usize, reason: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(limit: &'static str, what: impl Into<String>) -> Self {
        Error::CapExceeded { limit, what: what.into() }
    }

    /// Process exit code used by the CLI: 2 for input errors, 3 for caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::Internal(_) | Error::ScottViolation(_) | Error::EmptyCrown => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
