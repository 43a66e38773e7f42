use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("scalar modes differ")]
    ModeMismatch,
    #[error("ring map expects {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("ideal has no Groebner basis and autocompute is disabled")]
    NoGb,
    #[error("Groebner budget of {max_pairs} S-pairs exceeded")]
    BudgetExceeded { max_pairs: u64 },
    #[error("wall-clock budget of {seconds}s exceeded")]
    DeadlineExceeded { seconds: u64 },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("operation unsupported in {0}")]
    ModeUnsupported(String),
    #[error("no parametrization is known for a user-supplied multiplication table")]
    UnsupportedProvenance,
    #[error("sections are linearly dependent")]
    DependentSections,
    #[error("indices do not match the requested remark case: {0}")]
    CaseMismatch(String),
    #[error("inclusion matrix does not have full column rank")]
    RankDeficientInclusion,
    #[error("base quadric of rank {rank} is not a sum of at most three squares")]
    NotSumOfSquares { rank: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for the resource-limit outcomes that certificates report as inconclusive.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::DeadlineExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
