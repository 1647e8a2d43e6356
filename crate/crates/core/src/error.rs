use thiserror::Error;

/// Every failure the library can report.
///
/// Domain variants mirror the precondition failures of the individual
/// operations; `IterationCapExceeded` and `NoSolution` indicate internal bugs
/// rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a slope")]
    ZeroOverZero,
    #[error("slope must be finite")]
    InfinityInput,
    #[error("slope {0} is an integer")]
    IntegerSlope(String),
    #[error("continued fraction entries must be nonzero")]
    ZeroEntry,
    #[error("continued fraction collapses (an intermediate tail evaluates to 0)")]
    DivisionCollapse,
    #[error("{0} has odd numerator and odd denominator; no even expansion exists")]
    BothOdd(String),
    #[error("slope {0} outside the admissible range")]
    OutOfRange(String),
    #[error("no normalized representative for the class of {0}")]
    NoRepresentative(String),
    #[error("{0} and {1} are not Farey neighbors")]
    NotNeighbors(String, String),
    #[error("reduction exceeded {0} iterations")]
    IterationCapExceeded(usize),
    #[error("{0} is not a hyperbolic slope")]
    NotHyperbolic(String),
    #[error("{0} has no extra symmetry")]
    ConditionNotMet(String),
    #[error("extra split of {0} has no solution")]
    NoSolution(String),
    #[error("extra split of {0} has {1} distinct solutions")]
    Ambiguous(String, usize),
    #[error("candidate kind {0} does not occur for {1}")]
    KindNotApplicable(String, String),
    #[error("invalid Heckoid index 2n = {0}")]
    InvalidIndex(String),
    #[error("Hecke index {0} is below 3")]
    IndexTooSmall(u32),
    #[error("{0} is a two-component link slope")]
    LinkSlope(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid group table {0}: {1}")]
    InvalidTable(String, String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroOverZero => "ZeroOverZero",
            Error::InfinityInput => "InfinityInput",
            Error::IntegerSlope(_) => "IntegerSlope",
            Error::ZeroEntry => "ZeroEntry",
            Error::DivisionCollapse => "DivisionCollapse",
            Error::BothOdd(_) => "BothOdd",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NoRepresentative(_) => "NoRepresentative",
            Error::NotNeighbors(..) => "NotNeighbors",
            Error::IterationCapExceeded(_) => "IterationCapExceeded",
            Error::NotHyperbolic(_) => "NotHyperbolic",
            Error::ConditionNotMet(_) => "ConditionNotMet",
            Error::NoSolution(_) => "NoSolution",
            Error::Ambiguous(..) => "Ambiguous",
            Error::KindNotApplicable(..) => "KindNotApplicable",
            Error::InvalidIndex(_) => "InvalidIndex",
            Error::IndexTooSmall(_) => "IndexTooSmall",
            Error::LinkSlope(_) => "LinkSlope",
            Error::Parse(_) => "Parse",
            Error::InvalidTable(..) => "InvalidTable",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
