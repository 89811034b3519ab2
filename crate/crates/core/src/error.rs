use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A cyclic factor below 2, or a group too large to represent.
    InvalidSpec(String),
    /// An element whose shape or residues do not match its group.
    InvalidElement(String),
    /// A malformed graph (loops, duplicate edges, disconnected tree, ...).
    InvalidGraph(String),
    /// Labels and graph disagree in size or group.
    SizeMismatch(String),
    /// Argument outside the domain of a decision procedure.
    Domain(String),
    /// Input violates the precondition of a construction.
    Precondition(String),
    /// The construction does not apply to this group.
    Inapplicable(String),
    /// Enumeration cap exceeded.
    CapExceeded { limit: u64, requested: u64 },
    /// A search route ran out of budget.
    BudgetExhausted,
    /// A constructed labeling failed its own verifier.
    VerificationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpec(s) => write!(f, "invalid group spec: {s}"),
            Error::InvalidElement(s) => write!(f, "invalid element: {s}"),
            Error::InvalidGraph(s) => write!(f, "invalid graph: {s}"),
            Error::SizeMismatch(s) => write!(f, "size mismatch: {s}"),
            Error::Domain(s) => write!(f, "domain error: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::Inapplicable(s) => write!(f, "construction not applicable: {s}"),
            Error::CapExceeded { limit, requested } => {
                write!(f, "enumeration cap exceeded ({requested} > {limit})")
            }
            Error::BudgetExhausted => f.write_str("search budget exhausted"),
            Error::VerificationFailed(s) => write!(f, "construction failed verification: {s}"),
        }
    }
}

impl core::error::Error for Error {}
