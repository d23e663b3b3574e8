use alloc::string::String;
use core::fmt;

/// Errors raised by the solvers, the reductions and the oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed caller input (empty weights, arity below 2, ...).
    InvalidInput(String),
    /// A leaf sequence that no tree over the given levels can realize.
    InvalidLeafSequence,
    /// Fewer leaves than weights.
    InsufficientLeaves { have: usize, need: usize },
    /// No finished tree exists within the level limit.
    NoFeasibleTree,
    /// Cost arithmetic left the `u64` range.
    Overflow,
    /// An arity (or a meta-arity `r^k`) does not fit in the index range.
    ArityOverflow,
    /// A predecessor chain did not lead back to the root state.
    InternalInconsistency,
    /// An RMQ query with `i > j` or `j` out of bounds.
    InvalidRange { i: usize, j: usize, len: usize },
    /// The exhaustive oracle refused an instance larger than its budget.
    BudgetExceeded,
}

impl Error {
    pub(crate) fn invalid(msg: &str) -> Self {
        Error::InvalidInput(String::from(msg))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InvalidLeafSequence => f.write_str("leaf sequence is not realizable"),
            Error::InsufficientLeaves { have, need } => {
                write!(f, "leaf sequence has {have} leaves, {need} needed")
            }
            Error::NoFeasibleTree => f.write_str("no feasible code tree within the level limit"),
            Error::Overflow => f.write_str("cost overflowed u64"),
            Error::ArityOverflow => f.write_str("arity exceeds the supported integer range"),
            Error::InternalInconsistency => f.write_str("broken predecessor chain in DP table"),
            Error::InvalidRange { i, j, len } => {
                write!(f, "invalid query range [{i}, {j}] for length {len}")
            }
            Error::BudgetExceeded => f.write_str("instance exceeds the oracle budget"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
