use std::fmt;

use prefixdp_core::Error;

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_OVERFLOW: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::InvalidLeafSequence | Error::InvalidRange { .. } => EXIT_USAGE,
            Error::NoFeasibleTree | Error::InsufficientLeaves { .. } => EXIT_INFEASIBLE,
            Error::Overflow | Error::ArityOverflow => EXIT_OVERFLOW,
            Error::BudgetExceeded => EXIT_BUDGET,
            Error::InternalInconsistency => EXIT_MISMATCH,
        };
        CliError { code, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}
