pub mod args;
mod commands;
mod config;

use std::fmt;

pub use args::Cli;
pub use commands::run;
pub use config::Config;

use recpow::Error;

pub const EXIT_OK: i32 = 0;
/// Audit failure, or disagreement under `--both`.
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// Series check or another internal consistency check failed.
pub const EXIT_ORACLE: i32 = 3;
pub const EXIT_DENOMINATOR_ZERO: i32 = 4;

/// An error message with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(EXIT_USAGE, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DenominatorZero { .. } => EXIT_DENOMINATOR_ZERO,
            Error::Degenerate { .. }
            | Error::FirstOrder
            | Error::NonZeroInitial
            | Error::Parity { .. }
            | Error::OutOfRange(_)
            | Error::SymbolicTooLarge { .. }
            | Error::UnknownClaim(_)
            | Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_ORACLE,
        };
        Failure::new(code, e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        let zero = Error::DenominatorZero { x: "1".into(), term: "1 - x".into() };
        assert_eq!(Failure::from(zero).code, EXIT_DENOMINATOR_ZERO);
        assert_eq!(Failure::from(Error::FirstOrder).code, EXIT_USAGE);
        assert_eq!(Failure::from(Error::UnknownClaim("x".into())).code, EXIT_USAGE);
        assert_eq!(Failure::from(Error::DivisionByZero).code, EXIT_ORACLE);
        assert_eq!(Failure::from(Error::NotRational("sqrt(5)".into())).code, EXIT_ORACLE);
    }
}
