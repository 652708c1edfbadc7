use thiserror::Error;

/// Errors shared across the library.
///
/// The CLI maps these onto process exit codes: validation problems
/// (`OutOfRange`, `InvalidArgument`) are usage errors, the budget variants
/// are resource errors, and `Invariant` signals an internal bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} outside sieved range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: u64,
        lo: u64,
        hi: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sieve range needs {required} entries but the budget allows {allowed}")]
    SieveBudget { required: u64, allowed: u64 },

    #[error("enumeration needs {required} candidates but the budget allows {allowed}")]
    EnumerationBudget { required: u128, allowed: u128 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
