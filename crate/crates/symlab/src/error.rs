use thiserror::Error;

/// Error type shared by every layer of the crate.
///
/// The split matters for the command-line driver: `Config` and `Domain`
/// are caller mistakes (bad parameters, violated hypotheses) and map to
/// exit code 2, everything else is a computation or input failure and
/// maps to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the domain an operation supports.
    #[error("domain violation: {0}")]
    Domain(String),

    /// A scan or CLI configuration broke one of its constraints.
    /// The message names the violated inequality.
    #[error("config rejected: {0}")]
    Config(String),

    /// Checked integer arithmetic overflowed. Tables hold 64-bit values;
    /// shrink `limit` or `k` if this fires during a sieve.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// A data file had the wrong shape or an unparsable field.
    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the CLI should terminate with for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) | Error::Domain(_) => 2,
            _ => 1,
        }
    }
}
