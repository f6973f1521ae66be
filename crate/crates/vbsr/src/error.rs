//! Error taxonomy shared by the library and the CLI.

/// Crate-wide error type.
///
/// `Domain`, `Dimension`, `NotSpd` and `Numerical` indicate a problem with the
/// inputs or with the state of a computation; `Io` and `Format` indicate a
/// problem with the outside world (files, encodings, configs).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its admissible range (negative precision, zero
    /// image side, SNR that implies zero signal power, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two arguments that must agree in shape do not.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix that must be symmetric positive definite failed to factorize.
    #[error("matrix is not positive definite: {0}")]
    NotSpd(String),

    /// A computation produced a non-finite or otherwise invalid value.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed file content (PGM headers, CSV, config files).
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
