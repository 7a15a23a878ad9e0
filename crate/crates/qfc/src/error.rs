//! Error types shared across the crate.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid or inconsistent configuration (bad parameter values,
    /// malformed config files, unknown keys, wrong units).
    #[error("configuration error: {0}")]
    Config(String),

    /// A request outside the model's validity range, e.g. a normalized
    /// pump above the linearization bound.
    #[error("validity error: {0}")]
    Validity(String),

    /// Numerical singularity in the linearized input-output system.
    #[error("numerical singularity: {0}")]
    Singular(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 validity, 4 singularity,
    /// 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Validity(_) => 3,
            Error::Singular(_) => 4,
            Error::Io { .. } => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::Config("x".into()).exit_code(), 2);
        assert_eq!(Error::Validity("x".into()).exit_code(), 3);
        assert_eq!(Error::Singular("x".into()).exit_code(), 4);
    }
}
