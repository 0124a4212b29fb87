use std::path::PathBuf;

use parcoal_core::examples::ExamplesError;
use parcoal_core::glob::GlobError;
use parcoal_core::pact::PactError;
use parcoal_core::pcoact::PcoactError;
use parcoal_core::BundleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Bundle(#[from] BundleError),
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 3,
            _ => 2,
        }
    }
}

impl From<ExamplesError> for CliError {
    fn from(e: ExamplesError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PactError> for CliError {
    fn from(e: PactError) -> Self {
        match e {
            PactError::InvariantViolated(m) => CliError::Internal(m),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<PcoactError> for CliError {
    fn from(e: PcoactError) -> Self {
        match e {
            PcoactError::InvariantViolated(m) => CliError::Internal(m),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<GlobError> for CliError {
    fn from(e: GlobError) -> Self {
        match e {
            GlobError::Pact(e) => e.into(),
            GlobError::Pcoact(e) => e.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}
