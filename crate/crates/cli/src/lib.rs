//! Command-line harness around `nk6-core`: runs check suites over
//! `r`-grids, writes JSON/CSV/text reports, prints the product table and
//! evaluates single quantities.

pub mod config;
pub mod eval;
pub mod output;
pub mod registry;
pub mod sweep;
pub mod table;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const CONFIG_ERROR: u8 = 2;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("evaluation failed: {0}")]
    Core(#[from] nk6_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(_) => exit::CHECK_FAILED,
            _ => exit::CONFIG_ERROR,
        }
    }
}
