//! Command-line front end for `qforms-core`: each subcommand runs one
//! table generator or verification suite and emits a JSON, CSV or text
//! document.

pub mod cli;
pub mod commands;
pub mod output;

use clap::Parser;

use cli::{Cli, Command};
use output::Document;

/// Matrix dimensions above this bound are refused unless `QFORMS_MAX_DIM`
/// says otherwise.
pub const DEFAULT_MAX_DIM: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Usage,
    Truncated,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Usage => 2,
            Status::Truncated => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub document: Document,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qforms_core::Error),
}

impl RunError {
    pub fn status(&self) -> Status {
        match self {
            RunError::Usage(_) => Status::Usage,
            RunError::Core(qforms_core::Error::ResourceBound { .. }) => Status::Truncated,
            RunError::Core(_) => Status::Fail,
        }
    }
}

/// `QFORMS_MAX_DIM`, or the default when unset.
pub fn max_dim_from_env() -> Result<usize, RunError> {
    match std::env::var("QFORMS_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| RunError::Usage(format!("QFORMS_MAX_DIM must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

pub fn run(cli: &Cli, max_dim: usize) -> Result<Outcome, RunError> {
    match &cli.command {
        Command::Dims(a) => commands::dims(a, max_dim),
        Command::Spectrum(a) => commands::spectrum_rows(a),
        Command::VerifyMetric(a) => commands::verify_metric_suite(a, max_dim),
        Command::BraidCheck(a) => commands::braid_check(a, max_dim),
        Command::Rform(a) => commands::rform(a, max_dim),
        Command::Hodge(a) => commands::hodge(a, max_dim),
        Command::LaplaceOracle(a) => commands::laplace_oracle(a, max_dim),
    }
}

/// Parses `args`, runs the command and returns the exit code with the
/// text for stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage.code() } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() { (code, String::new(), text) } else { (code, text, String::new()) };
        }
    };
    let outcome = max_dim_from_env().and_then(|max_dim| run(&cli, max_dim));
    match outcome {
        Ok(o) => (o.status.code(), o.document.render(cli.format), String::new()),
        Err(e) => (e.status().code(), String::new(), format!("error: {e}\n")),
    }
}
