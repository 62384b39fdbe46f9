//! Command-line front end: `.ring` files in, JSON (or DOT) out.
//!
//! Exit codes: 0 success, 1 verification failure, 2 capability error,
//! 64 usage, parse, I/O and structural errors.

use std::path::{Path, PathBuf};

use qkrull::error::ParseError;
use serde_json::{json, Value};

pub mod args;
pub mod commands;
pub mod dot;
pub mod ringfile;
pub mod schema;

pub use ringfile::RingFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_CAPABILITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error(transparent)]
    Lib(#[from] qkrull::Error),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), message: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(qkrull::Error::Capability(_)) => EXIT_CAPABILITY,
            _ => EXIT_USAGE,
        }
    }

    /// The structured message written to stderr.
    pub fn to_json(&self) -> Value {
        let parse = match self {
            CliError::Parse(p) | CliError::Lib(qkrull::Error::Parse(p)) => Some(p),
            _ => None,
        };
        if let Some(p) = parse {
            return json!({"error": {
                "class": p.kind.to_string(),
                "message": p.message,
                "line": p.line,
                "column": p.column,
                "snippet": p.snippet,
            }});
        }
        let class = match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Lib(qkrull::Error::Capability(_)) => "capability",
            CliError::Lib(qkrull::Error::Structural(_)) => "structural",
            CliError::Lib(_) => "arithmetic",
            CliError::Parse(_) => unreachable!(),
        };
        let message = match self {
            CliError::Lib(qkrull::Error::Capability(m)) | CliError::Lib(qkrull::Error::Structural(m)) => m.clone(),
            other => other.to_string(),
        };
        json!({"error": {"class": class, "message": message}})
    }
}

/// What a command produced: stdout text, stderr text and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, ..Outcome::default() }
    }

    fn from_error(e: CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("{}\n", e.to_json()), code: e.exit_code() }
    }
}

/// Runs the tool on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { stdout: String::new(), stderr: text, code: EXIT_USAGE },
            };
        }
    };
    commands::dispatch(cli).unwrap_or_else(Outcome::from_error)
}

/// Reads and parses a ring file, building its quotient ring.
pub fn load(path: &Path) -> CliResult<(RingFile, qkrull::QuotientRing)> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let file = RingFile::parse(&text)?;
    let ring = file.quotient(Some(path))?;
    Ok((file, ring))
}
