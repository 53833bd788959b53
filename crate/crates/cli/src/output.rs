//! Command results and errors, and how they map to exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use letgraph::{Exhausted, Graph};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(letgraph::Error),
    #[error("{0}")]
    Budget(Exhausted),
}

impl From<letgraph::Error> for CliError {
    fn from(e: letgraph::Error) -> Self {
        match e {
            letgraph::Error::Budget(x) => CliError::Budget(x),
            other => CliError::Input(other),
        }
    }
}

impl From<Exhausted> for CliError {
    fn from(e: Exhausted) -> Self {
        CliError::Budget(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => 3,
            _ => 2,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Input(letgraph::Error::InvalidArgument(msg.into()))
    }
}

pub type CliResult<T = Report> = Result<T, CliError>;

/// What a command prints: plain text, the JSON form, and whether the
/// answer was negative (exit code 1).
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub negative: bool,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            negative: false,
        }
    }

    pub fn negative(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            negative: true,
        }
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.negative)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize to JSON")
}

pub fn graph_report(g: &Graph) -> Report {
    Report::new(g.to_text(), json!({ "graph": to_json(g) }))
}

/// 1-based, space-separated vertex list.
pub fn vertex_list(vs: &[usize]) -> String {
    let mut s = String::new();
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{}", v + 1);
    }
    s
}

pub fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}
