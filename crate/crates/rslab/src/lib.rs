//! Command-line front end for `rslab-core`: argument parsing, the JSON report
//! envelope, and the regression manifest runner behind `verify-paper`.

pub mod cli;
pub mod commands;
pub mod envelope;
pub mod manifest;

use std::fmt;

use clap::Parser;
use serde_json::json;

use cli::{Cli, Command, ProductCommand};
use envelope::Envelope;

/// Exit code 2 for bad input, 1 for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failure(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<rslab_core::Error> for CliError {
    fn from(e: rslab_core::Error) -> Self {
        use rslab_core::Error as E;
        match e {
            E::Consistency(_) | E::ModelData(_) => CliError::Failure(e.to_string()),
            E::Structural(_) | E::Domain(_) | E::Range(_) | E::NotApplicable(_) => CliError::Usage(e.to_string()),
        }
    }
}

/// A finished command: the envelope, its text rendering, and whether a
/// regression check failed.
#[derive(Debug, Clone)]
pub struct Report {
    pub envelope: Envelope,
    pub text: String,
    pub failed: bool,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        self.failed as u8
    }
}

/// Parse `args` (including the program name) and run.
pub fn run_args<S: AsRef<str>>(args: &[S]) -> Result<Report, CliError> {
    let args: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
    let cli = Cli::try_parse_from(&args).map_err(|e| CliError::Usage(e.to_string()))?;
    run(&cli, &echo(&args))
}

/// The command line without the program name and output flags.
pub fn echo(args: &[&str]) -> String {
    args.iter().skip(1).filter(|a| **a != "--json").copied().collect::<Vec<_>>().join(" ")
}

pub fn run(cli: &Cli, echo: &str) -> Result<Report, CliError> {
    let out = match &cli.command {
        Command::Ci(a) => commands::ci(a)?,
        Command::Holonomy(a) => commands::holonomy(a)?,
        Command::Rep(c) => commands::rep(c)?,
        Command::Sphere(a) => commands::sphere(a)?,
        Command::Product(ProductCommand::Parallel(a)) => commands::product_parallel(a)?,
        Command::Product(ProductCommand::Index(a)) => commands::product_index(a)?,
        Command::VerifyPaper(v) => return verify(v.filter.as_deref(), echo),
    };
    let envelope =
        Envelope { command: echo.to_string(), inputs: out.inputs, results: out.results, citations: out.citations };
    Ok(Report { text: envelope.to_text(), envelope, failed: false })
}

fn verify(filter: Option<&str>, echo: &str) -> Result<Report, CliError> {
    let (source, m) = manifest::load()?;
    let outcomes = manifest::run_manifest(&m, filter);
    if outcomes.is_empty() {
        return Err(CliError::Usage(format!("no manifest entry matches filter {:?}", filter.unwrap_or(""))));
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    let mut text = String::new();
    for o in &outcomes {
        let actual = o.actual.as_ref().map_or_else(|| o.error.clone().unwrap_or_default(), manifest::render);
        if o.pass {
            text.push_str(&format!("PASS  {:<28} {}\n", o.id, actual));
        } else {
            text.push_str(&format!(
                "FAIL  {:<28} expected {} got {}  [{}]\n",
                o.id,
                manifest::render(&o.expected),
                actual,
                o.citation
            ));
        }
    }
    text.push_str(&format!("{} of {} entries passed\n", outcomes.len() - failed, outcomes.len()));
    let entries: Vec<serde_json::Value> = outcomes
        .iter()
        .map(|o| {
            json!({"id": o.id, "command": o.command, "path": o.path, "expected": o.expected,
                   "actual": o.actual, "error": o.error, "pass": o.pass, "citation": o.citation})
        })
        .collect();
    let envelope = Envelope {
        command: echo.to_string(),
        inputs: json!({"filter": filter, "manifest": source}),
        results: json!({"entries": entries, "total": outcomes.len(), "passed": outcomes.len() - failed, "failed": failed}),
        citations: outcomes.iter().map(|o| format!("{}: {}", o.id, o.citation)).collect(),
    };
    Ok(Report { envelope, text, failed: failed > 0 })
}
