use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rslab::cli::Cli;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::try_parse_from(&args).unwrap_or_else(|e| e.exit());
    let argv: Vec<&str> = args.iter().map(String::as_str).collect();
    match rslab::run(&cli, &rslab::echo(&argv)) {
        Ok(report) => {
            let body = if cli.json { format!("{}\n", report.envelope.to_json()) } else { report.text.clone() };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("rslab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
