use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use letgraph::Budget;
use serde_json::json;

mod commands;
mod input;
mod output;
mod svg;

use commands::Command;

/// Letter graphs, grid classes, chain circuits and locally ordered hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "letgraph", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Step limit for exponential searches; exhausting it exits with code 3.
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut budget = Budget::from_option(cli.budget);
    match commands::run(cli.command, &mut budget) {
        Ok(report) => {
            let code = report.exit_code();
            let out = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("JSON value") + "\n"
            } else {
                report.text
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(std::io::stdout(), "{}", json!({ "error": e.to_string(), "exit": e.exit_code() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
