use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use thetapos::cli::{render, run, verdict_code, Cli};

fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            emit(&render(&v, cli.format));
            ExitCode::from(verdict_code(&cli, &v))
        }
        Err(e) => {
            emit(&serde_json::to_string_pretty(&json!({ "error": e.to_string() })).expect("serializable"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
