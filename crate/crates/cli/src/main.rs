use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use minksimplex_cli::args::{Cli, Command};
use minksimplex_cli::error::CliError;
use minksimplex_cli::execute;

fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.command.common();
    let input = match &common.input {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let input = match input {
        Ok(s) => s,
        Err(e) => {
            eprintln!("minksimplex: cannot read scene: {e}");
            return ExitCode::from(1);
        }
    };
    let out = match &cli.command {
        Command::Render(a) => a.svg.as_deref().or(common.out.as_deref()),
        _ => common.out.as_deref(),
    };
    let result = execute(&cli, &input);
    let code = match &result {
        Ok(_) => 0,
        Err(e) => e.exit_code(),
    };
    let text = match result {
        Ok(text) => Some(text),
        Err(CliError::Disagreement { fingerprints, document }) => {
            eprintln!("minksimplex: {}", CliError::Disagreement { fingerprints, document: document.clone() });
            Some(document.to_json())
        }
        Err(e) => {
            eprintln!("minksimplex: {e}");
            None
        }
    };
    if let Some(text) = text {
        if let Err(e) = write_output(out, &text) {
            eprintln!("minksimplex: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}
