//! Command-line front end for `minksimplex`: JSON scenes in, JSON result
//! documents or SVG out.
//!
//! Exit codes: 0 success, 1 malformed input, 2 computation error,
//! 3 an equivalence report disagreed with itself.

pub mod args;
pub mod commands;
pub mod document;
pub mod error;
pub mod render;
pub mod scene;

use minksimplex::Limits;

use args::{Cli, Command, ModeArg};
use commands::Campaign;
use document::{CommandResult, ResultDocument};
use error::{CliError, Result};
use scene::SceneFile;

pub fn version_line() -> String {
    format!("minksimplex {}", env!("CARGO_PKG_VERSION"))
}

/// Runs one command on the scene text and returns what would be written to
/// the output: a JSON document, or SVG for `render`.
pub fn execute(cli: &Cli, input: &str) -> Result<String> {
    let file = SceneFile::parse(input)?;
    let limits = Limits::from_env().map_err(|e| CliError::Input(e.to_string()))?;
    let mode = file.mode(cli.command.common().mode)?;
    let exact = mode == ModeArg::Exact;

    macro_rules! in_mode {
        (|$s:ident| $body:expr) => {
            if exact {
                let $s = file.exact(&limits)?;
                $body
            } else {
                let $s = file.float(&limits)?;
                $body
            }
        };
    }

    let mut seed = None;
    let result = match &cli.command {
        Command::Render(_) => return in_mode!(|s| render::render(&s)),
        Command::Gauge(_) => CommandResult::Gauge(in_mode!(|s| commands::gauge(&s)?)),
        Command::Circumcenters(_) => CommandResult::Circumcenters(in_mode!(|s| commands::circumcenters(&s, &limits)?)),
        Command::Centers(_) => CommandResult::Centers(in_mode!(|s| commands::centers(&s, &limits)?)),
        Command::Construct(a) => {
            if a.strategy == args::StrategyArg::Seeded {
                seed = Some(a.seed);
            }
            CommandResult::Construct(in_mode!(|s| commands::construct(&s, a.strategy, a.seed)?))
        }
        Command::Verify(a) => {
            seed = Some(a.seed);
            let c = Campaign {
                theorem: commands::theorem_id(a.theorem),
                trials: a.trials,
                seed: a.seed,
                inject_fault: a.inject_fault,
            };
            CommandResult::Verify(in_mode!(|s| commands::campaign(&s, &c)?))
        }
    };
    let document = ResultDocument {
        version: version_line(),
        command: cli.command.name().to_string(),
        mode: if exact { "exact" } else { "float" }.to_string(),
        scene: file.fingerprint(),
        seed,
        result,
    };
    if let CommandResult::Verify(v) = &document.result {
        if !v.disagreements.is_empty() {
            return Err(CliError::Disagreement { fingerprints: v.disagreements.clone(), document: Box::new(document) });
        }
    }
    Ok(document.to_json())
}
