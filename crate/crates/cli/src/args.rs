use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "minksimplex", version, about = "Simplices in normed spaces: circumcenters, centers, constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Gauges of the named points, edge lengths, heights and medians.
    Gauge(Common),
    /// All circumcenters of the simplex.
    Circumcenters(Common),
    /// Insphere, exspheres and Euler-line points.
    Centers(Common),
    /// Build an AG-quasiregular simplex starting from the point `p0`.
    Construct(ConstructArgs),
    /// Check the equivalence theorems on the scene and on a seeded campaign.
    Verify(VerifyArgs),
    /// Draw a planar scene (or a planar projection) as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Scene file; standard input when absent.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Arithmetic mode. Defaults to the mode of the ball.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
}

#[derive(Args, Debug, Clone)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = StrategyArg::Deterministic)]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    /// Planted and random-negative instances, each.
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Flip the first verdict of every report. Exercises exit code 3.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug, Clone)]
pub struct RenderArgs {
    #[command(flatten)]
    pub common: Common,
    /// SVG destination; falls back to `--out`, then standard output.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyArg {
    Deterministic,
    Seeded,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremArg {
    #[value(name = "41")]
    T41,
    #[value(name = "42")]
    T42,
    #[value(name = "43")]
    T43,
    #[value(name = "44")]
    T44,
    #[value(name = "r41")]
    R41,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Gauge(c) | Command::Circumcenters(c) | Command::Centers(c) => c,
            Command::Construct(a) => &a.common,
            Command::Verify(a) => &a.common,
            Command::Render(a) => &a.common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Gauge(_) => "gauge",
            Command::Circumcenters(_) => "circumcenters",
            Command::Centers(_) => "centers",
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
            Command::Render(_) => "render",
        }
    }
}
