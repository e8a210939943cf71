//! `qqsa`: verification suites for multi-parameter quantum groups realized
//! in the cotensor algebra.
//!
//! Exit status: 0 when every check passes, 1 when any check fails or is
//! undecided, 2 on configuration errors.

mod config;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use config::{ConfigError, Mode, RunConfig};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "qqsa", version, about = "Exact checks for multi-parameter quantum groups")]
struct Cli {
    /// TOML run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Reduction bound for membership in the ideal J.
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[arg(long, global = true)]
    max_height: Option<u32>,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Record per-check wall time (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relation, Hopf-axiom and closed-form suites.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Gram matrices of the skew pairing on graded pieces.
    Pairing {
        #[arg(value_enum)]
        what: PairingWhat,
    },
    /// Highest-weight modules; `--lambda 1,1` overrides the config list.
    Module {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Cocycle twist to another parameter matrix.
    Twist {
        #[arg(long, value_enum)]
        qhat: Option<QhatMode>,
    },
    /// Root-of-unity checks: nilpotency, finite grading group, alcove modules.
    Smallqg {
        #[arg(long)]
        ell: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Relations,
    Hopf,
    ClosedForms,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PairingWhat {
    Gram,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QhatMode {
    OneParameter,
    Tied,
    Symbolic,
}

impl From<QhatMode> for Mode {
    fn from(m: QhatMode) -> Self {
        match m {
            QhatMode::OneParameter => Mode::OneParameter,
            QhatMode::Tied => Mode::Tied,
            QhatMode::Symbolic => Mode::Symbolic,
        }
    }
}

fn run(cli: &Cli) -> Result<Report, ConfigError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| ConfigError::Invalid("--config is required".into()))?;
    let cfg = RunConfig::load(path)?;
    let bound = cli.bound.unwrap_or(cfg.bounds.reduction);
    if bound == 0 {
        return Err(ConfigError::Invalid("--bound must be positive".into()));
    }
    let start = Instant::now();
    let mut rep = match &cli.command {
        Command::Check { suite: Suite::Relations } => suites::relations(&cfg, bound)?,
        Command::Check { suite: Suite::Hopf } => suites::hopf(&cfg, cli.seed)?,
        Command::Check { suite: Suite::ClosedForms } => suites::closed_forms(&cfg)?,
        Command::Pairing { what: PairingWhat::Gram } => {
            suites::pairing(&cfg, cli.max_height.unwrap_or(cfg.bounds.max_height))?
        }
        Command::Module { lambda } => {
            let ls = match lambda {
                Some(l) => vec![l.clone()],
                None => cfg.module.lambdas.clone(),
            };
            if ls.is_empty() {
                return Err(ConfigError::Invalid("no highest weights given".into()));
            }
            suites::module(&cfg, &ls)?
        }
        Command::Twist { qhat } => {
            let m = qhat.map(Mode::from).or(cfg.twist.qhat).unwrap_or(Mode::OneParameter);
            suites::twist(&cfg, m, bound)?
        }
        Command::Smallqg { ell } => {
            let ell = ell
                .or(cfg.smallqg.ell)
                .or(cfg.parameters.ell)
                .ok_or_else(|| ConfigError::Invalid("no root-of-unity order given".into()))?;
            suites::smallqg(&cfg, ell)?
        }
    };
    if cli.timings {
        let ms = start.elapsed().as_millis();
        for r in &mut rep.records {
            r.millis = Some(ms);
        }
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            print!("{}", rep.render(cli.format));
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
