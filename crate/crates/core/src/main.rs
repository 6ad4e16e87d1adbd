use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};

use n2kit::commands::{cmd_classify, cmd_dims, cmd_singular_search, cmd_verify};
use n2kit::report::{OutputFormat, Report, RunConfig};
use n2kit::Rat;

/// Exact singular-vector engine for N=2 superconformal highest-weight
/// modules. Every invocation prints one machine-readable report; the exit
/// code mirrors its verdict (0 pass, 1 fail, 2 error).
#[derive(Parser)]
#[command(name = "n2kit", version, about)]
struct Cli {
    /// Output format
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,

    /// Write the rendered report to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification data for an admissible level t/u
    Classify {
        /// The level, written t/u (an integer means u = 1); not reduced
        #[arg(allow_hyphen_values = true)]
        level: String,
    },
    /// Search one grade of a Verma module for singular vectors
    SingularSearch {
        /// Highest weight h
        #[arg(allow_hyphen_values = true)]
        h: Rat,
        /// Relative charge q
        #[arg(allow_hyphen_values = true)]
        q: Rat,
        /// Central charge c
        #[arg(allow_hyphen_values = true)]
        c: Rat,
        /// Grade level, a non-negative half-integer
        level: Rat,
        /// Grade charge
        #[arg(allow_hyphen_values = true)]
        charge: i64,
        /// Basis cutoff level, a half-integer (overrides N2KIT_CUTOFF)
        #[arg(long)]
        cutoff: Option<Rat>,
        /// Re-audit solutions against every positive mode up to the level
        #[arg(long)]
        paranoid: bool,
    },
    /// Full audit suite at a positive integral level m
    Verify {
        /// The level m
        #[arg(allow_hyphen_values = true)]
        m: i64,
        /// Re-audit solver solutions against the widened probe set
        #[arg(long)]
        paranoid: bool,
        /// Basis cutoff level, a half-integer (overrides N2KIT_CUTOFF)
        #[arg(long)]
        cutoff: Option<Rat>,
        /// Depth of the closed-form disjointness sweep
        #[arg(long, value_name = "N")]
        imax: Option<u32>,
        /// Scan embedding grades two charge steps out instead of one
        #[arg(long)]
        wide_charge: bool,
    },
    /// Graded dimensions of a Verma module, two independent ways
    Dims {
        /// Highest weight h
        #[arg(allow_hyphen_values = true)]
        h: Rat,
        /// Relative charge q
        #[arg(allow_hyphen_values = true)]
        q: Rat,
        /// Central charge c
        #[arg(allow_hyphen_values = true)]
        c: Rat,
        /// Largest level to tabulate, a non-negative half-integer
        max_level: Rat,
        /// Basis cutoff level, a half-integer (overrides N2KIT_CUTOFF)
        #[arg(long)]
        cutoff: Option<Rat>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::SingularSearch { .. } => "singular-search",
            Command::Verify { .. } => "verify",
            Command::Dims { .. } => "dims",
        }
    }
}

/// Doubled cutoff from the flag, the N2KIT_CUTOFF environment variable, or
/// the default, in that order.
fn resolve_cutoff2(flag: Option<&Rat>) -> Result<i64, String> {
    let level = match flag {
        Some(l) => l.clone(),
        None => match std::env::var("N2KIT_CUTOFF") {
            Ok(raw) => raw
                .parse::<Rat>()
                .map_err(|e| format!("N2KIT_CUTOFF: {e}"))?,
            Err(_) => return Ok(RunConfig::default().cutoff2),
        },
    };
    level
        .doubled()
        .filter(|l2| *l2 >= 0)
        .ok_or_else(|| format!("cutoff must be a non-negative half-integer, got {level}"))
}

/// The level argument of `classify`, kept unreduced: "3/6" stays (3, 6).
fn parse_level_pair(s: &str) -> Result<(i64, i64), String> {
    let parse = |part: &str, what: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|_| format!("{what} of the level must be an integer, got {part:?}"))
    };
    match s.split_once('/') {
        Some((t, u)) => Ok((parse(t, "numerator")?, parse(u, "denominator")?)),
        None => Ok((parse(s, "numerator")?, 1)),
    }
}

fn run(command: Command) -> Report {
    let name = command.name();
    let mut cfg = RunConfig::default();
    let cutoff_flag = match &command {
        Command::Classify { .. } => None,
        Command::SingularSearch { cutoff, .. } => cutoff.as_ref(),
        Command::Verify { cutoff, .. } => cutoff.as_ref(),
        Command::Dims { cutoff, .. } => cutoff.as_ref(),
    };
    cfg.cutoff2 = match resolve_cutoff2(cutoff_flag) {
        Ok(c2) => c2,
        Err(msg) => return Report::error(name, cfg, msg),
    };
    match command {
        Command::Classify { level } => match parse_level_pair(&level) {
            Ok((t, u)) => cmd_classify(t, u, cfg),
            Err(msg) => Report::error(name, cfg, msg),
        },
        Command::SingularSearch {
            h,
            q,
            c,
            level,
            charge,
            paranoid,
            ..
        } => {
            cfg.paranoid = paranoid;
            cmd_singular_search(h, q, c, level, charge, cfg)
        }
        Command::Verify {
            m,
            paranoid,
            imax,
            wide_charge,
            ..
        } => {
            cfg.paranoid = paranoid;
            cfg.wide_charge = wide_charge;
            if let Some(n) = imax {
                cfg.i_max_formula = n;
            }
            cmd_verify(m, cfg)
        }
        Command::Dims {
            h, q, c, max_level, ..
        } => cmd_dims(h, q, c, max_level, cfg),
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut report = run(cli.command);
    report.timing_ms = started.elapsed().as_millis() as u64;
    let rendered = report.render(cli.format);
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("n2kit: cannot write {}: {e}", path.display());
                std::process::exit(2);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rendered.as_bytes()).is_err() {
                std::process::exit(2);
            }
        }
    }
    std::process::exit(report.verdict.exit_code());
}
