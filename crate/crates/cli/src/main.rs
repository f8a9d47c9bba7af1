use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use hausdorff_gh_cli::bounds::{bounds, BoundsConfig};
use hausdorff_gh_cli::config::{read_json, SweepConfig};
use hausdorff_gh_cli::fillrad::fillrad_estimate;
use hausdorff_gh_cli::lemma::lemma_check_strict;
use hausdorff_gh_cli::misc::{gh, homology, ratio, GhConfig, HomologyConfig};
use hausdorff_gh_cli::sweep::{circle_sweep, write_csv};
use hausdorff_gh_cli::exit_status;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hgh", version, about = "Hausdorff vs Gromov-Hausdorff experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bounds from given Hausdorff distances or from samples.
    Bounds {
        #[arg(long)]
        config: PathBuf,
    },
    /// Bound, exact distance and Hausdorff distance for circle sample pairs (CSV).
    CircleSweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// The staircase family with small distance ratio.
    Ratio {
        #[arg(long)]
        n: usize,
    },
    /// Betti numbers of a complex or of a Rips complex.
    Homology {
        #[arg(long)]
        config: PathBuf,
    },
    /// Exact Gromov-Hausdorff distance between two small spaces.
    GhExact {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Scale at which the top class of a dense sample dies.
    FillradEstimate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Random checks of the simplicial maps behind the bounds.
    LemmaCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn sweep_config(path: &Path, seed: Option<u64>) -> Result<SweepConfig> {
    let mut cfg = SweepConfig::load(path)?;
    if seed.is_some() {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<()> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Bounds { config } => emit_json(&bounds(&read_json::<BoundsConfig>(&config)?)?, out),
        Command::CircleSweep { config, seed, budget } => {
            let cfg = sweep_config(&config, seed)?;
            let rows = circle_sweep(&cfg, budget)?;
            write_csv(&rows, sink(out.or(cfg.out.as_deref()))?)
        }
        Command::Ratio { n } => emit_json(&ratio(n)?, out),
        Command::Homology { config } => emit_json(&homology(&read_json::<HomologyConfig>(&config)?)?, out),
        Command::GhExact { config, budget } => emit_json(&gh(&read_json::<GhConfig>(&config)?, budget)?, out),
        Command::FillradEstimate { config, seed } => {
            let cfg = sweep_config(&config, seed)?;
            emit_json(&fillrad_estimate(&cfg)?, out.or(cfg.out.as_deref()))
        }
        Command::LemmaCheck { seed, trials } => emit_json(&lemma_check_strict(seed, trials)?, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_status(&e))
        }
    }
}
