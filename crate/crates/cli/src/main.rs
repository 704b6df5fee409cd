//! `ein3`: classify tori, test crooked surfaces, export samples and run the
//! verification suites.
//!
//! Exit codes: 0 success (or disjoint), 1 not disjoint or a suite failed,
//! 2 invalid input or usage, 3 the AdS criteria disagree.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use ein3_cli::commands::{self, Outcome, SampleArgs};
use ein3_cli::config::{Config, Overrides, Session};
use ein3_cli::export::Format;

#[derive(Parser)]
#[command(name = "ein3", version, about = "Einstein tori and crooked surfaces in Ein³")]
struct Cli {
    /// Tolerance for algebraic identities and strict inequalities.
    #[arg(long, global = true, value_name = "EPS")]
    eps_alg: Option<f64>,
    /// Tolerance for sampled-geometry comparisons.
    #[arg(long, global = true, value_name = "EPS")]
    eps_geo: Option<f64>,
    /// Seed for sampling and verification; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON configuration file.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection type and η of two Einstein tori.
    ClassifyTori {
        #[command(flatten)]
        input: Input,
        /// Torus names; defaults to the first two tori in the file.
        #[arg(long = "torus", value_name = "NAME")]
        tori: Vec<String>,
    },
    /// Whether a photon misses a crooked surface.
    CheckPhoton {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "NAME")]
        photon: Option<String>,
        #[arg(long, value_name = "NAME")]
        surface: Option<String>,
    },
    /// The 16 inequalities for two crooked surfaces.
    CheckCrooked {
        #[command(flatten)]
        input: Input,
        #[arg(long = "quad", value_name = "NAME")]
        quads: Vec<String>,
    },
    /// The reduced AdS inequalities, the DGK criterion and the full test.
    CheckAds {
        #[command(flatten)]
        input: Input,
        #[arg(long = "plane", value_name = "NAME")]
        planes: Vec<String>,
    },
    /// Minkowski-patch point clouds of tori and crooked surfaces.
    Sample {
        #[command(flatten)]
        input: Input,
        /// Objects to sample; defaults to the first two tori or quads.
        #[arg(long = "object", value_name = "NAME")]
        objects: Vec<String>,
        /// Points per object.
        #[arg(long, default_value_t = 2000)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run seeded verification suites and print one JSON report per line.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Trials per suite; each suite has its own default.
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn load(input: &Input, ov: Overrides) -> Result<Session> {
    Config::load(&input.file)?.build(ov)
}

fn run(cli: Cli) -> Result<Outcome> {
    let ov = Overrides {
        eps_alg: cli.eps_alg,
        eps_geo: cli.eps_geo,
        seed: cli.seed,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = match &cli.command {
        Command::ClassifyTori { input, tori } => commands::classify_tori(&load(input, ov)?, tori, &mut out)?,
        Command::CheckPhoton { input, photon, surface } => {
            commands::check_photon(&load(input, ov)?, photon.as_deref(), surface.as_deref(), &mut out)?
        }
        Command::CheckCrooked { input, quads } => commands::check_crooked(&load(input, ov)?, quads, &mut out)?,
        Command::CheckAds { input, planes } => commands::check_ads(&load(input, ov)?, planes, &mut out)?,
        Command::Sample {
            input,
            objects,
            count,
            format,
            out: path,
        } => {
            let session = load(input, ov)?;
            let args = SampleArgs {
                names: objects,
                count: *count,
                format: *format,
            };
            match path {
                Some(p) => {
                    let file = File::create(p).with_context(|| format!("creating {}", p.display()))?;
                    let mut w = BufWriter::new(file);
                    let outcome = commands::sample(&session, args, &mut w)?;
                    w.flush()?;
                    outcome
                }
                None => commands::sample(&session, args, &mut out)?,
            }
        }
        Command::Verify { suite, trials } => commands::verify(suite, *trials, cli.seed.unwrap_or(7), &mut out)?,
    };
    out.flush()?;
    Ok(outcome)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
