use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twobridge::census::{parse_checks, run_census, CensusConfig};
use twobridge::knot::parse_knot_spec;
use twobridge::order::{candidate_battery, minimality_scan};
use twobridge::ors::{ors_apply, parse_seed, OrsWord};
use twobridge::report::{ClassifyReport, Format, OrsReport, Render, SlopeReport};
use twobridge::Error;

const EXIT_ANOMALY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVALID_KNOT: u8 = 3;

/// Boundary slopes, ORS pairs and order obstructions for 2-bridge knots.
///
/// Knots are given as `p/q` or as a continued fraction such as `[6,2,3]` or
/// `1+[-2,4,-2,2]`. Exit status: 0 ok, 1 anomaly, 2 usage or parse error,
/// 3 invalid knot.
#[derive(Parser)]
#[command(name = "twobridge", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["json", "csv", "text"])]
    format: String,

    /// Largest determinant for census runs (odd).
    #[arg(long, global = true, default_value_t = 999)]
    q_max: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Random seed for sampled sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal Farey paths and boundary slopes of a knot.
    Slopes { knot: String },
    /// Match a knot against the table of knots with at most four slopes.
    Classify { knot: String },
    /// Build an ORS pair from a seed vector and a word.
    Ors {
        /// Strongly positive seed vector, e.g. "[3]" or "[2,3]".
        #[arg(long = "seed")]
        seed_vector: String,
        /// Syllables "c1:e1,c2:e2,..." with e in {+,-}; even length.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run the obstruction battery on a candidate pair K1 >= K2.
    Order { k1: String, k2: String },
    /// Run the battery against every candidate quotient of a knot.
    ScanMinimality { knot: String },
    /// Exhaustive verification over all knots with q <= --q-max.
    Census {
        /// Comma-separated checks, or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        /// Random seed for sampled sweeps (overrides the global one).
        #[arg(long = "seed")]
        census_seed: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_invalid_knot() {
            EXIT_INVALID_KNOT
        } else if matches!(e, Error::Invariant(_)) {
            EXIT_ANOMALY
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Report text and whether it records an anomaly.
fn run(cli: &Cli, format: Format) -> Result<(String, bool), Failure> {
    Ok(match &cli.command {
        Command::Slopes { knot } => {
            let k = parse_knot_spec(knot)?;
            (SlopeReport::new(&k)?.render(format), false)
        }
        Command::Classify { knot } => {
            let k = parse_knot_spec(knot)?;
            (ClassifyReport::new(&k).render(format), false)
        }
        Command::Ors { seed_vector, word } => {
            let seed = parse_seed(seed_vector)?;
            let word: OrsWord = word.parse()?;
            let pair = ors_apply(&seed, &word)?;
            (OrsReport::new(&pair)?.render(format), false)
        }
        Command::Order { k1, k2 } => {
            let v = candidate_battery(&parse_knot_spec(k1)?, &parse_knot_spec(k2)?)?;
            (v.render(format), false)
        }
        Command::ScanMinimality { knot } => {
            let r = minimality_scan(&parse_knot_spec(knot)?)?;
            (r.render(format), false)
        }
        Command::Census {
            checks,
            census_seed,
        } => {
            let config = CensusConfig {
                q_max: cli.q_max,
                checks: parse_checks(checks)?,
                jobs: cli.jobs,
                seed: census_seed.unwrap_or(cli.seed),
                ..CensusConfig::default()
            };
            let report = run_census(&config)?;
            (report.render(format), report.anomaly_count() > 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.parse().expect("restricted by clap");
    match run(&cli, format) {
        Ok((text, anomalous)) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            } else {
                print!("{text}");
            }
            if anomalous {
                ExitCode::from(EXIT_ANOMALY)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
