use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use csd_cli::commands::{self, QueryKind, StatsOptions};
use csd_cli::input::write_points;
use csd_cli::klein::klein_bottle;
use csd_cli::{CliError, CliResult};
use csd_core::{Level, PointSet};

#[derive(Parser)]
#[command(
    name = "csd",
    version,
    about = "Critical simplex diagrams of filtered complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Flag filtration of a weighted edge list.
    BuildFlag {
        edges: PathBuf,
        /// Filtration range; defaults to the largest weight.
        #[arg(long)]
        t: Option<Level>,
        /// Treat weights as reals and bin them onto 0..=T.
        #[arg(long, value_name = "T", conflicts_with = "t")]
        quantize: Option<Level>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rips filtration of a point file: pairs within 2*rmax, distances binned onto 0..=t.
    BuildRips {
        points: PathBuf,
        #[arg(long)]
        rmax: f64,
        #[arg(long)]
        t: Level,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relaxed Delaunay filtration of landmarks witnessed by a second point file.
    BuildDelaunay {
        landmarks: PathBuf,
        witnesses: PathBuf,
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        t: Level,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ask one question about a simplex of a stored diagram.
    Query {
        diagram: PathBuf,
        #[arg(value_enum)]
        kind: QueryKind,
        /// Vertices, as separate arguments or one quoted list.
        #[arg(required = true, num_args = 1..)]
        simplex: Vec<String>,
    },
    /// Size statistics of a stored diagram.
    Stats {
        diagram: PathBuf,
        /// Check the stored stars against an exhaustive rebuild.
        #[arg(long)]
        verify: bool,
        /// Largest vertex count `--verify` accepts.
        #[arg(long, default_value_t = 32)]
        verify_cap: usize,
        /// Also build the simplex tree and report its size.
        #[arg(long)]
        with_st: bool,
    },
    /// Sample points from a Klein bottle in R^5.
    Klein {
        #[arg(long, default_value_t = 300)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rips sizes of a Klein bottle sample along t = 1, 2, 4, ...
    KleinChain {
        #[arg(long, default_value_t = 300)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.35)]
        rmax: f64,
        /// Largest t in the chain.
        #[arg(long, default_value_t = 64)]
        t: Level,
    },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::BuildFlag {
            edges,
            t,
            quantize,
            out,
        } => {
            let d = commands::build_flag_from_text(&read(&edges)?, t, quantize)?;
            emit(&d.to_text(), out.as_deref())
        }
        Command::BuildRips {
            points,
            rmax,
            t,
            out,
        } => {
            let d = commands::build_rips_from_text(&read(&points)?, rmax, t)?;
            emit(&d.to_text(), out.as_deref())
        }
        Command::BuildDelaunay {
            landmarks,
            witnesses,
            rho,
            t,
            out,
        } => {
            let d =
                commands::build_delaunay_from_text(&read(&landmarks)?, &read(&witnesses)?, rho, t)?;
            emit(&d.to_text(), out.as_deref())
        }
        Command::Query {
            diagram,
            kind,
            simplex,
        } => {
            let d = commands::load_diagram(&read(&diagram)?)?;
            let s = commands::parse_simplex(&simplex)?;
            emit(&commands::query(&d, kind, &s)?, None)
        }
        Command::Stats {
            diagram,
            verify,
            verify_cap,
            with_st,
        } => {
            let start = std::time::Instant::now();
            let d = commands::load_diagram(&read(&diagram)?)?;
            let load_ms = start.elapsed().as_millis();
            let opts = StatsOptions {
                verify,
                with_st,
                verify_cap,
            };
            let mut report = commands::stats(&d, opts)?;
            report.build_time_ms.insert(0, ("csd", load_ms));
            emit(&report.to_string(), None)
        }
        Command::Klein { points, seed, out } => {
            emit(&write_points(&klein_bottle(points, seed)), out.as_deref())
        }
        Command::KleinChain {
            points,
            seed,
            rmax,
            t,
        } => {
            let pts = PointSet::new(klein_bottle(points, seed))?;
            let rows = commands::rips_chain(&pts, rmax, &commands::doubling_chain(t))?;
            emit(&commands::format_chain(&rows), None)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("csd: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
