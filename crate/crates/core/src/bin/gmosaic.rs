//! `gmosaic` — count graph mosaics, dump the matrices behind the count,
//! cross-check against brute force, and inspect mosaic files.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage, parse, or
//! resource errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graph_mosaic::census::count_graph_mosaics;
use graph_mosaic::count::Backend;
use graph_mosaic::error::Error;
use graph_mosaic::magnified::AnyMagnified;
use graph_mosaic::mosaic::{Mosaic, Side};
use graph_mosaic::state_matrix::{AnyStateMatrices, StateMatrixKind};
use graph_mosaic::verify::{run_suites, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "gmosaic",
    version,
    about = "Exact graph-mosaic enumeration",
    long_about = "Counts the closed graph diagrams that can be drawn on a rows x cols \
                  grid of mosaic tiles, exactly, via a transfer-matrix recursion. \
                  Results are cross-checkable against a brute-force oracle (`verify`)."
)]
struct Cli {
    /// Arithmetic backend: auto, fixed128, or bignum.
    #[arg(long, global = true, default_value = "auto")]
    backend: Backend,

    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the graph mosaics on a rows x cols grid.
    Count {
        /// Grid rows (at least 1).
        rows: usize,
        /// Grid columns (at least 1).
        cols: usize,
        /// Emit a JSON report instead of the bare count.
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the recursion against the brute-force oracle.
    Verify {
        /// Cover every grid with at most this many cells (at most 20).
        #[arg(default_value_t = 16)]
        max_cells: usize,
        /// Falsify the Lucas weight table first, to demonstrate that a
        /// wrong answer is caught. For testing the harness itself.
        #[arg(long, hide = true)]
        corrupt_weights: bool,
    },
    /// Print matrices in the text dump format.
    #[command(subcommand)]
    Matrix(MatrixCommand),
    /// Inspect mosaic files.
    #[command(subcommand)]
    Mosaic(MosaicCommand),
}

#[derive(Subcommand)]
enum MatrixCommand {
    /// A column state matrix of height m (2^m square).
    State {
        /// Matrix kind: X+, X-, O+, or O-.
        kind: StateMatrixKind,
        /// Column height m.
        m: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The magnified state matrix of an m x n grid (2^(m+n) square).
    Magnified {
        /// Grid rows m.
        m: usize,
        /// Grid columns n.
        n: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MosaicCommand {
    /// Classify a mosaic file and print its boundary states.
    Validate {
        /// Mosaic text file: "<rows> <cols>" header, then hex tile rows.
        path: PathBuf,
    },
    /// Render a mosaic file as ASCII art.
    Render {
        /// Mosaic text file.
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads as usize)
            .build_global()
            .expect("the global thread pool is configured before first use");
    }
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Count { rows, cols, json } => cmd_count(rows, cols, json, cli.backend),
        Command::Verify {
            max_cells,
            corrupt_weights,
        } => cmd_verify(max_cells, corrupt_weights),
        Command::Matrix(MatrixCommand::State { kind, m, out }) => {
            let set = AnyStateMatrices::build(m, cli.backend)?;
            write_report(out.as_deref(), |w| set.write_dump(kind, w))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix(MatrixCommand::Magnified { m, n, out }) => {
            let mag = AnyMagnified::build(m, n, cli.backend)?;
            write_report(out.as_deref(), |w| mag.write_dump(w))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mosaic(MosaicCommand::Validate { path }) => {
            let mosaic: Mosaic = fs::read_to_string(path)?.parse()?;
            let class = if mosaic.is_graph_mosaic() {
                "graph-mosaic"
            } else if mosaic.is_suitably_connected() {
                "suitably-connected"
            } else {
                "invalid"
            };
            println!("{class}");
            for side in Side::ALL {
                println!("{}: {}", side.name(), mosaic.boundary_state(side));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mosaic(MosaicCommand::Render { path }) => {
            let mosaic: Mosaic = fs::read_to_string(path)?.parse()?;
            print!("{}", mosaic.render_ascii());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_count(rows: usize, cols: usize, json: bool, backend: Backend) -> Result<ExitCode, Error> {
    let result = count_graph_mosaics(rows, cols, backend)?;
    let elapsed_ms = result.elapsed.as_secs_f64() * 1e3;
    if json {
        let report = serde_json::json!({
            "rows": result.rows,
            "cols": result.cols,
            "count": result.count.to_string(),
            "method": result.method.to_string(),
            "elapsed_ms": elapsed_ms,
            "backend": result.backend.to_string(),
        });
        println!("{report}");
    } else {
        println!("{}", result.count);
        eprintln!(
            "# count {} {}: {} via {}, backend {}, {} threads, peak dimension {}, {:.3} ms",
            result.rows,
            result.cols,
            result.count,
            result.method,
            result.backend,
            rayon::current_num_threads(),
            result.peak_dim,
            elapsed_ms
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(max_cells: usize, corrupt_weights: bool) -> Result<ExitCode, Error> {
    let opts = VerifyOptions {
        max_cells,
        corrupt_weights,
    };
    let outcomes = run_suites(&opts)?;
    let mut failed = false;
    for outcome in &outcomes {
        match &outcome.failure {
            None => println!("{:<16} {:>6} checks  ok", outcome.name, outcome.checks),
            Some(mismatch) => {
                failed = true;
                println!(
                    "{:<16} {:>6} checks  MISMATCH at {}",
                    outcome.name, outcome.checks, mismatch.location
                );
                println!("    formula: {}", mismatch.formula);
                println!("    oracle:  {}", mismatch.oracle);
            }
        }
    }
    if failed {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn write_report(
    out: Option<&std::path::Path>,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Error> {
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
        }
    }
    Ok(())
}
