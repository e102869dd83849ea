use std::process::ExitCode;

use clap::{Parser, Subcommand};

use balpha_cli::commands::{self, Format, TextFormat};
use balpha_cli::error::{CliError, CliResult};
use balpha_cli::source::load_graph;
use balpha_cli::verify::{self, VerifyConfig};
use balpha_cli::apply_tolerance;
use balpha_core::Tolerances;

/// Spectra, semidefiniteness thresholds, eigenvalue bounds and Sachs-type
/// expansions for B_alpha(G) = alpha*A(G) + (1 - alpha)*L(G).
#[derive(Parser)]
#[command(name = "balpha", version)]
struct Cli {
    /// Override a numeric tolerance, e.g. --tol bound=1e-6 (repeatable).
    #[arg(long = "tol", value_name = "KEY=VALUE", global = true)]
    tol: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of B_alpha(G), descending.
    Spectrum {
        /// Generator (K4, K2,3, C6, P5, S24, T3,3,3, petersen), file path or graph6.
        #[arg(short, long)]
        graph: String,
        /// Decimal or fraction in [0, 1], e.g. 0.3 or 2/3.
        #[arg(short, long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// The semidefiniteness threshold beta0 and the resulting alpha ranges.
    Beta0 {
        #[arg(short, long)]
        graph: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Largest eigenvalue and the Y/Z lower bound over a grid of alpha values.
    Sweep {
        #[arg(short, long)]
        graph: String,
        /// Comma list (0,0.1,2/3) or inclusive range start:step:end.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Every applicable eigenvalue bound with its computed value, as JSON.
    Bounds {
        #[arg(short, long)]
        graph: String,
        #[arg(short, long, allow_hyphen_values = true)]
        alpha: String,
        /// Colour count to use instead of the exact chromatic number.
        #[arg(long)]
        chi: Option<usize>,
    },
    /// Determinant and characteristic polynomial via subgraph expansion and via linear algebra.
    Detpoly {
        #[arg(short, long)]
        graph: String,
        #[arg(short, long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Checks every implemented property on an exhaustive plus random corpus.
    Verify {
        /// Exhaustive connected graphs on 1..=N vertices.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Number of random connected graphs.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 12)]
        random_max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Alpha grid, same syntax as `sweep --grid`.
        #[arg(long, default_value = "0:0.05:1")]
        grid: String,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    let mut tol = Tolerances::default();
    let mut overridden = Vec::new();
    for spec in &cli.tol {
        overridden.push(apply_tolerance(&mut tol, spec)?);
    }
    match cli.command {
        Command::Spectrum { graph, alpha, format } => {
            let a = commands::parse_alpha(&alpha)?;
            commands::spectrum(&graph, &load_graph(&graph)?, a, format, &tol)
        }
        Command::Beta0 { graph, format } => {
            let tol = commands::display_tolerances(&tol, &overridden);
            commands::beta0(&graph, &load_graph(&graph)?, format, &tol)
        }
        Command::Sweep { graph, grid, format } => {
            let grid = match grid {
                Some(spec) => commands::parse_grid(&spec)?,
                None => commands::table_grid(),
            };
            commands::sweep(&graph, &load_graph(&graph)?, &grid, format, &tol)
        }
        Command::Bounds { graph, alpha, chi } => {
            let a = commands::parse_alpha(&alpha)?;
            commands::bounds(&graph, &load_graph(&graph)?, a, chi, &tol)
        }
        Command::Detpoly { graph, alpha, format } => {
            let a = commands::parse_alpha(&alpha)?;
            commands::detpoly(&graph, &load_graph(&graph)?, a, format, &tol)
        }
        Command::Verify { max_n, random, random_max_n, seed, grid, inject_fault } => {
            let cfg = VerifyConfig {
                max_n,
                random,
                random_max_n,
                seed,
                grid: commands::parse_grid(&grid)?,
                inject_fault,
                tol,
            };
            let (report, passed) = verify::run(&cfg);
            if passed {
                Ok(report)
            } else {
                print!("{report}");
                Err(CliError::VerifyFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
