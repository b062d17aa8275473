use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;
mod json;

#[derive(Debug, Parser)]
#[command(name = "higgs", version, about = "Exact numerics for spectral surfaces and Higgs sheaf moduli")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct SurfaceArg {
    /// Preset (`p2`, `p1xp1`, `hypersurface:d`) or path to a surface JSON file.
    #[arg(long)]
    surface: String,
}

#[derive(Debug, Args)]
struct NumericsArgs {
    #[command(flatten)]
    surface: SurfaceArg,
    /// Rank of the Higgs sheaf.
    #[arg(short = 'r', long = "rank")]
    rank: u32,
    /// First Chern class as lattice coordinates, `a,b,...` (a bare integer on rank-one lattices).
    #[arg(long, allow_hyphen_values = true)]
    c1: String,
    /// Second Chern class.
    #[arg(long, allow_hyphen_values = true)]
    c2: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a surface and print its numerical invariants.
    Surface(SurfaceArg),
    /// Distinguished classes and intersection numbers on the projective completion Y.
    Ybundle {
        #[command(flatten)]
        surface: SurfaceArg,
        /// Spectral degree used for [X_s] and the adjunction check.
        #[arg(short = 'r', long = "rank", default_value_t = 2)]
        rank: u32,
    },
    /// Invariants of a degree-r spectral surface.
    Spectral {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(short = 'r', long = "rank")]
        rank: u32,
    },
    /// Decide the regime of generic Hitchin fibers for (r, c1, c2).
    Criterion(NumericsArgs),
    /// Enumerate monopole-branch components.
    Branches {
        #[command(flatten)]
        surface: SurfaceArg,
        /// Rank; required unless --rank2 is given.
        #[arg(short = 'r', long = "rank")]
        rank: Option<u32>,
        /// First Chern class; required unless --rank2 is given.
        #[arg(long, allow_hyphen_values = true)]
        c1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
        /// Rank-2 fixed components with c1 = c1(L).
        #[arg(long)]
        rank2: bool,
    },
    /// Chern character of the pushforward of O(δ) ⊗ I_𝔇 from a spectral surface.
    Grr {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(short = 'r', long = "rank")]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        /// Length of the zero-dimensional subscheme 𝔇.
        #[arg(long, default_value_t = 0)]
        points: u64,
    },
    /// Run the self-verification suites.
    Verify {
        /// `all` or a comma-separated list of suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Overrides HIGGS_SEED.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn envelope(command: &str, input: Value, payload: Value) -> Value {
    json!({ "command": command, "input": input, "payload": payload, "exact": true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result) = commands::run(&cli.command);
    match result {
        Ok(outcome) => {
            let doc = envelope(name, outcome.input, outcome.payload);
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
                Format::Table => json::table(&doc),
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
