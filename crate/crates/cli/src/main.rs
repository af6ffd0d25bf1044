mod commands;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::Failure;

#[derive(Parser, Debug)]
#[command(name = "yb", version, about = "Yang-Baxter operators of racks: cohomology, deformations, normalization")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest rack accepted by the cohomology and deformation commands.
    #[arg(long, global = true)]
    pub size_limit: Option<usize>,
    /// Truncation order N of Q[h]/(h^N).
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the rack axioms and describe the rack.
    Validate {
        /// Rack JSON file or name (trivial:n, dihedral:n, conj:Sk:..., d3, d4, tetrahedral).
        rack: String,
    },
    /// Check the Yang-Baxter equation for c_Q or for a matrix file.
    Check {
        #[arg(long, required_unless_present = "matrix")]
        rack: Option<String>,
        /// Operator on V ⊗ V as matrix JSON.
        #[arg(long, conflicts_with = "rack")]
        matrix: Option<PathBuf>,
    },
    /// The matrix of a braid word under the representation induced by c_Q.
    Braid {
        #[arg(long)]
        rack: String,
        /// Letters such as "1 2 -1"; -i is the inverse of generator i.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Number of strands (default: one more than the largest generator).
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Dimensions of cocycles, coboundaries and entropic maps.
    Cohomology {
        #[arg(long)]
        rack: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Same as --format json.
        #[arg(long, value_enum)]
        report: Option<Format>,
    },
    /// Orbits spanning the entropic maps.
    EntropicBasis {
        #[arg(long)]
        rack: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Assemble c_Q(I + f(λ)) from one parameter per entropic orbit.
    Deform {
        #[arg(long)]
        rack: String,
        /// JSON array of "p/q" constants or coefficient arrays; random when omitted.
        #[arg(long)]
        lambda: Option<String>,
        /// Verify the Yang-Baxter equation of the result.
        #[arg(long)]
        check: bool,
    },
    /// Conjugate a deformation of c_Q into an entropic one.
    Normalize {
        #[arg(long)]
        rack: String,
        /// Matrix JSON of the deformation.
        #[arg(long)]
        input: PathBuf,
    },
    /// Recompute a worked example and compare it with the expected values.
    Reproduce {
        #[arg(value_enum)]
        example: reproduce::Example,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
