mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ttoric", version, about = "Exact toric intersection theory from tropical data")]
struct Cli {
    /// Seed for the generic displacements
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fans: validation, completeness, simpliciality
    #[command(subcommand)]
    Fan(FanCmd),
    /// Cycles on simplicial toric varieties
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Tropical cycles
    #[command(subcommand)]
    Trop(TropCmd),
    /// Matroids, flats and Bergman fans
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Rational equivalence classes from tropical data
    #[command(subcommand)]
    Class(ClassCmd),
    /// Polyhedral cones
    #[command(subcommand)]
    Cone(ConeCmd),
}

#[derive(Subcommand)]
enum FanCmd {
    /// Report every violation of the fan axioms
    Check {
        fan: PathBuf,
    },
    Complete {
        fan: PathBuf,
    },
    Simplicial {
        fan: PathBuf,
    },
}

#[derive(Args)]
struct VarietyArg {
    /// Fan of the toric variety
    #[arg(long)]
    variety: PathBuf,
}

#[derive(Subcommand)]
enum ToricCmd {
    /// Product of a divisor with a cycle
    Intersect {
        #[command(flatten)]
        variety: VarietyArg,
        /// Codimension-one cycle
        #[arg(long)]
        divisor: PathBuf,
        #[arg(long)]
        cycle: PathBuf,
    },
    /// Degree of a zero-dimensional cycle on a complete variety
    Deg {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        cycle: PathBuf,
    },
    /// A linearly equivalent divisor with no support on the avoided rays
    MakeTransverse {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        divisor: PathBuf,
        /// Ray indices, comma separated
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<usize>,
    },
    /// The product fan, rays of the first factor first
    Product { left: PathBuf, right: PathBuf },
}

#[derive(Subcommand)]
enum TropCmd {
    /// Tropical hypersurface of a Laurent polynomial (min convention)
    Hypersurface {
        poly: PathBuf,
        /// Use the max convention by negating exponents
        #[arg(long)]
        max: bool,
    },
    Balance {
        cycle: PathBuf,
    },
    StableIntersect {
        a: PathBuf,
        b: PathBuf,
    },
    /// Degree of the product with the orbit closure of a cone
    Pairing {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        cycle: PathBuf,
        /// Ray indices of the cone, comma separated
        #[arg(long, value_delimiter = ',')]
        cone: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// The lattice of flats, by rank
    Flats { matroid: PathBuf },
    Charpoly {
        matroid: PathBuf,
        /// Divide by q - 1
        #[arg(long)]
        reduced: bool,
    },
    Bergman {
        matroid: PathBuf,
        /// Coordinate set to zero when passing to the quotient by the all-ones vector
        #[arg(long, default_value_t = 0)]
        dehomogenize_index: usize,
        /// Building set of the nested set fan
        #[arg(long, value_enum, default_value_t = Building::Maximal)]
        building: Building,
    },
    /// Chromatic polynomial of a graph
    Chromatic { graph: PathBuf },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Building {
    Maximal,
    Minimal,
}

#[derive(Subcommand)]
enum ClassCmd {
    /// Class of a subvariety of the torus from its tropicalization
    FromTrop {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Class of the hypersurface of a homogeneous Cox ring polynomial
    FromCox {
        #[command(flatten)]
        variety: VarietyArg,
        /// Polynomial with one variable per ray
        #[arg(long)]
        poly: PathBuf,
    },
    /// Divisor class of a hypersurface section of a wonderful compactification
    Wonderful {
        /// Realization of the arrangement; the first element is the constant
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        /// Tropical cycle replacing the computed target
        #[arg(long)]
        trop: Option<PathBuf>,
        /// Building set of the nested set fan carrying the compactification
        #[arg(long, value_enum, default_value_t = Building::Maximal)]
        building: Building,
    },
    /// Compare the reduced characteristic polynomial with the class of the
    /// graph of the Cremona map
    HuhKatz {
        #[arg(long, conflicts_with = "matroid", required_unless_present = "matroid")]
        graph: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConeCmd {
    /// Whether a point is a nonnegative combination of generators
    Contains {
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        generators: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
