use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::defaults;

/// Spectra of Schrödinger operators on periodic graphs.
#[derive(Clone, Debug, Parser)]
#[command(name = "perispec", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Ceiling on N^d * ν^3 for one band structure.
    #[arg(long, default_value_t = defaults::COMPUTE_BUDGET, global = true)]
    pub budget: f64,

    /// Worker threads for grid diagonalization (0 = rayon default).
    #[arg(long, env = "PERISPEC_THREADS", default_value_t = 0, global = true)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

/// Graph input shared by the subcommands.
#[derive(Clone, Debug, Args)]
pub struct GraphArgs {
    /// Graph file (JSON), or `fixture:<name>` for a bundled graph.
    pub graph: String,

    /// Potential override file `{"potential": {"1": 1.0, ...}}`.
    #[arg(long)]
    pub potential: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Check simplicity, connectivity and the cycle-index lattice.
    Validate(GraphArgs),

    /// Degeneracy exponents ω(a), ω and shortest nontrivial cycles.
    Omega(GraphArgs),

    /// Band structure of H = Δ + μQ on a Brillouin-zone grid.
    Bands {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        /// Points per axis (default depends on the dimension).
        #[arg(long)]
        grid: Option<usize>,
        /// Use the spanning-tree gauge adapted to potential value `a`.
        #[arg(long, allow_negative_numbers = true)]
        gauge: Option<f64>,
        /// Also emit the eigenvalues at every grid point.
        #[arg(long)]
        dump_dispersion: bool,
    },

    /// Large-coupling sweep with fitted decay slopes.
    Sweep {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = defaults::SWEEP_MU_MIN, allow_negative_numbers = true)]
        mu_min: f64,
        #[arg(long, default_value_t = defaults::SWEEP_MU_MAX)]
        mu_max: f64,
        #[arg(long, default_value_t = defaults::SWEEP_POINTS)]
        points: usize,
        #[arg(long)]
        grid: Option<usize>,
    },

    /// Per-vertex decay exponents of the cluster eigenvectors near μa.
    Decay {
        #[command(flatten)]
        graph: GraphArgs,
        /// Potential value a.
        #[arg(long, allow_negative_numbers = true)]
        value: f64,
        /// Couplings (comma separated).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        mus: Option<Vec<f64>>,
        /// Quasimomentum (comma separated); defaults to a fixed generic point.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k: Option<Vec<f64>>,
        /// Draw k uniformly from the torus instead.
        #[arg(long)]
        random_k: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Lower bound on the total bandwidth against the measured value.
    Bound {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long)]
        grid: Option<usize>,
    },

    /// Print a bundled graph document (fig1, zline3, zline<ν>, fig1:<q1,..,q6>,
    /// fig1-no-v4v2, fig1-multi-edge, fig1-sublattice).
    Fixture { name: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Omega(_) => "omega",
            Command::Bands { .. } => "bands",
            Command::Sweep { .. } => "sweep",
            Command::Decay { .. } => "decay",
            Command::Bound { .. } => "bound",
            Command::Fixture { .. } => "fixture",
        }
    }
}
