//! `cliquenet` command-line tool.

mod commands;
mod config;
mod error;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cliquenet", version, about = "Clustered random graphs: generation, analytics and simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// TOML config; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct GraphArgs {
    /// Degree law, e.g. `powerlaw:tau=2.5,kappa=50`, `regular:3`, `file:p.txt`.
    #[arg(long)]
    dist: Option<String>,
    /// Clique profile: a constant or `d:g,...[,*:g]`.
    #[arg(long)]
    gamma: Option<String>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct SimArgs {
    /// Vertices of the original graph.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    replicas: Option<usize>,
    /// Base seed.
    #[arg(long)]
    seed: Option<u64>,
    /// `multigraph`, `erase`, `reject` or `reject:N`.
    #[arg(long)]
    policy: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Process {
    Diffusion,
    Contagion,
}

#[derive(Debug, Args, Clone, Default)]
pub struct ProcessArgs {
    /// Percolation probabilities (diffusion); repeat or comma-separate.
    #[arg(long, value_delimiter = ',')]
    pi: Vec<f64>,
    /// Contagion parameter: thresholds `floor(q d)`.
    #[arg(long)]
    q: Option<f64>,
    /// Constant threshold `k` for every degree.
    #[arg(long)]
    k: Option<usize>,
    /// Initial activation probability per vertex.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a degree law as an `r p_r` table.
    Dist {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Find γ and the original law for a target law and clustering.
    Tune {
        #[command(flatten)]
        graph: GraphArgs,
        /// Target clustering.
        #[arg(long = "C")]
        c: Option<f64>,
        /// Target the mean local clustering instead of the global one.
        #[arg(long)]
        biased: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Analytic thresholds and final sizes.
    Analyze {
        process: Process,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        proc: ProcessArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Sample one substituted graph.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Monte Carlo estimates next to the analytic values.
    Simulate {
        process: Process,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        proc: ProcessArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Figure tables; `all` writes every figure into `--out-dir`.
    Experiment {
        name: String,
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        kappa: Option<f64>,
        /// Add simulation columns where available.
        #[arg(long)]
        simulate: bool,
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dist { graph, common } => commands::dist(&graph, &common),
        Command::Tune { graph, c, biased, common } => commands::tune(&graph, c, biased, &common),
        Command::Analyze { process, graph, proc, common } => commands::analyze(process, &graph, &proc, &common),
        Command::Gen { graph, sim, common } => commands::gen(&graph, &sim, &common),
        Command::Simulate { process, graph, proc, sim, common } => {
            commands::simulate(process, &graph, &proc, &sim, &common)
        }
        Command::Experiment { name, points, kappa, simulate, sim, out_dir, common } => {
            commands::experiment(&name, points, kappa, simulate, &sim, out_dir, &common)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
