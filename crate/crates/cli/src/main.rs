//! `catsimp`: command-line front end for the engine.
//!
//! Exit status is 0 on success, 1 when the input describes data that breaks
//! a law or a check fails, and 2 when arguments or files cannot be parsed.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "catsimp", version, about = "Finite category theory and simplicial homotopy")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Cap on candidates examined by enumerations.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Highest dimension for nerves, horn scans and classification.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Seed for randomized commands (none of the current verbs sample).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a file of any supported kind and print a summary.
    Check { file: PathBuf },
    /// Limit of a set-valued diagram.
    Limit { diagram: PathBuf },
    /// Colimit of a set-valued diagram.
    Colimit { diagram: PathBuf },
    /// Left Kan extension of a diagram along a functor.
    KanLeft { diagram: PathBuf, functor: PathBuf },
    /// Right Kan extension of a diagram along a functor.
    KanRight { diagram: PathBuf, functor: PathBuf },
    /// End of a bifunctor.
    End { bifunctor: PathBuf },
    /// Coend of a bifunctor.
    Coend { bifunctor: PathBuf },
    /// Nerve of a category: cell counts, or the simplicial set with --json.
    Nerve {
        category: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Horn-filling statistics per horn shape.
    Horns { sset: PathBuf },
    /// Kan / quasi-category / neither, with witnesses.
    Classify { sset: PathBuf },
    /// Path components of the vertices.
    Pi0 { sset: PathBuf },
    /// Edge-path presentation of the fundamental group.
    Pi1 {
        sset: PathBuf,
        #[arg(long)]
        base: String,
        /// Scan edges in reverse lexicographic order for the spanning tree.
        #[arg(long)]
        reversed: bool,
    },
    /// Amalgamated pushout of two presentations.
    Svk { span: PathBuf },
    /// Barycentric subdivision (simplicial set JSON).
    Sd { sset: PathBuf },
    /// Ex of a simplicial set (simplicial set JSON).
    Ex { sset: PathBuf },
    /// Iterate Ex and report horn filling at each stage.
    ExIter {
        sset: PathBuf,
        #[arg(short = 'k', long = "stages", default_value_t = 1)]
        k: usize,
        /// Write the last stage as simplicial set JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Localize a category at the 2-out-of-3 closure of some morphisms.
    Localize {
        category: PathBuf,
        /// Comma-separated morphism names.
        #[arg(long, default_value = "")]
        weq: String,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Check the model category axioms.
    ModelCheck { model: PathBuf },
    /// Check a monoid table and whether it is a group.
    CheckMonoid { monoid: PathBuf },
    /// Check an action table.
    CheckAction { action: PathBuf },
    /// Orbits of an action, computed as a pushout and by closure.
    Orbit { action: PathBuf },
    /// Exhaustive Eckmann–Hilton scan.
    EckmannHilton {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
