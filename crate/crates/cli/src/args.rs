use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dbclosure::PruneMode;

#[derive(Debug, Parser)]
#[command(name = "dbclosure", version, about = "Distance-balanced graphs and their minimal closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph is distance-balanced (exit 0 yes, 2 no).
    Check(CheckArgs),
    /// Print the Szeged index.
    Szeged(SzegedArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Find a minimal distance-balanced closure.
    Closure(ClosureArgs),
    /// Check the closed-form closures over a range of parameters.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Edge-list file.
    pub path: PathBuf,
    /// Print the per-edge closer-vertex counts.
    #[arg(long)]
    pub report: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SzegedArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenFamily {
    /// `K_{1,m}`; PARAM is m >= 1.
    Star,
    /// Spider with the given branch lengths, e.g. `3,1^2`.
    Starlike,
    /// Star with two pendants on one leaf; PARAM is m >= 3.
    Broom,
    Path,
    Cycle,
    Complete,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: GenFamily,
    /// Family parameter: m, n, or a branch list for `starlike`.
    pub param: String,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum ClosureMode {
    /// Closed-form construction for recognized families.
    #[default]
    Construct,
    /// Exhaustive search for `b(G)`, any connected graph with n <= 64.
    Search,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Prune {
    Naive,
    Regular,
}

impl From<Prune> for PruneMode {
    fn from(p: Prune) -> Self {
        match p {
            Prune::Naive => PruneMode::Naive,
            Prune::Regular => PruneMode::Regular,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ClosureMode,
    /// Search pruning; `regular` needs diameter <= 2 or a tree with Δ >= n - 3.
    #[arg(long, value_enum, default_value = "naive")]
    pub prune: Prune,
    /// Give up after this many added edges (exit 4).
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Report every witness at the minimal level.
    #[arg(long)]
    pub all_witnesses: bool,
    /// Wall-clock budget in seconds (exit 4 when exhausted).
    #[arg(long, value_name = "SECS")]
    pub budget: Option<f64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyFamily {
    Star,
    S2,
    S22,
    S3,
    Broom,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: VerifyFamily,
    /// Inclusive range `A..B`, or a single value.
    #[arg(long, value_name = "A..B")]
    pub m: String,
    /// Cross-check against exhaustive search when n <= 8.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
}
