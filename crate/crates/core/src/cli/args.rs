use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "zsm", version, about = "Exact zero-sum computations in metacyclic groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,

    #[command(flatten)]
    pub runtime: RuntimeArgs,
}

/// Flags that change what a run prints; part of the cache key.
#[derive(Debug, Args, Serialize)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Search one representative per automorphism orbit.
    #[arg(long, global = true)]
    pub symmetry: bool,
}

/// Flags that only change how a run executes.
#[derive(Debug, Args)]
pub struct RuntimeArgs {
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    pub jobs: u32,

    /// Cache directory (default: $ZSM_CACHE_DIR, else ~/.cache/zsm).
    #[arg(long, value_name = "DIR", global = true)]
    pub cache: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GroupArgs {
    /// Prime order of the normal cyclic subgroup.
    #[arg(long)]
    pub q: Option<u64>,
    /// Order of the acting cyclic subgroup.
    #[arg(long)]
    pub m: Option<u64>,
    /// Twisting unit: y x = x y^s.
    #[arg(long)]
    pub s: Option<u64>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Classify the free sequences of length m + q - 2 against Form II.
    VerifyTheorem {
        #[command(flatten)]
        group: GroupArgs,
        /// Run every admissible s for the given q and m.
        #[arg(long, conflicts_with = "s")]
        all_s: bool,
        /// Cursor file: resumed from if present, updated as shards finish.
        #[arg(long, value_name = "FILE")]
        #[serde(skip)]
        resume: Option<PathBuf>,
        /// Stop after this many new shards (checkpoint granularity).
        #[arg(long, hide = true)]
        #[serde(skip)]
        max_shards: Option<usize>,
    },
    /// Davenport constant by exhaustive search.
    Davenport {
        #[command(flatten)]
        group: GroupArgs,
        /// Cayley table file instead of metacyclic parameters.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["q", "m", "s"])]
        cayley: Option<PathBuf>,
        /// Ceiling on the search length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Decide whether one sequence is product-one free.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated elements, e.g. "x,x*y^4,y^2".
        #[arg(long)]
        sequence: String,
    },
    /// List the product-one free sequences of one length.
    EnumerateFree {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_name = "FILE", conflicts_with_all = ["q", "m", "s"])]
        cayley: Option<PathBuf>,
        #[arg(long)]
        length: usize,
        /// Print at most this many sequences.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Additive-combinatorics and residue checks.
    #[command(subcommand)]
    Lemma(LemmaCommand),
    /// Multiplicity structure of long free sequences in C_n.
    CyclicCheck {
        #[arg(long)]
        n: usize,
        /// Omit to check every admissible length.
        #[arg(long)]
        length: Option<usize>,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCommand {
    /// Vosper's criterion for one pair, or every pair of subsets.
    Vosper {
        #[arg(long)]
        q: Option<u32>,
        #[arg(long = "X", value_delimiter = ',', value_name = "LIST")]
        x: Vec<u64>,
        #[arg(long = "Y", value_delimiter = ',', value_name = "LIST")]
        y: Vec<u64>,
        /// All ordered pairs of nonempty subsets (q = 5, 7, 11 unless --q).
        #[arg(long, conflicts_with_all = ["x", "y"])]
        exhaustive: bool,
    },
    /// Multiplication by s moves an element out of {1..k-1} or {k..q-1}.
    Sinvariance {
        #[arg(long, conflicts_with = "q_max")]
        q: Option<u64>,
        #[arg(long)]
        q_max: Option<u64>,
        #[arg(long, requires = "q")]
        s: Option<u64>,
        #[arg(long, requires = "q")]
        k: Option<u64>,
    },
    /// Solutions of a z^2 - b w^4 = c and the residue classes of c + b w^4.
    Quartic {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, requires = "q")]
        a: Option<u64>,
        #[arg(long, requires = "q")]
        b: Option<u64>,
        #[arg(long, requires = "q")]
        c: Option<u64>,
        /// Every q = 1 mod 4 up to --q (default 101) and all a, b, c.
        #[arg(long, conflicts_with_all = ["a", "b", "c"])]
        exhaustive: bool,
    },
    /// Sizes of permutation sum sets.
    PermSums {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        coeffs: Vec<u64>,
        /// Random admissible coefficient tuples.
        #[arg(long, conflicts_with = "coeffs")]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
