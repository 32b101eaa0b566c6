use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linecfg::search::DEFAULT_CEILING;
use linecfg::{InequalityId, RealizabilityClass};

#[derive(Debug, Parser)]
#[command(
    name = "linecfg",
    version,
    about = "Line arrangement combinatorics: Hirzebruch polynomials, inequalities, ball-quotient searches"
)]
pub struct Cli {
    /// Use this catalog document instead of the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    pub catalog: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and inequality reports for t-vectors.
    Check(CheckArgs),
    /// Search for t-vectors whose Kummer cover of order n is a ball quotient.
    Search(SearchArgs),
    /// Nonexistence bounds for topological (n_k) configurations.
    Bound(BoundArgs),
    /// Inspect the fixture catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Rerun a nonexistence or uniqueness result and compare with the expected outcome.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Real,
    Complex,
    Pseudo,
}

impl From<ClassArg> for RealizabilityClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Real => RealizabilityClass::RealLine,
            ClassArg::Complex => RealizabilityClass::ComplexLine,
            ClassArg::Pseudo => RealizabilityClass::Pseudoline,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Inline t-vector, `d=6;t2=3;t3=4` or `{"d":6,"t":{"2":3,"3":4}}`.
    #[arg(long)]
    pub tv: Option<String>,
    /// File with one t-vector per line, or a JSON array of them.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Catalog entry name.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Realizability class; defaults to the catalog entry's class, else real.
    #[arg(long, value_enum)]
    pub class: Option<ClassArg>,
    /// Largest cover order scanned for ball quotients.
    #[arg(long, default_value_t = 1000)]
    pub n_max: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Derived,
    Oracle,
    Both,
}

fn parse_inequality(s: &str) -> Result<InequalityId, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Cover order.
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 4)]
    pub dmin: u32,
    #[arg(long, default_value_t = 22)]
    pub dmax: u32,
    #[arg(long, value_enum, default_value = "real")]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "oracle")]
    pub engine: EngineArg,
    /// Leave an inequality out of the filter set (repeatable).
    #[arg(long, value_parser = parse_inequality)]
    pub exclude: Vec<InequalityId>,
    /// Refuse when more candidates than this would be enumerated.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u128,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Print every traced candidate.
    #[arg(long)]
    pub trace: bool,
    /// JSON-lines output: one candidate per line, summary last.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Incidence degree k.
    #[arg(long, required_unless_present = "table", conflicts_with = "table")]
    pub k: Option<u64>,
    /// Print both comparators for k = 3..=KMAX.
    #[arg(long, value_name = "KMAX")]
    pub table: Option<u64>,
    /// Compare with `> 16` (default).
    #[arg(long, conflicts_with = "weak")]
    pub strict: bool,
    /// Compare with `>= 16`.
    #[arg(long)]
    pub weak: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// All entries in file order.
    List {
        #[arg(long)]
        json: bool,
    },
    /// One entry with its invariants.
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Recheck the invariants the catalog promises.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thmB")]
    ThmB,
    #[value(name = "thmC")]
    ThmC,
    #[value(name = "n7")]
    N7,
    #[value(name = "thmD")]
    ThmD,
    All,
}

/// Candidates over `d` in `[4, 30]`, the range reproduced for orders 4, 5, 7.
pub const REPRODUCE_CEILING: u128 = 1_000_000_000;

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value_t = REPRODUCE_CEILING)]
    pub ceiling: u128,
    #[arg(long)]
    pub json: bool,
}
