use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "gbooks",
    version,
    about = "Book Ramsey numbers, stability and regularity checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Cap on worker threads (0 = one per core).
    #[arg(long, env = "GBOOKS_THREADS", global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Jsonl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Book size bs^(r) of each input graph.
    Books(BooksArgs),
    /// Single-pass low-degree deletion and the colouring criteria.
    Stability(StabilityArgs),
    /// The constant c(p) and its bounds.
    Constants(ConstantsArgs),
    /// ε-regularity of a pair, or cluster graphs of a partition.
    Regularity(RegularityArgs),
    /// Exhaustive certification of r(K_{p+1}, B_q^(r)).
    Ramsey(RamseyArgs),
    /// Build or verify the extremal graph K_p(q+r-1).
    Witness(WitnessArgs),
    /// Constants, failure bounds and sampling for the random construction.
    LowerBound(LowerBoundArgs),
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// A graph6 string, or a file with one graph6 string per line.
    #[arg(long)]
    pub graph: String,
}

#[derive(Args, Debug)]
pub struct BooksArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Base order of the book.
    #[arg(long)]
    pub r: usize,
    /// Also report whether B_q^(r) is contained.
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Args, Debug)]
pub struct StabilityArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub p: usize,
    /// Slack α, as a decimal or a fraction such as 1/12544.
    #[arg(long)]
    pub alpha: String,
    /// Largest order handed to exact colouring with p >= 3 colours.
    #[arg(long, default_value_t = gbooks::stability::DEFAULT_COLORING_CAP)]
    pub coloring_cap: usize,
}

#[derive(Args, Debug)]
pub struct ConstantsArgs {
    #[arg(long)]
    pub p: usize,
    /// Report every p up to this value.
    #[arg(long)]
    pub to: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RegularityArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub epsilon: f64,
    /// Partition file; classifies every pair of parts.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub partition: Option<String>,
    /// Comma-separated vertices of A, for a single pair.
    #[arg(long, requires = "b", value_delimiter = ',')]
    pub a: Option<Vec<usize>>,
    #[arg(long, requires = "a", value_delimiter = ',')]
    pub b: Option<Vec<usize>>,
    /// Low-density cut-off d for classification.
    #[arg(long, default_value_t = 0.5)]
    pub d: f64,
    /// Near-complete cut-off δ for classification.
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    /// Independent r-set density constant; enables the book-size bound.
    #[arg(long)]
    pub c_pr: Option<f64>,
    /// Switch to the randomized refuter with this many trials per pair.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = gbooks::regularity::DEFAULT_EXACT_CAP)]
    pub exact_cap: usize,
}

#[derive(Args, Debug)]
pub struct RamseyArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 9)]
    pub n_cap: usize,
    /// Decide arrowing at this order only.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub no_symmetry: bool,
    #[arg(long, default_value_t = 8)]
    pub split_level: usize,
    /// Write the text certificate to this path.
    #[arg(long)]
    pub certificate_out: Option<String>,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub r: usize,
    /// Verify this graph instead of the construction.
    #[arg(long)]
    pub graph: Option<String>,
    /// Run the pigeonhole step on a K_p(r) found in the graph.
    #[arg(long)]
    pub pigeonhole: bool,
}

#[derive(Args, Debug)]
pub struct LowerBoundArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
    /// Monte-Carlo trials; 0 skips sampling.
    #[arg(long, default_value_t = 0)]
    pub trials: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Book size to avoid, default m^k.
    #[arg(long)]
    pub q_target: Option<u64>,
    /// Evaluate the binomial tail bound at n,prob,M.
    #[arg(long, value_delimiter = ',')]
    pub chernoff: Option<Vec<f64>>,
}
