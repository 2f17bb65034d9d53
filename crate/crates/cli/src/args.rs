use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "mbs", version, about = "Exact checks on Minkowskian branching structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check symmetry, space-likeness, nonemptiness and the triangle condition.
    Validate(ModelArg),
    /// Evaluate one relation.
    #[command(subcommand)]
    Query(Query),
    /// Decide choice points of a pair, or find a prior choice for a chain.
    ChoicePoints(ChoicePoints),
    /// Sample the branching axioms on a validated model.
    Axioms(Axioms),
    /// The non-representable chain of the 01-sequence model.
    Counterexample(Counterexample),
    /// Cross-check the analytic decisions against grid enumeration.
    Oracle(Oracle),
    /// SVG and CSV of an overlap region on a 2-D slice.
    Plot(Plot),
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// Model file.
    #[arg(long)]
    pub model: String,
}

#[derive(Debug, Subcommand)]
pub enum Query {
    /// `[a] <= [b]` in the quotient order.
    Order(PairQuery),
    /// `a` and `b` are glued.
    Equiv(PairQuery),
    /// `point` lies in the overlap region of two scenarios.
    Overlap(OverlapQuery),
    /// The scenarios whose copy of `point` lies in a history.
    History(HistoryQuery),
}

#[derive(Debug, Args)]
pub struct PairQuery {
    #[arg(long)]
    pub model: String,
    /// Labelled point, e.g. '{point:["1/2","0/1"],scenario:"s"}'.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct OverlapQuery {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub sigma: String,
    #[arg(long)]
    pub eta: String,
    /// Point as a JSON array of rationals, e.g. '["1/2","0/1"]'.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Debug, Args)]
pub struct HistoryQuery {
    #[arg(long)]
    pub model: String,
    /// Scenario whose history is taken.
    #[arg(long)]
    pub history: String,
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Debug, Args)]
pub struct ChoicePoints {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub sigma: String,
    #[arg(long)]
    pub eta: String,
    /// Decide a single point instead of listing.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// A chain in h_sigma outside h_eta, as an array of points; prints a
    /// choice point below it.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "point")]
    pub chain: Option<String>,
    /// How many members of an infinite family to list.
    #[arg(long, default_value_t = 10)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct Axioms {
    #[arg(long)]
    pub model: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,
    /// Sampling box: `lo,hi` for every coordinate, or `lo0,hi0,lo1,hi1,...`.
    #[arg(long = "box", default_value = "-2,2", allow_hyphen_values = true)]
    pub bounds: String,
    #[arg(long, default_value = "1/4")]
    pub step: String,
}

#[derive(Debug, Args)]
pub struct Counterexample {
    /// Length of the chain `z_1 < z_2 < ...`.
    #[arg(long, default_value_t = 10)]
    pub depth: u64,
    /// Witnesses are listed for every scenario with zeros below this.
    #[arg(long, default_value_t = 4)]
    pub support: u32,
}

#[derive(Debug, Args)]
pub struct Oracle {
    #[arg(long)]
    pub model: String,
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bounds: String,
    #[arg(long)]
    pub step: String,
    /// Largest member index kept from infinite families.
    #[arg(long, default_value_t = 1000)]
    pub truncate: usize,
    /// Sub-steps per step in the upward search for choice points.
    #[arg(long, default_value_t = 2)]
    pub refine: u32,
    /// Write region membership of every grid point here.
    #[arg(long)]
    pub csv: Option<String>,
}

#[derive(Debug, Args)]
pub struct Plot {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub sigma: String,
    #[arg(long)]
    pub eta: String,
    /// Plotted box: `lo,hi` for both axes, or `tlo,thi,xlo,xhi`.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bounds: String,
    #[arg(long)]
    pub step: String,
    /// Spatial coordinate on the horizontal axis.
    #[arg(long, default_value_t = 1)]
    pub axis: usize,
    /// Values of the remaining coordinates in d > 2, e.g. `2=0/1,3=1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub slice: Option<String>,
    /// Members of infinite families drawn.
    #[arg(long, default_value_t = 1000)]
    pub truncate: usize,
    #[arg(long)]
    pub svg: String,
    #[arg(long)]
    pub csv: String,
}
