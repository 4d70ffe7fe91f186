use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Tamari intervals: conversions, compositions, polynomials and counts.
#[derive(Parser, Debug)]
#[command(name = "tamari", version, about)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between Dyck words, tree JSON, ballot words and (m+1)-ary trees.
    Convert(ConvertArgs),
    /// Count intervals with the generator, the closed formula and optionally the oracle.
    Count(CountArgs),
    /// Tamari polynomial of a tree given by its Dyck word.
    Poly(PolyArgs),
    /// Inspect an interval-poset.
    Interval(IntervalArgs),
    /// Compose interval-posets and print every term with its weight.
    Compose(ComposeArgs),
    /// Split an interval-poset into its unique composition operands.
    Decompose(DecomposeArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dyck,
    TreeJson,
    Ballot,
    Mary,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub from: Format,
    #[arg(long, value_enum)]
    pub to: Format,
    /// Required for ballot and (m+1)-ary formats.
    #[arg(long)]
    pub m: Option<usize>,
    pub input: String,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Also print the intervals refined by the trees statistic.
    #[arg(long)]
    pub refined: bool,
    /// Also count comparable pairs by brute force.
    #[arg(long)]
    pub oracle: bool,
    /// Skip the desk-scale guard.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Dyck word of the tree.
    #[arg(long)]
    pub tree: String,
    /// Treat the tree as m-binary.
    #[arg(long)]
    pub m: Option<usize>,
    /// Count greater trees instead of smaller ones.
    #[arg(long, conflicts_with_all = ["m", "b"])]
    pub mirror: bool,
    /// Refine by the rises statistic.
    #[arg(long, conflicts_with = "m")]
    pub b: bool,
    /// Print the value at x = 1 (and b = 1).
    #[arg(long)]
    pub at_one: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["relations", "trees"]))]
#[command(group = clap::ArgGroup::new("view").args(["lower", "upper", "contents", "linext", "dot"]))]
pub struct IntervalArgs {
    /// Relations as `[[a, b], ...]`; needs `--size`.
    #[arg(long, requires = "size")]
    pub relations: Option<String>,
    #[arg(long)]
    pub size: Option<usize>,
    /// Lower and upper trees as Dyck words.
    #[arg(long, num_args = 2, value_names = ["LOWER", "UPPER"])]
    pub trees: Option<Vec<String>>,
    #[arg(long)]
    pub lower: bool,
    #[arg(long)]
    pub upper: bool,
    /// Dyck words of every tree in the interval.
    #[arg(long)]
    pub contents: bool,
    /// Linear extensions.
    #[arg(long)]
    pub linext: bool,
    /// DOT digraph of the Hasse edges.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    /// Left operand as `{"size": n, "relations": [[a, b], ...]}`.
    #[arg(long)]
    pub left: String,
    /// Right operand; repeat `m` times for the m-composition.
    #[arg(long, required = true)]
    pub right: Vec<String>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Interval-poset as `{"size": n, "relations": [[a, b], ...]}`.
    #[arg(long)]
    pub poset: String,
    #[arg(long)]
    pub m: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Convert(a) => commands::convert(a),
        Command::Count(a) => commands::count(a),
        Command::Poly(a) => commands::poly(a),
        Command::Interval(a) => commands::interval(a),
        Command::Compose(a) => commands::compose(a),
        Command::Decompose(a) => commands::decompose(a),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
