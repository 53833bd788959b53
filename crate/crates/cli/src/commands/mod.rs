use clap::Subcommand;
use letgraph::Budget;

use crate::output::CliResult;

pub mod circuits;
pub mod grid;
pub mod letters;
pub mod loh;
pub mod partition;
pub mod perm;
pub mod plot;

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decode a word over a decoder into a graph.
    Decode(letters::DecodeArgs),
    /// Exact lettericity with a witness representation.
    Lettericity(letters::GraphArg),
    /// Decide whether a graph is a letter graph of a fixed decoder.
    Recognize(letters::RecognizeArgs),
    /// Minimal forbidden induced subgraphs of the k-letter graphs.
    Obstructions(letters::ObstructionArgs),
    /// Permutation patterns and inversion graphs.
    #[command(subcommand)]
    Perm(perm::PermCommand),
    /// Monotone and geometric grid classes.
    #[command(subcommand)]
    Grid(grid::GridCommand),
    /// Chain circuits, conflict digraphs and their encodings.
    #[command(subcommand)]
    Cc(circuits::CcCommand),
    /// Chain, semi-consistent and proper partitions.
    #[command(subcommand)]
    Partition(partition::PartitionCommand),
    /// Locally ordered hypergraphs.
    #[command(subcommand)]
    Loh(loh::LohCommand),
    /// SVG plots of permutations and griddings.
    #[command(subcommand)]
    Plot(plot::PlotCommand),
}

pub fn run(cmd: Command, budget: &mut Budget) -> CliResult {
    match cmd {
        Command::Decode(a) => letters::decode(a),
        Command::Lettericity(a) => letters::lettericity(a, budget),
        Command::Recognize(a) => letters::recognize(a, budget),
        Command::Obstructions(a) => letters::obstructions(a, budget),
        Command::Perm(c) => perm::run(c),
        Command::Grid(c) => grid::run(c, budget),
        Command::Cc(c) => circuits::run(c, budget),
        Command::Partition(c) => partition::run(c, budget),
        Command::Loh(c) => loh::run(c, budget),
        Command::Plot(c) => plot::run(c),
    }
}
