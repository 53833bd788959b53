use clap::{Args, Subcommand};
use letgraph::perm::{pi_n, SumMode};
use serde_json::json;

use crate::input::perm;
use crate::output::{graph_report, one_based, to_json, vertex_list, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum PermCommand {
    /// Find an occurrence of a pattern.
    Contains {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        pattern: String,
    },
    /// Inversion graph on positions.
    Invgraph(PermArg),
    /// Direct or skew sum.
    Sum {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        skew: bool,
    },
    /// The permutation pi_n on n^2 points.
    Pin {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct PermArg {
    /// One-line notation, e.g. "6 1 4 2 5 3" or "2413".
    #[arg(long)]
    pub perm: String,
}

fn perm_report(p: &letgraph::Permutation) -> Report {
    Report::new(format!("{p}\n"), json!({ "perm": to_json(p) }))
}

pub fn run(cmd: PermCommand) -> CliResult {
    match cmd {
        PermCommand::Contains { perm: p, pattern } => {
            let (pi, sigma) = (perm(&p)?, perm(&pattern)?);
            Ok(match pi.contains_pattern(&sigma) {
                Some(pos) => Report::new(
                    format!("positions {}\n", vertex_list(&pos)),
                    json!({ "contains": true, "positions": one_based(&pos) }),
                ),
                None => Report::negative("pattern avoided\n", json!({ "contains": false })),
            })
        }
        PermCommand::Invgraph(a) => Ok(graph_report(&perm(&a.perm)?.inversion_graph())),
        PermCommand::Sum { left, right, skew } => {
            let mode = if skew { SumMode::Skew } else { SumMode::Direct };
            Ok(perm_report(&perm(&left)?.sum(&perm(&right)?, mode)))
        }
        PermCommand::Pin { n } => Ok(perm_report(&pi_n(n))),
    }
}
