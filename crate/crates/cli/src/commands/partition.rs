use std::path::PathBuf;

use clap::Subcommand;
use letgraph::partition::{
    ap_grid_search, check_canonical_semi, gamma, lambda, linked_chain, partition_failure, sigma, Colouring, Failure,
    Level, ParameterValue,
};
use letgraph::{Budget, Exhausted, Graph, PartitionCertificate};
use serde_json::json;

use crate::commands::letters::GraphArg;
use crate::input::{load, perm, read};
use crate::output::{to_json, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum PartitionCommand {
    /// Least number of bags in a chain partition.
    Gamma(GraphArg),
    /// Least number of bags in a semi-consistent partition.
    Sigma(GraphArg),
    /// Least number of bags in a proper partition.
    Lambda(GraphArg),
    /// Check an ordered certificate at a level.
    Check {
        #[arg(long)]
        graph: PathBuf,
        /// Certificate file (`bag name : v ...` and optional `sign a b +` lines).
        #[arg(long)]
        cert: PathBuf,
        /// chain, semi or proper.
        #[arg(long, default_value = "proper")]
        level: Level,
    },
    /// Linked chain graph of a permutation.
    Linked {
        #[arg(long)]
        perm: String,
    },
    /// Monochromatic product of k-term progressions in a colouring.
    Apgrid {
        /// Colouring file: `N k` then N rows of colours.
        #[arg(long)]
        colouring: PathBuf,
    },
}

fn parameter(
    name: &str,
    g: &Graph,
    budget: &mut Budget,
    f: fn(&Graph, &mut Budget) -> Result<ParameterValue, Exhausted>,
) -> CliResult {
    let v = f(g, budget)?;
    let text = format!("{name} {}\n{}", v.value, v.certificate.to_text());
    Ok(Report::new(text, json!({ name: v.value, "certificate": to_json(&v.certificate) })))
}

fn describe(f: &Failure, cert: &PartitionCertificate) -> String {
    let n = |i: usize| cert.names[i].clone();
    match *f {
        Failure::NotHomogeneous(a) => format!("bag {} is neither a clique nor independent", n(a)),
        Failure::NotChain(a, b) => format!("bags {} and {} contain an induced 2K2", n(a), n(b)),
        Failure::NotMonotone(a, b) => format!("bag {} is not monotone toward bag {}", n(a), n(b)),
        Failure::NotProper(a, b) => format!("bags {} and {} are not properly ordered", n(a), n(b)),
    }
}

pub fn run(cmd: PartitionCommand, budget: &mut Budget) -> CliResult {
    match cmd {
        PartitionCommand::Gamma(a) => parameter("gamma", &load(&a.graph)?, budget, gamma),
        PartitionCommand::Sigma(a) => parameter("sigma", &load(&a.graph)?, budget, sigma),
        PartitionCommand::Lambda(a) => parameter("lambda", &load(&a.graph)?, budget, lambda),
        PartitionCommand::Check { graph, cert, level } => {
            let g: Graph = load(&graph)?;
            let c = PartitionCertificate::parse(&read(&cert)?, g.n())?;
            Ok(match partition_failure(&g, &c, level)? {
                None => Report::new("valid\n", json!({ "valid": true })),
                Some(f) => Report::negative(
                    format!("invalid: {}\n", describe(&f, &c)),
                    json!({ "valid": false, "failure": to_json(&f) }),
                ),
            })
        }
        PartitionCommand::Linked { perm: p } => {
            let lcg = linked_chain(&perm(&p)?);
            let cert = lcg.canonical_certificate();
            let semi = check_canonical_semi(&lcg);
            let mut text = lcg.graph.to_text();
            text.push_str(&cert.to_text());
            text.push_str(&format!("canonical parts semi-consistent: {}\n", if semi { "yes" } else { "no" }));
            let json = json!({
                "graph": to_json(&lcg.graph),
                "certificate": to_json(&cert),
                "names": (0..lcg.graph.n()).map(|v| lcg.vertex_name(v)).collect::<Vec<_>>(),
                "semi": semi,
            });
            Ok(Report::new(text, json))
        }
        PartitionCommand::Apgrid { colouring } => {
            let (c, k) = Colouring::parse(&read(&colouring)?)?;
            Ok(match ap_grid_search(&c, k) {
                Some(w) => {
                    let terms = |t: Vec<usize>| t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                    let text = format!("x {}\ny {}\ncolour {}\n", terms(w.x.terms()), terms(w.y.terms()), w.colour);
                    Report::new(text, json!({ "found": true, "witness": to_json(&w) }))
                }
                None => Report::negative("no monochromatic progression grid\n", json!({ "found": false })),
            })
        }
    }
}
