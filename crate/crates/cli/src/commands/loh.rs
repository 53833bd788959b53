use std::path::PathBuf;

use clap::{Args, Subcommand};
use letgraph::loh::from_chain_circuit;
use letgraph::{Budget, ChainCircuit, Loh};
use serde_json::json;

use crate::input::load;
use crate::output::{to_json, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum LohCommand {
    /// Parse and validate.
    Validate(LohArg),
    /// Cells: classes of elements lying in the same hyperedges.
    Cells(LohArg),
    /// A global order, or a conflict cycle.
    Consistent(LohArg),
    /// Split at the named elements, in order.
    Split {
        #[command(flatten)]
        h: LohArg,
        #[arg(long = "at", required = true, num_args = 1..)]
        at: Vec<String>,
    },
    /// Least number of splits reaching consistency.
    Inconsistency(LohArg),
    /// Hypergraph of consecutive bag pairs of a chain circuit.
    Fromcc {
        #[arg(long)]
        circuit: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct LohArg {
    /// Hypergraph file (`elem ...` then `edge name : x y ...` lines).
    #[arg(long)]
    pub loh: PathBuf,
}

fn names(h: &Loh, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| h.elements()[x].clone()).collect()
}

fn loh_report(h: &Loh) -> Report {
    Report::new(h.to_text(), json!({ "loh": to_json(h) }))
}

pub fn run(cmd: LohCommand, budget: &mut Budget) -> CliResult {
    match cmd {
        LohCommand::Validate(a) => {
            let h: Loh = load(&a.loh)?;
            let text = format!("valid: {} elements, {} hyperedges\n", h.elements().len(), h.edges().len());
            Ok(Report::new(text, json!({ "valid": true, "loh": to_json(&h) })))
        }
        LohCommand::Cells(a) => {
            let h: Loh = load(&a.loh)?;
            let cells: Vec<Vec<String>> = h.cells().iter().map(|c| names(&h, c)).collect();
            let text: String = cells.iter().map(|c| format!("cell {}\n", c.join(" "))).collect();
            Ok(Report::new(text, json!({ "cells": cells })))
        }
        LohCommand::Consistent(a) => {
            let h: Loh = load(&a.loh)?;
            Ok(match h.is_globally_consistent() {
                Ok(order) => {
                    let order = names(&h, &order);
                    Report::new(format!("order {}\n", order.join(" ")), json!({ "consistent": true, "order": order }))
                }
                Err(cycle) => {
                    let cycle = names(&h, &cycle);
                    Report::negative(
                        format!("conflict cycle {}\n", cycle.join(" ")),
                        json!({ "consistent": false, "cycle": cycle }),
                    )
                }
            })
        }
        LohCommand::Split { h, at } => {
            let h: Loh = load(&h.loh)?;
            let at: Vec<&str> = at.iter().map(String::as_str).collect();
            Ok(loh_report(&h.split_all(&at)?))
        }
        LohCommand::Inconsistency(a) => {
            let h: Loh = load(&a.loh)?;
            let (value, set) = h.global_inconsistency(budget)?;
            let set = names(&h, &set);
            let text = format!("inconsistency {value}\nsplit {}\n", set.join(" "));
            Ok(Report::new(text, json!({ "inconsistency": value, "split": set })))
        }
        LohCommand::Fromcc { circuit } => {
            let cc: ChainCircuit = load(&circuit)?;
            Ok(loh_report(&from_chain_circuit(&cc)?))
        }
    }
}
