use std::path::PathBuf;

use clap::{Args, Subcommand};
use letgraph::circuit::{generate_ckl, generate_twisted, random_circuit};
use letgraph::{encode, Budget, ChainCircuit, CyclicWord};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

use crate::input::load;
use crate::output::{one_based, to_json, vertex_list, CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum CcCommand {
    /// The circuit C_{k,l}, or a random circuit with `--random`.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Generate a random circuit with at most this many vertices.
        #[arg(long, value_name = "MAX_N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Complement consecutive pairs and reverse the bag orders.
    Complement(CircuitArg),
    /// Conflict digraph.
    Conflict(CircuitArg),
    /// Word over the cyclic decoder, or a conflict cycle.
    Cyclicword(CircuitArg),
    /// Letter-graph encoding by recursive splitting.
    Encode(CircuitArg),
    /// Twisted cycle with its ordered certificate.
    Twisted {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

#[derive(Debug, Args)]
pub struct CircuitArg {
    /// Circuit file: a graph followed by `bag i : v ...` lines.
    #[arg(long)]
    pub circuit: PathBuf,
}

fn circuit_report(cc: &ChainCircuit) -> Report {
    Report::new(cc.to_text(), json!({ "circuit": to_json(cc) }))
}

fn encoding_report(enc: &letgraph::Encoding) -> Report {
    let text = format!(
        "{}word {}\norder {}\nletters used {}\n",
        enc.decoder.to_text(),
        enc.word,
        vertex_list(&enc.order),
        enc.letters_used
    );
    let json = json!({
        "decoder": to_json(&enc.decoder),
        "word": to_json(&enc.word),
        "order": one_based(&enc.order),
        "letters_used": enc.letters_used,
    });
    Report::new(text, json)
}

pub fn run(cmd: CcCommand, budget: &mut Budget) -> CliResult {
    match cmd {
        CcCommand::Generate { k, l, random, seed } => {
            let cc = match random {
                Some(max_n) => {
                    if k < 3 {
                        return Err(CliError::invalid("a chain circuit needs at least 3 bags"));
                    }
                    random_circuit(&mut StdRng::seed_from_u64(seed), k, max_n, false)
                }
                None => generate_ckl(k, l)?,
            };
            Ok(circuit_report(&cc))
        }
        CcCommand::Complement(a) => Ok(circuit_report(&load::<ChainCircuit>(&a.circuit)?.complement())),
        CcCommand::Conflict(a) => {
            let cc: ChainCircuit = load(&a.circuit)?;
            let d = cc.conflict();
            let arcs: Vec<(usize, usize)> = d.arcs().map(|(u, v)| (u + 1, v + 1)).collect();
            let mut text = format!("digraph {}\n", d.n());
            for (u, v) in &arcs {
                text.push_str(&format!("a {u} {v}\n"));
            }
            let acyclic = d.is_acyclic();
            text.push_str(if acyclic { "acyclic\n" } else { "cyclic\n" });
            Ok(Report::new(text, json!({ "n": d.n(), "arcs": arcs, "acyclic": acyclic })))
        }
        CcCommand::Cyclicword(a) => {
            let cc: ChainCircuit = load(&a.circuit)?;
            Ok(match cc.cyclic_word() {
                CyclicWord::Word(enc) => encoding_report(&enc),
                CyclicWord::Cycle(c) => Report::negative(
                    format!("conflict cycle {}\n", vertex_list(&c)),
                    json!({ "acyclic": false, "cycle": one_based(&c) }),
                ),
            })
        }
        CcCommand::Encode(a) => {
            let cc: ChainCircuit = load(&a.circuit)?;
            Ok(encoding_report(&encode(&cc, budget)?))
        }
        CcCommand::Twisted { k, l } => {
            let t = generate_twisted(k, l)?;
            let cert = t.certificate();
            let mut text = t.graph.to_text();
            text.push_str(&cert.to_text());
            let json = json!({
                "graph": to_json(&t.graph),
                "certificate": to_json(&cert),
                "twisted_pair": [t.twisted_pair.0 + 1, t.twisted_pair.1 + 1],
            });
            Ok(Report::new(text, json))
        }
    }
}
