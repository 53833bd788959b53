use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use letgraph::letters::{self, LetterRepresentation};
use letgraph::{Budget, Decoder, Graph, Word};
use serde_json::json;

use crate::input::load;
use crate::output::{graph_report, one_based, to_json, vertex_list, CliResult, Report};

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// Decoder file (`letters ...` then `arc x y` lines).
    #[arg(long)]
    decoder: PathBuf,
    /// Whitespace-separated letters.
    #[arg(long)]
    word: String,
    /// Print Graphviz DOT instead of the edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file (`graph n` then `e u v` lines, 1-based).
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[arg(long)]
    decoder: PathBuf,
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct ObstructionArgs {
    /// Number of letters.
    #[arg(long)]
    k: usize,
    /// Largest obstruction order searched.
    #[arg(long)]
    max_n: usize,
}

pub fn decode(a: DecodeArgs) -> CliResult {
    let d: Decoder = load(&a.decoder)?;
    let w: Word = a.word.parse()?;
    let g = letters::decode(&d, &w)?;
    let mut r = graph_report(&g);
    if a.dot {
        r.text = g.to_dot();
    }
    Ok(r)
}

fn representation_text(rep: &LetterRepresentation) -> String {
    let mut s = rep.decoder.to_text();
    let _ = writeln!(s, "word {}", rep.word);
    let _ = writeln!(s, "order {}", vertex_list(&rep.order));
    s
}

fn representation_json(rep: &LetterRepresentation) -> serde_json::Value {
    json!({
        "decoder": to_json(&rep.decoder),
        "word": to_json(&rep.word),
        "order": one_based(&rep.order),
    })
}

pub fn lettericity(a: GraphArg, budget: &mut Budget) -> CliResult {
    let g: Graph = load(&a.graph)?;
    let l = letters::lettericity(&g, budget)?;
    let text = format!(
        "lettericity {}\ncochromatic {}\n{}",
        l.value,
        l.cochromatic,
        representation_text(&l.witness)
    );
    let json = json!({
        "lettericity": l.value,
        "cochromatic": l.cochromatic,
        "witness": representation_json(&l.witness),
    });
    Ok(Report::new(text, json))
}

pub fn recognize(a: RecognizeArgs, budget: &mut Budget) -> CliResult {
    let d: Decoder = load(&a.decoder)?;
    let g: Graph = load(&a.graph)?;
    match letters::recognize_with_order(&d, &g, budget)? {
        Some((word, order)) => {
            let rep = LetterRepresentation { decoder: d, word, order };
            let text = format!("word {}\norder {}\n", rep.word, vertex_list(&rep.order));
            Ok(Report::new(text, json!({ "recognized": true, "word": to_json(&rep.word), "order": one_based(&rep.order) })))
        }
        None => Ok(Report::negative(
            "not a letter graph of this decoder\n",
            json!({ "recognized": false }),
        )),
    }
}

pub fn obstructions(a: ObstructionArgs, budget: &mut Budget) -> CliResult {
    let found = letters::minimal_obstructions(a.k, a.max_n, budget)?;
    let mut text = format!("{} minimal obstructions\n", found.len());
    for g in &found {
        text.push_str(&g.to_text());
    }
    Ok(Report::new(text, json!({ "k": a.k, "max_n": a.max_n, "obstructions": to_json(&found) })))
}
