use std::path::PathBuf;

use clap::{Args, Subcommand};
use letgraph::grid::{
    decoder_from_pmm, enumerate_class, geometric_gridding, monotone_gridding, phi, ClassMode,
};
use letgraph::{Budget, CellWord, GridMatrix, SignVector};
use serde_json::json;

use crate::input::{load, perm};
use crate::output::{graph_report, to_json, CliError, CliResult, Report};

#[derive(Debug, Subcommand)]
pub enum GridCommand {
    /// Graph on the non-zero cells.
    Cellgraph(MatrixArg),
    /// Column and row signs making the matrix a PMM.
    Pmm(MatrixArg),
    /// Replace every entry by a k x k block.
    Refine {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, default_value_t = 2)]
        factor: usize,
    },
    /// First monotone gridding of a permutation.
    Monotone(MatrixPerm),
    /// Geometric gridding witness (cell word) of a permutation.
    Geometric(MatrixPerm),
    /// Permutation encoded by a cell word.
    Phi {
        #[command(flatten)]
        m: MatrixArg,
        /// Cell tokens such as "a12 a11".
        #[arg(long)]
        word: String,
    },
    /// Decoder on the cell alphabet of a PMM.
    Decoder(MatrixArg),
    /// Members of length n of the grid or geometric class.
    Enumerate {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        n: usize,
        /// Enumerate the geometric class instead of the monotone one.
        #[arg(long)]
        geom: bool,
    },
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix file (`matrix s t` then t rows, top row first).
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Debug, Args)]
pub struct MatrixPerm {
    #[command(flatten)]
    pub m: MatrixArg,
    #[arg(long)]
    pub perm: String,
}

fn signs_text(s: &SignVector) -> String {
    let f = |v: &[i8]| v.iter().map(|&x| if x == 1 { "+" } else { "-" }).collect::<Vec<_>>().join(" ");
    format!("columns {}\nrows {}\n", f(&s.cols), f(&s.rows))
}

fn pmm_signs(m: &GridMatrix) -> CliResult<SignVector> {
    m.find_pmm_signs().ok_or(CliError::Input(letgraph::Error::NotPmm))
}

pub fn run(cmd: GridCommand, budget: &mut Budget) -> CliResult {
    match cmd {
        GridCommand::Cellgraph(a) => Ok(graph_report(&load::<GridMatrix>(&a.matrix)?.cell_graph())),
        GridCommand::Pmm(a) => {
            let m: GridMatrix = load(&a.matrix)?;
            Ok(match m.find_pmm_signs() {
                Some(s) => Report::new(signs_text(&s), json!({ "pmm": true, "signs": to_json(&s) })),
                None => Report::negative("not a partial multiplication matrix\n", json!({ "pmm": false })),
            })
        }
        GridCommand::Refine { m, factor } => {
            let r = load::<GridMatrix>(&m.matrix)?.refine(factor)?;
            Ok(Report::new(r.to_text(), json!({ "matrix": to_json(&r) })))
        }
        GridCommand::Monotone(a) => {
            let m: GridMatrix = load(&a.m.matrix)?;
            let pi = perm(&a.perm)?;
            Ok(match monotone_gridding(&pi, &m) {
                Some(g) => Report::new(format!("{}\n", g.describe()), json!({ "griddable": true, "gridding": to_json(&g) })),
                None => Report::negative("not griddable\n", json!({ "griddable": false })),
            })
        }
        GridCommand::Geometric(a) => {
            let m: GridMatrix = load(&a.m.matrix)?;
            let pi = perm(&a.perm)?;
            Ok(match geometric_gridding(&pi, &m, budget)? {
                Some(w) => {
                    let mut text = format!("word {}\n", w.word.to_text(&w.matrix));
                    if w.refined {
                        text.push_str("over the 2-fold refinement\n");
                        text.push_str(&w.matrix.to_text());
                    }
                    Report::new(text, json!({ "geometric": true, "witness": to_json(&w) }))
                }
                None => Report::negative("not geometrically griddable\n", json!({ "geometric": false })),
            })
        }
        GridCommand::Phi { m, word } => {
            let m: GridMatrix = load(&m.matrix)?;
            let signs = pmm_signs(&m)?;
            let w = CellWord::parse(&word, &m)?;
            let pi = phi(&m, &signs, &w)?;
            Ok(Report::new(format!("{pi}\n"), json!({ "perm": to_json(&pi) })))
        }
        GridCommand::Decoder(a) => {
            let m: GridMatrix = load(&a.matrix)?;
            let d = decoder_from_pmm(&m, &pmm_signs(&m)?)?;
            Ok(Report::new(d.to_text(), json!({ "decoder": to_json(&d) })))
        }
        GridCommand::Enumerate { m, n, geom } => {
            let m: GridMatrix = load(&m.matrix)?;
            let mode = if geom { ClassMode::Geom } else { ClassMode::Grid };
            let perms = enumerate_class(&m, n, mode, budget)?;
            let mut text = format!("{} permutations\n", perms.len());
            for p in &perms {
                text.push_str(&format!("{p}\n"));
            }
            Ok(Report::new(text, json!({ "count": perms.len(), "perms": to_json(&perms) })))
        }
    }
}
