use std::path::PathBuf;

use clap::{Args, Subcommand};
use letgraph::grid::monotone_gridding;
use letgraph::{GridMatrix, Gridding};
use serde_json::json;

use crate::commands::grid::MatrixArg;
use crate::input::{load, perm};
use crate::output::{to_json, CliError, CliResult, Report};
use crate::svg;

#[derive(Debug, Subcommand)]
pub enum PlotCommand {
    /// Plot of a permutation's points.
    Perm {
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Plot with the grid lines of a monotone gridding.
    Gridding {
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        m: MatrixArg,
        /// Column cuts (integers c for the line at c + 0.5); searched when omitted.
        #[arg(long, num_args = 0.., requires = "rows")]
        cols: Option<Vec<usize>>,
        /// Row cuts, as for `--cols`.
        #[arg(long, num_args = 0.., requires = "cols")]
        rows: Option<Vec<usize>>,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write the SVG here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn emit(doc: String, out: OutputArg, mut json: serde_json::Value) -> CliResult {
    json["svg"] = json!(doc);
    match out.output {
        Some(path) => {
            std::fs::write(&path, &doc).map_err(|source| CliError::Io { path: path.clone(), source })?;
            json["path"] = json!(path);
            Ok(Report::new(format!("wrote {}\n", path.display()), json))
        }
        None => Ok(Report::new(doc, json)),
    }
}

pub fn run(cmd: PlotCommand) -> CliResult {
    match cmd {
        PlotCommand::Perm { perm: p, out } => {
            let pi = perm(&p)?;
            let doc = svg::plot(&pi, None);
            emit(doc, out, json!({ "points": pi.len() }))
        }
        PlotCommand::Gridding { perm: p, m, cols, rows, out } => {
            let pi = perm(&p)?;
            let m: GridMatrix = load(&m.matrix)?;
            let gridding = match (cols, rows) {
                (Some(c), Some(r)) => Gridding::check(&pi, &m, &c, &r),
                _ => monotone_gridding(&pi, &m),
            };
            let Some(g) = gridding else {
                return Ok(Report::negative("not griddable\n", json!({ "griddable": false })));
            };
            let doc = svg::plot(&pi, Some(&g));
            let json = json!({
                "points": pi.len(),
                "vertical_lines": g.col_cuts.len() + 2,
                "horizontal_lines": g.row_cuts.len() + 2,
                "gridding": to_json(&g),
            });
            emit(doc, out, json)
        }
    }
}
