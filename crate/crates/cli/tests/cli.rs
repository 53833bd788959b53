use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use letgraph::graph::is_isomorphic;
use letgraph::letters::decode;
use letgraph::{ChainCircuit, Decoder, GridMatrix, Graph, Loh, PartitionCertificate, Permutation, Word};
use serde_json::Value;
use tempfile::TempDir;

const FIG1: &str = "letters a b c d\narc a a\narc b b\narc a b\narc a c\narc a d\narc d a\narc b d\narc d c\n";
const M22: &str = "matrix 2 2\n-1 -1\n1 1\n";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_letgraph")).args(args).output().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn decodes_the_four_letter_example() {
    let ws = Workspace::new();
    let d = ws.file("fig1.dec", FIG1);
    let out = ok(&["decode", "--decoder", arg(&d), "--word", "a c d b a d"]);
    let g: Graph = out.parse().unwrap();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u + 1, v + 1)).collect();
    assert_eq!(edges, vec![(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (3, 5), (4, 6), (5, 6)]);
    let dot = ok(&["decode", "--decoder", arg(&d), "--word", "a c d b a d", "--dot"]);
    assert!(dot.starts_with("graph G {") && dot.contains("5 -- 6"));
}

#[test]
fn lettericity_of_three_edges() {
    let ws = Workspace::new();
    let g = ws.file("3k2.g", &Graph::matching(3).to_text());
    let out = ok(&["lettericity", "--graph", arg(&g)]);
    assert!(out.starts_with("lettericity 3\n"), "{out}");
    let v = json(&["lettericity", "--graph", arg(&g)]);
    assert_eq!(v["lettericity"], 3);
    let d: Decoder = serde_json::from_value(v["witness"]["decoder"].clone()).unwrap();
    let w: Word = serde_json::from_value(v["witness"]["word"].clone()).unwrap();
    assert!(is_isomorphic(&decode(&d, &w).unwrap(), &Graph::matching(3)));
}

#[test]
fn phi_of_the_figure_word() {
    let ws = Workspace::new();
    let m = ws.file("m22.mat", M22);
    let out = ok(&["grid", "phi", "--matrix", arg(&m), "--word", "a12 a11 a21 a22 a12 a21"]);
    assert_eq!(out.trim(), "6 1 4 2 5 3");
}

#[test]
fn exit_codes() {
    let ws = Workspace::new();
    let one = ws.file("one.mat", "matrix 1 1\n1\n");
    let g = ws.file("3k2.g", &Graph::matching(3).to_text());
    assert_eq!(run(&["grid", "monotone", "--matrix", arg(&one), "--perm", "2413"]).status.code(), Some(1));
    assert_eq!(run(&["grid", "monotone", "--matrix", arg(&one), "--perm", "1 1"]).status.code(), Some(2));
    assert_eq!(run(&["decode", "--decoder", "/nonexistent", "--word", "a"]).status.code(), Some(2));
    assert_eq!(run(&["perm", "sum", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--budget", "5", "lettericity", "--graph", arg(&g)]).status.code(), Some(3));
    let v = json(&["--budget", "5", "lettericity", "--graph", arg(&g)]);
    assert_eq!(v["exit"], 3);
}

#[test]
fn json_matches_text_formats() {
    let ws = Workspace::new();
    let d = ws.file("fig1.dec", FIG1);
    let m = ws.file("m22.mat", M22);

    let args = ["decode", "--decoder", arg(&d), "--word", "a c d b a d"];
    let from_json: Graph = serde_json::from_value(json(&args)["graph"].clone()).unwrap();
    assert_eq!(from_json, ok(&args).parse::<Graph>().unwrap());

    let args = ["cc", "generate", "--k", "4", "--l", "2"];
    let from_json: ChainCircuit = serde_json::from_value(json(&args)["circuit"].clone()).unwrap();
    assert_eq!(from_json, ok(&args).parse::<ChainCircuit>().unwrap());

    let c = ws.file("c42.cc", &ok(&args));
    let args = ["loh", "fromcc", "--circuit", arg(&c)];
    let from_json: Loh = serde_json::from_value(json(&args)["loh"].clone()).unwrap();
    assert_eq!(from_json, ok(&args).parse::<Loh>().unwrap());

    let args = ["grid", "refine", "--matrix", arg(&m)];
    let from_json: GridMatrix = serde_json::from_value(json(&args)["matrix"].clone()).unwrap();
    assert_eq!(from_json, ok(&args).parse::<GridMatrix>().unwrap());

    let args = ["perm", "sum", "--left", "21", "--right", "312", "--skew"];
    let from_json: Permutation = serde_json::from_value(json(&args)["perm"].clone()).unwrap();
    assert_eq!(from_json, ok(&args).parse::<Permutation>().unwrap());

    let g = ws.file("c5.g", &Graph::cycle(5).unwrap().to_text());
    let args = ["partition", "gamma", "--graph", arg(&g)];
    let v = json(&args);
    assert_eq!(v["gamma"], 3);
    let from_json: PartitionCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    let text = ok(&args);
    let body = text.split_once('\n').unwrap().1;
    assert_eq!(from_json, PartitionCertificate::parse(body, 5).unwrap());
}

#[test]
fn certificates_from_the_solver_check_out() {
    let ws = Workspace::new();
    let g = ws.file("c5.g", &Graph::cycle(5).unwrap().to_text());
    let text = ok(&["partition", "lambda", "--graph", arg(&g)]);
    let cert = ws.file("c5.cert", text.split_once('\n').unwrap().1);
    let out = ok(&["partition", "check", "--graph", arg(&g), "--cert", arg(&cert), "--level", "proper"]);
    assert_eq!(out, "valid\n");
}

#[test]
fn twisted_certificate_fails_proper() {
    let ws = Workspace::new();
    let text = ok(&["cc", "twisted", "--k", "4", "--l", "2"]);
    let (graph_part, cert_part): (Vec<&str>, Vec<&str>) = text.lines().partition(|l| l.starts_with("graph") || l.starts_with("e "));
    let g = ws.file("t.g", &(graph_part.join("\n") + "\n"));
    let c = ws.file("t.cert", &(cert_part.join("\n") + "\n"));
    let semi = run(&["partition", "check", "--graph", arg(&g), "--cert", arg(&c), "--level", "semi"]);
    assert_eq!(semi.status.code(), Some(0));
    let proper = run(&["partition", "check", "--graph", arg(&g), "--cert", arg(&c), "--level", "proper"]);
    assert_eq!(proper.status.code(), Some(1));
    assert!(stdout(&proper).contains("not properly ordered"));
}

#[test]
fn circuits_pipe_through_commands() {
    let ws = Workspace::new();
    let c = ws.file("c51.cc", &ok(&["cc", "generate", "--k", "5"]));
    assert_eq!(run(&["cc", "cyclicword", "--circuit", arg(&c)]).status.code(), Some(1));
    let v = json(&["cc", "encode", "--circuit", arg(&c)]);
    let d: Decoder = serde_json::from_value(v["decoder"].clone()).unwrap();
    let w: Word = serde_json::from_value(v["word"].clone()).unwrap();
    assert!(is_isomorphic(&decode(&d, &w).unwrap(), &Graph::cycle(5).unwrap()));
    let comp = ws.file("comp.cc", &ok(&["cc", "complement", "--circuit", arg(&c)]));
    assert!(ok(&["cc", "conflict", "--circuit", arg(&comp)]).ends_with("cyclic\n"));
    let h = ws.file("c51.loh", &ok(&["loh", "fromcc", "--circuit", arg(&c)]));
    assert_eq!(json(&["loh", "inconsistency", "--loh", arg(&h)])["inconsistency"], 1);
    assert_eq!(run(&["loh", "consistent", "--loh", arg(&h)]).status.code(), Some(1));
}

#[test]
fn random_generation_is_deterministic() {
    let args = ["cc", "generate", "--k", "4", "--random", "12", "--seed", "9"];
    assert_eq!(ok(&args), ok(&args));
    ok(&args).parse::<ChainCircuit>().unwrap();
}

fn svg_elements(svg: &str, tag: &str, class: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    doc.descendants()
        .filter(|n| n.tag_name().name() == tag && n.attribute("class") == Some(class))
        .count()
}

#[test]
fn plots_are_valid_svg() {
    let ws = Workspace::new();
    let svg = ok(&["plot", "perm", "--perm", "6 1 4 2 5 3"]);
    assert_eq!(svg_elements(&svg, "circle", "point"), 6);

    let m = ws.file("m22.mat", M22);
    let svg = ok(&["plot", "gridding", "--perm", "6 1 4 2 5 3", "--matrix", arg(&m), "--cols", "3", "--rows", "3"]);
    assert_eq!(svg_elements(&svg, "circle", "point"), 6);
    assert_eq!(svg_elements(&svg, "line", "vertical"), 3);
    assert_eq!(svg_elements(&svg, "line", "horizontal"), 3);

    let wide = ws.file("m31.mat", "matrix 3 1\n1 -1 1\n");
    let out = ws.dir.path().join("plot.svg");
    ok(&["plot", "gridding", "--perm", "1 2 4 3 5 6", "--matrix", arg(&wide), "--output", arg(&out)]);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg_elements(&svg, "line", "vertical"), 4);
    assert_eq!(svg_elements(&svg, "line", "horizontal"), 2);
}

#[test]
fn grid_subcommands() {
    let ws = Workspace::new();
    let m = ws.file("m22.mat", M22);
    assert_eq!(ok(&["grid", "cellgraph", "--matrix", arg(&m)]).parse::<Graph>().unwrap().edge_count(), 4);
    assert_eq!(run(&["grid", "pmm", "--matrix", arg(&m)]).status.code(), Some(0));
    let d: Decoder = ok(&["grid", "decoder", "--matrix", arg(&m)]).parse().unwrap();
    assert_eq!(d.len(), 4);
    let one = ws.file("ones.mat", "matrix 2 2\n1 1\n1 1\n");
    assert_eq!(json(&["grid", "enumerate", "--matrix", arg(&one), "--n", "4", "--geom"])["count"], 23);
    assert_eq!(json(&["grid", "enumerate", "--matrix", arg(&one), "--n", "6"])["count"], 471);
    let odd = ws.file("odd.mat", "matrix 2 2\n1 1\n1 -1\n");
    assert_eq!(run(&["grid", "pmm", "--matrix", arg(&odd)]).status.code(), Some(1));
    assert_eq!(run(&["grid", "decoder", "--matrix", arg(&odd)]).status.code(), Some(2));
    assert_eq!(run(&["grid", "geometric", "--matrix", arg(&one), "--perm", "2 4 3 6 5 1"]).status.code(), Some(1));
    assert_eq!(run(&["grid", "monotone", "--matrix", arg(&one), "--perm", "2 4 3 6 5 1"]).status.code(), Some(0));
}

#[test]
fn perm_and_letter_subcommands() {
    let ws = Workspace::new();
    assert_eq!(ok(&["perm", "contains", "--perm", "614253", "--pattern", "231"]), "positions 3 5 6\n");
    assert_eq!(run(&["perm", "contains", "--perm", "1234", "--pattern", "21"]).status.code(), Some(1));
    assert_eq!(ok(&["perm", "pin", "--n", "2"]).trim(), "3 1 4 2");
    let g: Graph = ok(&["perm", "invgraph", "--perm", "2413"]).parse().unwrap();
    assert_eq!(g.edge_count(), 3);
    let p4 = ws.file("p4.g", &Graph::path(4).to_text());
    let d = ws.file("one.dec", "letters a\n");
    assert_eq!(run(&["recognize", "--decoder", arg(&d), "--graph", arg(&p4)]).status.code(), Some(1));
    assert_eq!(json(&["obstructions", "--k", "1", "--max-n", "3"])["obstructions"].as_array().unwrap().len(), 2);
}

#[test]
fn loh_subcommands() {
    let ws = Workspace::new();
    let tri = ws.file("tri.loh", "elem x y z\nedge e1 : x y\nedge e2 : y z\nedge e3 : z x\n");
    assert!(ok(&["loh", "validate", "--loh", arg(&tri)]).starts_with("valid"));
    assert_eq!(json(&["loh", "inconsistency", "--loh", arg(&tri)])["inconsistency"], 1);
    let split: Loh = ok(&["loh", "split", "--loh", arg(&tri), "--at", "x"]).parse().unwrap();
    assert_eq!(split.elements().len(), 2);
    assert_eq!(json(&["loh", "cells", "--loh", arg(&tri)])["cells"].as_array().unwrap().len(), 3);
    let bad = ws.file("bad.loh", "elem x y\nedge e1 : x\n");
    assert_eq!(run(&["loh", "validate", "--loh", arg(&bad)]).status.code(), Some(2));
}

#[test]
fn linked_chain_and_apgrid() {
    let ws = Workspace::new();
    let v = json(&["partition", "linked", "--perm", "3142"]);
    assert_eq!(v["semi"], false);
    let col = ws.file("col.txt", "3 2\nr r b\nr r b\nb b b\n");
    assert_eq!(run(&["partition", "apgrid", "--colouring", arg(&col)]).status.code(), Some(0));
    let none = ws.file("none.txt", "2 2\nr b\nb r\n");
    assert_eq!(run(&["partition", "apgrid", "--colouring", arg(&none)]).status.code(), Some(1));
}
