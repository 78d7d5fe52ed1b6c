//! Graphviz DOT output of Hasse diagrams, drawn bottom-up.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::poset::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse diagram with one `rank=same` group per distinct value of
/// `rank`.
pub fn to_dot(p: &Poset, names: &[String], rank: &[usize]) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (a, name) in names.iter().enumerate().take(p.len()) {
        writeln!(out, "  n{a} [label={}];", quote(name)).unwrap();
    }
    let mut layers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..p.len() {
        layers.entry(rank[a]).or_default().push(a);
    }
    for (r, layer) in &layers {
        let ids: Vec<String> = layer.iter().map(|a| format!("n{a};")).collect();
        writeln!(out, "  {{ rank=same; {} }} // {r}", ids.join(" ")).unwrap();
    }
    for &(a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b} [arrowhead=none];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Ranked by height: the length of the longest chain below each element.
pub fn to_dot_by_height(p: &Poset, names: &[String]) -> String {
    to_dot(p, names, &p.heights())
}
