//! DOT, graph6 and JSON encodings over the fixed vertex order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cayley::{CayleyGraph, ConnectionSet};
use crate::classify::{ClassTable, EquivalenceClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{SpectrumFingerprint, SymbolicEigenvalue};

pub fn to_dot(graph: &CayleyGraph) -> String {
    let n = graph.n();
    let mut out = String::new();
    writeln!(
        out,
        "graph \"X(D_{}, {})\" {{",
        2 * n,
        graph.connection_set()
    )
    .unwrap();
    for v in 0..graph.graph().order() {
        writeln!(out, "  {v} [label=\"{}\"];", graph.vertex(v)).unwrap();
    }
    for (u, v) in graph.graph().edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Standard graph6: size prefix, then the upper triangle column by column
/// (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte.
pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.order();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes: Vec<u8> = text.trim_end().bytes().collect();
    let bad = |why: &str| Error::Parse(format!("graph6: {why}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let data = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes.as_slice() {
        [126, 126, rest @ ..] if rest.len() >= 6 => (
            rest[..6].iter().fold(0, |acc, &b| (acc << 6) | data(b)),
            &rest[6..],
        ),
        [126, rest @ ..] if rest.len() >= 3 => (
            rest[..3].iter().fold(0, |acc, &b| (acc << 6) | data(b)),
            &rest[3..],
        ),
        [first, rest @ ..] if *first != 126 => (data(*first), rest),
        _ => return Err(bad("truncated size")),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("body length does not match size"));
    }
    let mut graph = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = data(body[idx / 6]) >> (5 - idx % 6) & 1;
            if bit == 1 {
                graph.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(graph)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub n: u64,
    pub set: Vec<String>,
    #[serde(rename = "type")]
    pub cubic_type: Option<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphReport {
    pub fn new(graph: &CayleyGraph) -> Self {
        let set = graph.connection_set();
        Self {
            n: graph.n(),
            set: set_tokens(set),
            cubic_type: set.cubic_type().map(|t| t.label().to_string()),
            edges: graph
                .graph()
                .edges()
                .into_iter()
                .map(|(u, v)| [u, v])
                .collect(),
        }
    }
}

pub fn set_tokens(set: &ConnectionSet) -> Vec<String> {
    set.elements().iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub expr: String,
    pub value: f64,
    pub multiplicity: u32,
}

impl From<&SymbolicEigenvalue> for SpectrumEntry {
    fn from(e: &SymbolicEigenvalue) -> Self {
        Self {
            expr: e.form.to_string(),
            value: e.value(),
            multiplicity: e.multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u64,
    pub set: Vec<String>,
    #[serde(rename = "type")]
    pub cubic_type: Option<String>,
    pub spectrum: Vec<SpectrumEntry>,
    /// `det(xI - A)` coefficients, ascending, as decimal strings.
    pub fingerprint: Vec<String>,
}

impl SpectrumReport {
    pub fn fingerprint(&self) -> Result<SpectrumFingerprint> {
        SpectrumFingerprint::from_decimal_strings(&self.fingerprint)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTableReport {
    pub p: u64,
    pub classes: Vec<EquivalenceClass>,
    pub n_tilde: u64,
    #[serde(rename = "N_tilde")]
    pub big_n_tilde: u64,
}

impl From<&ClassTable> for ClassTableReport {
    fn from(t: &ClassTable) -> Self {
        Self {
            p: t.p,
            classes: t.classes.clone(),
            n_tilde: t.n_tilde(),
            big_n_tilde: t.big_n_tilde(),
        }
    }
}

impl ClassTableReport {
    pub fn to_table(&self) -> ClassTable {
        ClassTable {
            p: self.p,
            classes: self.classes.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{build_graph, build_prism};

    #[test]
    fn graph6_known_strings() {
        // K_2 is "A_", the triangle is "Bw", the 5-cycle 0-1-2-3-4 is "Dhc"
        assert_eq!(to_graph6(&Graph::from_edges(2, [(0, 1)])), "A_");
        assert_eq!(
            to_graph6(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)])),
            "Bw"
        );
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_round_trip_and_errors() {
        let g = build_prism(40).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        let big = build_prism(50).unwrap();
        let text = to_graph6(&big);
        assert!(text.starts_with('~'));
        assert_eq!(from_graph6(&text).unwrap(), big);
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("D hc").is_err());
        assert!(from_graph6("").is_err());
    }

    #[test]
    fn dot_lists_every_edge_once() {
        let set = ConnectionSet::parse("a,a^2,b", 3).unwrap();
        let dot = to_dot(&build_graph(&set));
        assert!(dot.starts_with("graph \"X(D_6, {a^1, a^2, b})\" {"));
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.contains("3 [label=\"b\"];"));
        assert!(dot.contains("0 [label=\"e\"];"));
    }

    #[test]
    fn graph_json_shape() {
        let set = ConnectionSet::parse("b,b*a,b*a^2", 5).unwrap();
        let report = GraphReport::new(&build_graph(&set));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["type"], "II");
        assert_eq!(json["edges"].as_array().unwrap().len(), 15);
        assert_eq!(json["set"][1], "b*a^1");
    }
}
