//! Graph serialization: the line-oriented text format, the JSON alternative,
//! and the canonical digest that binds certificates to their input graph.
//!
//! Text format: first effective line `n <count>`, then one `u v` pair per
//! line (directed edge u->v, 0-indexed); `#` starts a comment. Writing is
//! canonical (edges sorted), so read/write round-trips are bit-exact.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn write_graph_text(g: &Digraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_text(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        match n {
            None => {
                if tok.next() != Some("n") {
                    return Err(Error::Parse(format!(
                        "line {}: expected 'n <count>' header",
                        lineno + 1
                    )));
                }
                let count = tok
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing vertex count", lineno + 1)))?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                if tok.next().is_some() {
                    return Err(Error::Parse(format!("line {}: trailing tokens", lineno + 1)));
                }
                n = Some(count);
            }
            Some(_) => {
                let u = tok
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing edge", lineno + 1)))?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                let v = tok
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing edge head", lineno + 1)))?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                if tok.next().is_some() {
                    return Err(Error::Parse(format!("line {}: trailing tokens", lineno + 1)));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'n <count>' header".into()))?;
    Digraph::from_edges(n, &edges)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn write_graph_json(g: &Digraph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.n(),
        edges: g.edges(),
    })
    .expect("graph JSON serialization cannot fail")
}

pub fn parse_graph_json(text: &str) -> Result<Digraph> {
    let gj: GraphJson = serde_json::from_str(text)?;
    Digraph::from_edges(gj.n, &gj.edges)
}

/// Reads either format, keyed on the leading character.
pub fn parse_graph_auto(text: &str) -> Result<Digraph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

/// SHA-256 of the canonical text serialization, hex-encoded.
pub fn graph_hash(g: &Digraph) -> String {
    let digest = Sha256::digest(write_graph_text(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Sidecar header naming the power structure of a serialized power graph, so
/// certificates can translate power-vertex indices back to sequences.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PowerHeader {
    pub base_n: usize,
    pub t: usize,
    pub op: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{generate, GraphFamily};

    #[test]
    fn text_round_trip() {
        let g = generate(GraphFamily::Tournament(5)).unwrap();
        let text = write_graph_text(&g);
        let back = parse_graph_text(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph_text(&back), text);
    }

    #[test]
    fn text_comments_and_errors() {
        let g = parse_graph_text("# header comment\nn 3\n0 1 # inline\n\n2 0\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 0)]);
        assert!(parse_graph_text("0 1\n").is_err());
        assert!(parse_graph_text("n 2\n0 2\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = generate(GraphFamily::Bollobas).unwrap();
        let back = parse_graph_json(&write_graph_json(&g)).unwrap();
        assert_eq!(back, g);
        let auto = parse_graph_auto(&write_graph_json(&g)).unwrap();
        assert_eq!(auto, g);
    }

    #[test]
    fn hash_is_stable_and_input_sensitive() {
        let g = generate(GraphFamily::Cycle(4)).unwrap();
        assert_eq!(graph_hash(&g), graph_hash(&g.clone()));
        assert_ne!(graph_hash(&g), graph_hash(&g.reverse()));
    }
}
