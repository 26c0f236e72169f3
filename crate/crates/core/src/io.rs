//! DIMACS and JSON graph files.
//!
//! DIMACS vertices are numbered from 1 and JSON vertices from 0; loading keeps
//! those numbers as vertex ids. Emitting renumbers densely in id order, so a
//! loaded graph round-trips byte for byte.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Json,
}

impl Format {
    /// Guess from a file name: `.json` is JSON, anything else DIMACS.
    pub fn from_path(path: &str) -> Format {
        if path.to_ascii_lowercase().ends_with(".json") {
            Format::Json
        } else {
            Format::Dimacs
        }
    }
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown graph format `{s}`") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub graph: Graph,
    /// Number of repeated edge lines that were dropped.
    pub duplicate_edges: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[u64; 2]>,
}

pub fn load_graph(bytes: &[u8], format: Format) -> Result<Loaded> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse { line: 0, msg: format!("not UTF-8: {e}") })?;
    match format {
        Format::Dimacs => load_dimacs(text),
        Format::Json => load_json(text),
    }
}

fn load_dimacs(text: &str) -> Result<Loaded> {
    let mut n: Option<usize> = None;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut dups = 0;
    // a single-line input may use " / " as a line separator
    let lines: Vec<&str> = if text.contains('\n') { text.lines().collect() } else { text.split(" / ").collect() };
    for (k, raw) in lines.iter().enumerate() {
        let line = k + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(err("second problem line".into()));
                }
                match tok.next() {
                    Some("edge") | Some("col") | Some("edges") => {}
                    other => return Err(err(format!("expected `p edge n m`, found {other:?}"))),
                }
                let nv = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad vertex count".into()))?;
                tok.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(|| err("bad edge count".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens on problem line".into()));
                }
                n = Some(nv);
            }
            Some("e") => {
                let u: u64 = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad edge endpoint".into()))?;
                let v: u64 = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| err("bad edge endpoint".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens on edge line".into()));
                }
                if u == v {
                    return Err(Error::Loop(u as VertexId));
                }
                let nv = n.ok_or_else(|| err("edge before problem line".into()))?;
                if u == 0 || v == 0 || u > nv as u64 || v > nv as u64 {
                    return Err(err(format!("edge endpoint out of range 1..={nv}")));
                }
                let key = (u.min(v) as VertexId, u.max(v) as VertexId);
                if seen.insert(key) {
                    edges.push(key);
                } else {
                    dups += 1;
                }
            }
            Some(t) => return Err(err(format!("unexpected line type `{t}`"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: lines.len(), msg: "missing problem line".into() })?;
    let graph = Graph::from_edges(1..=n as VertexId, edges)?;
    Ok(Loaded { graph, duplicate_edges: dups })
}

fn load_json(text: &str) -> Result<Loaded> {
    let jg: JsonGraph =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: format!("column {}: {e}", e.column()) })?;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut dups = 0;
    for [u, v] in jg.edges {
        if u == v {
            return Err(Error::Loop(u as VertexId));
        }
        if u >= jg.n as u64 || v >= jg.n as u64 {
            return Err(Error::Parse { line: 0, msg: format!("edge [{u},{v}] out of range 0..{}", jg.n) });
        }
        let key = (u.min(v) as VertexId, u.max(v) as VertexId);
        if seen.insert(key) {
            edges.push(key);
        } else {
            dups += 1;
        }
    }
    let graph = Graph::from_edges(0..jg.n as VertexId, edges)?;
    Ok(Loaded { graph, duplicate_edges: dups })
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => {
            let mut s = format!("p edge {} {}\n", g.n(), g.m());
            for (i, j) in g.edges() {
                let _ = writeln!(s, "e {} {}", i + 1, j + 1);
            }
            s
        }
        Format::Json => {
            let jg = JsonGraph { n: g.n(), edges: g.edges().map(|(i, j)| [i as u64, j as u64]).collect() };
            let mut s = serde_json::to_string(&jg).expect("graph serializes");
            s.push('\n');
            s
        }
    }
}
