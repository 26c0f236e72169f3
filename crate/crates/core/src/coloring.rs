//! Coloring by peeling splitters in three levels.
//!
//! The outer level repeatedly removes an order-2 splitter of what is left of
//! the graph (each removal lowers the clique number), the middle level does
//! the same with order-1 splitters inside each removed piece, and the pieces
//! at the bottom are perfect and get colored with exactly ω colors. Every
//! piece draws from its own block of colors.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basics::{bipartition, chordal_clique_number, classify_unichord_free_base, is_chordal, is_unichord_free, BasicClass};
use crate::decomp::{self, find_universal_vertices, Split};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::Limits;
use crate::splitter::{compute_splitter_with, f_k, SplitterConfig};
use crate::Constraint;

#[derive(Clone, Debug)]
pub struct ColorConfig {
    /// Re-verify every splitter while peeling.
    pub checked: bool,
    /// Search nodes allowed when coloring one bottom piece exactly.
    pub budget: u64,
    /// Use the greedy coloring when the exact search runs out of budget
    /// instead of failing. The bound is still checked afterwards.
    pub greedy_fallback: bool,
    pub limits: Limits,
}

impl Default for ColorConfig {
    fn default() -> Self {
        ColorConfig { checked: false, budget: 2_000_000, greedy_fallback: false, limits: Limits::default() }
    }
}

/// One removed splitter. `host` is the graph it was taken from, and `inner`
/// lists the middle-level removals inside it (empty at the middle level).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Peel {
    pub host: VertexSet,
    pub splitter: VertexSet,
    pub colors: usize,
    pub inner: Vec<Peel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: BTreeMap<VertexId, usize>,
    pub palette_size: usize,
    pub omega: usize,
    pub bound: u64,
    pub trace: Vec<Peel>,
}

pub fn color(g: &Graph) -> Result<Coloring> {
    color_with(g, &ColorConfig::default())
}

pub fn color_with(g: &Graph, cfg: &ColorConfig) -> Result<Coloring> {
    let omega = clique_number_via_tree(g)?;
    let bound = f_k(3, omega as u64);
    let split_cfg = |order| SplitterConfig { order, checked: cfg.checked, limits: cfg.limits.clone() };
    let (outer, middle) = (split_cfg(2), split_cfg(1));
    let mut assignment = BTreeMap::new();
    let mut trace = Vec::new();
    let mut offset = 0;
    let mut rest = g.clone();
    while rest.n() > 0 {
        if trace.len() >= omega {
            return Err(Error::Internal(format!("outer peeling did not finish within {omega} rounds")));
        }
        let h = compute_splitter_with(&rest, &Constraint::empty(), &outer)?.splitter.members;
        if h.is_empty() {
            return Err(Error::Internal("empty splitter of a nonempty graph".into()));
        }
        let piece = rest.induced_subgraph(&h)?;
        let piece_omega = clique_number_via_tree(&piece)?;
        let mut inner = Vec::new();
        let mut used = 0;
        let mut prest = piece;
        while prest.n() > 0 {
            if inner.len() >= piece_omega {
                return Err(Error::Internal(format!("middle peeling did not finish within {piece_omega} rounds")));
            }
            let h2 = compute_splitter_with(&prest, &Constraint::empty(), &middle)?.splitter.members;
            if h2.is_empty() {
                return Err(Error::Internal("empty splitter of a nonempty graph".into()));
            }
            let bottom = prest.induced_subgraph(&h2)?;
            let col = color_perfect(&bottom, cfg)?;
            let k = col.values().map(|&c| c + 1).max().unwrap_or(0);
            for (v, c) in col {
                assignment.insert(v, offset + used + c);
            }
            inner.push(Peel { host: prest.vertex_set(), splitter: h2.clone(), colors: k, inner: Vec::new() });
            used += k;
            prest = prest.without_ids(&h2);
        }
        trace.push(Peel { host: rest.vertex_set(), splitter: h.clone(), colors: used, inner });
        offset += used;
        rest = rest.without_ids(&h);
    }
    let palette_size = compact(&mut assignment);
    if palette_size as u64 > bound {
        return Err(Error::Internal(format!("{palette_size} colors exceed the bound {bound} for clique number {omega}")));
    }
    Ok(Coloring { assignment, palette_size, omega, bound, trace })
}

/// Renumbers colors to 0..k in order of first use and returns k.
fn compact(assignment: &mut BTreeMap<VertexId, usize>) -> usize {
    let mut map = BTreeMap::new();
    for c in assignment.values_mut() {
        let next = map.len();
        *c = *map.entry(*c).or_insert(next);
    }
    map.len()
}

/// Colors a piece that is expected to be perfect with ω colors.
fn color_perfect(g: &Graph, cfg: &ColorConfig) -> Result<BTreeMap<VertexId, usize>> {
    if let Some(peo) = is_chordal(g) {
        let mut col: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &v in peo.iter().rev() {
            let i = g.index_of(v).unwrap();
            let taken: Vec<usize> = g.neighbors(i).iter().filter_map(|&w| col.get(&g.id(w)).copied()).collect();
            col.insert(v, (0..).find(|c| !taken.contains(c)).unwrap());
        }
        return Ok(col);
    }
    if let Some(side) = bipartition(g) {
        return Ok((0..g.n()).map(|i| (g.id(i), side[i] as usize)).collect());
    }
    let target = clique_number_via_tree(g)?;
    let greedy = dsatur(g);
    let greedy_k = greedy.iter().max().map_or(0, |&c| c + 1);
    let col = if greedy_k <= target {
        greedy
    } else {
        let mut budget = cfg.budget;
        match exact(g, target, &mut budget) {
            Some(col) => col,
            None if budget > 0 => return Err(Error::Internal(format!("bottom piece on {} vertices is not {target}-colorable", g.n()))),
            None if cfg.greedy_fallback => greedy,
            None => return Err(Error::Budget(format!("exact coloring of a {}-vertex piece", g.n()))),
        }
    };
    Ok((0..g.n()).map(|i| (g.id(i), col[i])).collect())
}

/// Greedy coloring in DSATUR order.
fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut col = vec![usize::MAX; n];
    let mut sat: Vec<VertexSet> = vec![VertexSet::new(); n];
    for _ in 0..n {
        let v = (0..n).filter(|&v| col[v] == usize::MAX).max_by_key(|&v| (sat[v].len(), g.degree(v), std::cmp::Reverse(v))).unwrap();
        let c = (0..).find(|c| !sat[v].contains(&(*c as VertexId))).unwrap();
        col[v] = c;
        for &w in g.neighbors(v) {
            sat[w].insert(c as VertexId);
        }
    }
    col
}

/// Backtracking search for a `k`-coloring in DSATUR order.
fn exact(g: &Graph, k: usize, budget: &mut u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut col = vec![usize::MAX; n];

    fn go(g: &Graph, k: usize, col: &mut Vec<usize>, left: usize, budget: &mut u64) -> bool {
        if left == 0 {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let mut best = None;
        let mut best_key = (0, 0);
        for v in (0..g.n()).filter(|&v| col[v] == usize::MAX) {
            let mut seen = vec![false; k];
            for &w in g.neighbors(v) {
                if col[w] != usize::MAX {
                    seen[col[w]] = true;
                }
            }
            let key = (seen.iter().filter(|&&s| s).count() + 1, g.degree(v) + 1);
            if best.is_none() || key > best_key {
                best = Some(v);
                best_key = key;
            }
        }
        let v = best.unwrap();
        let max_used = col.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
        for c in 0..k.min(max_used + 1) {
            if g.neighbors(v).iter().all(|&w| col[w] != c) {
                col[v] = c;
                if go(g, k, col, left - 1, budget) {
                    return true;
                }
                col[v] = usize::MAX;
            }
        }
        false
    }

    go(g, k, &mut col, n, budget).then_some(col)
}

/// Clique number computed along the decomposition.
pub fn clique_number_via_tree(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let sub = |s: &VertexSet| -> Result<usize> { clique_number_via_tree(&g.induced_subgraph(s)?) };
    let comps = g.component_sets();
    if comps.len() > 1 {
        return comps.iter().try_fold(0, |m, c| Ok(m.max(sub(c)?)));
    }
    if let Some(peo) = is_chordal(g) {
        return Ok(chordal_clique_number(g, &peo));
    }
    match classify_unichord_free_base(g) {
        Some(BasicClass::Clique) => return Ok(g.n()),
        Some(_) => return Ok(if g.m() > 0 { 2 } else { 1 }),
        None => {}
    }
    let x = find_universal_vertices(g);
    if !x.is_empty() {
        return Ok(x.len() + clique_number_via_tree(&g.without_ids(&x))?);
    }
    let plus = |a: &VertexSet, b: &VertexSet| -> VertexSet { a.union(b).copied().collect() };
    if let Some(Split::Cutvertex { v, x1, x2 }) = decomp::find_cutvertex(g)? {
        let k = VertexSet::from([v]);
        return Ok(sub(&plus(&x1, &k))?.max(sub(&plus(&x2, &k))?));
    }
    if let Some(Split::Amalgam { x1, x2, a1, a2, k }) = decomp::find_amalgam_unchecked(g) {
        let across = k.len() + sub(&a1)? + sub(&a2)?;
        return Ok(sub(&plus(&x1, &k))?.max(sub(&plus(&x2, &k))?).max(across));
    }
    if is_unichord_free(g)? {
        if let Some(Split::ProperTwoCutset { x1, x2, a, b }) = decomp::proper_2cutset_search(g) {
            let ab = VertexSet::from([a, b]);
            return Ok(sub(&plus(&x1, &ab))?.max(sub(&plus(&x2, &ab))?));
        }
    }
    Err(Error::NotInClass(format!("no decomposition applies to a {}-vertex piece", g.n())))
}

/// Checks that `assignment` colors every vertex and no edge is monochromatic.
pub fn verify_coloring(g: &Graph, assignment: &BTreeMap<VertexId, usize>) -> std::result::Result<(), String> {
    for &v in g.ids() {
        if !assignment.contains_key(&v) {
            return Err(format!("vertex {v} is uncolored"));
        }
    }
    if let Some(v) = assignment.keys().find(|&&v| !g.contains(v)) {
        return Err(format!("vertex {v} is not in the graph"));
    }
    for (u, v) in g.edge_ids() {
        if assignment[&u] == assignment[&v] {
            return Err(format!("edge {u}-{v} has both ends colored {}", assignment[&u]));
        }
    }
    Ok(())
}
