//! Exponential-time reference procedures.
//!
//! Everything here is written to be obviously correct rather than fast, and
//! none of it calls into the decomposition machinery. Tests use these as
//! ground truth; every routine refuses inputs above a configurable size.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::Bits;
use crate::constraint::{complete_to, Constraint};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub unichord_max_n: usize,
    pub clique_max_n: usize,
    pub chromatic_max_n: usize,
    /// Search nodes allowed per chromatic-number call.
    pub chromatic_budget: u64,
    pub perfect_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { unichord_max_n: 14, clique_max_n: 64, chromatic_max_n: 40, chromatic_budget: 20_000_000, perfect_max_n: 12 }
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// A cycle together with its unique chord.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnichordWitness {
    pub cycle: Vec<VertexId>,
    pub chord: (VertexId, VertexId),
}

impl UnichordWitness {
    /// Checks the witness against `g`: the cycle vertices induce exactly the
    /// cycle edges plus the chord.
    pub fn validate(&self, g: &Graph, min_len: usize) -> std::result::Result<(), String> {
        let k = self.cycle.len();
        if k < min_len {
            return Err(format!("cycle length {k} below {min_len}"));
        }
        let idx: Vec<usize> =
            self.cycle.iter().map(|&v| g.index_of(v).ok_or(format!("vertex {v} not in graph"))).collect::<std::result::Result<_, _>>()?;
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Err("cycle repeats a vertex".into());
        }
        for t in 0..k {
            if !g.adjacent(idx[t], idx[(t + 1) % k]) {
                return Err(format!("{} and {} are consecutive but not adjacent", self.cycle[t], self.cycle[(t + 1) % k]));
            }
        }
        let (a, b) = self.chord;
        let pa = self.cycle.iter().position(|&v| v == a).ok_or("chord endpoint off the cycle")?;
        let pb = self.cycle.iter().position(|&v| v == b).ok_or("chord endpoint off the cycle")?;
        let gap = pa.abs_diff(pb);
        if gap == 1 || gap == k - 1 || gap == 0 {
            return Err("chord endpoints are consecutive".into());
        }
        if !g.adjacent(idx[pa], idx[pb]) {
            return Err("chord is not an edge".into());
        }
        if g.induced(&idx).m() != k + 1 {
            return Err("cycle has more than one chord".into());
        }
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|i| g.neighbors(i).iter().fold(0u64, |m, &j| m | 1 << j)).collect()
}

/// Next subset with the same popcount (Gosper).
fn next_comb(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// If `s` induces a cycle plus one chord, returns the witness.
fn cycle_plus_chord(g: &Graph, adj: &[u64], s: u64) -> Option<UnichordWitness> {
    let k = s.count_ones() as usize;
    let mut deg3 = Vec::new();
    let mut edges2 = 0usize;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & s).count_ones();
        match d {
            2 => {}
            3 => deg3.push(v),
            _ => return None,
        }
        edges2 += d as usize;
    }
    if deg3.len() != 2 || edges2 != 2 * (k + 1) {
        return None;
    }
    let (p, q) = (deg3[0], deg3[1]);
    if adj[p] >> q & 1 == 0 {
        return None;
    }
    // walk the cycle left after deleting pq; it must cover all of s
    let nb = |v: usize| {
        let mut m = adj[v] & s;
        if v == p {
            m &= !(1 << q);
        }
        if v == q {
            m &= !(1 << p);
        }
        m
    };
    let start = s.trailing_zeros() as usize;
    let mut cycle = vec![start];
    let mut prev = start;
    let m0 = nb(start);
    let mut cur = m0.trailing_zeros() as usize;
    while cur != start {
        cycle.push(cur);
        if cycle.len() > k {
            return None;
        }
        let next = nb(cur) & !(1 << prev);
        prev = cur;
        cur = next.trailing_zeros() as usize;
    }
    if cycle.len() != k {
        return None;
    }
    Some(UnichordWitness { cycle: cycle.iter().map(|&i| g.id(i)).collect(), chord: (g.id(p), g.id(q)) })
}

fn find_chorded_cycle(g: &Graph, min_len: usize, bound: usize) -> Result<Option<UnichordWitness>> {
    check_bound(g.n(), bound.min(63))?;
    let n = g.n();
    let adj = masks(g);
    for k in min_len..=n {
        let mut s: u64 = (1u64 << k) - 1;
        while s < 1u64 << n {
            if let Some(w) = cycle_plus_chord(g, &adj, s) {
                return Ok(Some(w));
            }
            s = next_comb(s);
        }
    }
    Ok(None)
}

/// An edge that is the unique chord of a cycle of length at least 5.
pub fn find_long_unichord(g: &Graph) -> Result<Option<UnichordWitness>> {
    find_long_unichord_with(g, &Limits::default())
}

pub fn find_long_unichord_with(g: &Graph, limits: &Limits) -> Result<Option<UnichordWitness>> {
    find_chorded_cycle(g, 5, limits.unichord_max_n)
}

/// An edge that is the unique chord of a cycle of length at least 4.
pub fn find_unichord(g: &Graph) -> Result<Option<UnichordWitness>> {
    find_unichord_with(g, &Limits::default())
}

pub fn find_unichord_with(g: &Graph, limits: &Limits) -> Result<Option<UnichordWitness>> {
    find_chorded_cycle(g, 4, limits.unichord_max_n)
}

/// All simple cycles (length at least 3), each listed once starting at its
/// smallest vertex.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    check_bound(g.n(), 16)?;
    fn dfs(g: &Graph, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if w == s && path.len() >= 3 && path[1] < v {
                out.push(path.clone());
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                dfs(g, s, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        dfs(g, s, &mut vec![s], &mut on, &mut out);
    }
    Ok(out.into_iter().map(|c| c.into_iter().map(|i| g.id(i)).collect()).collect())
}

fn bron_kerbosch(rows: &[Bits], r: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let mut pool = p.clone();
    pool.union_with(&x);
    let pivot = pool
        .iter()
        .max_by_key(|&u| {
            let mut t = p.clone();
            t.intersect_with(&rows[u]);
            t.count()
        })
        .unwrap();
    let mut cand = p.clone();
    cand.difference_with(&rows[pivot]);
    for v in cand.iter().collect::<Vec<_>>() {
        let mut p2 = p.clone();
        p2.intersect_with(&rows[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&rows[v]);
        r.push(v);
        bron_kerbosch(rows, r, p2, x2, out);
        r.pop();
        p.clear(v);
        x.set(v);
    }
}

/// Every inclusion-wise maximal clique, sorted.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_with(g, &Limits::default())
}

pub fn maximal_cliques_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    check_bound(g.n(), limits.clique_max_n)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let rows = g.bit_rows();
    let mut out = Vec::new();
    bron_kerbosch(&rows, &mut Vec::new(), Bits::full(g.n()), Bits::new(g.n()), &mut out);
    let mut cliques: Vec<VertexSet> = out.into_iter().map(|c| g.to_ids(c)).collect();
    cliques.sort();
    Ok(cliques)
}

pub fn clique_number_exact(g: &Graph) -> Result<usize> {
    clique_number_exact_with(g, &Limits::default())
}

pub fn clique_number_exact_with(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(maximal_cliques_with(g, limits)?.iter().map(|c| c.len()).max().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: BTreeMap<VertexId, usize>,
}

/// Exact chromatic number by trying k = ω, ω+1, ... with plain backtracking.
pub fn chromatic_number_exact(g: &Graph) -> Result<ChromaticResult> {
    chromatic_number_exact_with(g, &Limits::default())
}

pub fn chromatic_number_exact_with(g: &Graph, limits: &Limits) -> Result<ChromaticResult> {
    check_bound(g.n(), limits.chromatic_max_n)?;
    let n = g.n();
    if n == 0 {
        return Ok(ChromaticResult { chi: 0, coloring: BTreeMap::new() });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = clique_number_exact_with(g, &Limits { clique_max_n: n, ..limits.clone() })?;
    let mut budget = limits.chromatic_budget;

    fn go(g: &Graph, order: &[usize], t: usize, k: usize, used: usize, col: &mut [usize], budget: &mut u64) -> Option<bool> {
        if t == order.len() {
            return Some(true);
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let v = order[t];
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| col[w] != c) {
                col[v] = c;
                match go(g, order, t + 1, k, used.max(c + 1), col, budget) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
                col[v] = usize::MAX;
            }
        }
        Some(false)
    }

    for k in lower.max(1)..=n {
        let mut col = vec![usize::MAX; n];
        match go(g, &order, 0, k, 0, &mut col, &mut budget) {
            Some(true) => {
                let coloring = (0..n).map(|i| (g.id(i), col[i])).collect();
                return Ok(ChromaticResult { chi: k, coloring });
            }
            Some(false) => {}
            None => return Err(Error::Budget(format!("chromatic number search on {n} vertices"))),
        }
    }
    unreachable!("n colors always suffice")
}

/// χ, ω and perfection for every vertex subset of a small graph.
struct SubsetTables {
    perfect: Vec<bool>,
}

fn subset_tables(g: &Graph) -> SubsetTables {
    let n = g.n();
    let adj = masks(g);
    let full = 1usize << n;
    let mut indep = vec![true; full];
    let mut omega = vec![0u8; full];
    let mut chi = vec![0u8; full];
    let mut perfect = vec![true; full];
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        indep[s] = indep[rest] && adj[v] as usize & rest == 0;
        omega[s] = omega[rest].max(1 + omega[rest & adj[v] as usize]);
        // colour class containing v: v plus an independent subset of the rest
        let mut best = u8::MAX;
        let mut t = rest;
        loop {
            let class = t | 1 << v;
            if indep[class] {
                best = best.min(chi[s & !class] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        chi[s] = best;
        let mut p = chi[s] == omega[s];
        let mut r = s;
        while p && r != 0 {
            let u = r.trailing_zeros() as usize;
            r &= r - 1;
            p = perfect[s & !(1 << u)];
        }
        perfect[s] = p;
    }
    SubsetTables { perfect }
}

/// True iff χ(H) = ω(H) for every induced subgraph H.
pub fn is_perfect_small(g: &Graph) -> Result<bool> {
    is_perfect_small_with(g, &Limits::default())
}

pub fn is_perfect_small_with(g: &Graph, limits: &Limits) -> Result<bool> {
    check_bound(g.n(), limits.perfect_max_n.min(20))?;
    Ok(subset_tables(g).perfect[(1usize << g.n()) - 1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitterVerdict {
    Valid,
    Invalid(String),
}

impl SplitterVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, SplitterVerdict::Valid)
    }
}

/// Checks the four splitter conditions directly against the maximal cliques.
pub fn verify_splitter(g: &Graph, c: &Constraint, h: &VertexSet) -> Result<SplitterVerdict> {
    verify_splitter_with(g, c, h, &Limits::default())
}

pub fn verify_splitter_with(g: &Graph, c: &Constraint, h: &VertexSet, limits: &Limits) -> Result<SplitterVerdict> {
    c.validate(g)?;
    if let Some(v) = h.iter().find(|&&v| !g.contains(v)) {
        return Ok(SplitterVerdict::Invalid(format!("vertex {v} of H is not in the graph")));
    }
    if let Some(v) = c.k_in.iter().find(|v| !h.contains(v)) {
        return Ok(SplitterVerdict::Invalid(format!("k_in vertex {v} missing from H")));
    }
    if let Some(v) = c.k_plus.iter().find(|v| h.contains(v)) {
        return Ok(SplitterVerdict::Invalid(format!("k_plus vertex {v} inside H")));
    }
    if let Some(&w) = complete_to(g, &c.k_in).iter().find(|&&w| h.contains(&g.id(w))) {
        return Ok(SplitterVerdict::Invalid(format!("vertex {} is complete to k_in but inside H", g.id(w))));
    }
    for q in maximal_cliques_with(g, limits)? {
        if q.is_disjoint(h) && q != c.k_plus {
            return Ok(SplitterVerdict::Invalid(format!("maximal clique {q:?} misses H")));
        }
    }
    Ok(SplitterVerdict::Valid)
}

/// First vertex set (in increasing bitmask order) that is a splitter, and
/// optionally has `G[H ∪ k_plus]` perfect.
pub fn exhaustive_splitter_search(g: &Graph, c: &Constraint, require_perfect_with_kplus: bool) -> Result<Option<VertexSet>> {
    check_bound(g.n(), 12)?;
    c.validate(g)?;
    let n = g.n();
    let mask_of = |s: &VertexSet| s.iter().map(|&v| g.index_of(v).unwrap()).fold(0usize, |m, i| m | 1 << i);
    let k_in = mask_of(&c.k_in);
    let k_plus = mask_of(&c.k_plus);
    let forbidden = complete_to(g, &c.k_in).iter().fold(k_plus, |m, &i| m | 1 << i);
    let cliques: Vec<usize> = maximal_cliques(g)?.iter().map(mask_of).filter(|&q| q != k_plus).collect();
    let tables = require_perfect_with_kplus.then(|| subset_tables(g));
    for h in 0..1usize << n {
        if h & k_in != k_in || h & forbidden != 0 {
            continue;
        }
        if cliques.iter().any(|&q| q & h == 0) {
            continue;
        }
        if let Some(t) = &tables {
            if !t.perfect[h | k_plus] {
                continue;
            }
        }
        return Ok(Some(g.to_ids((0..n).filter(|&i| h >> i & 1 == 1))));
    }
    Ok(None)
}
