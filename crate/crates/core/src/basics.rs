//! Recognition of the basic classes: chordal graphs, cliques, bipartite
//! graphs with a side of degree at most two, induced subgraphs of the
//! Petersen and Heawood graphs, and unichord-free graphs.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::decomp::{self, blocks};
use crate::error::{Error, Result};
use crate::graph::{sorted_intersects, Graph, Named, VertexId, VertexSet};

/// A basic class together with evidence that can be re-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum BasicClass {
    Chordal { peo: Vec<VertexId> },
    SparseBipartite { a: VertexSet, b: VertexSet },
    Clique,
    PetersenSub { embedding: BTreeMap<VertexId, u8> },
    HeawoodSub { embedding: BTreeMap<VertexId, u8> },
}

impl BasicClass {
    pub fn tag(&self) -> &'static str {
        match self {
            BasicClass::Chordal { .. } => "chordal",
            BasicClass::SparseBipartite { .. } => "sparse-bipartite",
            BasicClass::Clique => "clique",
            BasicClass::PetersenSub { .. } => "petersen-sub",
            BasicClass::HeawoodSub { .. } => "heawood-sub",
        }
    }

    /// Re-checks the evidence against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            BasicClass::Chordal { peo } => verify_peo(g, peo),
            BasicClass::SparseBipartite { a, b } => {
                let all: VertexSet = a.union(b).copied().collect();
                if !a.is_disjoint(b) || all != g.vertex_set() {
                    return Err("not a partition".into());
                }
                for (i, j) in g.edges() {
                    if a.contains(&g.id(i)) == a.contains(&g.id(j)) {
                        return Err(format!("edge {}-{} inside a side", g.id(i), g.id(j)));
                    }
                }
                match b.iter().find(|&&v| g.degree(g.index_of(v).unwrap()) > 2) {
                    Some(v) => Err(format!("vertex {v} of the sparse side has degree above 2")),
                    None => Ok(()),
                }
            }
            BasicClass::Clique => g.is_complete().then_some(()).ok_or_else(|| "not a clique".into()),
            BasicClass::PetersenSub { embedding } => verify_embedding(g, &Named::Petersen.build(), embedding),
            BasicClass::HeawoodSub { embedding } => verify_embedding(g, &Named::Heawood.build(), embedding),
        }
    }
}

/// Lexicographic breadth-first search by partition refinement.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    struct Class {
        members: Vec<usize>,
        prev: usize,
        next: usize,
        split: usize,
        stamp: usize,
    }
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut classes = vec![Class { members: (0..n).rev().collect(), prev: NONE, next: NONE, split: NONE, stamp: NONE }];
    let mut class_of = vec![0usize; n];
    let mut slot: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
    let mut head = 0;
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        while classes[head].members.is_empty() {
            head = classes[head].next;
            classes[head].prev = NONE;
        }
        let v = classes[head].members.pop().unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if done[w] {
                continue;
            }
            let c = class_of[w];
            if classes[c].stamp != step {
                let nc = classes.len();
                let prev = classes[c].prev;
                classes.push(Class { members: Vec::new(), prev, next: c, split: NONE, stamp: step });
                if prev == NONE {
                    head = nc;
                } else {
                    classes[prev].next = nc;
                }
                classes[c].prev = nc;
                classes[c].split = nc;
                classes[c].stamp = step;
            }
            let nc = classes[c].split;
            // move w out of c
            let s = slot[w];
            let last = *classes[c].members.last().unwrap();
            classes[c].members.swap_remove(s);
            if last != w {
                slot[last] = s;
            }
            slot[w] = classes[nc].members.len();
            classes[nc].members.push(w);
            class_of[w] = nc;
        }
    }
    order
}

/// A perfect elimination ordering (each vertex simplicial among the later
/// ones), or `None` when `g` is not chordal.
pub fn is_chordal(g: &Graph) -> Option<Vec<VertexId>> {
    let mut order = lex_bfs(g);
    order.reverse();
    let n = g.n();
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    // each vertex's later neighbors minus its earliest later neighbor p
    // must all be adjacent to p
    let mut need: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| rank[w] > rank[v]).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| rank[w]) {
            need[p].extend(later.into_iter().filter(|&w| w != p));
        }
    }
    let mut mark = vec![false; n];
    for p in 0..n {
        if need[p].is_empty() {
            continue;
        }
        for &w in g.neighbors(p) {
            mark[w] = true;
        }
        let ok = need[p].iter().all(|&w| mark[w]);
        for &w in g.neighbors(p) {
            mark[w] = false;
        }
        if !ok {
            return None;
        }
    }
    Some(order.into_iter().map(|i| g.id(i)).collect())
}

/// Direct check that `peo` is a perfect elimination ordering of `g`.
pub fn verify_peo(g: &Graph, peo: &[VertexId]) -> std::result::Result<(), String> {
    if peo.len() != g.n() || peo.iter().copied().collect::<VertexSet>() != g.vertex_set() {
        return Err("ordering is not a permutation of the vertices".into());
    }
    let idx: Vec<usize> = peo.iter().map(|&v| g.index_of(v).unwrap()).collect();
    let mut rank = vec![0; g.n()];
    for (k, &i) in idx.iter().enumerate() {
        rank[i] = k;
    }
    for &i in &idx {
        let later: Vec<usize> = g.neighbors(i).iter().copied().filter(|&w| rank[w] > rank[i]).collect();
        if !g.is_clique(&later) {
            return Err(format!("later neighbors of {} are not a clique", g.id(i)));
        }
    }
    Ok(())
}

/// ω of a chordal graph from its elimination ordering.
pub fn chordal_clique_number(g: &Graph, peo: &[VertexId]) -> usize {
    let mut rank = vec![0; g.n()];
    for (k, &v) in peo.iter().enumerate() {
        rank[g.index_of(v).unwrap()] = k;
    }
    (0..g.n()).map(|i| 1 + g.neighbors(i).iter().filter(|&&w| rank[w] > rank[i]).count()).max().unwrap_or(0)
}

/// Two-colors `g` if bipartite: `side[i]` is 0 or 1.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// A bipartition `(a, b)` in which every vertex of `b` has degree at most 2.
pub fn is_sparse_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let side = bipartition(g)?;
    let (mut a, mut b) = (VertexSet::new(), VertexSet::new());
    for comp in g.components() {
        // the bipartition of a connected graph is unique up to swapping
        let pick = [0u8, 1].into_iter().find(|&s| comp.iter().all(|&v| side[v] != s || g.degree(v) <= 2))?;
        for &v in &comp {
            if side[v] == pick {
                b.insert(g.id(v));
            } else {
                a.insert(g.id(v));
            }
        }
    }
    Some((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Petersen,
    Heawood,
}

struct TargetData {
    n: usize,
    rows: Vec<u16>,
}

fn target_data(t: Target) -> &'static TargetData {
    static P: OnceLock<TargetData> = OnceLock::new();
    static H: OnceLock<TargetData> = OnceLock::new();
    let build = |g: Graph| TargetData {
        n: g.n(),
        rows: (0..g.n()).map(|i| g.neighbors(i).iter().fold(0u16, |m, &j| m | 1 << j)).collect(),
    };
    match t {
        Target::Petersen => P.get_or_init(|| build(Named::Petersen.build())),
        Target::Heawood => H.get_or_init(|| build(Named::Heawood.build())),
    }
}

fn has_four_cycle(g: &Graph) -> bool {
    (0..g.n()).any(|i| {
        let nb = g.neighbors(i);
        (0..nb.len()).any(|x| (x + 1..nb.len()).any(|y| g.neighbors(nb[x]).iter().any(|&w| w != i && g.adjacent(w, nb[y]))))
    })
}

/// An induced embedding of `g` into the Petersen or Heawood graph.
pub fn embed_in_named(g: &Graph, target: Target) -> Option<BTreeMap<VertexId, u8>> {
    let t = target_data(target);
    if g.n() > t.n || g.max_degree() > 3 || g.has_triangle() || has_four_cycle(g) {
        return None;
    }
    if target == Target::Heawood && bipartition(g).is_none() {
        return None;
    }
    // visit vertices so that each one (after the first of its component)
    // has an already-placed neighbor
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let start = order.len();
        let mut seen = vec![false; g.n()];
        order.push(comp[0]);
        seen[comp[0]] = true;
        let mut k = start;
        while k < order.len() {
            let v = order[k];
            k += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut img = vec![usize::MAX; g.n()];

    fn place(g: &Graph, t: &TargetData, order: &[usize], k: usize, img: &mut [usize], used: u16) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for x in 0..t.n {
            if used >> x & 1 == 1 {
                continue;
            }
            let fits = order[..k].iter().all(|&w| g.adjacent(v, w) == (t.rows[x] >> img[w] & 1 == 1));
            if fits {
                img[v] = x;
                if place(g, t, order, k + 1, img, used | 1 << x) {
                    return true;
                }
            }
        }
        img[v] = usize::MAX;
        false
    }

    place(g, t, &order, 0, &mut img, 0).then(|| (0..g.n()).map(|i| (g.id(i), img[i] as u8)).collect())
}

fn verify_embedding(g: &Graph, target: &Graph, emb: &BTreeMap<VertexId, u8>) -> std::result::Result<(), String> {
    if emb.keys().copied().collect::<VertexSet>() != g.vertex_set() {
        return Err("embedding domain differs from the vertex set".into());
    }
    let imgs: VertexSet = emb.values().map(|&x| x as VertexId).collect();
    if imgs.len() != emb.len() || imgs.iter().any(|&x| x as usize >= target.n()) {
        return Err("embedding is not injective into the target".into());
    }
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let (x, y) = (emb[&g.id(i)] as usize, emb[&g.id(j)] as usize);
            if g.adjacent(i, j) != target.adjacent(x, y) {
                return Err(format!("pair {}-{} not preserved", g.id(i), g.id(j)));
            }
        }
    }
    Ok(())
}

/// Four vertices `[u, v, x, y]` inducing a diamond (central edge `uv`), if any.
pub fn is_diamond_free(g: &Graph) -> Option<[VertexId; 4]> {
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        if !sorted_intersects(a, b) {
            continue;
        }
        let common: Vec<usize> = a.iter().copied().filter(|w| b.binary_search(w).is_ok()).collect();
        for (k, &x) in common.iter().enumerate() {
            if let Some(&y) = common[k + 1..].iter().find(|&&y| !g.adjacent(x, y)) {
                return Some([g.id(u), g.id(v), g.id(x), g.id(y)]);
            }
        }
    }
    None
}

/// Base classes of the unichord-free decomposition, checked cheapest first.
pub fn classify_unichord_free_base(g: &Graph) -> Option<BasicClass> {
    if g.is_complete() {
        return Some(BasicClass::Clique);
    }
    if let Some((a, b)) = is_sparse_bipartite(g) {
        return Some(BasicClass::SparseBipartite { a, b });
    }
    if let Some(embedding) = embed_in_named(g, Target::Petersen) {
        return Some(BasicClass::PetersenSub { embedding });
    }
    embed_in_named(g, Target::Heawood).map(|embedding| BasicClass::HeawoodSub { embedding })
}

/// True iff the connected graph `g` has no unichord.
///
/// Diamond-free graphs are decomposed by cutvertices, 1-joins and proper
/// 2-cutsets until every piece is a base class.
pub fn is_unichord_free(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("is_unichord_free needs a connected graph".into()));
    }
    if is_diamond_free(g).is_some() {
        return Ok(false);
    }
    Ok(unichord_free_rec(g))
}

fn unichord_free_rec(g: &Graph) -> bool {
    if classify_unichord_free_base(g).is_some() {
        return true;
    }
    let split = decomp::find_cutvertex(g)
        .expect("connected")
        .or_else(|| decomp::find_one_join(g).expect("connected"))
        .or_else(|| decomp::proper_2cutset_search(g));
    match split {
        Some(s) => {
            let b = blocks(g, &s).expect("finder output is valid");
            unichord_free_rec(&b.g1) && b.g2.as_ref().is_none_or(unichord_free_rec)
        }
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordality() {
        let tree = Graph::from_index_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
        let peo = is_chordal(&tree).unwrap();
        verify_peo(&tree, &peo).unwrap();
        assert!(is_chordal(&Named::Cycle(4).build()).is_none());
        assert!(is_chordal(&Named::House.build()).is_none());
        let k6 = Named::Clique(6).build();
        verify_peo(&k6, &is_chordal(&k6).unwrap()).unwrap();
        assert_eq!(chordal_clique_number(&k6, &is_chordal(&k6).unwrap()), 6);
    }

    #[test]
    fn sparse_bipartite() {
        assert!(is_sparse_bipartite(&Named::Cycle(6).build()).is_some());
        let k33 = Graph::from_index_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(is_sparse_bipartite(&k33).is_none());
        let (a, b) = is_sparse_bipartite(&Named::Star(5).build()).unwrap();
        assert!(a == [0].into() || b == [0].into());
        assert!(is_sparse_bipartite(&Named::Cycle(5).build()).is_none());
    }

    #[test]
    fn embeddings() {
        let c5 = Named::Cycle(5).build();
        let e = embed_in_named(&c5, Target::Petersen).unwrap();
        BasicClass::PetersenSub { embedding: e }.validate(&c5).unwrap();
        let c6 = Named::Cycle(6).build();
        assert!(embed_in_named(&c6, Target::Heawood).is_some());
        // girth 5 means no 6-cycle of the Petersen graph has a chord
        let e = embed_in_named(&c6, Target::Petersen).unwrap();
        BasicClass::PetersenSub { embedding: e }.validate(&c6).unwrap();
        assert!(embed_in_named(&Named::Cycle(7).build(), Target::Petersen).is_none());
        assert!(embed_in_named(&Named::Clique(4).build(), Target::Petersen).is_none());
        assert!(embed_in_named(&Named::Petersen.build(), Target::Petersen).is_some());
        assert!(embed_in_named(&Named::Heawood.build(), Target::Heawood).is_some());
        assert!(embed_in_named(&Named::Heawood.build(), Target::Petersen).is_none());
    }

    #[test]
    fn diamonds() {
        assert!(is_diamond_free(&Named::Diamond.build()).is_some());
        assert!(is_diamond_free(&Named::Petersen.build()).is_none());
        assert!(is_diamond_free(&Named::Clique(4).build()).is_none());
    }

    #[test]
    fn unichord_free() {
        assert!(is_unichord_free(&Named::Petersen.build()).unwrap());
        assert!(is_unichord_free(&Named::Heawood.build()).unwrap());
        assert!(!is_unichord_free(&Named::Diamond.build()).unwrap());
        assert!(!is_unichord_free(&Named::House.build()).unwrap());
        assert!(is_unichord_free(&Named::Clique(5).build()).unwrap());
        assert!(is_unichord_free(&Named::Path(6).build()).unwrap());
        assert!(is_unichord_free(&Named::Cycle(9).build()).unwrap());
    }
}
