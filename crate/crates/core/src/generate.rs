//! Composition operations and random graphs that stay inside the class.
//!
//! `compose` keeps the ids of the first graph. Vertices of the second graph
//! that are not identified with a vertex of the first get fresh ids above
//! the first graph's largest id, in increasing order of their old ids.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomp::Split;
use crate::error::{Error, Result};
use crate::graph::{Graph, Named, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Composition {
    DisjointUnion,
    /// Identify `v1` of the first graph with `v2` of the second.
    CutvertexGlue { v1: VertexId, v2: VertexId },
    /// Identify two cliques vertex by vertex, first-graph id first.
    CliqueGlue { pairs: Vec<(VertexId, VertexId)> },
    /// Delete `u2` from the first graph and `u1` from the second and join
    /// their neighborhoods completely.
    OneJoin { u2: VertexId, u1: VertexId },
    /// As the 1-join, but the graphs share the clique `k` (pairs as in the
    /// clique glue) and the neighborhoods of `u2`, `u1` are `k` plus the
    /// sides to join.
    Amalgam { u2: VertexId, u1: VertexId, k: Vec<(VertexId, VertexId)> },
    /// Identify `a` and `b` across the graphs and delete the markers `x2`
    /// (first graph) and `x1` (second), whose neighborhoods are `{a, b}`.
    ProperTwoCutset { x2: VertexId, x1: VertexId, a: (VertexId, VertexId), b: (VertexId, VertexId) },
    AddUniversal,
    /// Replace `v` of the first graph by the second graph.
    Substitution { v: VertexId },
}

impl Composition {
    pub fn kind(&self) -> &'static str {
        match self {
            Composition::DisjointUnion => "disjoint-union",
            Composition::CutvertexGlue { .. } => "cutvertex-glue",
            Composition::CliqueGlue { .. } => "clique-glue",
            Composition::OneJoin { .. } => "one-join",
            Composition::Amalgam { .. } => "amalgam",
            Composition::ProperTwoCutset { .. } => "proper-2cutset",
            Composition::AddUniversal => "add-universal",
            Composition::Substitution { .. } => "substitution",
        }
    }
}

/// The composed graph, with the split it was built along when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composed {
    pub graph: Graph,
    pub split: Option<Split>,
}

fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn nbrs(g: &Graph, v: VertexId) -> Result<VertexSet> {
    let i = g.index(v)?;
    Ok(g.to_ids(g.neighbors(i).iter().copied()))
}

/// Ids for the second graph: identified vertices map to their partner,
/// the others to fresh ids starting at `base`.
fn relabel_second(g2: &Graph, fixed: &BTreeMap<VertexId, VertexId>, base: VertexId) -> BTreeMap<VertexId, VertexId> {
    let mut next = base;
    g2.ids()
        .iter()
        .map(|&v| {
            let to = fixed.get(&v).copied().unwrap_or_else(|| {
                next += 1;
                next - 1
            });
            (v, to)
        })
        .collect()
}

/// Union of `g1 - drop1` and the image of `g2 - drop2`, plus `extra` edges.
fn merge(
    g1: &Graph,
    g2: &Graph,
    map: &BTreeMap<VertexId, VertexId>,
    drop1: &[VertexId],
    drop2: &[VertexId],
    extra: impl IntoIterator<Item = (VertexId, VertexId)>,
) -> Result<Graph> {
    let mut ids: VertexSet = g1.ids().iter().copied().filter(|v| !drop1.contains(v)).collect();
    ids.extend(g2.ids().iter().filter(|v| !drop2.contains(v)).map(|v| map[v]));
    let mut edges: Vec<(VertexId, VertexId)> =
        g1.edge_ids().into_iter().filter(|(u, v)| !drop1.contains(u) && !drop1.contains(v)).collect();
    edges.extend(g2.edge_ids().into_iter().filter(|(u, v)| !drop2.contains(u) && !drop2.contains(v)).map(|(u, v)| (map[&u], map[&v])));
    edges.extend(extra);
    Graph::from_edges(ids, edges)
}

fn check_clique_pairs(g1: &Graph, g2: &Graph, pairs: &[(VertexId, VertexId)]) -> Result<(VertexSet, VertexSet)> {
    let k1: VertexSet = pairs.iter().map(|p| p.0).collect();
    let k2: VertexSet = pairs.iter().map(|p| p.1).collect();
    if k1.len() != pairs.len() || k2.len() != pairs.len() {
        return Err(pre("identified vertices repeat"));
    }
    for (g, k) in [(g1, &k1), (g2, &k2)] {
        if let Some(v) = k.iter().find(|&&v| !g.contains(v)) {
            return Err(Error::UnknownVertex(*v));
        }
        if !g.is_clique_ids(k) {
            return Err(pre("identified vertices do not form a clique"));
        }
    }
    Ok((k1, k2))
}

pub fn compose(spec: &Composition, g1: &Graph, g2: Option<&Graph>) -> Result<Composed> {
    let base = g1.fresh_id();
    let need2 = || g2.ok_or_else(|| pre(format!("{} needs two graphs", spec.kind())));
    match spec {
        Composition::AddUniversal => {
            if g2.is_some() {
                return Err(pre("add-universal takes one graph"));
            }
            let graph = g1.with_vertex(base, &g1.vertex_set())?;
            Ok(Composed { graph, split: Some(Split::UniversalSet { x: [base].into() }) })
        }
        Composition::DisjointUnion => {
            let g2 = need2()?;
            let map = relabel_second(g2, &BTreeMap::new(), base);
            Ok(Composed { graph: merge(g1, g2, &map, &[], &[], [])?, split: None })
        }
        Composition::CutvertexGlue { v1, v2 } => {
            let g2 = need2()?;
            let c = compose(&Composition::CliqueGlue { pairs: vec![(*v1, *v2)] }, g1, Some(g2))?;
            Ok(c)
        }
        Composition::CliqueGlue { pairs } => {
            let g2 = need2()?;
            let (k1, _) = check_clique_pairs(g1, g2, pairs)?;
            let map = relabel_second(g2, &pairs.iter().map(|&(a, b)| (b, a)).collect(), base);
            let graph = merge(g1, g2, &map, &[], &[], [])?;
            let x1: VertexSet = g1.vertex_set().difference(&k1).copied().collect();
            let x2: VertexSet = graph.vertex_set().difference(&g1.vertex_set()).copied().collect();
            let split = (pairs.len() == 1 && !x1.is_empty() && !x2.is_empty()).then(|| Split::Cutvertex { v: pairs[0].0, x1, x2 });
            Ok(Composed { graph, split })
        }
        Composition::OneJoin { u2, u1 } => compose(&Composition::Amalgam { u2: *u2, u1: *u1, k: Vec::new() }, g1, g2),
        Composition::Amalgam { u2, u1, k } => {
            let g2 = need2()?;
            let (k1, k2) = check_clique_pairs(g1, g2, k)?;
            for (g, u, kk) in [(g1, u2, &k1), (g2, u1, &k2)] {
                if !g.contains(*u) || kk.contains(u) {
                    return Err(pre(format!("marker {u} missing or inside the shared clique")));
                }
                if kk.len() + 3 > g.n() {
                    return Err(pre("shared clique too large for a block"));
                }
                let nb = nbrs(g, *u)?;
                if !kk.is_subset(&nb) {
                    return Err(pre(format!("marker {u} is not complete to the shared clique")));
                }
                let a: Vec<VertexId> = nb.difference(kk).copied().collect();
                if a.is_empty() {
                    return Err(pre(format!("marker {u} has no neighbor outside the shared clique")));
                }
                if a.iter().any(|&x| kk.iter().any(|&y| !g.adjacent_ids(x, y))) {
                    return Err(pre(format!("the side joined at {u} is not complete to the shared clique")));
                }
            }
            let map = relabel_second(g2, &k.iter().map(|&(a, b)| (b, a)).collect(), base);
            let a1: VertexSet = nbrs(g1, *u2)?.difference(&k1).copied().collect();
            let a2: VertexSet = nbrs(g2, *u1)?.difference(&k2).map(|v| map[v]).collect();
            let extra: Vec<_> = a1.iter().flat_map(|&x| a2.iter().map(move |&y| (x, y))).collect();
            let graph = merge(g1, g2, &map, &[*u2], &[*u1], extra)?;
            let x1: VertexSet = g1.vertex_set().into_iter().filter(|v| v != u2 && !k1.contains(v)).collect();
            let x2: VertexSet = g2.vertex_set().into_iter().filter(|v| v != u1 && !k2.contains(v)).map(|v| map[&v]).collect();
            Ok(Composed { graph, split: Some(Split::Amalgam { x1, x2, a1, a2, k: k1 }) })
        }
        Composition::ProperTwoCutset { x2, x1, a, b } => {
            let g2 = need2()?;
            for (g, x, a, b) in [(g1, *x2, a.0, b.0), (g2, *x1, a.1, b.1)] {
                if !g.contains(a) || !g.contains(b) || a == b || g.adjacent_ids(a, b) {
                    return Err(pre("cut vertices must be two distinct nonadjacent vertices of each graph"));
                }
                if nbrs(g, x)? != VertexSet::from([a, b]) {
                    return Err(pre(format!("marker {x} must have neighborhood exactly the cut vertices")));
                }
                if g.n() < 5 {
                    return Err(pre("each side needs at least two vertices besides the cut and the marker"));
                }
                let rest = g.without_ids(&[x].into());
                let comp = rest.component_sets().into_iter().find(|c| c.contains(&a)).unwrap();
                if !comp.contains(&b) {
                    return Err(pre("no path between the cut vertices avoiding the marker"));
                }
            }
            let map = relabel_second(g2, &[(a.1, a.0), (b.1, b.0)].into(), base);
            let graph = merge(g1, g2, &map, &[*x2], &[*x1], [])?;
            let ab = [a.0, b.0];
            let x1s: VertexSet = g1.vertex_set().into_iter().filter(|v| v != x2 && !ab.contains(v)).collect();
            let x2s: VertexSet =
                g2.vertex_set().into_iter().filter(|v| v != x1 && *v != a.1 && *v != b.1).map(|v| map[&v]).collect();
            Ok(Composed { graph, split: Some(Split::ProperTwoCutset { x1: x1s, x2: x2s, a: a.0, b: b.0 }) })
        }
        Composition::Substitution { v } => {
            let g2 = need2()?;
            let nb = nbrs(g1, *v)?;
            let map = relabel_second(g2, &BTreeMap::new(), base);
            let extra: Vec<_> = nb.iter().flat_map(|&x| map.values().map(move |&y| (x, y))).collect();
            Ok(Composed { graph: merge(g1, g2, &map, &[*v], &[], extra)?, split: None })
        }
    }
}

/// Connected chordal graph: each new vertex is attached to a nonempty part
/// of the closed neighborhood of an earlier vertex that forms a clique.
pub fn random_chordal(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let q = cliques.choose(rng).unwrap().clone();
        let mut pick: Vec<usize> = q.iter().copied().filter(|_| rng.gen_bool(density)).collect();
        if pick.is_empty() {
            pick.push(*q.choose(rng).unwrap());
        }
        edges.extend(pick.iter().map(|&u| (u, v)));
        pick.push(v);
        cliques.push(pick);
    }
    Graph::from_index_edges(n.max(1), &edges)
}

/// Connected bipartite graph whose second side has degree at most 2.
pub fn random_sparse_bipartite(rng: &mut impl Rng, big: usize, small: usize) -> Graph {
    let big = big.max(1);
    let mut edges = Vec::new();
    // a spanning tree first: each side-b vertex links a new side-a vertex to an old one
    for i in 1..big {
        let b = big + edges.len() / 2;
        if b >= big + small {
            break;
        }
        edges.push((rng.gen_range(0..i), b));
        edges.push((i, b));
    }
    let used = edges.len() / 2;
    for b in big + used..big + small {
        let x = rng.gen_range(0..big);
        edges.push((x, b));
        if big > 1 && rng.gen_bool(0.6) {
            let y = (x + rng.gen_range(1..big)) % big;
            edges.push((y, b));
        }
    }
    let g = Graph::from_index_edges(big + small, &edges);
    largest_component(&g)
}

fn largest_component(g: &Graph) -> Graph {
    let best = g.component_sets().into_iter().max_by_key(|c| c.len()).unwrap_or_default();
    g.induced_subgraph(&best).expect("own vertices").compact()
}

/// Connected induced subgraph of `base` on about `size` vertices.
fn random_connected_sub(rng: &mut impl Rng, base: &Graph, size: usize) -> Graph {
    let mut keep = vec![rng.gen_range(0..base.n())];
    while keep.len() < size.min(base.n()) {
        let frontier: Vec<usize> =
            keep.iter().flat_map(|&v| base.neighbors(v).iter().copied()).filter(|w| !keep.contains(w)).collect();
        let Some(&w) = frontier.choose(rng) else { break };
        keep.push(w);
    }
    keep.sort_unstable();
    base.induced(&keep).compact()
}

pub fn random_petersen_sub(rng: &mut impl Rng, size: usize) -> Graph {
    random_connected_sub(rng, &Named::Petersen.build(), size)
}

pub fn random_heawood_sub(rng: &mut impl Rng, size: usize) -> Graph {
    random_connected_sub(rng, &Named::Heawood.build(), size)
}

/// A connected member of one of the base classes on at most `n` vertices.
pub fn random_seed(rng: &mut impl Rng, n: usize) -> Graph {
    let n = n.max(2);
    match rng.gen_range(0..6) {
        0 | 1 => {
            let density = rng.gen_range(0.2..0.8);
            random_chordal(rng, n, density)
        }
        2 => {
            let big = (n * 2 / 5).max(1);
            random_sparse_bipartite(rng, big, n - big)
        }
        3 => {
            let size = rng.gen_range(5..=10).min(n.max(5));
            random_petersen_sub(rng, size)
        }
        4 => {
            let size = rng.gen_range(6..=14).min(n.max(6));
            random_heawood_sub(rng, size)
        }
        _ => Named::Clique(rng.gen_range(1..=n.min(5))).build(),
    }
}

/// A vertex usable as an amalgam marker with a shared clique of size `t`:
/// its neighborhood is `k ∪ a` with `a` nonempty and complete to the clique `k`.
fn random_marker(rng: &mut impl Rng, g: &Graph, t: usize) -> Option<(VertexId, Vec<VertexId>)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    for u in order {
        let nb = g.neighbors(u);
        if nb.len() <= t || g.n() < t + 3 {
            continue;
        }
        // vertices of N(u) adjacent to all other neighbors of u
        let hubs: Vec<usize> = nb.iter().copied().filter(|&x| nb.iter().all(|&y| y == x || g.adjacent(x, y))).collect();
        if hubs.len() < t {
            continue;
        }
        let mut k: Vec<usize> = hubs.choose_multiple(rng, t).copied().collect();
        if k.len() == nb.len() {
            continue;
        }
        k.sort_unstable();
        return Some((g.id(u), k.into_iter().map(|x| g.id(x)).collect()));
    }
    None
}

/// Instance of a composition tree: the graph and what went into it.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub steps: Vec<&'static str>,
}

/// Composes base-class seeds with cutvertex glues, amalgams (1-joins when
/// the shared clique is empty) and universal vertices until the graph has
/// about `target` vertices. The amalgam markers are existing vertices, so the
/// two inputs are exactly the blocks of the new amalgam and the result stays
/// in the class.
pub fn random_composed(rng: &mut impl Rng, target: usize, max_universal: usize) -> Instance {
    let mut steps = Vec::new();
    let mut universals = 0;
    let first = target.min(rng.gen_range(3..=16));
    let mut g = random_seed(rng, first);
    while g.n() < target {
        let size = (target - g.n() + 2).min(rng.gen_range(3..=16));
        let s = random_seed(rng, size);
        let roll = rng.gen_range(0..100);
        if roll < 4 && universals < max_universal {
            g = compose(&Composition::AddUniversal, &g, None).expect("always applies").graph;
            universals += 1;
            steps.push("add-universal");
            continue;
        }
        if roll < 60 && g.n() >= 3 && s.n() >= 3 {
            let t = [0, 0, 1, 1, 2][rng.gen_range(0..5)];
            if let (Some((u2, k1)), Some((u1, k2))) = (random_marker(rng, &g, t), random_marker(rng, &s, t)) {
                let k: Vec<_> = k1.into_iter().zip(k2).collect();
                let spec = Composition::Amalgam { u2, u1, k };
                if let Ok(c) = compose(&spec, &g, Some(&s)) {
                    g = c.graph;
                    steps.push(if t == 0 { "one-join" } else { "amalgam" });
                    continue;
                }
            }
        }
        let v1 = *g.ids().choose(rng).unwrap();
        let v2 = *s.ids().choose(rng).unwrap();
        g = compose(&Composition::CutvertexGlue { v1, v2 }, &g, Some(&s)).expect("cutvertex glue applies").graph;
        steps.push("cutvertex");
    }
    Instance { graph: g.compact(), steps }
}

/// The seeded corpus: `count` instances whose sizes spread over `4..=max_n`.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let target = if i % 5 == 0 { rng.gen_range(4..=18.min(max_n)) } else { rng.gen_range(4..=max_n) };
            random_composed(&mut rng, target, 2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basics::{is_chordal, is_sparse_bipartite};
    use crate::oracle;

    #[test]
    fn bowtie_and_wheel() {
        let k3 = Named::Clique(3).build();
        let b = compose(&Composition::CutvertexGlue { v1: 2, v2: 0 }, &k3, Some(&k3)).unwrap();
        assert_eq!((b.graph.n(), b.graph.m()), (5, 6));
        b.split.unwrap().validate(&b.graph).unwrap();
        let w = compose(&Composition::AddUniversal, &Named::Cycle(4).build(), None).unwrap();
        assert_eq!((w.graph.n(), w.graph.m()), (5, 8));
    }

    #[test]
    fn one_join_of_stars() {
        let s = Named::Star(3).build();
        // the centers are the markers, so the leaves get joined
        let c = compose(&Composition::OneJoin { u2: 0, u1: 0 }, &s, Some(&s)).unwrap();
        assert_eq!(c.graph.n(), 6);
        assert_eq!(c.graph.m(), 9);
        c.split.unwrap().validate(&c.graph).unwrap();
    }

    #[test]
    fn amalgam_preconditions() {
        let c5 = Named::Cycle(5).build();
        let bad = Composition::Amalgam { u2: 0, u1: 0, k: vec![(1, 1)] };
        assert!(matches!(compose(&bad, &c5, Some(&c5)), Err(Error::Precondition(_))));
    }

    #[test]
    fn two_cutset_of_squares() {
        let c4 = Named::Cycle(4).build();
        let p = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)]);
        let spec = Composition::ProperTwoCutset { x2: 4, x1: 4, a: (0, 0), b: (2, 2) };
        let c = compose(&spec, &p, Some(&p)).unwrap();
        assert_eq!(c.graph.n(), 6);
        c.split.unwrap().validate(&c.graph).unwrap();
        assert!(compose(&spec, &c4, Some(&c4)).is_err());
    }

    #[test]
    fn seeds_are_in_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_chordal(&mut rng, 30, 0.5);
            assert!(g.is_connected() && is_chordal(&g).is_some());
            let b = random_sparse_bipartite(&mut rng, 8, 12);
            assert!(b.is_connected() && is_sparse_bipartite(&b).is_some());
        }
    }

    #[test]
    fn composed_small_instances_are_in_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let inst = random_composed(&mut rng, 13, 1);
            if inst.graph.n() <= 14 {
                assert_eq!(oracle::find_long_unichord(&inst.graph).unwrap(), None, "{:?}", inst.steps);
            }
        }
    }
}
