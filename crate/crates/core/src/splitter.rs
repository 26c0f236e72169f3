//! Splitters under a constraint, and how block splitters combine across a
//! decomposition.
//!
//! A splitter for `(G, k_in, k_plus)` is a vertex set `H` that meets every
//! maximal clique of `G` other than `k_plus`, contains `k_in`, and avoids
//! `k_plus` together with every vertex complete to `k_in`. The splitter of a
//! composed graph is assembled from splitters of its blocks, each computed
//! under a constraint derived from the parent constraint and the first
//! block's answer.
//!
//! The *order* of a request says how much structure `G[H ∪ k_plus]` keeps:
//! order 1 asks for a perfect graph, order 2 for one whose own induced
//! subgraphs admit order-1 splitters. Only induced Petersen subgraphs need
//! different treatment at the two orders.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basics::{bipartition, classify_unichord_free_base, is_chordal, is_unichord_free, BasicClass};
use crate::constraint::{complete_to, Constraint};
use crate::decomp::{self, blocks_with_fresh, find_universal_vertices, Split};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::{self, Limits, SplitterVerdict};
use crate::petersen::{self, Label};

/// `f_0(0) = 0`, `f_0(x) = 1` for `x ≥ 1`, and `f_k(x) = Σ_{i ≤ x} f_{k-1}(i)`.
pub fn f_k(k: u32, x: u64) -> u64 {
    let mut row: Vec<u64> = (0..=x).map(|i| u64::from(i >= 1)).collect();
    for _ in 0..k {
        let mut acc = 0u64;
        for v in row.iter_mut() {
            acc = acc.saturating_add(*v);
            *v = acc;
        }
    }
    row[x as usize]
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Splitter {
    pub members: VertexSet,
}

impl Splitter {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl From<VertexSet> for Splitter {
    fn from(members: VertexSet) -> Self {
        Splitter { members }
    }
}

fn set(it: impl IntoIterator<Item = VertexId>) -> VertexSet {
    it.into_iter().collect()
}

fn union(a: &VertexSet, b: &VertexSet) -> VertexSet {
    a.union(b).copied().collect()
}

fn inter(a: &VertexSet, b: &VertexSet) -> VertexSet {
    a.intersection(b).copied().collect()
}

fn minus(a: &VertexSet, v: VertexId) -> VertexSet {
    let mut s = a.clone();
    s.remove(&v);
    s
}

/// Every vertex outside `k_plus` that is not complete to `k_in`.
pub fn trivial_splitter(g: &Graph, c: &Constraint) -> Result<Splitter> {
    c.validate(g)?;
    Ok(trivial(g, c).into())
}

fn trivial(g: &Graph, c: &Constraint) -> VertexSet {
    let mut h = g.vertex_set();
    for &v in &c.k_plus {
        h.remove(&v);
    }
    for w in complete_to(g, &c.k_in) {
        h.remove(&g.id(w));
    }
    h
}

/// For a connected, triangle-free, non-bipartite graph: removes the
/// vertices complete to `k_in`, the set `k_plus`, and one extra vertex, so
/// that `H ∪ k_plus` is strictly smaller than `V(G)`.
pub fn triangle_free_splitter(g: &Graph, c: &Constraint) -> Result<Splitter> {
    if !g.is_connected() || g.has_triangle() || bipartition(g).is_some() {
        return Err(Error::Precondition("triangle_free_splitter needs a connected, triangle-free, non-bipartite graph".into()));
    }
    c.validate(g)?;
    let ids = |s: &VertexSet| -> Vec<usize> { s.iter().map(|&v| g.index_of(v).unwrap()).collect() };
    let (k_in, k_plus) = (ids(&c.k_in), ids(&c.k_plus));
    let x = complete_to(g, &c.k_in);
    let touches = |v: usize, s: &[usize]| s.iter().any(|&w| g.adjacent(v, w));
    let ok = |v: usize| !k_in.contains(&v) && !k_plus.contains(&v) && !touches(v, &k_plus) && !touches(v, &x);
    let all: Vec<usize> = (0..g.n()).collect();
    let pool: Vec<usize> = match (k_in.len(), k_plus.len()) {
        (0, 0) | (2, 0) | (0, 2) => all,
        (0, 1) => all.into_iter().filter(|&v| v != k_plus[0] && !g.adjacent(v, k_plus[0])).collect(),
        (1, 0) => x.clone(),
        (1, 1) => {
            let off: Vec<usize> = x.iter().copied().filter(|v| !k_plus.contains(v)).collect();
            if off.is_empty() {
                all.into_iter().filter(|&v| v != k_plus[0] && !g.adjacent(v, k_plus[0])).collect()
            } else {
                off
            }
        }
        (a, b) => return Err(Error::InvalidConstraint(format!("constraint of sizes ({a}, {b}) in a triangle-free graph"))),
    };
    let v = pool.into_iter().find(|&v| ok(v)).ok_or_else(|| Error::Internal("no vertex to drop in a triangle-free graph".into()))?;
    let mut h = g.vertex_set();
    for w in x.iter().chain(&k_plus).chain([&v]) {
        h.remove(&g.id(*w));
    }
    Ok(h.into())
}

/// Splitter of an induced Petersen subgraph: an automorphism moves the
/// constraint to a fixed position, where a fixed vertex set works.
pub fn petersen_splitter(gp: &Graph, embedding: &BTreeMap<VertexId, u8>, c: &Constraint) -> Result<Splitter> {
    c.validate(gp)?;
    let image = |s: &VertexSet| -> Result<Vec<u8>> {
        s.iter().map(|v| embedding.get(v).copied().ok_or(Error::UnknownVertex(*v))).collect()
    };
    let (kin, kp) = (image(&c.k_in)?, image(&c.k_plus)?);
    let maps = |tau: &[u8; 10], from: &[u8], to: &[Label]| {
        let t = petersen::labeled(to);
        from.iter().all(|&v| t.contains(&tau[v as usize]))
    };
    let tau = petersen::automorphisms()
        .iter()
        .find(|tau| match kin.len() {
            2 => maps(tau, &kin, &[Label::A1, Label::A2]),
            1 => maps(tau, &kin, &[Label::C]) && maps(tau, &kp, &[Label::X]),
            0 => maps(tau, &kp, &[Label::X, Label::A1]),
            _ => false,
        })
        .ok_or_else(|| Error::InvalidConstraint("constraint cannot be moved to the standard position".into()))?;
    let mut keep = petersen::labeled(&[Label::A1, Label::A2, Label::A3, Label::A4, Label::A5, Label::A6, Label::C]);
    if kin.is_empty() {
        keep.insert(Label::X.vertex());
        for &v in &kp {
            keep.remove(&tau[v as usize]);
        }
    }
    let mut h = VertexSet::new();
    for i in 0..gp.n() {
        let v = gp.id(i);
        let inside = keep.contains(&tau[embedding[&v] as usize]);
        // isolated vertices are maximal cliques of their own
        if inside || (gp.degree(i) == 0 && !c.k_plus.contains(&v)) {
            h.insert(v);
        }
    }
    Ok(h.into())
}

/// Block splitter callback used by the combiners.
pub type Provider<'a> = dyn FnMut(&Graph, &Constraint) -> Result<VertexSet> + 'a;

/// A combined splitter and the case of the construction that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combined {
    pub members: VertexSet,
    pub cases: Vec<&'static str>,
}

impl Combined {
    fn new(members: VertexSet, case: &'static str) -> Self {
        Combined { members, cases: vec![case] }
    }
}

/// Gluing along the clique `k` with sides `x1` and `x2` (`k` may be empty).
pub fn combine_clique_cutset(
    g: &Graph,
    x1: &VertexSet,
    k: &VertexSet,
    x2: &VertexSet,
    c: &Constraint,
    child: &mut Provider<'_>,
) -> Result<Combined> {
    let t = c.all();
    let (x1, x2) = if t.is_subset(&union(x1, k)) {
        (x1, x2)
    } else if t.is_subset(&union(x2, k)) {
        (x2, x1)
    } else {
        return Err(Error::InvalidConstraint("constraint meets both sides of a clique cutset".into()));
    };
    let g1 = g.induced_subgraph(&union(x1, k))?;
    let g2 = g.induced_subgraph(&union(x2, k))?;
    let h1 = child(&g1, c)?;
    let hk = inter(&h1, k);
    let (c2, case) = if hk.is_empty() {
        (Constraint { k_in: VertexSet::new(), k_plus: k.clone() }, "clique-2")
    } else {
        (Constraint { k_in: hk, k_plus: inter(&c.k_plus, k) }, "clique-1")
    };
    let h2 = child(&g2, &c2)?;
    Ok(Combined::new(union(&h1, &h2), case))
}

/// Removal of the universal vertex `v`.
pub fn combine_universal(g: &Graph, v: VertexId, c: &Constraint, child: &mut Provider<'_>) -> Result<Combined> {
    let i = g.index(v)?;
    if g.degree(i) + 1 != g.n() {
        return Err(Error::Precondition(format!("vertex {v} is not universal")));
    }
    if c.k_in.contains(&v) {
        return Ok(Combined::new(c.k_in.clone(), "universal-1"));
    }
    if c.k_in.is_empty() && !c.k_plus.is_empty() && !c.k_plus.contains(&v) {
        // k_plus may be maximal once v is gone, so the child could skip k_plus + v
        return Ok(Combined::new(set([v]), "universal-promote"));
    }
    let rest = g.without(&[i]);
    let c2 = Constraint { k_in: c.k_in.clone(), k_plus: minus(&c.k_plus, v) };
    Ok(Combined::new(child(&rest, &c2)?, "universal-2"))
}

struct AmalgamSides {
    x1: VertexSet,
    x2: VertexSet,
    a1: VertexSet,
    a2: VertexSet,
    k: VertexSet,
}

impl AmalgamSides {
    fn swapped(&self) -> AmalgamSides {
        AmalgamSides { x1: self.x2.clone(), x2: self.x1.clone(), a1: self.a2.clone(), a2: self.a1.clone(), k: self.k.clone() }
    }

    fn split(&self) -> Split {
        Split::Amalgam { x1: self.x1.clone(), x2: self.x2.clone(), a1: self.a1.clone(), a2: self.a2.clone(), k: self.k.clone() }
    }

    /// Blocks and their markers: `u2` lives in the first block, `u1` in the second.
    fn blocks(&self, g: &Graph, fresh: VertexId) -> Result<(Graph, Graph, VertexId, VertexId)> {
        let b = blocks_with_fresh(g, &self.split(), fresh)?;
        Ok((b.g1, b.g2.expect("amalgam has two blocks"), b.markers.in_g1.unwrap(), b.markers.in_g2.unwrap()))
    }
}

/// Amalgam with split `s`; markers take ids `fresh` and `fresh + 1`.
pub fn combine_amalgam(g: &Graph, s: &Split, c: &Constraint, fresh: VertexId, child: &mut Provider<'_>) -> Result<Combined> {
    let Split::Amalgam { x1, x2, a1, a2, k } = s else {
        return Err(Error::InvalidSplit(format!("expected an amalgam, got {}", s.kind())));
    };
    let sides = AmalgamSides { x1: x1.clone(), x2: x2.clone(), a1: a1.clone(), a2: a2.clone(), k: k.clone() };
    amalgam_rec(g, &sides, c, fresh, child)
}

fn amalgam_rec(g: &Graph, sd: &AmalgamSides, c: &Constraint, fresh: VertexId, child: &mut Provider<'_>) -> Result<Combined> {
    let t = c.all();
    let in1 = t.is_subset(&union(&sd.x1, &sd.k));
    let in2 = t.is_subset(&union(&sd.x2, &sd.k));
    if !in1 && !in2 {
        let k_in_k = inter(&c.k_in, &sd.k);
        if !k_in_k.is_empty() {
            let (g1, g2, u2, u1) = sd.blocks(g, fresh)?;
            let ka1 = union(&sd.k, &sd.a1);
            let ka2 = union(&sd.k, &sd.a2);
            let mut kp1 = inter(&c.k_plus, &ka1);
            kp1.insert(u2);
            let mut kp2 = inter(&c.k_plus, &ka2);
            kp2.insert(u1);
            let h1 = child(&g1, &Constraint { k_in: inter(&c.k_in, &ka1), k_plus: kp1 })?;
            let h2 = child(&g2, &Constraint { k_in: inter(&c.k_in, &ka2), k_plus: kp2 })?;
            return Ok(Combined::new(union(&h1, &h2), "amalgam-1a"));
        }
        if !c.k_in.is_empty() {
            let sd = if c.k_in.is_disjoint(&sd.a1) { sd.swapped() } else { sd.clone_sides() };
            let (g1, g2, u2, u1) = sd.blocks(g, fresh)?;
            let mut kp1 = inter(&c.k_plus, &union(&sd.k, &sd.a1));
            kp1.insert(u2);
            let mut kin2 = inter(&c.k_in, &sd.a2);
            kin2.insert(u1);
            let h1 = child(&g1, &Constraint { k_in: inter(&c.k_in, &sd.a1), k_plus: kp1 })?;
            let h2 = child(&g2, &Constraint { k_in: kin2, k_plus: inter(&c.k_plus, &union(&sd.k, &sd.a2)) })?;
            return Ok(Combined::new(union(&h1, &minus(&h2, u1)), "amalgam-1b"));
        }
        // k_in is empty: promote a vertex complete to k_plus when there is one
        let core: VertexSet = sd.a1.iter().chain(&sd.a2).chain(&sd.k).copied().collect();
        let promote = core.iter().copied().find(|&v| {
            !c.k_plus.contains(&v) && c.k_plus.iter().all(|&w| g.adjacent_ids(v, w))
        });
        if let Some(v) = promote {
            let c2 = Constraint { k_in: set([v]), k_plus: c.k_plus.clone() };
            let mut r = amalgam_rec(g, sd, &c2, fresh, child)?;
            r.cases.insert(0, "amalgam-1c");
            return Ok(r);
        }
        let (g1, g2, u2, u1) = sd.blocks(g, fresh)?;
        let mut kp1 = inter(&c.k_plus, &union(&sd.k, &sd.a1));
        kp1.insert(u2);
        let mut kp2 = inter(&c.k_plus, &union(&sd.k, &sd.a2));
        kp2.insert(u1);
        let h1 = child(&g1, &Constraint { k_in: VertexSet::new(), k_plus: kp1 })?;
        let h2 = child(&g2, &Constraint { k_in: VertexSet::new(), k_plus: kp2 })?;
        return Ok(Combined::new(union(&h1, &h2), "amalgam-1c-kplus"));
    }
    let sd = if in1 { sd.clone_sides() } else { sd.swapped() };
    let (g1, g2, u2, u1) = sd.blocks(g, fresh)?;
    let h1 = child(&g1, c)?;
    let hk = inter(&h1, &sd.k);
    let kpk = inter(&c.k_plus, &sd.k);
    if !hk.is_empty() {
        let h2 = child(&g2, &Constraint { k_in: hk, k_plus: kpk })?;
        Ok(Combined::new(union(&minus(&h1, u2), &h2), "amalgam-2a"))
    } else if !h1.contains(&u2) {
        let h2 = child(&g2, &Constraint { k_in: set([u1]), k_plus: kpk })?;
        Ok(Combined::new(union(&h1, &minus(&h2, u1)), "amalgam-2b"))
    } else {
        let v2 = *sd.a2.iter().next().expect("nonempty A2");
        let mut kp2 = kpk;
        kp2.insert(u1);
        let h2 = child(&g2, &Constraint { k_in: set([v2]), k_plus: kp2 })?;
        Ok(Combined::new(union(&minus(&h1, u2), &h2), "amalgam-2c"))
    }
}

impl AmalgamSides {
    fn clone_sides(&self) -> AmalgamSides {
        AmalgamSides { x1: self.x1.clone(), x2: self.x2.clone(), a1: self.a1.clone(), a2: self.a2.clone(), k: self.k.clone() }
    }
}

/// Proper 2-cutset with split `s`; markers take ids `fresh` and `fresh + 1`.
pub fn combine_proper_2cutset(g: &Graph, s: &Split, c: &Constraint, fresh: VertexId, child: &mut Provider<'_>) -> Result<Combined> {
    let Split::ProperTwoCutset { x1, x2, a, b } = s else {
        return Err(Error::InvalidSplit(format!("expected a proper 2-cutset, got {}", s.kind())));
    };
    let ab = set([*a, *b]);
    let t = c.all();
    let (x1, x2) = if t.is_subset(&union(x1, &ab)) {
        (x1, x2)
    } else if t.is_subset(&union(x2, &ab)) {
        (x2, x1)
    } else {
        return Err(Error::InvalidConstraint("constraint meets both sides of a 2-cutset".into()));
    };
    let oriented = Split::ProperTwoCutset { x1: x1.clone(), x2: x2.clone(), a: *a, b: *b };
    let bl = blocks_with_fresh(g, &oriented, fresh)?;
    let (g1, g2) = (bl.g1, bl.g2.expect("two blocks"));
    // m2 stands for the second side inside the first block, m1 the reverse
    let (m2, m1) = (bl.markers.in_g1.unwrap(), bl.markers.in_g2.unwrap());
    let h1 = child(&g1, c)?;
    let kp_ab = inter(&c.k_plus, &ab);
    if let Some(&pa) = kp_ab.iter().next() {
        let pb = if pa == *a { *b } else { *a };
        if !h1.contains(&m2) {
            return Err(Error::Internal("first block splitter misses the marker next to k_plus".into()));
        }
        if h1.contains(&pb) {
            let h2 = child(&g2, &Constraint { k_in: VertexSet::new(), k_plus: set([pa, m1]) })?;
            return Ok(Combined::new(union(&minus(&h1, m2), &h2), "2cutset-1-both"));
        }
        let h2 = child(&g2, &Constraint { k_in: set([m1]), k_plus: set([pa]) })?;
        return Ok(Combined::new(union(&minus(&h1, m2), &minus(&h2, m1)), "2cutset-1-one"));
    }
    let hab = inter(&h1, &ab);
    match hab.len() {
        0 => {
            let h2 = child(&g2, &Constraint { k_in: set([m1]), k_plus: VertexSet::new() })?;
            Ok(Combined::new(union(&minus(&h1, m2), &minus(&h2, m1)), "2cutset-2-none"))
        }
        2 => {
            let pick = inter(&ab, &c.k_in).into_iter().next().unwrap_or(*a);
            let h2 = child(&g2, &Constraint { k_in: set([pick]), k_plus: VertexSet::new() })?;
            Ok(Combined::new(union(&minus(&h1, m2), &minus(&h2, pick)), "2cutset-2-both"))
        }
        _ => {
            let pa = *hab.iter().next().unwrap();
            let h2 = child(&g2, &Constraint { k_in: set([m1]), k_plus: set([pa]) })?;
            Ok(Combined::new(union(&minus(&h1, m2), &minus(&h2, m1)), "2cutset-2-one"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitterConfig {
    /// 2 for the outer peeling level, 1 when `G[H ∪ k_plus]` must be perfect.
    pub order: u8,
    /// Re-verify every intermediate splitter against the maximal cliques.
    pub checked: bool,
    pub limits: Limits,
}

impl Default for SplitterConfig {
    fn default() -> Self {
        SplitterConfig { order: 2, checked: false, limits: Limits::default() }
    }
}

/// A splitter with bookkeeping about how it was built.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitterReport {
    pub splitter: Splitter,
    /// Intermediate splitters re-verified (checked mode only).
    pub checks: usize,
    /// How often each construction case fired.
    pub cases: BTreeMap<&'static str, usize>,
}

pub fn compute_splitter(g: &Graph, c: &Constraint) -> Result<Splitter> {
    Ok(compute_splitter_with(g, c, &SplitterConfig::default())?.splitter)
}

pub fn compute_splitter_with(g: &Graph, c: &Constraint, cfg: &SplitterConfig) -> Result<SplitterReport> {
    if !(1..=2).contains(&cfg.order) {
        return Err(Error::Precondition(format!("splitter order {} is not 1 or 2", cfg.order)));
    }
    let mut ctx = Ctx { cfg, fresh: g.fresh_id(), report: SplitterReport::default() };
    let h = ctx.split(g, c)?;
    ctx.report.splitter = h.into();
    Ok(ctx.report)
}

struct Ctx<'a> {
    cfg: &'a SplitterConfig,
    fresh: VertexId,
    report: SplitterReport,
}

impl Ctx<'_> {
    fn note(&mut self, case: &'static str) {
        *self.report.cases.entry(case).or_default() += 1;
    }

    fn take_fresh(&mut self) -> VertexId {
        let f = self.fresh;
        self.fresh += 2;
        f
    }

    fn split(&mut self, g: &Graph, c: &Constraint) -> Result<VertexSet> {
        c.validate(g)?;
        let h = self.dispatch(g, c)?;
        if self.cfg.checked {
            self.check(g, c, &h)?;
        }
        Ok(h)
    }

    fn check(&mut self, g: &Graph, c: &Constraint, h: &VertexSet) -> Result<()> {
        if g.n() > self.cfg.limits.clique_max_n {
            return Ok(());
        }
        if let SplitterVerdict::Invalid(why) = oracle::verify_splitter_with(g, c, h, &self.cfg.limits)? {
            return Err(Error::Internal(format!("splitter check failed on a {}-vertex graph: {why}", g.n())));
        }
        if self.cfg.order == 1 {
            let hk = union(h, &c.k_plus);
            if hk.len() <= self.cfg.limits.perfect_max_n && !oracle::is_perfect_small(&g.induced_subgraph(&hk)?)? {
                return Err(Error::Internal("order-1 splitter does not induce a perfect graph".into()));
            }
        }
        self.report.checks += 1;
        Ok(())
    }

    fn combined(&mut self, r: Combined) -> VertexSet {
        for case in r.cases {
            self.note(case);
        }
        r.members
    }

    fn dispatch(&mut self, g: &Graph, c: &Constraint) -> Result<VertexSet> {
        if g.n() == 0 {
            return Ok(VertexSet::new());
        }
        let comps = g.component_sets();
        if comps.len() > 1 {
            self.note("disjoint-union");
            let anchor = c.all().into_iter().next();
            let mut h = VertexSet::new();
            for comp in comps {
                let part = g.induced_subgraph(&comp)?;
                let pc = if anchor.is_some_and(|v| comp.contains(&v)) { c.clone() } else { Constraint::empty() };
                h.extend(self.split(&part, &pc)?);
            }
            return Ok(h);
        }
        if is_chordal(g).is_some() {
            self.note("chordal");
            return Ok(trivial(g, c));
        }
        match classify_unichord_free_base(g) {
            Some(BasicClass::PetersenSub { embedding }) => return self.petersen(g, &embedding, c),
            Some(b) => {
                self.note(b.tag());
                return Ok(trivial(g, c));
            }
            None => {}
        }
        if let Some(&v) = find_universal_vertices(g).iter().next() {
            let r = combine_universal(g, v, c, &mut |h, c| self.split(h, c))?;
            return Ok(self.combined(r));
        }
        if let Some(Split::Cutvertex { v, x1, x2 }) = decomp::find_cutvertex(g)? {
            let k = set([v]);
            let r = combine_clique_cutset(g, &x1, &k, &x2, c, &mut |h, c| self.split(h, c))?;
            return Ok(self.combined(r));
        }
        if let Some(s) = decomp::find_amalgam_unchecked(g) {
            let fresh = self.take_fresh();
            let r = combine_amalgam(g, &s, c, fresh, &mut |h, c| self.split(h, c))?;
            return Ok(self.combined(r));
        }
        if is_unichord_free(g)? {
            if let Some(s) = decomp::proper_2cutset_search(g) {
                let fresh = self.take_fresh();
                let r = combine_proper_2cutset(g, &s, c, fresh, &mut |h, c| self.split(h, c))?;
                return Ok(self.combined(r));
            }
        }
        Err(Error::NotInClass(format!("no splitter rule applies to a {}-vertex piece", g.n())))
    }

    fn petersen(&mut self, g: &Graph, embedding: &BTreeMap<VertexId, u8>, c: &Constraint) -> Result<VertexSet> {
        if self.cfg.order == 1 {
            self.note("petersen-perfect");
            return oracle::exhaustive_splitter_search(g, c, true)?
                .ok_or_else(|| Error::Internal(format!("no perfect splitter in a {}-vertex Petersen piece", g.n())));
        }
        self.note("petersen");
        let h = petersen_splitter(g, embedding, c)?.members;
        if self.cfg.checked && !oracle::verify_splitter_with(g, c, &h, &self.cfg.limits)?.is_valid() {
            self.note("triangle-free-fallback");
            return Ok(triangle_free_splitter(g, c)?.members);
        }
        Ok(h)
    }
}
