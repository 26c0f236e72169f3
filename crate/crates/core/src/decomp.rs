//! Splits of a graph and their blocks: universal vertices, cutvertices,
//! amalgams (1-joins when `K` is empty) and proper 2-cutsets.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::twosat::{neg, pos, Lit, TwoSat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Split {
    UniversalSet {
        x: VertexSet,
    },
    /// `x1` and `x2` are the two sides of `G - v`.
    Cutvertex {
        v: VertexId,
        x1: VertexSet,
        x2: VertexSet,
    },
    /// `V = x1 ∪ x2 ∪ k`, with `a1 ⊆ x1` complete to `a2 ⊆ x2`.
    Amalgam {
        x1: VertexSet,
        x2: VertexSet,
        a1: VertexSet,
        a2: VertexSet,
        k: VertexSet,
    },
    ProperTwoCutset {
        x1: VertexSet,
        x2: VertexSet,
        a: VertexId,
        b: VertexId,
    },
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidSplit(msg.into()))
}

fn partition_check(g: &Graph, parts: &[&VertexSet]) -> Result<()> {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let mut all = VertexSet::new();
    for p in parts {
        all.extend(p.iter().copied());
    }
    if total != all.len() {
        return invalid("parts overlap");
    }
    if all != g.vertex_set() {
        return invalid("parts do not cover the vertex set");
    }
    Ok(())
}

fn index_flags(g: &Graph, s: &VertexSet) -> Vec<bool> {
    let mut f = vec![false; g.n()];
    for &v in s {
        if let Some(i) = g.index_of(v) {
            f[i] = true;
        }
    }
    f
}

/// True when `G[s]` contains a path from `a` to `b`.
fn has_path(g: &Graph, s: &VertexSet, a: VertexId, b: VertexId) -> bool {
    let inside = index_flags(g, s);
    let (Some(ia), Some(ib)) = (g.index_of(a), g.index_of(b)) else { return false };
    let mut seen = vec![false; g.n()];
    let mut stack = vec![ia];
    seen[ia] = true;
    while let Some(v) = stack.pop() {
        if v == ib {
            return true;
        }
        for &w in g.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

impl Split {
    pub fn kind(&self) -> &'static str {
        match self {
            Split::UniversalSet { .. } => "universal-set",
            Split::Cutvertex { .. } => "cutvertex",
            Split::Amalgam { .. } => "amalgam",
            Split::ProperTwoCutset { .. } => "proper-2cutset",
        }
    }

    /// Checks the defining conditions of the split directly on `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Split::UniversalSet { x } => {
                if x.is_empty() {
                    return invalid("empty universal set");
                }
                for &v in x {
                    let i = g.index(v)?;
                    if g.degree(i) + 1 != g.n() {
                        return invalid(format!("vertex {v} is not universal"));
                    }
                }
                Ok(())
            }
            Split::Cutvertex { v, x1, x2 } => {
                let single: VertexSet = [*v].into();
                partition_check(g, &[&single, x1, x2])?;
                if x1.is_empty() || x2.is_empty() {
                    return invalid("empty side");
                }
                let side1 = index_flags(g, x1);
                for &u in x2 {
                    if g.neighbors(g.index(u)?).iter().any(|&w| side1[w]) {
                        return invalid(format!("edge across the cutvertex at {u}"));
                    }
                }
                Ok(())
            }
            Split::Amalgam { x1, x2, a1, a2, k } => {
                partition_check(g, &[x1, x2, k])?;
                if !a1.is_subset(x1) || !a2.is_subset(x2) {
                    return invalid("A_i not inside X_i");
                }
                if a1.is_empty() || a2.is_empty() {
                    return invalid("empty A_i");
                }
                if x1.len() < 2 || x2.len() < 2 {
                    return invalid("side with fewer than two vertices");
                }
                if !g.is_clique_ids(k) {
                    return invalid("K is not a clique");
                }
                let in_a2 = index_flags(g, a2);
                let in_x2 = index_flags(g, x2);
                for &u in x1 {
                    let i = g.index(u)?;
                    let cross = g.neighbors(i).iter().filter(|&&w| in_x2[w]).count();
                    if a1.contains(&u) {
                        if g.neighbors(i).iter().filter(|&&w| in_a2[w]).count() != a2.len() || cross != a2.len() {
                            return invalid(format!("{u} in A1 is not adjacent to exactly A2 across"));
                        }
                    } else if cross != 0 {
                        return invalid(format!("{u} outside A1 has a neighbor in X2"));
                    }
                }
                for &q in k {
                    let i = g.index(q)?;
                    for &a in a1.iter().chain(a2) {
                        if !g.adjacent(i, g.index(a)?) {
                            return invalid(format!("K vertex {q} not adjacent to {a}"));
                        }
                    }
                }
                Ok(())
            }
            Split::ProperTwoCutset { x1, x2, a, b } => {
                let ab: VertexSet = [*a, *b].into();
                if ab.len() != 2 {
                    return invalid("a = b");
                }
                partition_check(g, &[x1, x2, &ab])?;
                if g.adjacent(g.index(*a)?, g.index(*b)?) {
                    return invalid("a and b are adjacent");
                }
                if x1.len() < 2 || x2.len() < 2 {
                    return invalid("side with fewer than two vertices");
                }
                let side1 = index_flags(g, x1);
                for &u in x2 {
                    if g.neighbors(g.index(u)?).iter().any(|&w| side1[w]) {
                        return invalid(format!("edge across the 2-cutset at {u}"));
                    }
                }
                for x in [x1, x2] {
                    let s: VertexSet = x.union(&ab).copied().collect();
                    if !has_path(g, &s, *a, *b) {
                        return invalid("a side has no a-b path");
                    }
                }
                Ok(())
            }
        }
    }
}

pub fn find_universal_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&i| g.degree(i) + 1 == g.n()).map(|i| g.id(i)).collect()
}

/// Articulation points of `g - skip`, as flags over the indices of `g`.
fn articulation_points(g: &Graph, skip: Option<usize>) -> Vec<bool> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut ap = vec![false; n];
    let mut time = 0;
    let mut call: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || Some(root) == skip {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        call.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut k)) = call.last_mut() {
            if *k < g.degree(v) {
                let w = g.neighbors(v)[*k];
                *k += 1;
                if Some(w) == skip || w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    call.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        ap[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            ap[root] = true;
        }
    }
    ap
}

/// The cutvertex with the smallest id; `x1` is the component of `G - v`
/// holding the smallest remaining vertex.
pub fn find_cutvertex(g: &Graph) -> Result<Option<Split>> {
    if !g.is_connected() {
        return Err(Error::Precondition("find_cutvertex needs a connected graph".into()));
    }
    let ap = articulation_points(g, None);
    let Some(v) = (0..g.n()).find(|&i| ap[i]) else { return Ok(None) };
    Ok(Some(cutvertex_split(g, v)))
}

pub(crate) fn cutvertex_split(g: &Graph, v: usize) -> Split {
    let rest = g.without(&[v]);
    let comps = rest.component_sets();
    let x1 = comps[0].clone();
    let x2 = comps[1..].iter().flatten().copied().collect();
    Split::Cutvertex { v: g.id(v), x1, x2 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    P1,
    A1,
    K,
    A2,
    P2,
}

impl Label {
    fn side(self) -> u8 {
        match self {
            Label::P1 | Label::A1 => 1,
            Label::K => 0,
            Label::A2 | Label::P2 => 2,
        }
    }
}

fn pair_allowed(x: Label, y: Label, adjacent: bool) -> bool {
    use Label::*;
    let across = x.side() * y.side() == 2;
    let a_pair = matches!((x, y), (A1, A2) | (A2, A1));
    if adjacent {
        !across || a_pair
    } else {
        !a_pair && !(x == K && matches!(y, A1 | A2 | K)) && !(y == K && matches!(x, A1 | A2))
    }
}

/// How one vertex's label is encoded: a constant, one boolean choosing
/// between two labels, or two booleans (α = "A1 or K", β = "A2 or K") for
/// the three-way choice of a common neighbor.
#[derive(Clone, Copy, Debug)]
enum Enc {
    Fixed(Label),
    Two(Label, Label, usize),
    Three(usize, usize),
}

/// A literal or a constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cond {
    True,
    Lit(Lit),
}

impl Enc {
    fn domain(&self) -> Vec<Label> {
        match *self {
            Enc::Fixed(l) => vec![l],
            Enc::Two(a, b, _) => vec![a, b],
            Enc::Three(..) => vec![Label::A1, Label::A2, Label::K],
        }
    }

    /// Label subsets expressible as a single condition.
    fn definable(&self) -> Vec<(Vec<Label>, Cond)> {
        use Label::*;
        match *self {
            Enc::Fixed(l) => vec![(vec![l], Cond::True)],
            Enc::Two(a, b, v) => vec![(vec![a, b], Cond::True), (vec![a], Cond::Lit(pos(v))), (vec![b], Cond::Lit(neg(pos(v))))],
            Enc::Three(al, be) => vec![
                (vec![A1, A2, K], Cond::True),
                (vec![A1], Cond::Lit(neg(pos(be)))),
                (vec![A2], Cond::Lit(neg(pos(al)))),
                (vec![A1, K], Cond::Lit(pos(al))),
                (vec![A2, K], Cond::Lit(pos(be))),
            ],
        }
    }

    /// Condition for "this vertex lies in X1" (`side == 1`) or X2.
    fn on_side(&self, side: u8) -> Option<Cond> {
        match *self {
            Enc::Fixed(l) => (l.side() == side).then_some(Cond::True),
            Enc::Two(a, b, v) => {
                if a.side() == side && b.side() != side {
                    Some(Cond::Lit(pos(v)))
                } else if b.side() == side && a.side() != side {
                    Some(Cond::Lit(neg(pos(v))))
                } else if a.side() == side {
                    Some(Cond::True)
                } else {
                    None
                }
            }
            Enc::Three(al, be) => Some(Cond::Lit(if side == 1 { neg(pos(be)) } else { neg(pos(al)) })),
        }
    }

    fn read(&self, val: &[bool]) -> Label {
        match *self {
            Enc::Fixed(l) => l,
            Enc::Two(a, b, v) => {
                if val[v] {
                    a
                } else {
                    b
                }
            }
            Enc::Three(al, be) => match (val[al], val[be]) {
                (true, true) => Label::K,
                (true, false) => Label::A1,
                (false, true) => Label::A2,
                (false, false) => unreachable!("clause α ∨ β"),
            },
        }
    }
}

/// Adds clauses forbidding every disallowed label pair of `(x, y)`.
/// Returns false if the pair can never be satisfied.
fn encode_pair(sat: &mut TwoSat, ex: &Enc, ey: &Enc, adjacent: bool) -> bool {
    let dx = ex.domain();
    let dy = ey.domain();
    let forbidden: Vec<(Label, Label)> =
        dx.iter().flat_map(|&a| dy.iter().map(move |&b| (a, b))).filter(|&(a, b)| !pair_allowed(a, b, adjacent)).collect();
    if forbidden.is_empty() {
        return true;
    }
    let mut covered = vec![false; forbidden.len()];
    let mark = |sx: &[Label], sy: &[Label], covered: &mut Vec<bool>| {
        for (t, (a, b)) in forbidden.iter().enumerate() {
            if sx.contains(a) && sy.contains(b) {
                covered[t] = true;
            }
        }
    };
    for (sx, cx) in ex.definable() {
        for (sy, cy) in ey.definable() {
            let inside = sx.iter().all(|a| sy.iter().all(|b| forbidden.contains(&(*a, *b))));
            if !inside {
                continue;
            }
            match (cx, cy) {
                (Cond::True, Cond::True) => return false,
                (Cond::True, Cond::Lit(l)) | (Cond::Lit(l), Cond::True) => sat.unit(neg(l)),
                (Cond::Lit(l1), Cond::Lit(l2)) => sat.clause(neg(l1), neg(l2)),
            }
            mark(&sx, &sy, &mut covered);
        }
    }
    // "not K" for a three-way vertex whose K label clashes with everything
    for (e, d_other, first) in [(ex, &dy, true), (ey, &dx, false)] {
        if let Enc::Three(al, be) = *e {
            let all_bad = d_other.iter().all(|&o| forbidden.contains(&if first { (Label::K, o) } else { (o, Label::K) }));
            if all_bad {
                sat.clause(neg(pos(al)), neg(pos(be)));
                for (t, (a, b)) in forbidden.iter().enumerate() {
                    if (first && *a == Label::K) || (!first && *b == Label::K) {
                        covered[t] = true;
                    }
                }
            }
        }
    }
    assert!(covered.iter().all(|&c| c), "label constraints not expressible in 2-CNF: {forbidden:?}");
    true
}

/// Amalgam search seeded with `u ∈ A1`, `v ∈ A2`.
fn amalgam_from_seed(g: &Graph, rows: &[Bits], u: usize, v: usize, allow_k: bool) -> Option<Split> {
    use Label::*;
    let n = g.n();
    let mut vars = 0;
    let mut fresh = || {
        vars += 1;
        vars - 1
    };
    let enc: Vec<Enc> = (0..n)
        .map(|w| {
            if w == u {
                return Enc::Fixed(A1);
            }
            if w == v {
                return Enc::Fixed(A2);
            }
            match (rows[u].get(w), rows[v].get(w)) {
                (true, true) if allow_k => Enc::Three(fresh(), fresh()),
                (true, true) => Enc::Two(A1, A2, fresh()),
                (true, false) => Enc::Two(P1, A2, fresh()),
                (false, true) => Enc::Two(A1, P2, fresh()),
                (false, false) => Enc::Two(P1, P2, fresh()),
            }
        })
        .collect();
    let mut sat = TwoSat::new(vars);
    for e in &enc {
        if let Enc::Three(al, be) = *e {
            sat.clause(pos(al), pos(be));
        }
    }
    for (x, y) in g.edges() {
        if !encode_pair(&mut sat, &enc[x], &enc[y], true) {
            return None;
        }
    }
    // non-adjacent pairs only constrain vertices next to u or v
    let mut near: Vec<usize> = g.neighbors(u).iter().chain(g.neighbors(v)).copied().filter(|&w| w != u && w != v).collect();
    near.sort_unstable();
    near.dedup();
    for (t, &x) in near.iter().enumerate() {
        for &y in &near[t + 1..] {
            if !rows[x].get(y) && !encode_pair(&mut sat, &enc[x], &enc[y], false) {
                return None;
            }
        }
    }

    // Need some x ≠ u in X1 and some y ≠ v in X2, jointly satisfiable.
    let scc = sat.scc();
    if (0..vars).any(|x| scc.comp[pos(x)] == scc.comp[neg(pos(x))]) {
        return None;
    }
    let mut side_lits: [Vec<(usize, Lit)>; 2] = [Vec::new(), Vec::new()];
    let mut forced = [false; 2];
    for w in 0..n {
        if w == u || w == v {
            continue;
        }
        for (k, side) in [1u8, 2].into_iter().enumerate() {
            match enc[w].on_side(side) {
                Some(Cond::Lit(l)) => side_lits[k].push((w, l)),
                Some(Cond::True) => forced[k] = true,
                None => {}
            }
        }
    }
    let pick = choose_sides(&sat, &scc, &side_lits, forced)?;
    for l in pick.into_iter().flatten() {
        sat.unit(l);
    }
    let val = sat.solve()?;
    let labels: Vec<Label> = enc.iter().map(|e| e.read(&val)).collect();
    let set = |ls: &[Label]| g.to_ids((0..n).filter(|&w| ls.contains(&labels[w])));
    let split = Split::Amalgam { x1: set(&[P1, A1]), x2: set(&[A2, P2]), a1: set(&[A1]), a2: set(&[A2]), k: set(&[K]) };
    split.validate(g).ok()?;
    Some(split)
}

/// Picks literals `l1` ("some x lands in X1") and `l2` ("some y lands in
/// X2") such that the formula stays satisfiable with both asserted. A side
/// already guaranteed a second vertex needs no literal.
fn choose_sides(sat: &TwoSat, scc: &crate::twosat::Scc, side_lits: &[Vec<(usize, Lit)>; 2], forced: [bool; 2]) -> Option<[Option<Lit>; 2]> {
    // Targets: the negations of every candidate literal. reach[c] holds the
    // targets reachable from component c.
    let targets: Vec<Lit> = side_lits[0].iter().chain(&side_lits[1]).map(|&(_, l)| neg(l)).collect();
    let t1 = side_lits[0].len();
    let mut reach: Vec<Bits> = vec![Bits::new(targets.len()); scc.count];
    for (t, &l) in targets.iter().enumerate() {
        reach[scc.comp[l]].set(t);
    }
    let mut members: Vec<Vec<Lit>> = vec![Vec::new(); scc.count];
    for (l, &c) in scc.comp.iter().enumerate() {
        members[c].push(l);
    }
    // components are numbered sinks first, so successors are already final
    for c in 0..scc.count {
        for &l in &members[c] {
            for &w in sat.successors(l) {
                let d = scc.comp[w];
                if d != c {
                    let (lo, hi) = reach.split_at_mut(c);
                    hi[0].union_with(&lo[d]);
                }
            }
        }
    }
    let consistent = |t: usize, l: Lit| !reach[scc.comp[l]].get(t);
    let ok2: Vec<usize> = side_lits[1].iter().enumerate().filter(|&(k, &(_, l))| consistent(t1 + k, l)).map(|(k, _)| k).collect();
    match forced {
        [true, true] => Some([None, None]),
        [true, false] => ok2.first().map(|&k| [None, Some(side_lits[1][k].1)]),
        [false, true] => side_lits[0].iter().enumerate().find(|&(k, &(_, l))| consistent(k, l)).map(|(_, &(_, l))| [Some(l), None]),
        [false, false] => {
            let mut ok2_bits = Bits::new(targets.len());
            for &k in &ok2 {
                ok2_bits.set(t1 + k);
            }
            for (k, &(_, l1)) in side_lits[0].iter().enumerate() {
                if !consistent(k, l1) {
                    continue;
                }
                if let Some(t) = ok2_bits.first_not_in(&reach[scc.comp[l1]]) {
                    return Some([Some(l1), Some(side_lits[1][t - t1].1)]);
                }
            }
            None
        }
    }
}

fn amalgam_search(g: &Graph, allow_k: bool) -> Option<Split> {
    if g.n() < 4 {
        return None;
    }
    let rows = g.bit_rows();
    g.edges().find_map(|(u, v)| amalgam_from_seed(g, &rows, u, v, allow_k))
}

fn check_amalgam_pre(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if !find_universal_vertices(g).is_empty() {
        return Err(Error::Precondition("graph has a universal vertex".into()));
    }
    if articulation_points(g, None).contains(&true) {
        return Err(Error::Precondition("graph has a cutvertex".into()));
    }
    Ok(())
}

/// Some amalgam of `g`, or `None` if there is none. With `K = ∅` the split is
/// a 1-join.
pub fn find_amalgam(g: &Graph) -> Result<Option<Split>> {
    check_amalgam_pre(g)?;
    Ok(amalgam_search(g, true))
}

/// Amalgam search without the precondition checks.
pub(crate) fn find_amalgam_unchecked(g: &Graph) -> Option<Split> {
    amalgam_search(g, true)
}

/// Some 1-join of `g` (an amalgam with `K = ∅`).
pub fn find_one_join(g: &Graph) -> Result<Option<Split>> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    Ok(amalgam_search(g, false))
}

/// Candidate assignments of the components of `G - {a,b}` to two sides.
fn two_cutset_sides(comps: &[(Vec<usize>, bool)]) -> Vec<(Vec<usize>, Vec<usize>)> {
    // goods touch both a and b, largest first
    let mut goods: Vec<usize> = (0..comps.len()).filter(|&c| comps[c].1).collect();
    goods.sort_by_key(|&c| (std::cmp::Reverse(comps[c].0.len()), c));
    let others: Vec<usize> = (0..comps.len()).filter(|&c| !comps[c].1).collect();
    if goods.len() < 2 {
        return Vec::new();
    }
    let rest = |side: &[usize]| (0..comps.len()).filter(|c| !side.contains(c)).collect::<Vec<_>>();
    let mut out = Vec::new();
    let one = vec![goods[0]];
    out.push((one.clone(), rest(&one)));
    if goods.len() >= 3 {
        let two = vec![goods[0], goods[1]];
        out.push((two.clone(), rest(&two)));
    }
    if let Some(&o) = others.first() {
        let with = vec![goods[0], o];
        out.push((with.clone(), rest(&with)));
        let mut all = vec![goods[0]];
        all.extend(&others);
        out.push((all.clone(), rest(&all)));
    }
    out
}

/// Smallest pair `(a, b)` (by id) forming a proper 2-cutset, with a side
/// assignment satisfying the size and path conditions.
pub fn find_proper_2cutset(g: &Graph) -> Result<Option<Split>> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    Ok(proper_2cutset_search(g))
}

pub(crate) fn proper_2cutset_search(g: &Graph) -> Option<Split> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    for a in 0..n {
        let ap = articulation_points(g, Some(a));
        for b in a + 1..n {
            if !ap[b] || g.adjacent(a, b) {
                continue;
            }
            let rest = g.without(&[a, b]);
            let (ida, idb) = (g.id(a), g.id(b));
            let comps: Vec<(Vec<usize>, bool)> = rest
                .components()
                .into_iter()
                .map(|c| {
                    let orig: Vec<usize> = c.iter().map(|&i| g.index_of(rest.id(i)).unwrap()).collect();
                    let ta = orig.iter().any(|&i| g.adjacent(i, a));
                    let tb = orig.iter().any(|&i| g.adjacent(i, b));
                    (orig, ta && tb)
                })
                .collect();
            for (s1, s2) in two_cutset_sides(&comps) {
                let side = |cs: &[usize]| g.to_ids(cs.iter().flat_map(|&c| comps[c].0.iter().copied()));
                let split = Split::ProperTwoCutset { x1: side(&s1), x2: side(&s2), a: ida, b: idb };
                if split.validate(g).is_ok() {
                    return Some(split);
                }
            }
        }
    }
    None
}

/// Marker vertices added to the blocks: `in_g1` is the marker placed in the
/// first block (u₂ or x₂), `in_g2` the one in the second (u₁ or x₁).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Markers {
    pub in_g1: Option<VertexId>,
    pub in_g2: Option<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub g1: Graph,
    pub g2: Option<Graph>,
    pub markers: Markers,
}

/// Blocks of decomposition; markers get ids just above the largest id of `g`.
pub fn blocks(g: &Graph, s: &Split) -> Result<Blocks> {
    blocks_with_fresh(g, s, g.fresh_id())
}

/// Blocks with marker ids `fresh` (first block) and `fresh + 1` (second).
pub fn blocks_with_fresh(g: &Graph, s: &Split, fresh: VertexId) -> Result<Blocks> {
    s.validate(g)?;
    if g.contains(fresh) || g.contains(fresh + 1) {
        return Err(Error::Precondition("marker ids collide with graph vertices".into()));
    }
    let union = |a: &VertexSet, b: &VertexSet| a.union(b).copied().collect::<VertexSet>();
    match s {
        Split::UniversalSet { x } => Ok(Blocks { g1: g.without_ids(x), g2: None, markers: Markers::default() }),
        Split::Cutvertex { v, x1, x2 } => {
            let vs: VertexSet = [*v].into();
            Ok(Blocks {
                g1: g.induced_subgraph(&union(x1, &vs))?,
                g2: Some(g.induced_subgraph(&union(x2, &vs))?),
                markers: Markers::default(),
            })
        }
        Split::Amalgam { x1, x2, a1, a2, k } => {
            let (u2, u1) = (fresh, fresh + 1);
            let g1 = g.induced_subgraph(&union(x1, k))?.with_vertex(u2, &union(a1, k))?;
            let g2 = g.induced_subgraph(&union(x2, k))?.with_vertex(u1, &union(a2, k))?;
            Ok(Blocks { g1, g2: Some(g2), markers: Markers { in_g1: Some(u2), in_g2: Some(u1) } })
        }
        Split::ProperTwoCutset { x1, x2, a, b } => {
            let ab: VertexSet = [*a, *b].into();
            let (m2, m1) = (fresh, fresh + 1);
            let g1 = g.induced_subgraph(&union(x1, &ab))?.with_vertex(m2, &ab)?;
            let g2 = g.induced_subgraph(&union(x2, &ab))?.with_vertex(m1, &ab)?;
            Ok(Blocks { g1, g2: Some(g2), markers: Markers { in_g1: Some(m2), in_g2: Some(m1) } })
        }
    }
}

/// `max(#non-adjacent pairs, 1)`.
pub fn potential_f(g: &Graph) -> usize {
    g.non_edges().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Named;

    #[test]
    fn universal_vertices() {
        assert_eq!(find_universal_vertices(&Named::Clique(4).build()).len(), 4);
        assert_eq!(find_universal_vertices(&Named::Wheel(4).build()), [4].into());
        assert!(find_universal_vertices(&Named::Petersen.build()).is_empty());
    }

    #[test]
    fn cutvertices() {
        let s = find_cutvertex(&Named::Bowtie.build()).unwrap().unwrap();
        assert!(matches!(s, Split::Cutvertex { v: 2, .. }));
        assert_eq!(find_cutvertex(&Named::Cycle(5).build()).unwrap(), None);
        let p = find_cutvertex(&Named::Path(3).build()).unwrap().unwrap();
        assert!(matches!(p, Split::Cutvertex { v: 1, .. }));
        assert!(find_cutvertex(&Graph::from_index_edges(2, &[])).is_err());
        let b = blocks(&Named::Bowtie.build(), &s).unwrap();
        assert_eq!((b.g1.m(), b.g2.as_ref().unwrap().m()), (3, 3));
    }

    #[test]
    fn amalgams() {
        assert_eq!(find_amalgam(&Named::Cycle(5).build()).unwrap(), None);
        // two triangles 0,1,2 and 3,4,5 with 1,2 complete to 3,4
        let g = Graph::from_index_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 3), (1, 4), (2, 3), (2, 4)],
        );
        let s = find_amalgam(&g).unwrap().unwrap();
        s.validate(&g).unwrap();
        assert!(matches!(&s, Split::Amalgam { k, .. } if k.is_empty()));
        assert!(find_amalgam(&Named::Wheel(5).build()).is_err());
    }

    #[test]
    fn two_cutsets() {
        let c6 = Named::Cycle(6).build();
        let s = find_proper_2cutset(&c6).unwrap().unwrap();
        assert!(matches!(s, Split::ProperTwoCutset { a: 0, b: 3, .. }));
        let b = blocks(&c6, &s).unwrap();
        // each side path plus a, b and the marker is a five-cycle
        for bl in [&b.g1, b.g2.as_ref().unwrap()] {
            assert_eq!((bl.n(), bl.m()), (5, 5));
            assert!((0..5).all(|i| bl.degree(i) == 2));
        }
        assert_eq!(find_proper_2cutset(&Named::Clique(4).build()).unwrap(), None);
    }

    #[test]
    fn potential() {
        assert_eq!(potential_f(&Named::Clique(5).build()), 1);
        assert_eq!(potential_f(&Named::Cycle(5).build()), 5);
        assert_eq!(potential_f(&Graph::from_index_edges(4, &[])), 6);
    }

    #[test]
    fn bad_splits_rejected() {
        let c5 = Named::Cycle(5).build();
        let s = Split::Cutvertex { v: 0, x1: [1, 2].into(), x2: [3, 4].into() };
        assert!(s.validate(&c5).is_err());
        assert!(blocks(&c5, &s).is_err());
    }
}
