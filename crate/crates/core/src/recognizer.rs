//! The decomposition tree and the recognition verdict.
//!
//! A node that is chordal or unichord-free is a leaf. Otherwise its universal
//! vertices are removed, or failing that it is split at a cutvertex or an
//! amalgam. The graph has no long unichord exactly when every leaf is basic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basics::{is_chordal, is_unichord_free};
use crate::decomp::{self, blocks_with_fresh, find_universal_vertices, potential_f, Markers, Split};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::{self, Limits, UnichordWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasicTag {
    Chordal,
    UnichordFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafClass {
    Chordal,
    UnichordFree,
    NonBasic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    UniversalRemoval,
    Cutvertex,
    Amalgam,
    Leaf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub graph: Graph,
    pub rule: Rule,
    pub split: Option<Split>,
    pub markers: Markers,
    pub children: Vec<usize>,
    pub leaf_class: Option<LeafClass>,
    pub depth: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub nodes: usize,
    pub leaves: usize,
    pub depth: usize,
}

/// Node 0 is the root. Marker ids are unique across the whole tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompTree {
    pub nodes: Vec<TreeNode>,
    /// For each marker, a vertex of the root graph that it stands in for: the
    /// block containing the marker is isomorphic to an induced subgraph of its
    /// parent with the marker replaced by this vertex.
    pub marker_origin: BTreeMap<VertexId, VertexId>,
}

impl DecompTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn stats(&self) -> TreeStats {
        TreeStats {
            nodes: self.nodes.len(),
            leaves: self.nodes.iter().filter(|t| t.rule == Rule::Leaf).count(),
            depth: self.nodes.iter().map(|t| t.depth).max().unwrap_or(0),
        }
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|t| t.rule == Rule::Leaf)
    }

    /// Root vertex standing for `v` (itself when `v` is not a marker).
    pub fn origin(&self, v: VertexId) -> VertexId {
        self.marker_origin.get(&v).copied().unwrap_or(v)
    }

    pub fn count_leaves(&self, class: LeafClass) -> usize {
        self.leaves().filter(|t| t.leaf_class == Some(class)).count()
    }
}

/// Chordal first, then unichord-free.
pub fn is_basic(g: &Graph) -> Result<Option<BasicTag>> {
    if !g.is_connected() {
        return Err(Error::Precondition("is_basic needs a connected graph".into()));
    }
    if is_chordal(g).is_some() {
        return Ok(Some(BasicTag::Chordal));
    }
    Ok(is_unichord_free(g)?.then_some(BasicTag::UnichordFree))
}

pub fn build_tree(g: &Graph) -> Result<DecompTree> {
    if !g.is_connected() {
        return Err(Error::Precondition("build_tree needs a connected graph".into()));
    }
    let mut tree = DecompTree { nodes: Vec::new(), marker_origin: BTreeMap::new() };
    let mut fresh = g.fresh_id();
    let mut work = vec![(g.clone(), 0usize, None::<usize>)];
    while let Some((h, depth, parent)) = work.pop() {
        let id = tree.nodes.len();
        if let Some(p) = parent {
            tree.nodes[p].children.push(id);
        }
        let mut node =
            TreeNode { graph: h, rule: Rule::Leaf, split: None, markers: Markers::default(), children: Vec::new(), leaf_class: None, depth };
        let h = &node.graph;
        let mut kids: Vec<Graph> = Vec::new();
        match is_basic(h)? {
            Some(BasicTag::Chordal) => node.leaf_class = Some(LeafClass::Chordal),
            Some(BasicTag::UnichordFree) => node.leaf_class = Some(LeafClass::UnichordFree),
            None => {
                let x = find_universal_vertices(h);
                if !x.is_empty() {
                    // the reduced graph may fall apart; each component becomes a child
                    let rest = h.without_ids(&x);
                    kids = rest.components().iter().map(|c| rest.induced(c)).collect();
                    node.rule = Rule::UniversalRemoval;
                    node.split = Some(Split::UniversalSet { x });
                } else if let Some(s) = decomp::find_cutvertex(h)?.or_else(|| decomp::find_amalgam_unchecked(h)) {
                    let b = blocks_with_fresh(h, &s, fresh)?;
                    fresh += 2;
                    let g2 = b.g2.expect("two blocks");
                    let (f, f1, f2) = (potential_f(h), potential_f(&b.g1), potential_f(&g2));
                    if f1 + f2 > f {
                        return Err(Error::Internal(format!("potential grew at a {} split: {f1} + {f2} > {f}", s.kind())));
                    }
                    if let Split::Amalgam { a1, a2, .. } = &s {
                        let rep = |a: &VertexSet| tree.origin(*a.iter().next().unwrap());
                        let (r2, r1) = (rep(a2), rep(a1));
                        tree.marker_origin.insert(b.markers.in_g1.unwrap(), r2);
                        tree.marker_origin.insert(b.markers.in_g2.unwrap(), r1);
                        node.rule = Rule::Amalgam;
                    } else {
                        node.rule = Rule::Cutvertex;
                    }
                    node.markers = b.markers;
                    node.split = Some(s);
                    kids = vec![b.g1, g2];
                } else {
                    node.leaf_class = Some(LeafClass::NonBasic);
                }
            }
        }
        tree.nodes.push(node);
        // reversed so children come out in block order
        for k in kids.into_iter().rev() {
            work.push((k, depth + 1, Some(id)));
        }
    }
    // children were pushed in pop order; restore block order
    for t in tree.nodes.iter_mut() {
        t.children.sort_unstable();
    }
    let leaves = tree.stats().leaves;
    let f = potential_f(g);
    if leaves > f {
        return Err(Error::Internal(format!("{leaves} leaves exceed the potential {f}")));
    }
    Ok(tree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafCounts {
    pub chordal: usize,
    pub unichord_free: usize,
    pub non_basic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub long_unichord_free: bool,
    pub n: usize,
    pub m: usize,
    pub stats: TreeStats,
    pub leaf_classes: LeafCounts,
    pub witness: Option<UnichordWitness>,
    /// One tree per connected component, ordered by smallest vertex.
    pub trees: Vec<DecompTree>,
}

pub fn recognize(g: &Graph) -> Result<Verdict> {
    recognize_with(g, &Limits::default())
}

/// Decides long-unichord-freeness component by component. When a non-basic
/// leaf is small enough for the oracle, a witness is reported in the ids of `g`.
pub fn recognize_with(g: &Graph, limits: &Limits) -> Result<Verdict> {
    let mut trees = Vec::new();
    for comp in g.components() {
        trees.push(build_tree(&g.induced(&comp))?);
    }
    let mut stats = TreeStats::default();
    let mut counts = LeafCounts { chordal: 0, unichord_free: 0, non_basic: 0 };
    for t in &trees {
        let s = t.stats();
        stats.nodes += s.nodes;
        stats.leaves += s.leaves;
        stats.depth = stats.depth.max(s.depth);
        counts.chordal += t.count_leaves(LeafClass::Chordal);
        counts.unichord_free += t.count_leaves(LeafClass::UnichordFree);
        counts.non_basic += t.count_leaves(LeafClass::NonBasic);
    }
    let mut witness = None;
    'outer: for t in &trees {
        for leaf in t.leaves().filter(|l| l.leaf_class == Some(LeafClass::NonBasic)) {
            if leaf.graph.n() > limits.unichord_max_n {
                continue;
            }
            let image: VertexSet = leaf.graph.ids().iter().map(|&v| t.origin(v)).collect();
            let h = g.induced_subgraph(&image)?;
            if let Some(w) = oracle::find_long_unichord_with(&h, limits)? {
                if w.validate(g, 5).is_ok() {
                    witness = Some(w);
                    break 'outer;
                }
            }
        }
    }
    Ok(Verdict { long_unichord_free: counts.non_basic == 0, n: g.n(), m: g.m(), stats, leaf_classes: counts, witness, trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Named;

    #[test]
    fn basic_tags() {
        assert_eq!(is_basic(&Named::Clique(5).build()).unwrap(), Some(BasicTag::Chordal));
        assert_eq!(is_basic(&Named::Petersen.build()).unwrap(), Some(BasicTag::UnichordFree));
        assert_eq!(is_basic(&Named::House.build()).unwrap(), None);
    }

    #[test]
    fn house_is_rejected_with_witness() {
        let v = recognize(&Named::House.build()).unwrap();
        assert!(!v.long_unichord_free);
        let w = v.witness.unwrap();
        w.validate(&Named::House.build(), 5).unwrap();
        assert_eq!(w.chord, (0, 1));
    }

    #[test]
    fn named_members() {
        for g in [Named::Petersen.build(), Named::Heawood.build(), Named::Bowtie.build(), Named::Wheel(6).build()] {
            assert!(recognize(&g).unwrap().long_unichord_free);
        }
        let t = build_tree(&Named::Bowtie.build()).unwrap();
        assert_eq!(t.stats(), TreeStats { nodes: 1, leaves: 1, depth: 0 });
    }
}
