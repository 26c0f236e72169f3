use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// A pair of disjoint cliques `(k_in, k_plus)` whose union is a clique.
///
/// A splitter must contain `k_in`, avoid `k_plus`, and avoid every vertex
/// complete to `k_in`. Nothing is complete to the empty set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Constraint {
    pub k_in: VertexSet,
    pub k_plus: VertexSet,
}

impl Constraint {
    pub fn new(k_in: impl IntoIterator<Item = VertexId>, k_plus: impl IntoIterator<Item = VertexId>) -> Constraint {
        Constraint { k_in: k_in.into_iter().collect(), k_plus: k_plus.into_iter().collect() }
    }

    pub fn empty() -> Constraint {
        Constraint::default()
    }

    pub fn is_empty(&self) -> bool {
        self.k_in.is_empty() && self.k_plus.is_empty()
    }

    pub fn all(&self) -> VertexSet {
        self.k_in.union(&self.k_plus).copied().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(v) = self.k_in.intersection(&self.k_plus).next() {
            return Err(Error::InvalidConstraint(format!("vertex {v} in both k_in and k_plus")));
        }
        let all = self.all();
        if let Some(&v) = all.iter().find(|&&v| !g.contains(v)) {
            return Err(Error::InvalidConstraint(format!("vertex {v} not in graph")));
        }
        if !g.is_clique_ids(&all) {
            return Err(Error::InvalidConstraint("k_in and k_plus do not form a clique".into()));
        }
        Ok(())
    }

    /// Only the part of the constraint that lives in `g`.
    pub fn restrict(&self, g: &Graph) -> Constraint {
        Constraint {
            k_in: self.k_in.iter().copied().filter(|&v| g.contains(v)).collect(),
            k_plus: self.k_plus.iter().copied().filter(|&v| g.contains(v)).collect(),
        }
    }
}

/// Indices of vertices outside `k_in` adjacent to every vertex of `k_in`.
/// Empty when `k_in` is empty.
pub fn complete_to(g: &Graph, k_in: &VertexSet) -> Vec<usize> {
    let Some(&first) = k_in.iter().next() else { return Vec::new() };
    let Some(f) = g.index_of(first) else { return Vec::new() };
    let ks: Vec<usize> = k_in.iter().filter_map(|&v| g.index_of(v)).collect();
    g.neighbors(f)
        .iter()
        .copied()
        .filter(|&w| !k_in.contains(&g.id(w)) && ks.iter().all(|&k| g.adjacent(w, k)))
        .collect()
}
