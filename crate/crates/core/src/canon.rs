//! Canonical forms and exhaustive enumeration of small graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Upper-triangle adjacency bits under the lexicographically largest
/// relabeling. Only permutations that sort vertices by degree are tried.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11, "canonical_form is for small graphs");
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // classes of equal degree, in the sorted order
    let mut bounds = Vec::new();
    let mut s = 0;
    for k in 1..=n {
        if k == n || g.degree(verts[k]) != g.degree(verts[s]) {
            bounds.push((s, k));
            s = k;
        }
    }
    let mut best = 0u64;
    let mut perm = verts.clone();
    permute_classes(g, &bounds, 0, &mut perm, &mut best);
    (n, best)
}

fn code(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | g.adjacent(perm[i], perm[j]) as u64;
        }
    }
    c
}

fn permute_classes(g: &Graph, bounds: &[(usize, usize)], k: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if k == bounds.len() {
        *best = (*best).max(code(g, perm));
        return;
    }
    let (s, e) = bounds[k];
    heap_permute(g, bounds, k, s, e, e - s, perm, best);
}

#[allow(clippy::too_many_arguments)]
fn heap_permute(g: &Graph, bounds: &[(usize, usize)], k: usize, s: usize, e: usize, len: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if len <= 1 {
        permute_classes(g, bounds, k + 1, perm, best);
        return;
    }
    for i in 0..len {
        heap_permute(g, bounds, k, s, e, len - 1, perm, best);
        let j = if len % 2 == 0 { s + i } else { s };
        perm.swap(j, s + len - 1);
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// built by attaching a new vertex to each smaller connected graph.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::from_index_edges(1, &[])];
    for k in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 1u32..1 << k {
                let mut e = base.clone();
                e.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k)));
                let h = Graph::from_index_edges(k + 1, &e);
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn relabeling_invariance() {
        let g = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]);
        let h = Graph::from_index_edges(5, &[(4, 3), (3, 2), (2, 1), (1, 4), (0, 4), (0, 3)]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }
}
