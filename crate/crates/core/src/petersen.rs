//! A fixed labeling of the Petersen graph and its automorphism group.
//!
//! Labels `a1..a6` run around the hexagon left after deleting the closed
//! neighborhood of `c`; `x`, `y`, `z` are the neighbors of `c`. Every odd
//! cycle avoiding `y` and `z` passes through `a1`, `x` and `a4`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::graph::{Graph, Named};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    X,
    Y,
    Z,
    C,
}

impl Label {
    pub const ALL: [Label; 10] =
        [Label::A1, Label::A2, Label::A3, Label::A4, Label::A5, Label::A6, Label::X, Label::Y, Label::Z, Label::C];

    pub fn vertex(self) -> u8 {
        LABELING[self as usize]
    }
}

/// Vertex of the canonical Petersen graph carrying each label, in the order
/// of [`Label::ALL`]. Reproduced by [`derive_labeling`].
pub const LABELING: [u8; 10] = [0, 1, 2, 3, 8, 5, 4, 6, 7, 9];

pub fn canonical() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| Named::Petersen.build())
}

/// Vertices carrying `labels`.
pub fn labeled(labels: &[Label]) -> BTreeSet<u8> {
    labels.iter().map(|l| l.vertex()).collect()
}

fn odd_cycles_meet_all(g: &Graph, keep: &[usize], must: &[usize]) -> bool {
    let h = g.induced(keep);
    let cycles = crate::oracle::enumerate_cycles(&h).expect("eight vertices");
    cycles.iter().filter(|c| c.len() % 2 == 1).all(|c| must.iter().all(|m| c.contains(&(*m as u32))))
}

/// Vertices lying in every splitter for `(G, ({c}, {x}))`.
fn forced(g: &Graph, c: usize, x: usize) -> u16 {
    let con = crate::Constraint::new([c as u32], [x as u32]);
    let mut meet = u16::MAX;
    for mask in 0u16..1 << 10 {
        let h = g.to_ids((0..10).filter(|&i| mask >> i & 1 == 1));
        if crate::oracle::verify_splitter(g, &con, &h).expect("valid constraint").is_valid() {
            meet &= mask;
        }
    }
    meet
}

/// Searches the lexicographically first labeling satisfying the defining
/// properties: `c` adjacent to `x`, `y`, `z`; the `a`'s form a hexagon in
/// order; odd cycles of `{a1..a6, x, c}` pass through `a1`, `x`, `a4`; and
/// every splitter for `({c}, {x})` contains `a1`, `a4`, `a5`, `a6`, which
/// together with `x` induce a five-cycle.
pub fn derive_labeling() -> Option<[u8; 10]> {
    let g = canonical();
    let mut best: Option<[u8; 10]> = None;
    let mut forced_cache = std::collections::HashMap::new();
    for c in 0..10usize {
        let nb = g.neighbors(c).to_vec();
        let rest: Vec<usize> = (0..10).filter(|&v| v != c && !nb.contains(&v)).collect();
        for &(i, j, k) in &[(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            let (x, y, z) = (nb[i], nb[j], nb[k]);
            for &start in &rest {
                for &second in g.neighbors(start).iter().filter(|w| rest.contains(w)) {
                    // walk the hexagon from `start` through `second`
                    let mut a = vec![start, second];
                    while a.len() < 6 {
                        let (p, q) = (a[a.len() - 2], a[a.len() - 1]);
                        let Some(&n) = g.neighbors(q).iter().find(|&&w| w != p && rest.contains(&w)) else { break };
                        a.push(n);
                    }
                    if a.len() != 6 || !g.adjacent(a[5], a[0]) {
                        continue;
                    }
                    let mut keep: Vec<usize> = a.clone();
                    keep.extend([x, c]);
                    keep.sort_unstable();
                    let pos = |v: usize| keep.binary_search(&v).unwrap();
                    if !odd_cycles_meet_all(g, &keep, &[pos(a[0]), pos(x), pos(a[3])]) {
                        continue;
                    }
                    let f = *forced_cache.entry((c, x)).or_insert_with(|| forced(g, c, x));
                    if [a[0], a[3], a[4], a[5]].iter().any(|&v| f >> v & 1 == 0) {
                        continue;
                    }
                    let five = g.induced(&[a[0], a[3], a[4], a[5], x]);
                    if five.m() != 5 || (0..5).any(|v| five.degree(v) != 2) {
                        continue;
                    }
                    let cand = [a[0], a[1], a[2], a[3], a[4], a[5], x, y, z, c].map(|v| v as u8);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

/// All 120 automorphisms of the canonical Petersen graph, as vertex images.
pub fn automorphisms() -> &'static [[u8; 10]] {
    static AUT: OnceLock<Vec<[u8; 10]>> = OnceLock::new();
    AUT.get_or_init(|| {
        let g = canonical();
        let mut out = Vec::new();
        let mut img = [0u8; 10];

        fn extend(g: &Graph, k: usize, img: &mut [u8; 10], used: u16, out: &mut Vec<[u8; 10]>) {
            if k == 10 {
                out.push(*img);
                return;
            }
            for t in 0..10u8 {
                if used >> t & 1 == 1 {
                    continue;
                }
                if (0..k).all(|j| g.adjacent(k, j) == g.adjacent(t as usize, img[j] as usize)) {
                    img[k] = t;
                    extend(g, k + 1, img, used | 1 << t, out);
                }
            }
        }

        extend(g, 0, &mut img, 0, &mut out);
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeling_is_rederived() {
        assert_eq!(derive_labeling(), Some(LABELING));
    }

    #[test]
    fn labeling_shape() {
        let g = canonical();
        let v = |l: Label| l.vertex() as usize;
        for l in [Label::X, Label::Y, Label::Z] {
            assert!(g.adjacent(v(Label::C), v(l)));
        }
        for i in 0..6 {
            assert!(g.adjacent(v(Label::ALL[i]), v(Label::ALL[(i + 1) % 6])));
        }
        assert!(g.adjacent(v(Label::X), v(Label::A1)) && g.adjacent(v(Label::X), v(Label::A4)));
    }

    #[test]
    fn group_order() {
        let aut = automorphisms();
        assert_eq!(aut.len(), 120);
        // arc-transitive: every ordered edge is an image of (c, x)
        let g = canonical();
        let (c, x) = (Label::C.vertex() as usize, Label::X.vertex() as usize);
        for (u, w) in g.edges() {
            for (s, t) in [(u, w), (w, u)] {
                assert!(aut.iter().any(|p| p[c] as usize == s && p[x] as usize == t));
            }
        }
    }
}
