use unichord_core::canon::connected_graphs;
use unichord_core::decomp::{find_amalgam, find_cutvertex, find_one_join, find_universal_vertices, Split};
use unichord_core::graph::{Graph, VertexSet};

/// Every assignment of vertices to X1, X2, K; A_i is the part of X_i with a
/// neighbor on the other side.
fn brute_amalgam(g: &Graph, allow_k: bool) -> Option<Split> {
    let n = g.n();
    let parts = if allow_k { 3usize } else { 2 };
    for mut code in 0..parts.pow(n as u32) {
        let mut side = vec![0; n];
        for s in side.iter_mut() {
            *s = code % parts;
            code /= parts;
        }
        let pick = |p: usize| -> VertexSet { (0..n).filter(|&i| side[i] == p).map(|i| g.id(i)).collect() };
        let across = |p: usize| -> VertexSet {
            (0..n)
                .filter(|&i| side[i] == p && g.neighbors(i).iter().any(|&j| side[j] == 1 - p))
                .map(|i| g.id(i))
                .collect()
        };
        let s = Split::Amalgam { x1: pick(0), x2: pick(1), a1: across(0), a2: across(1), k: pick(2) };
        if s.validate(g).is_ok() {
            return Some(s);
        }
    }
    None
}

fn candidates() -> Vec<Graph> {
    (4..=7)
        .flat_map(connected_graphs)
        .filter(|g| find_universal_vertices(g).is_empty() && find_cutvertex(g).unwrap().is_none())
        .collect()
}

#[test]
fn amalgam_finder_matches_brute_force() {
    let mut found = 0;
    for g in candidates() {
        let fast = find_amalgam(&g).unwrap();
        let slow = brute_amalgam(&g, true);
        assert_eq!(fast.is_some(), slow.is_some(), "edges {:?}", g.edges().collect::<Vec<_>>());
        if let Some(s) = fast {
            s.validate(&g).unwrap();
            found += 1;
        }
    }
    assert!(found > 0);
}

#[test]
fn one_join_finder_matches_brute_force() {
    for g in candidates() {
        let fast = find_one_join(&g).unwrap();
        assert_eq!(fast.is_some(), brute_amalgam(&g, false).is_some(), "edges {:?}", g.edges().collect::<Vec<_>>());
        if let Some(s) = fast {
            s.validate(&g).unwrap();
            assert!(matches!(&s, Split::Amalgam { k, .. } if k.is_empty()));
        }
    }
}
