use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unichord_core::coloring::{clique_number_via_tree, color_with, verify_coloring, ColorConfig};
use unichord_core::generate::{corpus, random_composed};
use unichord_core::graph::{Graph, VertexSet};
use unichord_core::oracle;
use unichord_core::splitter::{compute_splitter_with, f_k, SplitterConfig};
use unichord_core::Constraint;

fn checked() -> ColorConfig {
    ColorConfig { checked: true, ..ColorConfig::default() }
}

#[test]
fn corpus_colorings_are_proper_and_bounded() {
    for inst in corpus(21, 120, 60) {
        let g = &inst.graph;
        let c = color_with(g, &checked()).unwrap_or_else(|e| panic!("{e} after {:?}", inst.steps));
        verify_coloring(g, &c.assignment).unwrap();
        assert_eq!(c.omega, oracle::clique_number_exact(g).unwrap());
        assert!(c.palette_size as u64 <= f_k(3, c.omega as u64));
        for outer in &c.trace {
            let host = g.induced_subgraph(&outer.host).unwrap();
            assert!(oracle::verify_splitter(&host, &Constraint::empty(), &outer.splitter).unwrap().is_valid());
            for inner in &outer.inner {
                let h = g.induced_subgraph(&inner.host).unwrap();
                assert!(oracle::verify_splitter(&h, &Constraint::empty(), &inner.splitter).unwrap().is_valid());
                if inner.splitter.len() <= 12 {
                    assert!(oracle::is_perfect_small(&g.induced_subgraph(&inner.splitter).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn clique_number_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let target = rng.gen_range(4..50);
        let g = random_composed(&mut rng, target, 3).graph;
        assert_eq!(clique_number_via_tree(&g).unwrap(), oracle::clique_number_exact(&g).unwrap());
    }
}

fn random_constraint(rng: &mut ChaCha8Rng, g: &Graph) -> Constraint {
    let cliques = oracle::maximal_cliques(g).unwrap();
    let q: Vec<_> = cliques.choose(rng).unwrap().iter().copied().collect();
    let take = rng.gen_range(0..=q.len().min(3));
    let mut pick: Vec<_> = q.choose_multiple(rng, take).copied().collect();
    pick.shuffle(rng);
    let cut = rng.gen_range(0..=pick.len());
    Constraint::new(pick[..cut].iter().copied(), pick[cut..].iter().copied())
}

#[test]
fn every_combination_case_fires() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut seen = std::collections::BTreeMap::new();
    for _ in 0..400 {
        let target = rng.gen_range(6..40);
        let g = random_composed(&mut rng, target, 2).graph;
        for _ in 0..6 {
            let c = random_constraint(&mut rng, &g);
            for order in [2, 1] {
                let cfg = SplitterConfig { order, checked: true, ..SplitterConfig::default() };
                let r = match compute_splitter_with(&g, &c, &cfg) {
                    Ok(r) => r,
                    Err(unichord_core::Error::Internal(m)) if order == 1 && m.contains("Petersen piece") => continue,
                    Err(e) => panic!("{e}"),
                };
                assert!(oracle::verify_splitter(&g, &c, &r.splitter.members).unwrap().is_valid());
                let hk: VertexSet = r.splitter.members.union(&c.k_plus).copied().collect();
                if order == 1 && hk.len() <= 12 {
                    assert!(oracle::is_perfect_small(&g.induced_subgraph(&hk).unwrap()).unwrap());
                }
                for (k, v) in r.cases {
                    *seen.entry(k).or_insert(0usize) += v;
                }
            }
        }
    }
    for case in [
        "clique-1", "clique-2", "universal-1", "universal-2", "amalgam-1b", "amalgam-1c", "amalgam-2a",
        "amalgam-2b", "amalgam-2c", "petersen", "petersen-perfect", "chordal",
    ] {
        assert!(seen.contains_key(case), "case {case} never fired: {seen:?}");
    }
}
