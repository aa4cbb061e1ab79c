mod common;

use common::oracle::{brute_force, dfs_oracle, searched};
use octoplane::complex::k_subsets;
use octoplane::search::{adjacency_of, build_constraints, enumerate_admissible, SearchConfig};
use octoplane::PermGroup;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// `(m, d)` with at most 22 candidate facets.
const SHAPES: [(usize, usize); 8] = [(4, 1), (5, 1), (6, 1), (4, 2), (5, 2), (6, 2), (5, 3), (6, 3)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_equals_brute_force(shape in 0..SHAPES.len(), min in 1u64..12) {
        let (m, d) = SHAPES[shape];
        prop_assert_eq!(searched(m, d, min), brute_force(m, d, min));
    }
}

#[test]
fn every_shape_once() {
    for (m, d) in SHAPES {
        let want = brute_force(m, d, 1);
        assert_eq!(searched(m, d, 1), want, "({m},{d})");
    }
}

#[test]
fn seven_vertex_graphs() {
    // d = 1: solutions are disjoint unions of cycles; C(7,2) = 21 candidates
    let want = brute_force(7, 1, 5);
    assert!(want.len() > 100);
    assert_eq!(searched(7, 1, 5), want);
}

fn full_scan_groups(cat: &octoplane::search::OrbitCatalog) -> BTreeSet<Vec<u32>> {
    k_subsets(cat.m, cat.d)
        .filter_map(|rho| {
            let (once, _) = adjacency_of(cat, rho);
            (!once.is_empty()).then_some(once)
        })
        .collect()
}

#[test]
fn restricted_rho_scan_is_complete() {
    let groups = [
        PermGroup::trivial(7),
        PermGroup::generate(7, vec![octoplane::Permutation::from_cycles(7, "(1 2 3 4 5 6 7)").unwrap()]).unwrap(),
        PermGroup::generate(9, vec![octoplane::Permutation::from_cycles(9, "(1 2 3)(4 5 6)(7 8 9)").unwrap()]).unwrap(),
        octoplane::fixtures::a5_on_15(),
    ];
    for (g, d) in groups.into_iter().zip([2, 3, 4, 4]) {
        let cfg = SearchConfig::new(g.m(), d, g.clone(), 1);
        let cat = enumerate_admissible(&cfg);
        let cons = build_constraints(&cat, &g);
        let restricted: BTreeSet<Vec<u32>> = cons.groups.iter().cloned().collect();
        assert_eq!(restricted, full_scan_groups(&cat), "m = {}, d = {d}", g.m());
    }
}

#[test]
fn dfs_oracle_agrees_with_brute_force() {
    for (m, d) in SHAPES {
        for min in [1, 4, 7] {
            assert_eq!(dfs_oracle(m, d, min), brute_force(m, d, min), "({m},{d},{min})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn eight_vertex_instances(shape in 0usize..2, min in 3u64..16) {
        let (m, d) = [(8, 1), (7, 2)][shape];
        prop_assert_eq!(searched(m, d, min), dfs_oracle(m, d, min));
    }
}
