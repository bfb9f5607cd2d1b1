use std::collections::HashSet;

use proptest::prelude::*;
use wepart_core::cograph::{
    aut_generators, c_homogeneous_search, enumerate_connected_cographs, enumerate_connected_cotrees,
    has_nice_automorphism, nice_automorphism, random_cotree, two_homogeneous_partition,
};
use wepart_core::equitability::{is_equitable, is_weight_equitable};
use wepart_core::oracle::{
    all_automorphisms, all_connected_graphs, canonical_form, find_fixed_point_free_involution, group_order,
    EnumerationBudget,
};
use wepart_core::spectral::perron;
use wepart_core::{Cotree, Graph};

/// Induced P4 test straight from the definition.
fn has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if HashSet::<usize>::from_iter(vs).len() < 4 {
                        continue;
                    }
                    let path = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d);
                    let chordless = !g.has_edge(a, c) && !g.has_edge(b, d) && !g.has_edge(a, d);
                    if path && chordless {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn enumeration_matches_p4_free_filter() {
    let budget = EnumerationBudget::graphs();
    for n in 1..=8 {
        let brute: HashSet<_> = all_connected_graphs(n, &budget)
            .unwrap()
            .into_iter()
            .filter(|g| !has_induced_p4(g))
            .map(|g| canonical_form(&g))
            .collect();
        let fast: Vec<_> = enumerate_connected_cographs(n).unwrap().iter().map(canonical_form).collect();
        let fast_set: HashSet<_> = fast.iter().copied().collect();
        assert_eq!(fast.len(), fast_set.len(), "duplicates at n = {n}");
        assert_eq!(fast_set, brute, "n = {n}");
    }
}

#[test]
fn enumeration_counts() {
    let expected = [1, 1, 2, 5, 12, 33, 90, 261, 766, 2312];
    for (i, &count) in expected.iter().enumerate() {
        assert_eq!(enumerate_connected_cotrees(i + 1).unwrap().len(), count);
    }
}

#[test]
fn recognition_agrees_with_p4_filter() {
    let budget = EnumerationBudget::graphs();
    for n in 1..=6 {
        for g in all_connected_graphs(n, &budget).unwrap() {
            assert_eq!(Cotree::from_graph(&g).is_ok(), !has_induced_p4(&g));
        }
    }
}

#[test]
fn cotree_search_matches_involution_search() {
    let budget = EnumerationBudget::involutions();
    for n in 1..=10 {
        for t in enumerate_connected_cotrees(n).unwrap() {
            let g = t.reconstruct();
            let fast = has_nice_automorphism(&t);
            let brute = if n % 2 == 0 {
                find_fixed_point_free_involution(&g, &budget).unwrap().is_some()
            } else {
                false
            };
            assert_eq!(fast, brute, "{}", t.term());
            assert_eq!(c_homogeneous_search(&t, 2).unwrap(), fast);
        }
    }
}

#[test]
fn generators_generate_the_full_group() {
    let budget = EnumerationBudget::automorphisms();
    for n in 1..=8 {
        for t in enumerate_connected_cotrees(n).unwrap() {
            let g = t.reconstruct();
            let gens = aut_generators(&t);
            assert!(gens.iter().all(|p| p.is_automorphism(&g)));
            let brute = all_automorphisms(&g, &budget).unwrap().len();
            assert_eq!(group_order(n, &gens), brute, "{}", t.term());
        }
    }
}

#[test]
fn eight_leaf_group_order() {
    let t = Cotree::parse_term("1(0(1(· ·) ·) 0(1(· ·) ·) 0(· ·))").unwrap();
    let g = t.reconstruct();
    let brute = all_automorphisms(&g, &EnumerationBudget::automorphisms()).unwrap().len();
    assert_eq!(group_order(8, &aut_generators(&t)), brute);
    assert_eq!(brute, 16);
}

#[test]
fn two_homogeneous_partitions_are_equitable() {
    for n in [2, 4, 6, 8, 10] {
        for g in enumerate_connected_cographs(n).unwrap() {
            if let Some(p) = two_homogeneous_partition(&g).unwrap() {
                assert!(p.is_homogeneous(2));
                assert!(is_equitable(&g, &p));
                let nu = perron(&g, 1e-12).unwrap().nu;
                assert!(is_weight_equitable(&g, &nu, &p, 1e-8).unwrap());
            }
        }
    }
}

#[test]
fn c_homogeneous_true_answers_have_equitable_witnesses() {
    // For c = 3 every true answer on small cographs is backed by an
    // equitable partition into cells of size 3, found by brute force.
    use wepart_core::oracle::all_partitions;
    for n in [3, 6] {
        for t in enumerate_connected_cotrees(n).unwrap() {
            if c_homogeneous_search(&t, 3).unwrap() {
                let g = t.reconstruct();
                let witness = all_partitions(n, &EnumerationBudget::partitions())
                    .unwrap()
                    .any(|p| p.is_homogeneous(3) && is_equitable(&g, &p));
                assert!(witness, "{}", t.term());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_cotree_round_trip(n in 1usize..60, seed in any::<u64>()) {
        let t = random_cotree(n, seed).unwrap();
        let g = t.reconstruct();
        prop_assert!(g.is_connected());
        let rebuilt = Cotree::from_graph(&g).unwrap();
        prop_assert_eq!(rebuilt.reconstruct(), g.clone());
        prop_assert_eq!(rebuilt.term(), t.term());
        // Relabeling vertices leaves the canonical term unchanged.
        let perm: Vec<usize> = (0..n).rev().collect();
        prop_assert_eq!(Cotree::from_graph(&g.relabel(&perm)).unwrap().term(), t.term());
    }

    #[test]
    fn nice_automorphisms_are_valid(n in 2usize..40, seed in any::<u64>()) {
        let t = random_cotree(n, seed).unwrap();
        let g = t.reconstruct();
        match nice_automorphism(&t) {
            Ok(gamma) => {
                prop_assert!(has_nice_automorphism(&t));
                prop_assert!(gamma.is_involution());
                prop_assert_eq!(gamma.fixed_points().count(), 0);
                prop_assert!(gamma.is_automorphism(&g));
            }
            Err(_) => prop_assert!(!has_nice_automorphism(&t)),
        }
    }

    #[test]
    fn term_parse_round_trip(n in 1usize..40, seed in any::<u64>()) {
        let t = random_cotree(n, seed).unwrap();
        let parsed = Cotree::parse_term(&t.term()).unwrap();
        prop_assert_eq!(parsed.term(), t.term());
        prop_assert_eq!(canonical_form_or_skip(&parsed.reconstruct()), canonical_form_or_skip(&t.reconstruct()));
    }
}

fn canonical_form_or_skip(g: &Graph) -> Option<(usize, u64)> {
    (g.n() <= 8).then(|| canonical_form(g))
}
