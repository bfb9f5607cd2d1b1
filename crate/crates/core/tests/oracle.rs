use std::collections::HashSet;

use wepart_core::equitability::{is_b_invariant, is_equitable, is_weight_equitable, is_weight_equitable_commute};
use wepart_core::oracle::{
    all_automorphisms, all_connected_graphs, all_partitions, enumerate_weight_equitable_with,
    find_fixed_point_free_involution, for_each_refinement, involution_to_partition, max_we_refinement,
    partition_to_involution, EnumerationBudget,
};
use wepart_core::spectral::{perron, DEFAULT_PERRON_TOL};
use wepart_core::{Graph, Partition};

const TOL: f64 = 1e-8;

fn pairings(n: usize) -> Vec<Partition> {
    all_partitions(n, &EnumerationBudget::partitions())
        .unwrap()
        .filter(|p| p.is_homogeneous(2))
        .collect()
}

#[test]
fn involutions_correspond_to_pairings() {
    for n in [4, 6, 8] {
        let pairs = pairings(n);
        for g in all_connected_graphs(n, &EnumerationBudget::graphs()).unwrap() {
            let gamma = find_fixed_point_free_involution(&g, &EnumerationBudget::involutions()).unwrap();
            let equitable: Vec<&Partition> = pairs.iter().filter(|p| is_equitable(&g, p)).collect();
            assert_eq!(gamma.is_some(), !equitable.is_empty());
            if let Some(gamma) = gamma {
                assert!(gamma.is_automorphism(&g));
                let p = involution_to_partition(&gamma).unwrap();
                assert!(is_equitable(&g, &p));
                assert_eq!(partition_to_involution(&p).unwrap(), gamma);
            }
            for p in equitable {
                let delta = partition_to_involution(p).unwrap();
                assert!(delta.is_automorphism(&g));
                assert_eq!(&involution_to_partition(&delta).unwrap(), p);
            }
        }
    }
}

#[test]
fn involution_search_agrees_with_full_group() {
    for n in [2, 4, 6] {
        for g in all_connected_graphs(n, &EnumerationBudget::graphs()).unwrap() {
            let exists = all_automorphisms(&g, &EnumerationBudget::automorphisms())
                .unwrap()
                .iter()
                .any(|a| a.is_involution() && a.fixed_points().count() == 0);
            let found = find_fixed_point_free_involution(&g, &EnumerationBudget::involutions()).unwrap();
            assert_eq!(found.is_some(), exists);
        }
    }
}

#[test]
fn automorphisms_match_brute_force() {
    // All n! permutations filtered by the definition.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    for n in 1..=6 {
        let perms = permutations(n);
        for g in all_connected_graphs(n, &EnumerationBudget::graphs()).unwrap() {
            let brute: HashSet<Vec<usize>> = perms
                .iter()
                .filter(|p| (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v]))))
                .cloned()
                .collect();
            let fast: HashSet<Vec<usize>> = all_automorphisms(&g, &EnumerationBudget::automorphisms())
                .unwrap()
                .iter()
                .map(|p| p.images().to_vec())
                .collect();
            assert_eq!(fast, brute);
        }
    }
}

#[test]
fn enumerated_partitions_pass_every_check_and_are_join_closed() {
    for n in 1..=7 {
        for g in all_connected_graphs(n, &EnumerationBudget::graphs()).unwrap() {
            let nu = perron(&g, DEFAULT_PERRON_TOL).unwrap().nu;
            let we = enumerate_weight_equitable_with(&g, &nu, TOL, &EnumerationBudget::partitions()).unwrap();
            assert!(we.contains(&Partition::trivial(n)));
            assert!(we.contains(&Partition::discrete(n)));
            let set: HashSet<&Partition> = we.iter().collect();
            for p in &we {
                assert!(is_weight_equitable_commute(&g, &nu, p, TOL).unwrap());
                assert!(is_b_invariant(&g, &nu, p, TOL).unwrap());
            }
            for (i, p) in we.iter().enumerate() {
                for q in &we[i + 1..] {
                    assert!(set.contains(&p.join(q).unwrap()));
                }
            }
        }
    }
}

#[test]
fn maximal_refinement_is_maximal() {
    let budget = EnumerationBudget::partitions();
    for n in 1..=5 {
        for g in all_connected_graphs(n, &EnumerationBudget::graphs()).unwrap() {
            let nu = perron(&g, DEFAULT_PERRON_TOL).unwrap().nu;
            for p in all_partitions(n, &budget).unwrap() {
                let best = max_we_refinement(&g, &p, TOL, &budget).unwrap();
                assert!(best.refines(&p).unwrap());
                assert!(is_weight_equitable(&g, &nu, &best, TOL).unwrap());
                for_each_refinement(&p, |q| {
                    if is_weight_equitable(&g, &nu, &q, TOL).unwrap() {
                        assert!(q.refines(&best).unwrap());
                    }
                });
                if is_weight_equitable(&g, &nu, &p, TOL).unwrap() {
                    assert_eq!(best, p);
                }
            }
        }
    }
}

#[test]
fn p4_two_cell_weight_equitable_partitions() {
    let g = Graph::path(4);
    let nu = perron(&g, DEFAULT_PERRON_TOL).unwrap().nu;
    let mut found: Vec<Partition> = enumerate_weight_equitable_with(&g, &nu, TOL, &EnumerationBudget::partitions())
        .unwrap()
        .into_iter()
        .filter(|p| p.num_cells() == 2)
        .collect();
    found.sort();
    let expected = vec![
        Partition::from_labels(&[0, 1, 0, 1]),
        Partition::from_labels(&[0, 1, 1, 0]),
    ];
    assert_eq!(found, expected);
}
