//! Inputs shared by the benchmarks.

use wepart_core::cograph::random_cotree;
use wepart_core::spectral::{perron, DEFAULT_PERRON_TOL};
use wepart_core::{Cotree, Graph, Partition};

/// A connected random cograph on `n` vertices.
pub fn cograph(n: usize, seed: u64) -> Graph {
    random_cotree(n, seed).expect("n > 0").reconstruct()
}

/// A cotree on `4 * quarter` leaves with a nice automorphism, shaped
/// `(H ∪ H) ⊕ (K ∪ K)` for random connected cographs `H` and `K`, so the
/// search recurses below the root before succeeding.
pub fn positive_cotree(quarter: usize, seed: u64) -> Cotree {
    let h = cograph(quarter, seed);
    let k = cograph(quarter, seed + 1);
    let doubled = |g: &Graph| g.disjoint_union(g).0;
    let joined = doubled(&h).complement().disjoint_union(&doubled(&k).complement()).0.complement();
    Cotree::from_graph(&joined).expect("joins and unions of cographs are cographs")
}

/// A graph with its Perron vector and a weight-equitable partition (the
/// orbit pairs of the cograph's nice automorphism when there is one,
/// otherwise the coarsest equitable partition).
pub fn we_instance(n: usize, seed: u64) -> (Graph, Vec<f64>, Partition) {
    let g = cograph(n, seed);
    let nu = perron(&g, DEFAULT_PERRON_TOL).expect("connected").nu;
    let p = wepart_core::cograph::two_homogeneous_partition(&g)
        .ok()
        .flatten()
        .unwrap_or_else(|| wepart_core::equitability::coarsest_equitable(&g));
    (g, nu, p)
}

/// The cycle `C_n` with chords `i ~ i + n/2`, a regular test graph.
pub fn prism(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
    Graph::from_edges(n, &edges).expect("valid edges")
}
