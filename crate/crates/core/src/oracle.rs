//! Brute-force ground truth for small graphs.
//!
//! Everything here is exponential. Size limits are checked before any work
//! starts and can be raised through [`EnumerationBudget`].

use std::collections::{HashMap, HashSet};

use crate::equitability::is_weight_equitable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{join_all, Partition};
use crate::perm::Permutation;
use crate::spectral::{perron, DEFAULT_PERRON_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest vertex count accepted.
    pub max_n: usize,
    /// Largest number of objects an enumeration may produce.
    pub max_count: u128,
}

impl EnumerationBudget {
    pub const DEFAULT_MAX_COUNT: u128 = 50_000_000;

    pub fn partitions() -> Self {
        EnumerationBudget {
            max_n: 12,
            max_count: Self::DEFAULT_MAX_COUNT,
        }
    }

    pub fn automorphisms() -> Self {
        EnumerationBudget {
            max_n: 8,
            max_count: Self::DEFAULT_MAX_COUNT,
        }
    }

    pub fn involutions() -> Self {
        EnumerationBudget {
            max_n: 12,
            max_count: Self::DEFAULT_MAX_COUNT,
        }
    }

    pub fn graphs() -> Self {
        EnumerationBudget {
            max_n: 8,
            max_count: Self::DEFAULT_MAX_COUNT,
        }
    }

    fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::TooLarge {
                what,
                n,
                limit: self.max_n,
            });
        }
        Ok(())
    }

    fn check_count(&self, what: &'static str, count: u128) -> Result<()> {
        if count > self.max_count {
            return Err(Error::TooLarge {
                what,
                n: count.min(usize::MAX as u128) as usize,
                limit: self.max_count.min(usize::MAX as u128) as usize,
            });
        }
        Ok(())
    }
}

/// Bell number `B(n)`.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// All set partitions of `n` elements via restricted growth strings.
pub struct AllPartitions {
    labels: Vec<usize>,
    /// `maxes[i] = max(labels[..i])`, with `maxes[0]` unused.
    maxes: Vec<usize>,
    done: bool,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_labels(&self.labels);
        let n = self.labels.len();
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.maxes[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.maxes[j] = self.maxes[j - 1].max(self.labels[j - 1]);
                    self.labels[j] = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

pub fn all_partitions(n: usize, budget: &EnumerationBudget) -> Result<AllPartitions> {
    budget.check("partition enumeration", n)?;
    budget.check_count("partition enumeration", bell(n))?;
    Ok(AllPartitions {
        labels: vec![0; n],
        maxes: vec![0; n],
        done: n == 0,
    })
}

/// Calls `f` on every partition refining `p`.
pub fn for_each_refinement(p: &Partition, mut f: impl FnMut(Partition)) {
    let n = p.len();
    let mut labels = vec![0usize; n];
    let mut block_cell: Vec<usize> = Vec::new();
    fn go(
        v: usize,
        p: &Partition,
        labels: &mut [usize],
        block_cell: &mut Vec<usize>,
        f: &mut dyn FnMut(Partition),
    ) {
        if v == labels.len() {
            f(Partition::from_labels(labels));
            return;
        }
        let cell = p.cell_of(v);
        for b in 0..block_cell.len() {
            if block_cell[b] == cell {
                labels[v] = b;
                go(v + 1, p, labels, block_cell, f);
            }
        }
        labels[v] = block_cell.len();
        block_cell.push(cell);
        go(v + 1, p, labels, block_cell, f);
        block_cell.pop();
    }
    if n > 0 {
        go(0, p, &mut labels, &mut block_cell, &mut f);
    }
}

/// Every weight-equitable partition of a connected graph, in
/// restricted-growth order.
pub fn enumerate_weight_equitable(g: &Graph, tol: f64, budget: &EnumerationBudget) -> Result<Vec<Partition>> {
    budget.check("partition enumeration", g.n())?;
    let pd = perron(g, DEFAULT_PERRON_TOL)?;
    enumerate_weight_equitable_with(g, &pd.nu, tol, budget)
}

/// As [`enumerate_weight_equitable`] with a precomputed Perron vector.
pub fn enumerate_weight_equitable_with(
    g: &Graph,
    nu: &[f64],
    tol: f64,
    budget: &EnumerationBudget,
) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in all_partitions(g.n(), budget)? {
        if is_weight_equitable(g, nu, &p, tol)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Join of all weight-equitable partitions refining `p`. The discrete
/// partition always qualifies, so the result exists and is itself
/// weight-equitable.
pub fn max_we_refinement(g: &Graph, p: &Partition, tol: f64, budget: &EnumerationBudget) -> Result<Partition> {
    if p.len() != g.n() {
        return Err(Error::GroundSetMismatch(g.n(), p.len()));
    }
    budget.check("partition enumeration", g.n())?;
    let count: u128 = p.cells().iter().map(|c| bell(c.len())).product();
    budget.check_count("partition enumeration", count)?;
    let pd = perron(g, DEFAULT_PERRON_TOL)?;
    let mut found = Vec::new();
    let mut failure = None;
    for_each_refinement(p, |q| match is_weight_equitable(g, &pd.nu, &q, tol) {
        Ok(true) => found.push(q),
        Ok(false) => {}
        Err(e) => failure = Some(e),
    });
    if let Some(e) = failure {
        return Err(e);
    }
    join_all(g.n(), &found)
}

/// The full automorphism group by backtracking. Candidates for each vertex
/// must share its degree and agree on adjacency with all earlier vertices.
pub fn all_automorphisms(g: &Graph, budget: &EnumerationBudget) -> Result<Vec<Permutation>> {
    let n = g.n();
    budget.check("automorphism enumeration", n)?;
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, v: usize, images: &mut [usize], used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = g.n();
        if v == n {
            out.push(Permutation::new(images.to_vec()).expect("bijection"));
            return;
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(images[u], w)) {
                continue;
            }
            images[v] = w;
            used[w] = true;
            go(g, v + 1, images, used, out);
            used[w] = false;
        }
        images[v] = usize::MAX;
    }
    go(g, 0, &mut images, &mut used, &mut out);
    Ok(out)
}

/// A fixed-point-free involutive automorphism, found by pairing the
/// smallest unpaired vertex with each compatible partner in turn.
pub fn find_fixed_point_free_involution(g: &Graph, budget: &EnumerationBudget) -> Result<Option<Permutation>> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    budget.check("involution search", n)?;
    // Each degree class is a union of pairs.
    let mut degree_counts: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        *degree_counts.entry(g.degree(v)).or_default() += 1;
    }
    if degree_counts.values().any(|c| c % 2 == 1) {
        return Ok(None);
    }
    let mut images = vec![usize::MAX; n];
    let mut assigned = Vec::with_capacity(n);
    fn go(g: &Graph, images: &mut [usize], assigned: &mut Vec<usize>) -> bool {
        let Some(v) = (0..g.n()).find(|&v| images[v] == usize::MAX) else {
            return true;
        };
        for w in v + 1..g.n() {
            if images[w] != usize::MAX || g.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = assigned
                .iter()
                .all(|&x| g.has_edge(v, x) == g.has_edge(w, images[x]) && g.has_edge(w, x) == g.has_edge(v, images[x]));
            if !consistent {
                continue;
            }
            images[v] = w;
            images[w] = v;
            assigned.push(v);
            assigned.push(w);
            if go(g, images, assigned) {
                return true;
            }
            assigned.truncate(assigned.len() - 2);
            images[v] = usize::MAX;
            images[w] = usize::MAX;
        }
        false
    }
    if go(g, &mut images, &mut assigned) {
        Ok(Some(Permutation::new(images).expect("pairing is a bijection")))
    } else {
        Ok(None)
    }
}

/// Orbits `{u, γ(u)}` of a fixed-point-free involution.
pub fn involution_to_partition(gamma: &Permutation) -> Result<Partition> {
    if !gamma.is_involution() {
        return Err(Error::NotInvolution);
    }
    if let Some(v) = gamma.fixed_points().next() {
        return Err(Error::HasFixedPoint(v + 1));
    }
    let labels: Vec<usize> = (0..gamma.len()).map(|v| v.min(gamma.apply(v))).collect();
    Ok(Partition::from_labels(&labels))
}

/// The product of the transpositions given by the cells of a 2-homogeneous
/// partition.
pub fn partition_to_involution(p: &Partition) -> Result<Permutation> {
    if !p.is_homogeneous(2) {
        return Err(Error::NotTwoHomogeneous);
    }
    let pairs: Vec<(usize, usize)> = p.cells().iter().map(|c| (c[0], c[1])).collect();
    Permutation::from_pairs(p.len(), &pairs)
}

/// Order of the group generated by `generators` acting on `n` points, by
/// closing the identity under right multiplication.
pub fn group_order(n: usize, generators: &[Permutation]) -> usize {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

/// Isomorphism-invariant vertex coloring by color refinement. Colors are
/// ranks of `(old color, sorted neighbor colors)` signatures, so they do not
/// depend on vertex numbering.
pub fn invariant_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut classes = if n == 0 { 0 } else { 1 };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<usize> = g.neighbors(u).iter().map(|&v| colors[v]).collect();
                nb.sort_unstable();
                (colors[u], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        let count = distinct.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Canonical form for graphs on at most 11 vertices: the largest upper
/// triangle bitstring over all orderings that list vertices by invariant
/// color. Two graphs are isomorphic iff their forms are equal.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11, "canonical_form supports at most 11 vertices");
    let colors = invariant_coloring(g);
    let classes = colors.iter().max().map_or(0, |m| m + 1);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for v in 0..n {
        groups[colors[v]].push(v);
    }
    let mut order = Vec::with_capacity(n);
    let mut best = 0u64;
    fn go(g: &Graph, groups: &mut [Vec<usize>], gi: usize, order: &mut Vec<usize>, best: &mut u64) {
        if gi == groups.len() {
            let n = order.len();
            let mut bits = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    bits = (bits << 1) | g.has_edge(order[i], order[j]) as u64;
                }
            }
            *best = (*best).max(bits);
            return;
        }
        if groups[gi].is_empty() {
            go(g, groups, gi + 1, order, best);
            return;
        }
        for k in 0..groups[gi].len() {
            let v = groups[gi].swap_remove(k);
            order.push(v);
            go(g, groups, gi, order, best);
            order.pop();
            groups[gi].push(v);
            let last = groups[gi].len() - 1;
            groups[gi].swap(k, last);
        }
    }
    go(g, &mut groups, 0, &mut order, &mut best);
    (n, best)
}

/// One graph per isomorphism class on `n` vertices, built by adding a
/// vertex to every class on `n - 1` vertices in every possible way.
pub fn all_graphs(n: usize, budget: &EnumerationBudget) -> Result<Vec<Graph>> {
    budget.check("graph enumeration", n)?;
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1u32 << (m - 1)) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend((0..m - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, m - 1)));
                let h = Graph::from_edges(m, &edges).expect("valid extension");
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn all_connected_graphs(n: usize, budget: &EnumerationBudget) -> Result<Vec<Graph>> {
    Ok(all_graphs(n, budget)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::format_partition;

    #[test]
    fn bell_numbers() {
        let expected = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell(n), b);
            if n > 0 {
                let parts: Vec<Partition> = all_partitions(n, &EnumerationBudget::partitions()).unwrap().collect();
                assert_eq!(parts.len() as u128, b);
                let distinct: HashSet<Vec<usize>> = parts.iter().map(|p| p.assignment().to_vec()).collect();
                assert_eq!(distinct.len() as u128, b);
            }
        }
        assert!(matches!(
            all_partitions(13, &EnumerationBudget::partitions()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn refinements_count() {
        let p = Partition::from_labels(&[0, 0, 0, 1, 1]);
        let mut count = 0;
        for_each_refinement(&p, |q| {
            assert!(q.refines(&p).unwrap());
            count += 1;
        });
        assert_eq!(count, 5 * 2);
    }

    #[test]
    fn p4_two_cell_partitions() {
        let we = enumerate_weight_equitable(&Graph::path(4), 1e-8, &EnumerationBudget::partitions()).unwrap();
        let two: Vec<String> = we.iter().filter(|p| p.num_cells() == 2).map(format_partition).collect();
        assert_eq!(two.len(), 2);
        assert!(we.contains(&Partition::trivial(4)));
    }

    #[test]
    fn k3_everything_is_weight_equitable() {
        let we = enumerate_weight_equitable(&Graph::complete(3), 1e-8, &EnumerationBudget::partitions()).unwrap();
        assert_eq!(we.len(), 5);
    }

    #[test]
    fn automorphism_groups() {
        let b = EnumerationBudget::automorphisms();
        assert_eq!(all_automorphisms(&Graph::complete(3), &b).unwrap().len(), 6);
        let p4: Vec<String> = all_automorphisms(&Graph::path(4), &b)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(p4, vec!["()", "(1 4)(2 3)"]);
        assert_eq!(all_automorphisms(&Graph::cycle(4), &b).unwrap().len(), 8);
        assert!(matches!(all_automorphisms(&Graph::empty(9), &b), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn involution_search() {
        let b = EnumerationBudget::involutions();
        assert_eq!(
            find_fixed_point_free_involution(&Graph::complete(2), &b).unwrap().unwrap().to_string(),
            "(1 2)"
        );
        assert_eq!(find_fixed_point_free_involution(&Graph::star(3), &b).unwrap(), None);
        assert_eq!(find_fixed_point_free_involution(&Graph::path(3), &b), Err(Error::OddOrder(3)));
        let spider = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 4), (2, 5)]).unwrap();
        let found = find_fixed_point_free_involution(&spider, &b).unwrap();
        let exists = all_automorphisms(&spider, &EnumerationBudget::automorphisms())
            .unwrap()
            .iter()
            .any(|a| a.is_involution() && a.fixed_points().count() == 0);
        assert_eq!(found.is_some(), exists);
    }

    #[test]
    fn involution_partition_bijection() {
        let gamma = Permutation::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let p = involution_to_partition(&gamma).unwrap();
        assert_eq!(p, Partition::from_labels(&[0, 0, 1, 1]));
        assert_eq!(partition_to_involution(&p).unwrap(), gamma);
        let q = Partition::from_labels(&[0, 1, 0, 1]);
        let delta = partition_to_involution(&q).unwrap();
        assert_eq!(delta.to_string(), "(1 3)(2 4)");
        assert_eq!(involution_to_partition(&delta).unwrap(), q);
        assert_eq!(involution_to_partition(&Permutation::identity(2)), Err(Error::HasFixedPoint(1)));
        let three_cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(involution_to_partition(&three_cycle), Err(Error::NotInvolution));
        assert_eq!(partition_to_involution(&Partition::trivial(3)), Err(Error::NotTwoHomogeneous));
    }

    #[test]
    fn max_refinement() {
        let b = EnumerationBudget::partitions();
        let p4 = Graph::path(4);
        let mirror = Partition::from_labels(&[0, 1, 1, 0]);
        assert_eq!(max_we_refinement(&p4, &mirror, 1e-8, &b).unwrap(), mirror);
        let discrete = Partition::discrete(4);
        assert_eq!(max_we_refinement(&p4, &discrete, 1e-8, &b).unwrap(), discrete);
        // {V} of P4 is weight-equitable, hence its own maximal refinement.
        let trivial = Partition::trivial(4);
        assert_eq!(max_we_refinement(&p4, &trivial, 1e-8, &b).unwrap(), trivial);
        // {1,2},{3,4}: only the discrete partition refines it weight-equitably.
        let halves = Partition::from_labels(&[0, 0, 1, 1]);
        assert_eq!(max_we_refinement(&p4, &halves, 1e-8, &b).unwrap(), discrete);
    }

    #[test]
    fn graph_counts() {
        // Graphs and connected graphs on n vertices, up to isomorphism.
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        let b = EnumerationBudget::graphs();
        for n in 1..=6 {
            assert_eq!(all_graphs(n, &b).unwrap().len(), all[n - 1]);
            assert_eq!(all_connected_graphs(n, &b).unwrap().len(), connected[n - 1]);
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&g), canonical_form(&Graph::path(5)));
    }

    #[test]
    fn generated_group_orders() {
        let gens = vec![
            Permutation::new(vec![1, 0, 2]).unwrap(),
            Permutation::new(vec![0, 2, 1]).unwrap(),
        ];
        assert_eq!(group_order(3, &gens), 6);
        assert_eq!(group_order(3, &[]), 1);
    }
}
