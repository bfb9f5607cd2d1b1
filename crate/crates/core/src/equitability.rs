//! Equitability and weight-equitability tests.
//!
//! The direct check on weight-intersection numbers is the decision
//! procedure. The commutator test (`AX = XA` for the weighted projector) and
//! the invariance test for the operator `(Bf)(u) = Σ_{v~u} (ν_v/ν_u) f(v)`
//! are equivalent characterizations kept as cross-checks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::spectral::PerronData;
use crate::weighted::WeightedView;

/// Absolute tolerance on deviations of weight-intersection numbers.
pub const DEFAULT_WE_TOL: f64 = 1e-8;

/// Entries of `X` at or below this magnitude are outside its support.
pub const SUPPORT_THRESHOLD: f64 = 1e-12;

/// Weight-intersection numbers `b*_ij(u)` of every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionTable {
    /// n×m: row `u` holds `b*_{cell(u), j}(u)` for each cell `j`.
    pub per_vertex: Matrix,
    /// m×m matrix of `b*_ij`, present when the partition is weight-equitable.
    /// Entries are cell averages.
    pub constants: Option<Matrix>,
    pub is_we: bool,
    /// Largest within-cell spread `max_u b*_ij(u) - min_u b*_ij(u)`.
    pub max_deviation: f64,
}

impl IntersectionTable {
    pub fn compute(g: &Graph, nu: &[f64], p: &Partition, tol: f64) -> Result<Self> {
        check_dims(g, nu, p)?;
        let (n, m) = (g.n(), p.num_cells());
        let mut per_vertex = Matrix::zeros(n, m);
        for u in 0..n {
            for &v in g.neighbors(u) {
                per_vertex[(u, p.cell_of(v))] += nu[v];
            }
            for j in 0..m {
                per_vertex[(u, j)] /= nu[u];
            }
        }
        let mut max_deviation: f64 = 0.0;
        let mut means = Matrix::zeros(m, m);
        for (i, cell) in p.cells().iter().enumerate() {
            for j in 0..m {
                let (mut lo, mut hi, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
                for &u in cell {
                    let b = per_vertex[(u, j)];
                    lo = lo.min(b);
                    hi = hi.max(b);
                    sum += b;
                }
                max_deviation = max_deviation.max(hi - lo);
                means[(i, j)] = sum / cell.len() as f64;
            }
        }
        let is_we = max_deviation <= tol;
        Ok(IntersectionTable {
            per_vertex,
            constants: is_we.then_some(means),
            is_we,
            max_deviation,
        })
    }
}

fn check_dims(g: &Graph, nu: &[f64], p: &Partition) -> Result<()> {
    for found in [nu.len(), p.len()] {
        if found != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found,
            });
        }
    }
    Ok(())
}

/// Intersection table decided at [`DEFAULT_WE_TOL`].
pub fn weight_intersection_numbers(g: &Graph, nu: &[f64], p: &Partition) -> Result<IntersectionTable> {
    IntersectionTable::compute(g, nu, p, DEFAULT_WE_TOL)
}

/// True iff every `b*_ij(u)` is independent of `u ∈ V_i` within `tol`.
pub fn is_weight_equitable(g: &Graph, nu: &[f64], p: &Partition, tol: f64) -> Result<bool> {
    Ok(IntersectionTable::compute(g, nu, p, tol)?.max_deviation <= tol)
}

/// Largest entry of `AX - XA` for the weighted projector `X` of `p`.
pub fn commutator_norm(g: &Graph, nu: &[f64], p: &Partition) -> Result<f64> {
    let view = WeightedView::build(g, nu, p)?;
    Ok(g.adjacency_matrix().commutator_norm(&view.x))
}

pub fn is_weight_equitable_commute(g: &Graph, nu: &[f64], p: &Partition, tol: f64) -> Result<bool> {
    Ok(commutator_norm(g, nu, p)? <= tol)
}

/// Exact check that neighbor counts into each cell are constant on cells.
///
/// Panics if `p` is not a partition of the vertex set of `g`.
pub fn is_equitable(g: &Graph, p: &Partition) -> bool {
    assert_eq!(g.n(), p.len(), "partition ground set differs from graph");
    let m = p.num_cells();
    let mut reference = vec![0usize; m];
    let mut counts = vec![0usize; m];
    for cell in p.cells() {
        for (k, &u) in cell.iter().enumerate() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &v in g.neighbors(u) {
                counts[p.cell_of(v)] += 1;
            }
            if k == 0 {
                reference.copy_from_slice(&counts);
            } else if counts != reference {
                return false;
            }
        }
    }
    true
}

/// True iff `max ν - min ν ≤ tol` inside every cell.
pub fn perron_constant_on_cells(nu: &[f64], p: &Partition, tol: f64) -> bool {
    p.cells().iter().all(|cell| {
        let (lo, hi) = cell
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &u| (lo.min(nu[u]), hi.max(nu[u])));
        hi - lo <= tol
    })
}

/// `‖B̄*x - λ1 x‖∞` with `x = (‖ρ(V_1)‖, …, ‖ρ(V_m)‖)`.
pub fn quotient_eigen_residual(g: &Graph, perron: &PerronData, p: &Partition) -> Result<f64> {
    let view = WeightedView::build(g, &perron.nu, p)?;
    let bx = view.b_bar.mul_vec(&view.cell_norms);
    Ok(bx
        .iter()
        .zip(&view.cell_norms)
        .fold(0.0f64, |m, (a, x)| m.max((a - perron.lambda1 * x).abs())))
}

/// Whether the vector of cell norms is a `λ1`-eigenvector of `B̄*`. Row `i`
/// of `B̃*` sums to `λ1‖ρ(V_i)‖²`, so this holds for every partition up to
/// rounding; it mainly guards the weighted matrices.
pub fn quotient_eigen_check(g: &Graph, perron: &PerronData, p: &Partition, tol: f64) -> Result<bool> {
    Ok(quotient_eigen_residual(g, perron, p)? <= tol)
}

/// Strongly connected components of the support digraph of `x`
/// (`u → v` iff `|x_uv| > SUPPORT_THRESHOLD`).
pub fn scc_partition(x: &Matrix) -> Result<Partition> {
    if !x.is_square() {
        return Err(Error::NotSquare(x.rows(), x.cols()));
    }
    let n = x.rows();
    for i in 0..n {
        for j in 0..n {
            if x[(i, j)] < 0.0 {
                return Err(Error::NegativeEntry(i + 1, j + 1));
            }
        }
    }
    let out: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| x[(i, j)] > SUPPORT_THRESHOLD).collect())
        .collect();
    let mut rev = vec![Vec::new(); n];
    for (i, list) in out.iter().enumerate() {
        for &j in list {
            rev[j].push(i);
        }
    }
    // Kosaraju: finishing order on the digraph, then sweep the reverse.
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if visited[s] {
            continue;
        }
        visited[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((u, next)) = stack.pop() {
            if let Some(&v) = out[u].get(next) {
                stack.push((u, next + 1));
                if !visited[v] {
                    visited[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
            }
        }
    }
    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    for &s in order.iter().rev() {
        if component[s] != usize::MAX {
            continue;
        }
        component[s] = count;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &rev[u] {
                if component[v] == usize::MAX {
                    component[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    Ok(Partition::from_labels(&component))
}

/// `(Bf)(u) = Σ_{v~u} (ν_v / ν_u) f(v)`.
pub fn b_operator(g: &Graph, nu: &[f64], f: &[f64]) -> Result<Vec<f64>> {
    for found in [nu.len(), f.len()] {
        if found != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found,
            });
        }
    }
    Ok((0..g.n())
        .map(|u| g.neighbors(u).iter().map(|&v| nu[v] * f[v]).sum::<f64>() / nu[u])
        .collect())
}

/// True iff the image of every cell indicator under `B` is constant on each
/// cell, within `tol`.
pub fn is_b_invariant(g: &Graph, nu: &[f64], p: &Partition, tol: f64) -> Result<bool> {
    check_dims(g, nu, p)?;
    for j in 0..p.num_cells() {
        let indicator: Vec<f64> = (0..g.n())
            .map(|u| if p.cell_of(u) == j { 1.0 } else { 0.0 })
            .collect();
        let image = b_operator(g, nu, &indicator)?;
        if !perron_constant_on_cells(&image, p, tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coarsest equitable partition by color refinement from `{V}`: each round
/// splits cells by the multiset of neighbor colors until stable.
pub fn coarsest_equitable(g: &Graph) -> Partition {
    refine_equitable(g, &Partition::trivial(g.n()))
}

/// Coarsest equitable partition refining `start`.
pub fn refine_equitable(g: &Graph, start: &Partition) -> Partition {
    let mut current = start.clone();
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let labels: Vec<usize> = (0..g.n())
            .map(|u| {
                let mut signature: Vec<usize> = g.neighbors(u).iter().map(|&v| current.cell_of(v)).collect();
                signature.sort_unstable();
                let next = ids.len();
                *ids.entry((current.cell_of(u), signature)).or_insert(next)
            })
            .collect();
        let next = Partition::from_labels(&labels);
        if next.num_cells() == current.num_cells() {
            return next;
        }
        current = next;
    }
}
