//! Perron-weighted matrices of a partition.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::partition::Partition;

/// The weighted matrices of `(G, ν, P)`.
///
/// With `m` cells and `n` vertices:
/// - `cell_norms[i] = ‖ρ(V_i)‖ = sqrt(Σ_{u∈V_i} ν_u²)`, the diagonal of `D`;
/// - `s_tilde` (n×m) has `ν_u` at `(u, cell(u))`;
/// - `s_bar = s_tilde · D⁻¹` has orthonormal columns;
/// - `b_tilde = s_tildeᵀ A s_tilde`, i.e. `Σ_{u∈V_i, v∈V_j, u~v} ν_u ν_v`;
/// - `b_bar = D⁻¹ b_tilde D⁻¹`;
/// - `x = s_bar s_barᵀ`, the orthogonal projector onto weighted cell vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedView {
    pub cell_norms: Vec<f64>,
    pub s_tilde: Matrix,
    pub s_bar: Matrix,
    pub b_tilde: Matrix,
    pub b_bar: Matrix,
    pub x: Matrix,
}

impl WeightedView {
    pub fn build(g: &Graph, nu: &[f64], p: &Partition) -> Result<Self> {
        let n = g.n();
        for found in [nu.len(), p.len()] {
            if found != n {
                return Err(Error::DimensionMismatch { expected: n, found });
            }
        }
        let m = p.num_cells();
        let cell_norms: Vec<f64> = p
            .cells()
            .iter()
            .map(|cell| cell.iter().map(|&u| nu[u] * nu[u]).sum::<f64>().sqrt())
            .collect();

        let mut s_tilde = Matrix::zeros(n, m);
        let mut s_bar = Matrix::zeros(n, m);
        for u in 0..n {
            let c = p.cell_of(u);
            s_tilde[(u, c)] = nu[u];
            s_bar[(u, c)] = nu[u] / cell_norms[c];
        }

        let mut b_tilde = Matrix::zeros(m, m);
        for (u, v) in g.edges() {
            let w = nu[u] * nu[v];
            let (cu, cv) = (p.cell_of(u), p.cell_of(v));
            b_tilde[(cu, cv)] += w;
            b_tilde[(cv, cu)] += w;
        }
        let b_bar = Matrix::from_fn(m, m, |i, j| b_tilde[(i, j)] / (cell_norms[i] * cell_norms[j]));

        let x = Matrix::from_fn(n, n, |u, v| {
            let c = p.cell_of(u);
            if c == p.cell_of(v) {
                nu[u] * nu[v] / (cell_norms[c] * cell_norms[c])
            } else {
                0.0
            }
        });

        Ok(WeightedView {
            cell_norms,
            s_tilde,
            s_bar,
            b_tilde,
            b_bar,
            x,
        })
    }

    pub fn num_cells(&self) -> usize {
        self.cell_norms.len()
    }

    /// `D = diag(‖ρ(V_1)‖, …, ‖ρ(V_m)‖)`.
    pub fn d(&self) -> Matrix {
        Matrix::diagonal(&self.cell_norms)
    }
}
