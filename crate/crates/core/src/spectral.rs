//! Perron eigenvector and spectral radii.
//!
//! Both routines run power iteration on `M + I` rather than `M`. For a
//! nonnegative symmetric `M` every eigenvalue lies in `[-λ1, λ1]`, so the
//! shift makes `λ1 + 1` strictly dominant and bipartite inputs (where `-λ1`
//! is also an eigenvalue) converge instead of oscillating.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;

pub const DEFAULT_PERRON_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius and positive eigenvector of a connected graph, with the
/// eigenvector scaled so that its smallest entry is exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronData {
    pub lambda1: f64,
    pub nu: Vec<f64>,
    /// `‖Aν - λ1ν‖∞` at termination.
    pub residual: f64,
}

impl PerronData {
    pub fn n(&self) -> usize {
        self.nu.len()
    }

    /// Stacks the data of two graphs with the same spectral radius, as used
    /// for a disjoint union. Each block keeps its own scaling.
    pub fn concat(&self, other: &PerronData) -> PerronData {
        let mut nu = self.nu.clone();
        nu.extend_from_slice(&other.nu);
        PerronData {
            lambda1: 0.5 * (self.lambda1 + other.lambda1),
            nu,
            residual: self.residual.max(other.residual),
        }
    }
}

/// Perron data of `g` from the all-ones start vector.
///
/// Converged once `‖Aν - λν‖∞ ≤ tol · max(1, λ)` for the min-normalized
/// iterate `ν` and its Rayleigh quotient `λ`. The iterate is then refined
/// while the residual keeps falling, so that `ν` itself (not only the
/// residual) is accurate when the spectral gap is small.
pub fn perron(g: &Graph, tol: f64) -> Result<PerronData> {
    perron_from(g, &vec![1.0; g.n()], tol)
}

/// Same as [`perron`] but from a caller-supplied strictly positive start.
pub fn perron_from(g: &Graph, start: &[f64], tol: f64) -> Result<PerronData> {
    let n = g.n();
    if start.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: start.len(),
        });
    }
    if n == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(start.iter().all(|&x| x > 0.0), "start vector must be positive");

    let mut v = start.to_vec();
    normalize_min(&mut v);
    let mut w = vec![0.0; n];
    let mut residual = f64::INFINITY;
    // Set once the residual test passes; iteration then continues while the
    // residual still shrinks, for at most as many steps again.
    let mut polish: Option<(usize, PerronData)> = None;
    for iteration in 0..MAX_ITERATIONS {
        // w = (A + I) v
        for u in 0..n {
            w[u] = v[u] + g.neighbors(u).iter().map(|&x| v[x]).sum::<f64>();
        }
        let rho = dot(&v, &w) / dot(&v, &v);
        let lambda = rho - 1.0;
        residual = v
            .iter()
            .zip(&w)
            .fold(0.0f64, |m, (a, b)| m.max((b - rho * a).abs()));
        let current = || PerronData {
            lambda1: lambda,
            nu: v.clone(),
            residual,
        };
        match &polish {
            None if residual <= tol * lambda.max(1.0) => polish = Some((2 * iteration + 1, current())),
            Some((_, best)) if residual >= best.residual => break,
            Some((stop, _)) if iteration >= *stop => return Ok(current()),
            Some((stop, _)) => polish = Some((*stop, current())),
            None => {}
        }
        std::mem::swap(&mut v, &mut w);
        normalize_min(&mut v);
    }
    match polish {
        Some((_, best)) => Ok(best),
        None => Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
            residual,
        }),
    }
}

/// Largest eigenvalue of a symmetric entrywise-nonnegative matrix.
pub fn spectral_radius(m: &Matrix, tol: f64) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)] < 0.0 {
                return Err(Error::NegativeEntry(i + 1, j + 1));
            }
        }
    }
    if n == 0 {
        return Ok(0.0);
    }
    let mut v = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let mut w = m.mul_vec(&v);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += vi;
        }
        let rho = dot(&v, &w) / dot(&v, &v);
        residual = v
            .iter()
            .zip(&w)
            .fold(0.0f64, |acc, (a, b)| acc.max((b - rho * a).abs()));
        if residual <= tol * rho {
            return Ok(rho - 1.0);
        }
        let scale = w.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        v = w.into_iter().map(|x| x / scale).collect();
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// `δ*_u = (1/ν_u) Σ_{v ~ u} ν_v`.
pub fn weight_degree(g: &Graph, nu: &[f64], u: usize) -> Result<f64> {
    if nu.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: nu.len(),
        });
    }
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u + 1,
            n: g.n(),
        });
    }
    Ok(g.neighbors(u).iter().map(|&v| nu[v]).sum::<f64>() / nu[u])
}

fn normalize_min(v: &mut [f64]) {
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    for x in v.iter_mut() {
        *x /= min;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
