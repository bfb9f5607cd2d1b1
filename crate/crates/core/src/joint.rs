//! Joint partitions of two graphs with a common spectral radius.
//!
//! A joint partition lives on the disjoint union `G ⊔ H`; the vertices of
//! `H` are shifted by `n(G)`. Each component keeps its own Perron vector
//! normalized to minimum entry 1.

use crate::equitability::{is_weight_equitable, perron_constant_on_cells, DEFAULT_WE_TOL, SUPPORT_THRESHOLD};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::spectral::{perron, PerronData, DEFAULT_PERRON_TOL};
use crate::weighted::WeightedView;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    G,
    H,
}

#[derive(Debug, Clone)]
pub struct JointContext {
    pub g: Graph,
    pub h: Graph,
    pub union: Graph,
    pub offset: usize,
    pub perron_g: PerronData,
    pub perron_h: PerronData,
    /// Perron data of the union: the two vectors stacked.
    pub perron: PerronData,
}

impl JointContext {
    /// Fails unless both graphs are connected and their spectral radii agree
    /// within `tol`.
    pub fn new(g: &Graph, h: &Graph, tol: f64) -> Result<Self> {
        let perron_g = perron(g, DEFAULT_PERRON_TOL)?;
        let perron_h = perron(h, DEFAULT_PERRON_TOL)?;
        if (perron_g.lambda1 - perron_h.lambda1).abs() > tol {
            return Err(Error::SpectralRadiusMismatch(perron_g.lambda1, perron_h.lambda1));
        }
        let (union, offset) = g.disjoint_union(h);
        let perron = perron_g.concat(&perron_h);
        Ok(JointContext {
            g: g.clone(),
            h: h.clone(),
            union,
            offset,
            perron_g,
            perron_h,
            perron,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.perron.lambda1
    }

    pub fn nu(&self) -> &[f64] {
        &self.perron.nu
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if p.len() != self.union.n() {
            return Err(Error::GroundSetMismatch(self.union.n(), p.len()));
        }
        Ok(())
    }

    fn side_of(&self, v: usize) -> Side {
        if v < self.offset {
            Side::G
        } else {
            Side::H
        }
    }

    /// Every cell meets both `V(G)` and `V(H)`.
    pub fn is_balanced(&self, p: &Partition) -> Result<bool> {
        self.check(p)?;
        Ok(p.cells().iter().all(|cell| {
            cell.iter().any(|&v| self.side_of(v) == Side::G) && cell.iter().any(|&v| self.side_of(v) == Side::H)
        }))
    }

    /// `{P ∩ V(side)}` relabeled to the side's own vertex ids.
    pub fn restriction(&self, p: &Partition, side: Side) -> Result<Partition> {
        self.check(p)?;
        let range = match side {
            Side::G => 0..self.offset,
            Side::H => self.offset..self.union.n(),
        };
        let labels: Vec<usize> = range.map(|v| p.cell_of(v)).collect();
        Ok(Partition::from_labels(&labels))
    }

    fn require_balanced_we(&self, p: &Partition) -> Result<()> {
        if !self.is_balanced(p)? {
            return Err(Error::NotBalanced);
        }
        if !is_weight_equitable(&self.union, self.nu(), p, DEFAULT_WE_TOL)? {
            return Err(Error::NotWeightEquitable);
        }
        Ok(())
    }

    /// Per cell, `‖ρ(P_G)‖² / ‖ρ(P_H)‖²` next to the global ratio
    /// `‖ρ(V(G))‖² / ‖ρ(V(H))‖²`.
    pub fn norm_ratios(&self, p: &Partition) -> Result<(Vec<f64>, f64)> {
        self.require_balanced_we(p)?;
        let nu = self.nu();
        let sq = |vs: &mut dyn Iterator<Item = usize>| vs.map(|v| nu[v] * nu[v]).sum::<f64>();
        let global = sq(&mut (0..self.offset)) / sq(&mut (self.offset..self.union.n()));
        let per_cell = p
            .cells()
            .iter()
            .map(|cell| {
                let g_part = sq(&mut cell.iter().copied().filter(|&v| v < self.offset));
                let h_part = sq(&mut cell.iter().copied().filter(|&v| v >= self.offset));
                g_part / h_part
            })
            .collect();
        Ok((per_cell, global))
    }

    /// True iff every cell's norm ratio matches the global ratio within a
    /// relative tolerance `tol`.
    pub fn ratio_check(&self, p: &Partition, tol: f64) -> Result<bool> {
        let (per_cell, global) = self.norm_ratios(p)?;
        Ok(per_cell.iter().all(|r| (r - global).abs() <= tol * global.max(1.0)))
    }

    /// `X = S̄*(S̄*)ᵀ` over the union for a balanced weight-equitable joint
    /// partition on whose cells `ν` is constant. The result is verified to be
    /// doubly stochastic, to commute with `A ⊕ B`, and to connect every
    /// vertex to the other side.
    pub fn fractional_isomorphism_witness(&self, p: &Partition, tol: f64) -> Result<Matrix> {
        self.require_balanced_we(p)?;
        let nu = self.nu();
        for (i, cell) in p.cells().iter().enumerate() {
            let single = Partition::trivial(cell.len());
            let values: Vec<f64> = cell.iter().map(|&v| nu[v]).collect();
            if !perron_constant_on_cells(&values, &single, tol) {
                return Err(Error::NuNotCellConstant(i + 1));
            }
        }
        let x = WeightedView::build(&self.union, nu, p)?.x;
        let stochastic = x
            .row_sums()
            .iter()
            .chain(x.col_sums().iter())
            .all(|s| (s - 1.0).abs() <= tol);
        let commutes = x.commutator_norm(&self.union.adjacency_matrix()) <= tol;
        let crosses = (0..self.union.n()).all(|v| {
            (0..self.union.n()).any(|w| self.side_of(w) != self.side_of(v) && x[(v, w)] > SUPPORT_THRESHOLD)
        });
        // Each condition follows from the preconditions checked above.
        debug_assert!(stochastic && commutes && crosses);
        if !(stochastic && commutes) {
            return Err(Error::NotWeightEquitable);
        }
        if !crosses {
            return Err(Error::NotBalanced);
        }
        Ok(x)
    }
}
