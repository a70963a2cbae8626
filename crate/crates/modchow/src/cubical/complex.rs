//! Bounded chain complexes of free finite-rank `Z`-modules and their
//! homology via Smith normal form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMat;
use super::snf::{smith_normal_form, Snf};
use crate::error::Error;
use crate::Result;

/// A homological complex `C_0 <- C_1 <- ... <- C_n`; `boundaries[q]` is
/// `d_{q+1}: C_{q+1} -> C_q`, so degree `q` has incoming `boundaries[q]` and
/// outgoing `boundaries[q-1]`.
#[derive(Clone, Debug)]
pub struct ChainComplexOverZ {
    dims: Vec<usize>,
    boundaries: Vec<IntMat>,
}

/// Homology presented by invariant factors (each `> 1`, each dividing the
/// next) plus the free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup { free_rank: 0, invariant_factors: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the torsion part (product of invariant factors).
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |a, b| a * b)
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for f in &self.invariant_factors {
            parts.push(format!("Z/{f}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl ChainComplexOverZ {
    /// Builds a complex and verifies `d . d = 0`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMat>) -> Result<Self> {
        assert_eq!(
            boundaries.len() + 1,
            dims.len().max(1),
            "need one boundary map per adjacent pair of degrees"
        );
        for (q, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[q] || b.cols() != dims[q + 1] {
                return Err(Error::InvalidInput(format!(
                    "boundary d_{} has shape {}x{}, expected {}x{}",
                    q + 1,
                    b.rows(),
                    b.cols(),
                    dims[q],
                    dims[q + 1]
                )));
            }
        }
        for q in 0..boundaries.len().saturating_sub(1) {
            if !boundaries[q].mul(&boundaries[q + 1]).is_zero() {
                return Err(Error::NotAComplex(q + 2));
            }
        }
        Ok(ChainComplexOverZ { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// `d_q : C_q -> C_{q-1}`; the zero map at `q = 0` and above the top.
    pub fn boundary(&self, q: usize) -> IntMat {
        if q == 0 || q > self.max_degree() {
            let rows = if q == 0 { 0 } else { self.dims[q - 1] };
            let cols = self.dims.get(q).copied().unwrap_or(0);
            return IntMat::zeros(rows, cols);
        }
        self.boundaries[q - 1].clone()
    }

    /// `H_q = ker d_q / im d_{q+1}`, reported by invariant factors and free
    /// rank. Basis-independent (tested under unimodular change of basis).
    pub fn homology(&self, q: usize) -> HomologyGroup {
        if q > self.max_degree() || self.dims[q] == 0 {
            return HomologyGroup::trivial();
        }
        let n_q = self.dims[q];
        let d_q = self.boundary(q);
        let incoming = self.boundary(q + 1);

        let (kernel_rank, kernel_coords) = if d_q.rows() == 0 {
            // everything is a cycle
            (n_q, incoming)
        } else {
            let snf: Snf = smith_normal_form(&d_q);
            let r = snf.rank();
            // kernel = span of the last n_q - r columns of V; express the
            // image of d_{q+1} in V-coordinates and keep those rows.
            let w = snf.v_inv.mul(&incoming);
            // rows 0..r must vanish because d_q . d_{q+1} = 0
            for i in 0..r {
                for j in 0..w.cols() {
                    debug_assert!(w.get(i, j).is_zero(), "boundary image escapes the kernel");
                }
            }
            (n_q - r, w.row_block(r, n_q))
        };

        if kernel_rank == 0 {
            return HomologyGroup::trivial();
        }
        let snf2 = smith_normal_form(&kernel_coords);
        let diag = snf2.diagonal();
        let invariant_factors: Vec<BigInt> =
            diag.into_iter().filter(|d| d > &BigInt::one()).collect();
        let free_rank = kernel_rank - snf2.rank();
        HomologyGroup { free_rank, invariant_factors }
    }

    /// Conjugates every degree by a unimodular change of basis
    /// (`basis[q]` is an invertible map on `C_q`); homology is unchanged.
    pub fn change_basis(&self, basis: &[(IntMat, IntMat)]) -> Result<Self> {
        assert_eq!(basis.len(), self.dims.len());
        for (q, (b, binv)) in basis.iter().enumerate() {
            if b.mul(binv) != IntMat::identity(self.dims[q]) {
                return Err(Error::InvalidInput(format!("basis at degree {q} is not invertible")));
            }
        }
        let mut new_bounds = Vec::with_capacity(self.boundaries.len());
        for (q, d) in self.boundaries.iter().enumerate() {
            // d'_{q+1} = B_q . d . B_{q+1}^{-1}
            new_bounds.push(basis[q].0.mul(d).mul(&basis[q + 1].1));
        }
        ChainComplexOverZ::new(self.dims.clone(), new_bounds)
    }
}
