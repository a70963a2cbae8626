//! Cubical abelian groups presented by integer matrices on explicit bases.
//!
//! For each degree `q` up to a bound the group stores a free `Z`-module with
//! face maps `d_i^eps: A(q) -> A(q-1)` (`i = 1..q`, `eps in {0,1}`) and
//! degeneracy maps `pi_i: A(q-1) -> A(q)`. The standard identities are
//! verified on construction; the alternating-sum differential and the
//! reduced/degenerate splitting are derived from the matrices.

use super::complex::ChainComplexOverZ;
use super::matrix::IntMat;
use super::snf::rank;
use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug)]
pub struct CubicalGroup {
    /// `dims[q]` = rank of `A(q)`, for `q = 0..=qmax`.
    dims: Vec<usize>,
    /// `faces[q-1][i-1] = (d_i^0, d_i^1): A(q) -> A(q-1)` for `q >= 1`.
    faces: Vec<Vec<(IntMat, IntMat)>>,
    /// `degens[q-1][i-1] = pi_i: A(q-1) -> A(q)` for `q >= 1`.
    degens: Vec<Vec<IntMat>>,
}

impl CubicalGroup {
    /// Builds the group and checks the cubical identities on the stored
    /// range: `d_i^eps pi_i = id`, face/face commutation
    /// `d_i^eps d_j^delta = d_{j-1}^delta d_i^eps` for `i < j`, and
    /// face/degeneracy commutation.
    pub fn new(
        dims: Vec<usize>,
        faces: Vec<Vec<(IntMat, IntMat)>>,
        degens: Vec<Vec<IntMat>>,
    ) -> Result<Self> {
        let qmax = dims.len().saturating_sub(1);
        if faces.len() != qmax || degens.len() != qmax {
            return Err(Error::InvalidInput(
                "need faces and degeneracies for every positive degree".into(),
            ));
        }
        for q in 1..=qmax {
            if faces[q - 1].len() != q || degens[q - 1].len() != q {
                return Err(Error::InvalidInput(format!(
                    "degree {q} needs exactly {q} face pairs and degeneracies"
                )));
            }
            for (i, (d0, d1)) in faces[q - 1].iter().enumerate() {
                for (name, d) in [("d^0", d0), ("d^1", d1)] {
                    if d.rows() != dims[q - 1] || d.cols() != dims[q] {
                        return Err(Error::InvalidInput(format!(
                            "{name}_{} at degree {q} has wrong shape",
                            i + 1
                        )));
                    }
                }
            }
            for (i, p) in degens[q - 1].iter().enumerate() {
                if p.rows() != dims[q] || p.cols() != dims[q - 1] {
                    return Err(Error::InvalidInput(format!(
                        "pi_{} at degree {q} has wrong shape",
                        i + 1
                    )));
                }
            }
        }
        let g = CubicalGroup { dims, faces, degens };
        g.check_identities()?;
        Ok(g)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// `d_i^eps` at degree `q` (1-based `i`).
    pub fn face(&self, q: usize, i: usize, eps: u8) -> &IntMat {
        let pair = &self.faces[q - 1][i - 1];
        if eps == 0 {
            &pair.0
        } else {
            &pair.1
        }
    }

    /// `pi_i : A(q-1) -> A(q)` (1-based `i`).
    pub fn degeneracy(&self, q: usize, i: usize) -> &IntMat {
        &self.degens[q - 1][i - 1]
    }

    fn check_identities(&self) -> Result<()> {
        for q in 1..=self.max_degree() {
            // d_i^eps pi_i = id
            for i in 1..=q {
                for eps in [0u8, 1] {
                    let comp = self.face(q, i, eps).mul(self.degeneracy(q, i));
                    if comp != IntMat::identity(self.dims[q - 1]) {
                        return Err(Error::CubicalIdentity(format!(
                            "d_{i}^{eps} . pi_{i} != id at degree {q}"
                        )));
                    }
                }
            }
            if q >= 2 {
                // face/face: d_i^eps d_j^delta = d_{j-1}^delta d_i^eps, i < j
                for i in 1..=q {
                    for j in i + 1..=q {
                        for eps in [0u8, 1] {
                            for delta in [0u8, 1] {
                                let lhs = self.face(q - 1, i, eps).mul(self.face(q, j, delta));
                                let rhs =
                                    self.face(q - 1, j - 1, delta).mul(self.face(q, i, eps));
                                if lhs != rhs {
                                    return Err(Error::CubicalIdentity(format!(
                                        "face/face at degree {q}: (i,j)=({i},{j})"
                                    )));
                                }
                            }
                        }
                    }
                }
                // face/degeneracy for i != j:
                // d_i^eps pi_j = pi_{j-1} d_i^eps (i < j), pi_j d_{i-1}^eps (i > j)
                for i in 1..=q {
                    for j in 1..=q {
                        if i == j {
                            continue;
                        }
                        for eps in [0u8, 1] {
                            let lhs = self.face(q, i, eps).mul(self.degeneracy(q, j));
                            let rhs = if i < j {
                                self.degeneracy(q - 1, j - 1).mul(self.face(q - 1, i, eps))
                            } else {
                                self.degeneracy(q - 1, j).mul(self.face(q - 1, i - 1, eps))
                            };
                            if lhs != rhs {
                                return Err(Error::CubicalIdentity(format!(
                                    "face/degeneracy at degree {q}: (i,j)=({i},{j})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The alternating-sum differential `d_q = sum_i (-1)^i (d_i^1 - d_i^0)`
    /// assembled into a chain complex; `d . d = 0` is re-verified.
    pub fn alternating_differential(&self) -> Result<ChainComplexOverZ> {
        let mut boundaries = Vec::with_capacity(self.max_degree());
        for q in 1..=self.max_degree() {
            let mut d = IntMat::zeros(self.dims[q - 1], self.dims[q]);
            for i in 1..=q {
                let diff = self.face(q, i, 1).sub(self.face(q, i, 0));
                d = if i % 2 == 1 { d.sub(&diff) } else { d.add(&diff) };
            }
            boundaries.push(d);
        }
        ChainComplexOverZ::new(self.dims.clone(), boundaries)
    }

    /// The projection pair at degree `q`: `(P_0, P_degn)` with
    /// `A(q) = Im(P_0) + Im(P_degn)`, `Im(P_0) = intersection of Ker(d_i^0)`
    /// and `Im(P_degn) = sum of Im(pi_i)`. Computed as the ordered product
    /// `P_0 = (1 - pi_1 d_1^0) ... (1 - pi_q d_q^0)`.
    pub fn split_degenerate(&self, q: usize) -> (IntMat, IntMat) {
        let n = self.dims[q];
        let id = IntMat::identity(n);
        if q == 0 {
            return (id.clone(), IntMat::zeros(n, n));
        }
        let mut p0 = id.clone();
        for i in 1..=q {
            let e_i = self.degeneracy(q, i).mul(self.face(q, i, 0));
            p0 = p0.mul(&id.sub(&e_i));
        }
        let pdeg = id.sub(&p0);
        (p0, pdeg)
    }

    /// Verifies the splitting at every degree: idempotence, orthogonality,
    /// kernel condition (`d_i^0 P_0 = 0`), d-stability of both summands, and
    /// the rank bookkeeping. Returns the per-degree reduced/degenerate ranks.
    pub fn verify_splitting(&self) -> Result<Vec<(usize, usize)>> {
        let complex = self.alternating_differential()?;
        let mut projections = Vec::with_capacity(self.dims.len());
        for q in 0..=self.max_degree() {
            projections.push(self.split_degenerate(q));
        }
        let mut ranks = Vec::new();
        for q in 0..=self.max_degree() {
            let (p0, pd) = &projections[q];
            let n = self.dims[q];
            if p0.mul(p0) != *p0 || pd.mul(pd) != *pd {
                return Err(Error::CubicalIdentity(format!("projector not idempotent at {q}")));
            }
            if !p0.mul(pd).is_zero() || !pd.mul(p0).is_zero() {
                return Err(Error::CubicalIdentity(format!("projectors not orthogonal at {q}")));
            }
            if p0.add(pd) != IntMat::identity(n) {
                return Err(Error::CubicalIdentity(format!("projectors do not sum to 1 at {q}")));
            }
            for i in 1..=q {
                if !self.face(q, i, 0).mul(p0).is_zero() {
                    return Err(Error::CubicalIdentity(format!(
                        "reduced part not killed by d_{i}^0 at degree {q}"
                    )));
                }
            }
            if q >= 1 {
                // d-stability as commutation with the projectors
                let d = complex.boundary(q);
                let (p0_prev, _) = &projections[q - 1];
                if d.mul(p0) != p0_prev.mul(&d) {
                    return Err(Error::CubicalIdentity(format!(
                        "differential does not respect the splitting at degree {q}"
                    )));
                }
            }
            let r0 = rank(p0);
            let rd = rank(pd);
            if r0 + rd != n {
                return Err(Error::CubicalIdentity(format!(
                    "rank bookkeeping failed at degree {q}: {r0} + {rd} != {n}"
                )));
            }
            ranks.push((r0, rd));
        }
        Ok(ranks)
    }

    /// The subcomplex carried by an idempotent family: degreewise image
    /// coordinates of the projector, with the induced differential. The
    /// projector must commute with the differential.
    pub fn projected_complex(&self, reduced: bool) -> Result<ChainComplexOverZ> {
        // Present Im(P) as the image lattice: columns of P span it; a basis
        // is extracted via SNF (the nonzero part of P*V gives a basis since
        // P is idempotent, more simply: SNF of P = U^{-1} S V^{-1} with S
        // having r ones). For an idempotent integer matrix the image is a
        // direct summand, so SNF diagonal entries are 1.
        let complex = self.alternating_differential()?;
        let mut images: Vec<IntMat> = Vec::new(); // basis columns per degree
        let mut coords: Vec<IntMat> = Vec::new(); // left inverse per degree
        for q in 0..=self.max_degree() {
            let (p0, pd) = self.split_degenerate(q);
            let p = if reduced { p0 } else { pd };
            let snf = super::snf::smith_normal_form(&p);
            let r = snf.rank();
            // columns of P*V with nonzero diagonal span the image; since the
            // image is a direct summand the diagonal entries are units.
            for i in 0..r {
                if snf.s.get(i, i) != &num_bigint::BigInt::from(1) {
                    return Err(Error::CubicalIdentity(
                        "projector image is not a direct summand".into(),
                    ));
                }
            }
            let basis = p.mul(&snf.v).column_block(0, r); // n x r
            // Coordinates: x in Im(P) has coords (U x)_0..r because
            // U P V = S = diag(1..1,0..) implies U basis = first r unit cols.
            let coords_q = snf.u.row_block(0, r); // r x n
            images.push(basis);
            coords.push(coords_q);
        }
        let mut boundaries = Vec::new();
        for q in 1..=self.max_degree() {
            let d = complex.boundary(q);
            // restricted map: coords_{q-1} . d . basis_q
            boundaries.push(coords[q - 1].mul(&d).mul(&images[q]));
        }
        let dims: Vec<usize> = images.iter().map(|b| b.cols()).collect();
        ChainComplexOverZ::new(dims, boundaries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// The constant cubical group: every A(q) = Z, all faces and
    /// degeneracies the identity.
    fn constant_group(qmax: usize) -> CubicalGroup {
        let dims = vec![1usize; qmax + 1];
        let id = IntMat::identity(1);
        let faces = (1..=qmax)
            .map(|q| (0..q).map(|_| (id.clone(), id.clone())).collect())
            .collect();
        let degens = (1..=qmax).map(|q| vec![id.clone(); q]).collect();
        CubicalGroup::new(dims, faces, degens).unwrap()
    }

    #[test]
    fn constant_group_has_zero_differential() {
        let g = constant_group(3);
        let c = g.alternating_differential().unwrap();
        for q in 1..=3 {
            assert!(c.boundary(q).is_zero(), "d_{q} must vanish");
        }
        let ranks = g.verify_splitting().unwrap();
        // A(0)_0 = A(0); all higher degrees are fully degenerate
        assert_eq!(ranks[0], (1, 0));
        for q in 1..=3 {
            assert_eq!(ranks[q], (0, 1), "degree {q}");
        }
    }

    /// Free cubical group on one degree-0 generator and one degree-1
    /// generator `e` with d^0(e) = d^1(e) = the generator; degree-2 part is
    /// spanned by the two degeneracies of `e`. (A loop on one vertex.)
    fn loop_group() -> CubicalGroup {
        // A(0) = Z<v>, A(1) = Z<e, pi(v)>, A(2) = Z<pi_1(e), pi_2(e), pi pi v>
        let dims = vec![1, 2, 3];
        // degree 1: d_1^eps(e) = v, d_1^eps(pi v) = v
        let d1 = IntMat::from_rows(vec![vec![1, 1]]);
        let faces1 = vec![(d1.clone(), d1.clone())];
        let pi1 = IntMat::from_rows(vec![vec![0], vec![1]]);
        let degens1 = vec![pi1];
        // degree 2 basis: a = pi_1(e), b = pi_2(e), c = pi_1 pi_1 (v)
        // faces: d_1^eps(a) = e? No: d_1^eps pi_1 = id, so d_1^eps(a) = e.
        //        d_2^eps(a) = pi_1(d_1^eps e) = pi(v) [face/degeneracy, i>j]
        //        d_1^eps(b) = pi_1(d_1^eps(e))? i<j: d_1^eps pi_2 = pi_1 d_1^eps -> pi(v)
        //        d_2^eps(b) = e
        //        d_i^eps(c) = pi(v)
        let d1_2 = IntMat::from_rows(vec![
            vec![1, 0, 0], // e-coordinate of images of (a, b, c)
            vec![0, 1, 1], // pi(v)-coordinate
        ]);
        let d2_2 = IntMat::from_rows(vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let faces2 = vec![(d1_2.clone(), d1_2), (d2_2.clone(), d2_2)];
        // degeneracies into degree 2: pi_1(e) = a, pi_1(pi v) = c; pi_2(e) = b, pi_2(pi v) = c
        let pi1_2 = IntMat::from_rows(vec![vec![1, 0], vec![0, 0], vec![0, 1]]);
        let pi2_2 = IntMat::from_rows(vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        let degens2 = vec![pi1_2, pi2_2];
        CubicalGroup::new(dims, vec![faces1, faces2], vec![degens1, degens2]).unwrap()
    }

    #[test]
    fn loop_group_satisfies_identities_and_splits() {
        let g = loop_group();
        let c = g.alternating_differential().unwrap();
        // d_1(e) = d^1 - d^0 with sign (-1)^1: zero since both faces agree
        assert!(c.boundary(1).is_zero());
        let ranks = g.verify_splitting().unwrap();
        assert_eq!(ranks[0], (1, 0));
        assert_eq!(ranks[1], (1, 1)); // reduced <e - pi v>, degenerate <pi v>
        assert_eq!(ranks[2], (0, 3)); // everything in degree 2 is degenerate
    }

    #[test]
    fn degenerate_elements_project_to_degenerate_part() {
        let g = loop_group();
        let (_, pd) = g.split_degenerate(1);
        // pi(v) is the second basis vector; P_degn fixes it
        let mut v = IntMat::zeros(2, 1);
        v.set(1, 0, BigInt::from(1));
        assert_eq!(pd.mul(&v), v);
    }

    #[test]
    fn full_homology_splits_as_reduced_plus_degenerate() {
        let g = loop_group();
        let full = g.alternating_differential().unwrap();
        let red = g.projected_complex(true).unwrap();
        let deg = g.projected_complex(false).unwrap();
        for q in 0..=g.max_degree() {
            let hf = full.homology(q);
            let hr = red.homology(q);
            let hd = deg.homology(q);
            assert_eq!(
                hf.free_rank,
                hr.free_rank + hd.free_rank,
                "free rank at degree {q}"
            );
            let mut torsion: Vec<BigInt> = hr
                .invariant_factors
                .iter()
                .chain(hd.invariant_factors.iter())
                .cloned()
                .collect();
            torsion.sort();
            let mut full_torsion = hf.invariant_factors.clone();
            full_torsion.sort();
            assert_eq!(torsion, full_torsion, "torsion at degree {q}");
        }
    }

    #[test]
    fn identity_violations_are_rejected() {
        // break d_1^0 pi_1 = id
        let dims = vec![1, 1];
        let d = IntMat::from_rows(vec![vec![2]]);
        let pi = IntMat::from_rows(vec![vec![1]]);
        let out = CubicalGroup::new(dims, vec![vec![(d.clone(), d)]], vec![vec![pi]]);
        assert!(matches!(out, Err(Error::CubicalIdentity(_))));
    }
}
