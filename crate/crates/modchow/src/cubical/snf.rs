//! Smith normal form over `Z` with unimodular transforms.
//!
//! Pivots are chosen by minimal absolute value to keep intermediate entries
//! small; all arithmetic is arbitrary precision, so the result is exact
//! regardless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMat;

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal,
/// `s_1 | s_2 | ...`, diagonal entries nonnegative. `v_inv` is maintained
/// alongside `v` because homology computations need kernel coordinates.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMat,
    pub s: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

impl Snf {
    pub fn rank(&self) -> usize {
        let n = self.s.rows().min(self.s.cols());
        (0..n).filter(|&i| !self.s.get(i, i).is_zero()).count()
    }

    /// Nonzero diagonal entries.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMat) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);

    let mut k = 0usize;
    while k < rows.min(cols) {
        // Find the minimal-absolute-value nonzero entry in the region.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if s.get(i, j).is_zero() {
                    continue;
                }
                match &pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if s.get(i, j).abs() < s.get(*pi, *pj).abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        // Move to (k, k).
        if pi != k {
            s.swap_rows(pi, k);
            u.swap_rows(pi, k);
        }
        if pj != k {
            s.swap_cols(pj, k);
            v.swap_cols(pj, k);
            v_inv.swap_rows(pj, k);
        }

        // Reduce row k and column k against the pivot; small remainders may
        // become the new pivot, so iterate until both are clear.
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if s.get(i, k).is_zero() {
                    continue;
                }
                let q = div_round(s.get(i, k), s.get(k, k));
                if !q.is_zero() {
                    let negq = -q;
                    s.add_multiple_of_row(i, k, &negq);
                    u.add_multiple_of_row(i, k, &negq);
                }
                if !s.get(i, k).is_zero() {
                    // remainder smaller than the pivot: promote it
                    s.swap_rows(i, k);
                    u.swap_rows(i, k);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if s.get(k, j).is_zero() {
                    continue;
                }
                let q = div_round(s.get(k, j), s.get(k, k));
                if !q.is_zero() {
                    let negq = -q;
                    s.add_multiple_of_col(j, k, &negq);
                    v.add_multiple_of_col(j, k, &negq);
                    // v_inv tracks V^{-1}: col op E on V means E^{-1} on the left
                    // of v_inv; for col_j += c*col_k the inverse is row_k -= c*row_j.
                    let q2 = q.clone();
                    v_inv.add_multiple_of_row(k, j, &q2);
                }
                if !s.get(k, j).is_zero() {
                    s.swap_cols(j, k);
                    v.swap_cols(j, k);
                    v_inv.swap_rows(j, k);
                    dirty = true;
                }
            }
            if !dirty && row_col_clear(&s, k) {
                break;
            }
        }

        // Divisibility: the pivot must divide every remaining entry.
        let mut fixed = true;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(s.get(i, j) % s.get(k, k)).is_zero() {
                    // Fold row i into row k and redo this pivot.
                    let one = BigInt::one();
                    s.add_multiple_of_row(k, i, &one);
                    u.add_multiple_of_row(k, i, &one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            k += 1;
        }
    }

    // Normalize signs.
    for i in 0..rows.min(cols) {
        if s.get(i, i).is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }
    Snf { u, s, v, v_inv }
}

fn row_col_clear(s: &IntMat, k: usize) -> bool {
    for i in k + 1..s.rows() {
        if !s.get(i, k).is_zero() {
            return false;
        }
    }
    for j in k + 1..s.cols() {
        if !s.get(k, j).is_zero() {
            return false;
        }
    }
    true
}

/// Rounded division keeping remainders small in absolute value.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    // adjust so |a - qb| <= |b|/2
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMat) -> usize {
    smith_normal_form(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMat) -> Snf {
        let snf = smith_normal_form(m);
        // U*M*V = S
        let lhs = snf.u.mul(m).mul(&snf.v);
        assert_eq!(lhs, snf.s, "U M V != S");
        // V * V_inv = I
        assert_eq!(snf.v.mul(&snf.v_inv), IntMat::identity(m.cols()), "V Vinv != I");
        // diagonal divisibility and shape
        let d = snf.diagonal();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {d:?}");
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s.get(i, j).is_zero(), "not diagonal");
                }
            }
        }
        // unimodularity via SNF of u itself would recurse; determinant
        // up to sign 1 is implied by construction from elementary ops.
        snf
    }

    #[test]
    fn single_entry() {
        let m = IntMat::from_rows(vec![vec![2]]);
        let snf = check_snf(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2)]);
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        // gcd/lcm of the elementary divisors; oracle: the gcd of all entries
        // is 1 and the determinant is 6.
        let m = IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let snf = check_snf(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_stays_identity() {
        let m = IntMat::identity(4);
        let snf = check_snf(&m);
        assert_eq!(snf.s, IntMat::identity(4));
    }

    #[test]
    fn rectangular_and_zero() {
        let m = IntMat::from_rows(vec![vec![0, 0, 0], vec![0, 0, 0]]);
        let snf = check_snf(&m);
        assert_eq!(snf.rank(), 0);

        let m2 = IntMat::from_rows(vec![vec![4, 6, 2], vec![2, 2, 2]]);
        let snf2 = check_snf(&m2);
        assert_eq!(snf2.rank(), 2);
    }

    #[test]
    fn random_matrices_satisfy_contract() {
        let mut seed = 917u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((seed >> 33) % 11) as i64 - 5
        };
        for rows in 1..=4usize {
            for cols in 1..=4usize {
                for _ in 0..10 {
                    let m = IntMat::from_rows(
                        (0..rows).map(|_| (0..cols).map(|_| next()).collect()).collect(),
                    );
                    check_snf(&m);
                }
            }
        }
    }
}
