//! Resultants: the Euclidean-remainder route used everywhere, a Sylvester
//! determinant that serves as an independent oracle in tests, and a
//! fraction-free bivariate resultant for pushforwards along the
//! multiplication map.

use super::field::{Elem, Field};
use super::poly::Poly;
use crate::error::Error;
use crate::Result;

/// `Res(p, q) = lc(p)^{deg q} * prod q(alpha_i)` over the roots of `p`.
///
/// Multiplicative in each argument. If either argument is zero the resultant
/// is zero; a nonzero constant `c` gives `c^{deg other}`.
pub fn resultant(p: &Poly, q: &Poly) -> Result<Elem> {
    if p.field() != q.field() {
        return Err(Error::FieldMismatch(format!(
            "{} vs {}",
            p.field().describe(),
            q.field().describe()
        )));
    }
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("resultant of two zero polynomials".into()));
    }
    Ok(resultant_euclid(p, q))
}

fn resultant_euclid(p: &Poly, q: &Poly) -> Elem {
    let field = p.field().clone();
    if p.is_zero() || q.is_zero() {
        return field.zero();
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = field.one();
    let mut negate = false;

    loop {
        let (da, db) = (a.degree_i(), b.degree_i());
        if db == 0 {
            // Res(a, c) = c^{deg a}
            return apply_sign(acc.mul(&b.leading_coeff().pow(da as u64)), negate);
        }
        if da == 0 {
            return apply_sign(acc.mul(&a.leading_coeff().pow(db as u64)), negate);
        }
        if da < db {
            // Res(a, b) = (-1)^{da*db} Res(b, a)
            if (da * db) % 2 == 1 {
                negate = !negate;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a = qb + r: Res(a, b) = lc(b)^{deg a - deg r} * (-1)^{deg a*deg b... }
        // Use Res(a,b) = (-1)^{da*db} Res(b,a) and Res(b, r) relation:
        // Res(a, b) = (-1)^{da*db} lc(b)^{da - dr} Res(b, r).
        let (_, r) = a.divmod(&b);
        if r.is_zero() {
            return field.zero();
        }
        let dr = r.degree_i();
        if (da * db) % 2 == 1 {
            negate = !negate;
        }
        acc = acc.mul(&b.leading_coeff().pow((da - dr) as u64));
        a = b;
        b = r;
    }
}

fn apply_sign(e: Elem, negate: bool) -> Elem {
    if negate {
        e.neg()
    } else {
        e
    }
}

/// Sylvester-matrix determinant; independent oracle for [`resultant`].
pub fn resultant_sylvester(p: &Poly, q: &Poly) -> Result<Elem> {
    if p.field() != q.field() {
        return Err(Error::FieldMismatch("sylvester resultant".into()));
    }
    let field = p.field().clone();
    if p.is_zero() || q.is_zero() {
        return Ok(field.zero());
    }
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    if m == 0 {
        return Ok(p.leading_coeff().pow(n as u64));
    }
    if n == 0 {
        return Ok(q.leading_coeff().pow(m as u64));
    }
    let size = m + n;
    let mut mat = vec![vec![field.zero(); size]; size];
    // n rows of p's coefficients (highest degree first), then m rows of q's.
    for row in 0..n {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(det_field(mat, &field))
}

fn det_field(mut mat: Vec<Vec<Elem>>, field: &Field) -> Elem {
    let n = mat.len();
    let mut det = field.one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(r) => r,
            None => return field.zero(),
        };
        if pivot_row != col {
            mat.swap(pivot_row, col);
            det = det.neg();
        }
        let pivot = mat[col][col].clone();
        det = det.mul(&pivot);
        let pinv = pivot.inv();
        for row in col + 1..n {
            if mat[row][col].is_zero() {
                continue;
            }
            let factor = mat[row][col].mul(&pinv);
            for k in col..n {
                let t = mat[row][k].sub(&factor.mul(&mat[col][k]));
                mat[row][k] = t;
            }
        }
    }
    det
}

/// Resultant in `t` of two polynomials whose coefficients are polynomials in
/// a second variable, by fraction-free (Bareiss) elimination of the Sylvester
/// matrix over `k[u]`. Returns a polynomial in `u`.
pub fn resultant_bivariate(p: &[Poly], q: &[Poly], field: &Field) -> Poly {
    // p, q: coefficient lists in t (lowest degree first), entries in k[u].
    let strip = |v: &[Poly]| -> Vec<Poly> {
        let mut v = v.to_vec();
        while v.last().map(Poly::is_zero).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let p = strip(p);
    let q = strip(q);
    if p.is_empty() || q.is_empty() {
        return Poly::zero(field);
    }
    let m = p.len() - 1;
    let n = q.len() - 1;
    if m == 0 {
        return p[0].pow(n);
    }
    if n == 0 {
        return q[0].pow(m);
    }
    let size = m + n;
    let mut mat = vec![vec![Poly::zero(field); size]; size];
    for row in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    poly_det_bareiss(mat, field)
}

/// Fraction-free determinant over `k[u]`; every division is exact.
fn poly_det_bareiss(mut mat: Vec<Vec<Poly>>, field: &Field) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one(field);
    }
    let mut sign_flip = false;
    let mut prev = Poly::one(field);
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let swap_row = match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => r,
                None => return Poly::zero(field),
            };
            mat.swap(k, swap_row);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[i][j].mul(&mat[k][k]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num.div_exact(&prev);
            }
        }
        for i in k + 1..n {
            mat[i][k] = Poly::zero(field);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn linear_case_is_difference() {
        // Res(t-a, t-b) = (t-b) evaluated at a = a - b; for (a, b) = (2, 3)
        // that is -1, and the Sylvester determinant agrees.
        let p = Poly::from_integers(&q(), &[-2, 1]);
        let r = Poly::from_integers(&q(), &[-3, 1]);
        let res = resultant(&p, &r).unwrap();
        assert_eq!(res, q().from_integer(-1));
        assert_eq!(resultant_sylvester(&p, &r).unwrap(), res);
    }

    #[test]
    fn resultant_with_one_is_one() {
        let p = Poly::from_integers(&q(), &[5, -3, 0, 2]);
        assert!(resultant(&p, &Poly::one(&q())).unwrap().is_one());
    }

    #[test]
    fn quadratic_pair_matches_hand_value_and_sylvester() {
        // Res(t^2+1, t^2-2) = prod (root^2 - 2) = (-1-2)^2 = 9.
        let p = Poly::from_integers(&q(), &[1, 0, 1]);
        let r = Poly::from_integers(&q(), &[-2, 0, 1]);
        let res = resultant(&p, &r).unwrap();
        assert_eq!(res, q().from_integer(9));
        assert_eq!(resultant_sylvester(&p, &r).unwrap(), res);
    }

    #[test]
    fn shared_root_gives_zero() {
        let p = Poly::from_integers(&q(), &[-1, 1]); // t - 1
        let r = Poly::from_integers(&q(), &[-1, 0, 1]); // t^2 - 1
        assert!(resultant(&p, &r).unwrap().is_zero());
    }

    #[test]
    fn euclid_matches_sylvester_on_f5() {
        let f5 = Field::prime(5).unwrap();
        let polys: Vec<Poly> = vec![
            Poly::from_integers(&f5, &[1, 2, 0, 3]),
            Poly::from_integers(&f5, &[4, 0, 1]),
            Poly::from_integers(&f5, &[2, 1]),
            Poly::from_integers(&f5, &[3]),
        ];
        for a in &polys {
            for b in &polys {
                assert_eq!(
                    resultant(a, b).unwrap(),
                    resultant_sylvester(a, b).unwrap(),
                    "mismatch for {a} and {b}"
                );
            }
        }
    }

    #[test]
    fn bivariate_matches_specialization() {
        // R(u) = Res_t(t^2 + u, t - u) must equal (u)^2 + u evaluated the
        // direct way: substitute t = u.
        let f = q();
        let u = Poly::var(&f);
        let one = Poly::one(&f);
        // p(t) = t^2 + u: coefficients in t: [u, 0, 1]
        let p = vec![u.clone(), Poly::zero(&f), one.clone()];
        // q(t) = t - u: [-u, 1]
        let qq = vec![u.neg(), one.clone()];
        let r = resultant_bivariate(&p, &qq, &f);
        let expect = u.mul(&u).add(&u);
        assert_eq!(r, expect);
    }
}
