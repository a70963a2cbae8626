//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use super::field::{dense, Elem, Field};
use crate::error::Error;
use crate::Result;

/// A polynomial with coefficients lowest degree first. Trailing zero
/// coefficients are stripped; the zero polynomial has an empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: Field, coeffs: Vec<Elem>) -> Self {
        for c in &coeffs {
            assert!(c.field() == &field, "coefficient field mismatch");
        }
        Poly { field, coeffs: dense::strip(coeffs) }
    }

    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: vec![] }
    }

    pub fn one(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: vec![field.one()] }
    }

    pub fn constant(c: Elem) -> Self {
        let field = c.field().clone();
        Poly { field, coeffs: dense::strip(vec![c]) }
    }

    /// The monomial `x`.
    pub fn var(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    pub fn from_integers(field: &Field, cs: &[i64]) -> Self {
        Poly::new(field.clone(), cs.iter().map(|&c| field.from_integer(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = -1`, handy in resultant bookkeeping.
    pub fn degree_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(Elem::is_one).unwrap_or(false)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv();
        self.scale(&inv)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::add(&self.coeffs, &other.coeffs, &self.field) }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::sub(&self.coeffs, &other.coeffs, &self.field) }
    }

    pub fn neg(&self) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::neg(&self.coeffs) }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::mul(&self.coeffs, &other.coeffs, &self.field) }
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::scale(&self.coeffs, c) }
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut out = Poly::one(&self.field);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        out
    }

    /// Truncated product: `self * other mod x^(k+1)`.
    pub fn mul_trunc(&self, other: &Poly, k: usize) -> Poly {
        let mut out = self.mul(other);
        out.coeffs.truncate(k + 1);
        out.coeffs = dense::strip(std::mem::take(&mut out.coeffs));
        out
    }

    pub fn truncate(&self, k: usize) -> Poly {
        let mut c = self.coeffs.clone();
        c.truncate(k + 1);
        Poly { field: self.field.clone(), coeffs: dense::strip(c) }
    }

    /// Series inverse mod `x^(k+1)`; requires a unit constant term.
    pub fn series_inverse(&self, k: usize) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c0inv = c0.inv();
        let mut inv = vec![c0inv.clone()];
        for n in 1..=k {
            // coefficient of x^n in self*inv must vanish
            let mut acc = self.field.zero();
            for i in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                acc = acc.add(&self.coeff(i).mul(&inv[n - i]));
            }
            inv.push(acc.neg().mul(&c0inv));
        }
        Ok(Poly::new(self.field.clone(), inv))
    }

    pub fn divmod(&self, other: &Poly) -> (Poly, Poly) {
        let (q, r) = dense::divmod(&self.coeffs, &other.coeffs, &self.field);
        (
            Poly { field: self.field.clone(), coeffs: q },
            Poly { field: self.field.clone(), coeffs: r },
        )
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, other: &Poly) -> Poly {
        let (q, r) = self.divmod(other);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        Poly { field: self.field.clone(), coeffs: dense::gcd(&self.coeffs, &other.coeffs, &self.field) }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&self.field.from_integer(i as i64)));
        }
        Poly { field: self.field.clone(), coeffs: dense::strip(out) }
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluates with coefficients mapped into a larger field first.
    pub fn eval_mapped(&self, x: &Elem, map: &dyn Fn(&Elem) -> Elem) -> Elem {
        let target = x.field().clone();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&map(c));
        }
        acc
    }

    /// Substitutes `x -> x^d`.
    pub fn compose_power(&self, d: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.field.zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * d] = c.clone();
        }
        Poly { field: self.field.clone(), coeffs: dense::strip(out) }
    }

    /// Reversal `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly { field: self.field.clone(), coeffs: dense::strip(c) }
    }

    /// Multiplicity of `x` dividing the polynomial.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Multiplicity of `factor` dividing the polynomial (factor nonconstant).
    pub fn multiplicity_of(&self, factor: &Poly) -> usize {
        assert!(!factor.is_constant(), "multiplicity of a constant");
        let mut count = 0;
        let mut cur = self.clone();
        loop {
            if cur.is_zero() {
                return count;
            }
            let (q, r) = cur.divmod(factor);
            if !r.is_zero() {
                return count;
            }
            count += 1;
            cur = q;
        }
    }

    /// Maps every coefficient through `f` into the field of `f`'s outputs.
    pub fn map_coeffs(&self, target: &Field, f: &dyn Fn(&Elem) -> Elem) -> Poly {
        Poly::new(target.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn to_string_with(&self, var: &str) -> String {
        dense::display(&self.coeffs, var)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("u"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divmod_roundtrip() {
        let q = Field::rationals();
        let a = Poly::from_integers(&q, &[2, 0, 1, 3]); // 2 + u^2 + 3u^3
        let b = Poly::from_integers(&q, &[1, 1]); // 1 + u
        let (quot, rem) = a.divmod(&b);
        assert_eq!(quot.mul(&b).add(&rem), a);
    }

    #[test]
    fn series_inverse_works() {
        let q = Field::rationals();
        let f = Poly::from_integers(&q, &[1, -1]); // 1 - u
        let inv = f.series_inverse(4).unwrap();
        // 1/(1-u) = 1 + u + u^2 + u^3 + u^4 + ...
        assert_eq!(inv, Poly::from_integers(&q, &[1, 1, 1, 1, 1]));
        assert!(f.mul_trunc(&inv, 4).is_one());
    }

    #[test]
    fn gcd_is_monic() {
        let f3 = Field::prime(3).unwrap();
        let a = Poly::from_integers(&f3, &[2, 2]); // 2(1 + u)
        let b = Poly::from_integers(&f3, &[1, 2, 1]); // (1+u)^2
        let g = a.gcd(&b);
        assert_eq!(g, Poly::from_integers(&f3, &[1, 1]));
    }

    #[test]
    fn derivative_char_p() {
        let f2 = Field::prime(2).unwrap();
        let a = Poly::from_integers(&f2, &[1, 0, 1]); // 1 + u^2
        assert!(a.derivative().is_zero());
    }
}
