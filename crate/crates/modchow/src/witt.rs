//! Truncated big Witt rings.
//!
//! `W_m(k)` is the group `(1 + u k[u]) / (1 + u^{m+1} k[u])` under series
//! multiplication, written additively here, with the unique multiplication
//! `⋆` determined by `(1-au) ⋆ (1-bu) = 1-abu` together with continuity and
//! functoriality. An element is stored by the coefficient list
//! `(c_1, ..., c_m)` of its representative `1 + c_1 u + ... + c_m u^m`.
//!
//! Two independent `⋆` implementations are provided: [`WittVector::star_ghost`]
//! (characteristic zero, via ghost coordinates) and
//! [`WittVector::star_generators`] (any field, via the product decomposition
//! `x = prod (1 - a_n u^n)` and the rule
//! `(1-au^m) ⋆ (1-bu^n) = (1 - a^{n/d} b^{m/d} u^{mn/d})^d`, `d = gcd(m, n)`).

use std::fmt;

use num_integer::Integer;

use crate::algebra::{Elem, Field, Poly};
use crate::error::Error;
use crate::Result;

/// An element of `W_m(k)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WittVector {
    field: Field,
    m: usize,
    coeffs: Vec<Elem>, // exactly m entries: c_1 ... c_m
}

/// Ghost coordinates `(gh_1, ..., gh_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostVector {
    pub m: usize,
    pub entries: Vec<Elem>,
}

/// The unique `(a_1, ..., a_m)` with `x = prod_{n=1}^m (1 - a_n u^n)`
/// modulo `u^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecomposition {
    pub m: usize,
    pub entries: Vec<Elem>,
}

impl WittVector {
    /// The additive identity: the class of the constant series `1`.
    pub fn zero(field: &Field, m: usize) -> Self {
        assert!(m >= 1, "truncation must be positive");
        WittVector { field: field.clone(), m, coeffs: vec![field.zero(); m] }
    }

    /// The ring unit: the class of `1 - u`.
    pub fn one(field: &Field, m: usize) -> Self {
        let mut w = Self::zero(field, m);
        w.coeffs[0] = field.from_integer(-1);
        w
    }

    /// Class of `1 - a u^n` (the additive generators).
    pub fn basic(a: &Elem, n: usize, m: usize) -> Self {
        let field = a.field().clone();
        let mut w = Self::zero(&field, m);
        if n <= m {
            w.coeffs[n - 1] = a.neg();
        }
        w
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Elem>) -> Self {
        let m = coeffs.len();
        assert!(m >= 1);
        WittVector { field: field.clone(), m, coeffs }
    }

    /// Class of a polynomial with constant term 1, truncated at `m`.
    pub fn from_poly(p: &Poly, m: usize) -> Result<Self> {
        if !p.coeff(0).is_one() {
            return Err(Error::InvalidInput("series must have constant term 1".into()));
        }
        let field = p.field().clone();
        let coeffs = (1..=m).map(|i| p.coeff(i)).collect();
        Ok(WittVector { field, m, coeffs })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn truncation(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Elem::is_zero)
    }

    /// The representative `1 + c_1 u + ... + c_m u^m`.
    pub fn poly(&self) -> Poly {
        let mut c = Vec::with_capacity(self.m + 1);
        c.push(self.field.one());
        c.extend(self.coeffs.iter().cloned());
        Poly::new(self.field.clone(), c)
    }

    fn from_series(field: &Field, m: usize, series: &Poly) -> Self {
        debug_assert!(series.coeff(0).is_one());
        let coeffs = (1..=m).map(|i| series.coeff(i)).collect();
        WittVector { field: field.clone(), m, coeffs }
    }

    fn check_compatible(&self, other: &WittVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.describe(),
                other.field.describe()
            )));
        }
        if self.m != other.m {
            return Err(Error::InvalidInput(format!(
                "truncation mismatch: {} vs {}",
                self.m, other.m
            )));
        }
        Ok(())
    }

    /// Group law: truncated series multiplication.
    pub fn add(&self, other: &WittVector) -> Result<WittVector> {
        self.check_compatible(other)?;
        let prod = self.poly().mul_trunc(&other.poly(), self.m);
        Ok(Self::from_series(&self.field, self.m, &prod))
    }

    pub fn neg(&self) -> WittVector {
        let inv = self.poly().series_inverse(self.m).expect("unit series");
        Self::from_series(&self.field, self.m, &inv)
    }

    pub fn sub(&self, other: &WittVector) -> Result<WittVector> {
        self.add(&other.neg())
    }

    /// `n`-fold sum (series power), with negative `n` through the inverse.
    pub fn scalar_mul(&self, n: i64) -> WittVector {
        let base = if n < 0 { self.neg() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Self::zero(&self.field, self.m);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&sq).expect("compatible");
            }
            sq = sq.add(&sq).expect("compatible");
            k >>= 1;
        }
        acc
    }

    /// Image under the quotient map `W_m -> W_{m'}` for `m' <= m`, or the
    /// coefficientwise lift (zero-padded representative) for `m' > m`.
    pub fn truncate_to(&self, m_new: usize) -> WittVector {
        assert!(m_new >= 1);
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(m_new, self.field.zero());
        WittVector { field: self.field.clone(), m: m_new, coeffs }
    }

    /// Ghost coordinates from `-u f'(u)/f(u) = sum gh_n u^n`; no integer
    /// division is involved, so this is defined in any characteristic.
    pub fn ghost(&self) -> GhostVector {
        let f = self.poly();
        let numer = f.derivative().mul(&Poly::var(&self.field)).neg();
        let finv = f.series_inverse(self.m).expect("unit series");
        let series = numer.mul_trunc(&finv, self.m);
        let entries = (1..=self.m).map(|i| series.coeff(i)).collect();
        GhostVector { m: self.m, entries }
    }

    /// Inverts ghost coordinates by the triangular relation
    /// `n c_n = -(gh_n + sum_{i<n} gh_i c_{n-i})`; characteristic zero only.
    pub fn from_ghost(field: &Field, gh: &GhostVector) -> Result<WittVector> {
        if field.characteristic() != 0 {
            return Err(Error::InvalidInput(
                "ghost inversion requires characteristic zero".into(),
            ));
        }
        let m = gh.m;
        let mut c: Vec<Elem> = Vec::with_capacity(m);
        for n in 1..=m {
            let mut acc = gh.entries[n - 1].clone();
            for i in 1..n {
                acc = acc.add(&gh.entries[i - 1].mul(&c[n - i - 1]));
            }
            let cn = acc.neg().div(&field.from_integer(n as i64));
            c.push(cn);
        }
        Ok(WittVector { field: field.clone(), m, coeffs: c })
    }

    /// `⋆` via ghost coordinates: entrywise multiply and invert.
    /// Characteristic zero only.
    pub fn star_ghost(&self, other: &WittVector) -> Result<WittVector> {
        self.check_compatible(other)?;
        if self.field.characteristic() != 0 {
            return Err(Error::InvalidInput(
                "star_ghost requires characteristic zero".into(),
            ));
        }
        let ga = self.ghost();
        let gb = other.ghost();
        let entries = ga
            .entries
            .iter()
            .zip(&gb.entries)
            .map(|(x, y)| x.mul(y))
            .collect();
        Self::from_ghost(&self.field, &GhostVector { m: self.m, entries })
    }

    /// The unique generator decomposition, solved degree by degree.
    pub fn to_generators(&self) -> GeneratorDecomposition {
        let mut entries = Vec::with_capacity(self.m);
        let mut residual = self.poly();
        for n in 1..=self.m {
            let a_n = residual.coeff(n).neg();
            entries.push(a_n.clone());
            if !a_n.is_zero() {
                // divide by (1 - a_n u^n), i.e. multiply by its inverse series
                let mut gen_poly = vec![self.field.one()];
                gen_poly.resize(n, self.field.zero());
                gen_poly.push(a_n.neg());
                let g = Poly::new(self.field.clone(), gen_poly);
                let ginv = g.series_inverse(self.m).expect("unit");
                residual = residual.mul_trunc(&ginv, self.m);
            }
        }
        GeneratorDecomposition { m: self.m, entries }
    }

    pub fn from_generators(field: &Field, g: &GeneratorDecomposition) -> WittVector {
        let mut acc = Poly::one(field);
        for (idx, a) in g.entries.iter().enumerate() {
            let n = idx + 1;
            if a.is_zero() {
                continue;
            }
            let mut gen_poly = vec![field.one()];
            gen_poly.resize(n, field.zero());
            gen_poly.push(a.neg());
            acc = acc.mul_trunc(&Poly::new(field.clone(), gen_poly), g.m);
        }
        Self::from_series(field, g.m, &acc)
    }

    /// `⋆` via generator decompositions; works over any coefficient field.
    pub fn star_generators(&self, other: &WittVector) -> Result<WittVector> {
        self.check_compatible(other)?;
        let ga = self.to_generators();
        let gb = other.to_generators();
        let mut acc = Poly::one(&self.field);
        for (i, a) in ga.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let n1 = i + 1;
            for (j, b) in gb.entries.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let n2 = j + 1;
                let d = n1.gcd(&n2);
                let l = n1 / d * n2;
                if l > self.m {
                    // lies in 1 + u^{m+1} k[u], i.e. contributes the identity
                    continue;
                }
                // (1 - a^{n2/d} b^{n1/d} u^l)^d
                let c = a.pow((n2 / d) as u64).mul(&b.pow((n1 / d) as u64));
                let mut gen_poly = vec![self.field.one()];
                gen_poly.resize(l, self.field.zero());
                gen_poly.push(c.neg());
                let basic = Poly::new(self.field.clone(), gen_poly).pow(d);
                acc = acc.mul_trunc(&basic, self.m);
            }
        }
        Ok(Self::from_series(&self.field, self.m, &acc))
    }

    /// `⋆` by the generally applicable algorithm.
    pub fn star(&self, other: &WittVector) -> Result<WittVector> {
        self.star_generators(other)
    }

    /// Smallest `p`-power `N` with `N·x = 0`; finite fields only.
    pub fn additive_order(&self) -> u64 {
        let p = self.field.characteristic();
        assert!(p > 0 && self.field.is_finite(), "additive_order needs a finite field");
        let mut n: u64 = 1;
        let mut y = self.clone();
        while !y.is_zero() {
            // multiply by p: the series is raised to the p-th power
            y = y.scalar_mul(p as i64);
            n *= p;
        }
        n
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{c}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}{}", self.m, self)
    }
}

/// Exhaustive list of all elements of `W_m(F_q)`; `q^m` must stay small.
pub fn all_witt_vectors(field: &Field, m: usize) -> Vec<WittVector> {
    let elems = field.elements();
    let n = elems.len();
    let total = n.pow(m as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(m);
        let mut rem = idx;
        for _ in 0..m {
            coeffs.push(elems[rem % n].clone());
            rem /= n;
        }
        out.push(WittVector::from_coeffs(field, coeffs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn wq(cs: &[i64], m: usize) -> WittVector {
        let f = q();
        let poly = Poly::from_integers(&f, &{
            let mut v = vec![1];
            v.extend_from_slice(cs);
            v
        });
        WittVector::from_poly(&poly, m).unwrap()
    }

    #[test]
    fn addition_is_series_multiplication() {
        // (1-au) + (1+au) = 1 - a^2 u^2 with a = 3
        let f = q();
        let x = WittVector::basic(&f.from_integer(3), 1, 4);
        let y = WittVector::basic(&f.from_integer(-3), 1, 4);
        let s = x.add(&y).unwrap();
        assert_eq!(s, wq(&[0, -9, 0, 0], 4));
        // x + 0 = x
        assert_eq!(x.add(&WittVector::zero(&f, 4)).unwrap(), x);
        // x + (-x) = 0
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn char2_doubling() {
        // over F_2, m=3: (1+u) + (1+u) = (1+u)^2 = 1+u^2
        let f2 = Field::prime(2).unwrap();
        let x = WittVector::from_poly(&Poly::from_integers(&f2, &[1, 1]), 3).unwrap();
        let s = x.add(&x).unwrap();
        let expect = WittVector::from_poly(&Poly::from_integers(&f2, &[1, 0, 1]), 3).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn star_on_linear_generators() {
        // (1-2u) ⋆ (1-3u) = 1-6u at every truncation
        for m in [1, 3, 8] {
            let f = q();
            let x = WittVector::basic(&f.from_integer(2), 1, m);
            let y = WittVector::basic(&f.from_integer(3), 1, m);
            let expect = WittVector::basic(&f.from_integer(6), 1, m);
            assert_eq!(x.star_generators(&y).unwrap(), expect);
            assert_eq!(x.star_ghost(&y).unwrap(), expect);
        }
    }

    #[test]
    fn star_unit() {
        let f = q();
        let x = wq(&[2, -1, 5], 3);
        let one = WittVector::one(&f, 3);
        assert_eq!(one.star_generators(&x).unwrap(), x);
        assert_eq!(x.star_generators(&one).unwrap(), x);
    }

    #[test]
    fn star_generator_rule_coprime() {
        // (1-au^2) ⋆ (1-bu^3) = 1 - a^3 b^2 u^6 at m = 6 (d = 1)
        let f = q();
        let a = f.from_integer(2);
        let b = f.from_integer(3);
        let x = WittVector::basic(&a, 2, 6);
        let y = WittVector::basic(&b, 3, 6);
        let expect = WittVector::basic(&a.pow(3).mul(&b.pow(2)), 6, 6);
        assert_eq!(x.star_generators(&y).unwrap(), expect);
        assert_eq!(x.star_ghost(&y).unwrap(), expect);
    }

    #[test]
    fn ghost_of_linear_generator() {
        // ghost(1-au) = (a, a^2, ..., a^m)
        let f = q();
        let a = f.from_integer(5);
        let x = WittVector::basic(&a, 1, 6);
        let gh = x.ghost();
        for (i, e) in gh.entries.iter().enumerate() {
            assert_eq!(*e, a.pow(i as u64 + 1));
        }
        // ghost of the additive identity is zero
        assert!(WittVector::zero(&f, 6).ghost().entries.iter().all(Elem::is_zero));
    }

    #[test]
    fn ghost_of_one_minus_u_squared() {
        // ghost(1-u^2) at m=4 over Q is (0, 2, 0, 2)
        let x = wq(&[0, -1, 0, 0], 4);
        let gh = x.ghost();
        let f = q();
        assert_eq!(
            gh.entries,
            vec![f.zero(), f.from_integer(2), f.zero(), f.from_integer(2)]
        );
    }

    #[test]
    fn ghost_additive_and_roundtrip() {
        let x = wq(&[2, 3, -1, 0, 4], 5);
        let y = wq(&[-1, 1, 2, 2, 0], 5);
        let s = x.add(&y).unwrap();
        let gs = s.ghost();
        for i in 0..5 {
            assert_eq!(
                gs.entries[i],
                x.ghost().entries[i].add(&y.ghost().entries[i])
            );
        }
        let back = WittVector::from_ghost(&q(), &x.ghost()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn generator_decomposition_examples() {
        let f = q();
        // 1+u: a_1 = -1, rest 0
        let x = wq(&[1, 0, 0], 3);
        let g = x.to_generators();
        assert_eq!(g.entries[0], f.from_integer(-1));
        assert!(g.entries[1].is_zero() && g.entries[2].is_zero());

        // 1 - u - u^2 + u^3 = (1-u)(1-u^2): a_1 = 1, a_2 = 1, rest 0
        let y = wq(&[-1, -1, 1], 3);
        let gy = y.to_generators();
        assert_eq!(gy.entries[0], f.one());
        assert_eq!(gy.entries[1], f.one());
        assert!(gy.entries[2].is_zero());

        // round trips
        assert_eq!(WittVector::from_generators(&f, &gy), y);
        let zero_dec = GeneratorDecomposition { m: 3, entries: vec![f.zero(); 3] };
        assert!(WittVector::from_generators(&f, &zero_dec).is_zero());
    }

    #[test]
    fn star_algorithms_agree_on_random_inputs() {
        let f = q();
        let mut seed = 12345u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for m in [2, 5, 9] {
            for _ in 0..10 {
                let a: Vec<i64> = (0..m).map(|_| next()).collect();
                let b: Vec<i64> = (0..m).map(|_| next()).collect();
                let x = WittVector::from_coeffs(&f, a.iter().map(|&c| f.from_integer(c)).collect());
                let y = WittVector::from_coeffs(&f, b.iter().map(|&c| f.from_integer(c)).collect());
                assert_eq!(
                    x.star_generators(&y).unwrap(),
                    x.star_ghost(&y).unwrap(),
                    "m={m} x={x:?} y={y:?}"
                );
            }
        }
    }

    #[test]
    fn additive_orders() {
        // (1-u) in W_{p^m}(F_p) has order p^{m+1}
        let f2 = Field::prime(2).unwrap();
        assert_eq!(WittVector::one(&f2, 2).additive_order(), 4);
        assert_eq!(WittVector::one(&f2, 4).additive_order(), 8);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(WittVector::one(&f3, 3).additive_order(), 9);
        // zero has order 1
        assert_eq!(WittVector::zero(&f2, 3).additive_order(), 1);
        // 1+u^2 in W_3(F_2): direct powering gives (1+u^2)^2 = 1+u^4 = 1
        // mod u^4, so the order is 2.
        let x = WittVector::from_poly(&Poly::from_integers(&f2, &[1, 0, 1]), 3).unwrap();
        assert_eq!(x.additive_order(), 2);
        assert!(x.scalar_mul(2).is_zero());
        assert!(!x.scalar_mul(1).is_zero());
        // 1+u in W_3(F_2) does have order 4: (1+u)^2 = 1+u^2 != 1 mod u^4.
        let y = WittVector::from_poly(&Poly::from_integers(&f2, &[1, 1]), 3).unwrap();
        assert_eq!(y.additive_order(), 4);
    }

    #[test]
    fn frobenius_identity_in_char_p() {
        // coefficients of (1-t)^{p^m} equal those of 1-t^{p^m}
        for (p, m) in [(2u64, 2usize), (3, 1), (5, 1)] {
            let f = Field::prime(p).unwrap();
            let n = (p as usize).pow(m as u32);
            let base = Poly::from_integers(&f, &[1, -1]); // 1 - t
            let lhs = base.pow(n);
            let mut rhs = vec![f.one()];
            rhs.resize(n, f.zero());
            rhs.push(f.from_integer(-1));
            assert_eq!(lhs, Poly::new(f.clone(), rhs));
        }
    }

    #[test]
    fn star_works_over_f4() {
        let f4 = Field::finite_canonical(2, 2).unwrap();
        let g = f4.generator().unwrap();
        let x = WittVector::basic(&g, 1, 4);
        let y = WittVector::basic(&g.pow(2), 1, 4);
        // (1-gu) ⋆ (1-g^2 u) = 1 - g^3 u = 1 - u
        assert_eq!(x.star_generators(&y).unwrap(), WittVector::one(&f4, 4));
    }
}
