//! Coefficient fields: `Q`, `F_p`, `F_{p^e}` and one transcendental
//! extension `k(v)` of any of those.
//!
//! Every element carries its field descriptor and is kept in canonical form,
//! so `==` is mathematical equality. All arithmetic is exact.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::Result;

/// Interned description of a coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldInner>);

#[derive(PartialEq, Eq, Hash)]
pub enum FieldInner {
    /// The rational numbers.
    Rationals,
    /// The prime field `F_p`.
    Prime { p: u64 },
    /// `F_{p^e} = F_p[x]/(modulus)`, `modulus` monic irreducible of degree
    /// `e`, coefficients lowest degree first, length `e + 1`.
    Finite { p: u64, e: usize, modulus: Vec<u64> },
    /// Rational function field `base(var)` in one variable.
    RatFun { base: Field, var: String },
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldInner::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(Field(Arc::new(FieldInner::Prime { p })))
    }

    /// `F_p[x]/(modulus)`. The modulus must be monic irreducible over `F_p`.
    pub fn finite(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        let e = modulus.len().saturating_sub(1);
        if e == 0 {
            return Err(Error::InvalidInput("extension modulus must have degree >= 1".into()));
        }
        if modulus[e] != 1 {
            return Err(Error::InvalidInput("extension modulus must be monic".into()));
        }
        if !fp_poly_is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(format!(
                "degree-{e} modulus over F_{p}"
            )));
        }
        Ok(Field(Arc::new(FieldInner::Finite { p, e, modulus })))
    }

    /// The canonical presentation of `F_{p^e}`: the lexicographically first
    /// monic irreducible of degree `e` over `F_p`.
    pub fn finite_canonical(p: u64, e: usize) -> Result<Self> {
        if e == 1 {
            return Self::prime(p);
        }
        let modulus = canonical_irreducible(p, e)?;
        Self::finite(p, modulus)
    }

    /// One transcendental extension `base(var)`.
    pub fn rational_functions(base: Field, var: &str) -> Result<Self> {
        if let FieldInner::RatFun { .. } = *base.0 {
            return Err(Error::InvalidInput(
                "only one level of transcendence is supported".into(),
            ));
        }
        Ok(Field(Arc::new(FieldInner::RatFun { base, var: var.to_string() })))
    }

    pub fn inner(&self) -> &FieldInner {
        &self.0
    }

    /// Field characteristic; 0 for `Q` and `Q(v)`.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldInner::Rationals => 0,
            FieldInner::Prime { p } => *p,
            FieldInner::Finite { p, .. } => *p,
            FieldInner::RatFun { base, .. } => base.characteristic(),
        }
    }

    /// Number of elements for finite fields, `None` otherwise.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldInner::Prime { p } => Some(*p),
            FieldInner::Finite { p, e, .. } => {
                let mut n: u64 = 1;
                for _ in 0..*e {
                    n = n.checked_mul(*p)?;
                }
                Some(n)
            }
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Elem {
        Elem { field: self.clone(), repr: self.repr_from_u64(0) }
    }

    pub fn one(&self) -> Elem {
        Elem { field: self.clone(), repr: self.repr_from_u64(1) }
    }

    pub fn from_integer(&self, n: i64) -> Elem {
        let repr = match &*self.0 {
            FieldInner::Rationals => Repr::Rat(BigRational::from(BigInt::from(n))),
            FieldInner::Prime { p } => Repr::Mod(mod_i64(n, *p)),
            FieldInner::Finite { p, .. } => {
                let c = mod_i64(n, *p);
                Repr::Ext(if c == 0 { vec![] } else { vec![c] })
            }
            FieldInner::RatFun { base, .. } => {
                let c = base.from_integer(n);
                let num = if c.is_zero() { vec![] } else { vec![c] };
                Repr::RatFun(Box::new(RatRepr { num, den: vec![base.one()] }))
            }
        };
        Elem { field: self.clone(), repr }
    }

    pub fn from_rational(&self, num: i64, den: i64) -> Result<Elem> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_integer(num);
        let d = self.from_integer(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(n.div(&d))
    }

    /// The transcendental generator of a rational function field.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            FieldInner::RatFun { base, .. } => Some(Elem {
                field: self.clone(),
                repr: Repr::RatFun(Box::new(RatRepr {
                    num: vec![base.zero(), base.one()],
                    den: vec![base.one()],
                })),
            }),
            FieldInner::Finite { .. } => Some(Elem {
                field: self.clone(),
                repr: Repr::Ext(vec![0, 1]),
            }),
            _ => None,
        }
    }

    /// All elements of a finite field, in a fixed enumeration order.
    pub fn elements(&self) -> Vec<Elem> {
        match &*self.0 {
            FieldInner::Prime { p } => (0..*p)
                .map(|c| Elem { field: self.clone(), repr: Repr::Mod(c) })
                .collect(),
            FieldInner::Finite { p, e, .. } => {
                let mut out = Vec::new();
                let total = (*p).pow(*e as u32);
                for idx in 0..total {
                    let mut digits = Vec::with_capacity(*e);
                    let mut rem = idx;
                    for _ in 0..*e {
                        digits.push(rem % p);
                        rem /= p;
                    }
                    while digits.last() == Some(&0) {
                        digits.pop();
                    }
                    out.push(Elem { field: self.clone(), repr: Repr::Ext(digits) });
                }
                out
            }
            _ => panic!("elements() on an infinite field"),
        }
    }

    fn repr_from_u64(&self, n: u64) -> Repr {
        match &*self.0 {
            FieldInner::Rationals => Repr::Rat(BigRational::from(BigInt::from(n))),
            FieldInner::Prime { p } => Repr::Mod(n % p),
            FieldInner::Finite { p, .. } => {
                let c = n % p;
                Repr::Ext(if c == 0 { vec![] } else { vec![c] })
            }
            FieldInner::RatFun { base, .. } => {
                let c = base.from_integer(n as i64);
                let num = if c.is_zero() { vec![] } else { vec![c] };
                Repr::RatFun(Box::new(RatRepr { num, den: vec![base.one()] }))
            }
        }
    }

    pub fn describe(&self) -> String {
        match &*self.0 {
            FieldInner::Rationals => "Q".into(),
            FieldInner::Prime { p } => format!("F{p}"),
            FieldInner::Finite { p, e, modulus } => {
                let q = (*p).pow(*e as u32);
                format!("F{q}=F{p}[x]/({})", fp_poly_display(modulus))
            }
            FieldInner::RatFun { base, var } => format!("{}({var})", base.describe()),
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// An element of a [`Field`], in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem {
    field: Field,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction.
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Mod(u64),
    /// Residue polynomial over `F_p`, trailing zeros stripped.
    Ext(Vec<u64>),
    /// Reduced ratio of polynomials over the base field, denominator monic.
    RatFun(Box<RatRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct RatRepr {
    num: Vec<Elem>,
    den: Vec<Elem>,
}

impl Elem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(c) => *c == 0,
            Repr::Ext(v) => v.is_empty(),
            Repr::RatFun(r) => r.num.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(c) => *c == 1,
            Repr::Ext(v) => v.len() == 1 && v[0] == 1,
            Repr::RatFun(r) => {
                r.num.len() == 1 && r.num[0].is_one() && r.den.len() == 1
            }
        }
    }

    fn assert_same_field(&self, other: &Elem) {
        assert!(
            self.field == other.field,
            "field mismatch: {} vs {}",
            self.field.describe(),
            other.field.describe()
        );
    }

    pub fn add(&self, other: &Elem) -> Elem {
        self.assert_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod((a + b) % p)
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let p = self.field.characteristic();
                Repr::Ext(fp_poly_add(a, b, p))
            }
            (Repr::RatFun(a), Repr::RatFun(b)) => {
                let base = self.ratfun_base();
                // a.num/a.den + b.num/b.den
                let num = dense::add(
                    &dense::mul(&a.num, &b.den, base),
                    &dense::mul(&b.num, &a.den, base),
                    base,
                );
                let den = dense::mul(&a.den, &b.den, base);
                Repr::RatFun(Box::new(reduce_ratfun(num, den, base)))
            }
            _ => unreachable!("repr/field invariant violated"),
        };
        Elem { field: self.field.clone(), repr }
    }

    pub fn neg(&self) -> Elem {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod(if *a == 0 { 0 } else { p - a })
            }
            Repr::Ext(a) => {
                let p = self.field.characteristic();
                Repr::Ext(a.iter().map(|c| if *c == 0 { 0 } else { p - c }).collect())
            }
            Repr::RatFun(a) => Repr::RatFun(Box::new(RatRepr {
                num: a.num.iter().map(Elem::neg).collect(),
                den: a.den.clone(),
            })),
        };
        Elem { field: self.field.clone(), repr }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Elem) -> Elem {
        self.assert_same_field(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod(mul_mod(*a, *b, p))
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let (p, modulus) = self.ext_params();
                Repr::Ext(fp_poly_mulmod(a, b, modulus, p))
            }
            (Repr::RatFun(a), Repr::RatFun(b)) => {
                let base = self.ratfun_base();
                let num = dense::mul(&a.num, &b.num, base);
                let den = dense::mul(&a.den, &b.den, base);
                Repr::RatFun(Box::new(reduce_ratfun(num, den, base)))
            }
            _ => unreachable!("repr/field invariant violated"),
        };
        Elem { field: self.field.clone(), repr }
    }

    /// Multiplicative inverse. Panics on zero; use [`Elem::try_inv`] if the
    /// input may vanish.
    pub fn inv(&self) -> Elem {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_inv(&self) -> Result<Elem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod(inv_mod(*a, p))
            }
            Repr::Ext(a) => {
                let (p, modulus) = self.ext_params();
                Repr::Ext(fp_poly_invmod(a, modulus, p))
            }
            Repr::RatFun(a) => {
                let base = self.ratfun_base();
                Repr::RatFun(Box::new(reduce_ratfun(a.den.clone(), a.num.clone(), base)))
            }
        };
        Ok(Elem { field: self.field.clone(), repr })
    }

    pub fn div(&self, other: &Elem) -> Elem {
        self.mul(&other.inv())
    }

    pub fn pow(&self, n: u64) -> Elem {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    /// `x^(p^k)` in a finite field (the `k`-fold Frobenius).
    pub fn frobenius(&self, k: usize) -> Elem {
        let p = self.field.characteristic();
        assert!(p > 0, "frobenius on a characteristic-zero field");
        let mut out = self.clone();
        for _ in 0..k {
            out = out.pow(p);
        }
        out
    }

    /// `p`-th root in a finite field (Frobenius is bijective).
    pub fn pth_root(&self) -> Elem {
        let q = self.field.order().expect("pth_root needs a finite field");
        let p = self.field.characteristic();
        // x -> x^(q/p) inverts x -> x^p on F_q.
        self.pow(q / p)
    }

    /// Exposes the residue for prime-field elements.
    pub fn as_prime_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(c) => Some(*c),
            Repr::Ext(v) if v.len() <= 1 => Some(v.first().copied().unwrap_or(0)),
            _ => None,
        }
    }

    /// Residue polynomial coefficients for extension-field elements.
    pub fn as_ext_coeffs(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Ext(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Numerator and denominator (as coefficient vectors over the base) for
    /// rational-function-field elements.
    pub fn as_ratfun(&self) -> Option<(&[Elem], &[Elem])> {
        match &self.repr {
            Repr::RatFun(r) => Some((&r.num, &r.den)),
            _ => None,
        }
    }

    /// Builds a rational-function-field element from numerator/denominator
    /// coefficients over the base field.
    pub fn ratfun_from_parts(field: &Field, num: Vec<Elem>, den: Vec<Elem>) -> Result<Elem> {
        let base = match &*field.0 {
            FieldInner::RatFun { base, .. } => base,
            _ => return Err(Error::InvalidInput("not a rational function field".into())),
        };
        if dense::is_zero(&den) {
            return Err(Error::DivisionByZero);
        }
        Ok(Elem {
            field: field.clone(),
            repr: Repr::RatFun(Box::new(reduce_ratfun(num, den, base))),
        })
    }

    fn ext_params(&self) -> (u64, &Vec<u64>) {
        match &*self.field.0 {
            FieldInner::Finite { p, modulus, .. } => (*p, modulus),
            _ => unreachable!(),
        }
    }

    fn ratfun_base(&self) -> &Field {
        match &*self.field.0 {
            FieldInner::RatFun { base, .. } => base,
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod(c) => write!(f, "{c}"),
            Repr::Ext(v) => write!(f, "{}", fp_poly_display(v)),
            Repr::RatFun(r) => {
                let var = match &*self.field.0 {
                    FieldInner::RatFun { var, .. } => var.as_str(),
                    _ => "v",
                };
                let num = dense::display(&r.num, var);
                if r.den.len() == 1 && r.den[0].is_one() {
                    write!(f, "{num}")
                } else {
                    write!(f, "({num})/({})", dense::display(&r.den, var))
                }
            }
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn reduce_ratfun(num: Vec<Elem>, den: Vec<Elem>, base: &Field) -> RatRepr {
    assert!(!dense::is_zero(&den), "zero denominator");
    if dense::is_zero(&num) {
        return RatRepr { num: vec![], den: vec![base.one()] };
    }
    let g = dense::gcd(&num, &den, base);
    let (num, _r1) = dense::divmod(&num, &g, base);
    let (den, _r2) = dense::divmod(&den, &g, base);
    // Normalize the denominator monic.
    let lc = den.last().expect("nonzero").clone();
    let lcinv = lc.inv();
    let num = dense::scale(&num, &lcinv);
    let den = dense::scale(&den, &lcinv);
    RatRepr { num, den }
}

/// Dense polynomial arithmetic on bare coefficient vectors (lowest degree
/// first, trailing zeros stripped). Shared by rational-function-field
/// elements and by [`crate::algebra::poly::Poly`].
pub(crate) mod dense {
    use super::{Elem, Field};

    pub fn is_zero(a: &[Elem]) -> bool {
        a.is_empty()
    }

    pub fn strip(mut a: Vec<Elem>) -> Vec<Elem> {
        while a.last().map(Elem::is_zero).unwrap_or(false) {
            a.pop();
        }
        a
    }

    pub fn add(a: &[Elem], b: &[Elem], field: &Field) -> Vec<Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
            out.push(x.add(&y));
        }
        strip(out)
    }

    pub fn neg(a: &[Elem]) -> Vec<Elem> {
        a.iter().map(Elem::neg).collect()
    }

    pub fn sub(a: &[Elem], b: &[Elem], field: &Field) -> Vec<Elem> {
        add(a, &neg(b), field)
    }

    pub fn mul(a: &[Elem], b: &[Elem], field: &Field) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        strip(out)
    }

    pub fn scale(a: &[Elem], c: &Elem) -> Vec<Elem> {
        strip(a.iter().map(|x| x.mul(c)).collect())
    }

    /// Euclidean division; panics if `b` is zero.
    pub fn divmod(a: &[Elem], b: &[Elem], field: &Field) -> (Vec<Elem>, Vec<Elem>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        if a.len() < b.len() {
            return (vec![], a.to_vec());
        }
        let lcinv = b.last().unwrap().inv();
        let mut rem = a.to_vec();
        let mut quot = vec![field.zero(); a.len() - b.len() + 1];
        while rem.len() >= b.len() && !rem.is_empty() {
            let k = rem.len() - b.len();
            let c = rem.last().unwrap().mul(&lcinv);
            quot[k] = c.clone();
            for (j, bj) in b.iter().enumerate() {
                let t = rem[k + j].sub(&bj.mul(&c));
                rem[k + j] = t;
            }
            rem = strip(rem);
        }
        (strip(quot), rem)
    }

    /// Monic gcd.
    pub fn gcd(a: &[Elem], b: &[Elem], field: &Field) -> Vec<Elem> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let (_, r) = divmod(&x, &y, field);
            x = y;
            y = r;
        }
        if x.is_empty() {
            return x;
        }
        let lcinv = x.last().unwrap().inv();
        scale(&x, &lcinv)
    }

    pub fn display(a: &[Elem], var: &str) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format!("{c}");
            let part = match i {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// F_p and F_p[x] machinery on u64 coefficients.
// ---------------------------------------------------------------------------

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_i64(n: i64, p: u64) -> u64 {
    let r = n.rem_euclid(p as i64);
    r as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime, a != 0 mod p.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn fp_strip(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_poly_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        out[i] = (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p;
    }
    fp_strip(out)
}

fn fp_poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    fp_strip(out)
}

fn fp_poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    let lcinv = inv_mod(*m.last().unwrap(), p);
    while rem.len() >= m.len() {
        let k = rem.len() - m.len();
        let c = mul_mod(*rem.last().unwrap(), lcinv, p);
        for (j, &mj) in m.iter().enumerate() {
            let sub = mul_mod(mj, c, p);
            rem[k + j] = (rem[k + j] + p - sub % p) % p;
        }
        rem = fp_strip(rem);
    }
    rem
}

fn fp_poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    fp_poly_rem(&fp_poly_mul(a, b, p), m, p)
}

fn fp_poly_invmod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // Extended Euclid in F_p[x].
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_poly_divmod(&r0, &r1, p);
        let t = fp_poly_sub(&t0, &fp_poly_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    assert!(r0.len() == 1, "not invertible modulo the field modulus");
    let lcinv = inv_mod(r0[0], p);
    fp_strip(t0.iter().map(|&c| mul_mod(c, lcinv, p)).collect())
}

fn fp_poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    fp_strip(out)
}

fn fp_poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty());
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let lcinv = inv_mod(*b.last().unwrap(), p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let k = rem.len() - b.len();
        let c = mul_mod(*rem.last().unwrap(), lcinv, p);
        quot[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            let sub = mul_mod(bj, c, p);
            rem[k + j] = (rem[k + j] + p - sub) % p;
        }
        rem = fp_strip(rem);
    }
    (fp_strip(quot), rem)
}

/// Irreducibility over `F_p` by trial division with all monic polynomials of
/// degree up to `deg/2`. Exact and fast at the sizes this crate targets.
fn fp_poly_is_irreducible(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        // All monic polynomials of degree d.
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rem = idx;
            for _ in 0..d {
                cand.push(rem % p);
                rem /= p;
            }
            cand.push(1);
            if fp_poly_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible of degree `e` over `F_p`
/// (coefficients enumerated lowest degree first).
pub fn canonical_irreducible(p: u64, e: usize) -> Result<Vec<u64>> {
    let count = p
        .checked_pow(e as u32)
        .ok_or_else(|| Error::CapExceeded("extension too large".into()))?;
    for idx in 0..count {
        let mut cand = Vec::with_capacity(e + 1);
        let mut rem = idx;
        for _ in 0..e {
            cand.push(rem % p);
            rem /= p;
        }
        cand.push(1);
        if fp_poly_is_irreducible(&cand, p) {
            return Ok(cand);
        }
    }
    Err(Error::InvalidInput(format!("no irreducible of degree {e} over F_{p}")))
}

fn fp_poly_display(a: &[u64]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let part = match i {
            0 => format!("{c}"),
            1 if c == 1 => "x".into(),
            1 => format!("{c}*x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}*x^{i}"),
        };
        parts.push(part);
    }
    parts.join("+")
}
