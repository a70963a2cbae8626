//! Polynomial factorization.
//!
//! Finite fields get a complete factorization (squarefree decomposition,
//! distinct-degree splitting, then equal-degree splitting with a
//! deterministically seeded random source). Over `Q` the factorization is
//! complete as long as every irreducible factor has degree at most a
//! configured bound (default 4); beyond that the caller gets
//! [`Error::FactorizationIncomplete`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, Field, FieldInner};
use super::poly::Poly;
use crate::error::Error;
use crate::Result;

/// Default bound on irreducible factor degrees over `Q`.
pub const DEFAULT_Q_DEGREE_BOUND: usize = 4;

/// `lc * prod factors[i].0 ^ factors[i].1`, factors monic irreducible and
/// pairwise distinct, sorted for canonical output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub lc: Elem,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Re-multiplies the factorization; used as the round-trip oracle.
    pub fn expand(&self) -> Poly {
        let mut out = Poly::constant(self.lc.clone());
        for (f, m) in &self.factors {
            out = out.mul(&f.pow(*m));
        }
        out
    }
}

pub fn factor(p: &Poly) -> Result<Factorization> {
    factor_bounded(p, DEFAULT_Q_DEGREE_BOUND)
}

pub fn factor_bounded(p: &Poly, q_degree_bound: usize) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput("factor of the zero polynomial".into()));
    }
    let lc = p.leading_coeff();
    let monic = p.monic();
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (sqfree, mult) in squarefree_decomposition(&monic) {
        for irred in split_squarefree(&sqfree, q_degree_bound)? {
            factors.push((irred, mult));
        }
    }
    factors.sort_by(|a, b| poly_sort_key(&a.0).cmp(&poly_sort_key(&b.0)));
    Ok(Factorization { lc, factors })
}

/// Certified irreducibility test (complete over finite fields, bounded over `Q`).
pub fn is_irreducible(p: &Poly) -> Result<bool> {
    if p.is_constant() {
        return Ok(false);
    }
    let f = factor(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

fn poly_sort_key(p: &Poly) -> (usize, String) {
    (p.degree().unwrap_or(0), format!("{p}"))
}

/// Monic squarefree decomposition, valid in any characteristic.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    if f.is_constant() {
        return vec![];
    }
    let p = field.characteristic();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = h(x^p); pull out the p-th root and scale multiplicities.
        assert!(p > 0, "zero derivative in characteristic zero");
        let h = pth_root_poly(f);
        return squarefree_decomposition(&h)
            .into_iter()
            .map(|(g, m)| (g, m * p as usize))
            .collect();
    }
    let mut out = Vec::new();
    let mut g = f.gcd(&deriv);
    let mut w = f.div_exact(&g);
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&g);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        g = g.div_exact(&w);
        i += 1;
    }
    if !g.is_one() {
        let h = pth_root_poly(&g);
        for (fac, m) in squarefree_decomposition(&h) {
            out.push((fac, m * p as usize));
        }
    }
    out
}

fn pth_root_poly(f: &Poly) -> Poly {
    let p = f.field().characteristic() as usize;
    let mut out = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            out.push(c.pth_root());
        } else {
            assert!(c.is_zero(), "polynomial is not a p-th power composite");
        }
    }
    Poly::new(f.field().clone(), out)
}

fn split_squarefree(f: &Poly, q_degree_bound: usize) -> Result<Vec<Poly>> {
    match f.field().inner() {
        FieldInner::Rationals => split_squarefree_q(f, q_degree_bound),
        FieldInner::Prime { .. } | FieldInner::Finite { .. } => Ok(split_squarefree_fq(f)),
        FieldInner::RatFun { .. } => Err(Error::InvalidInput(
            "factorization over rational function fields is not supported".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Finite fields: distinct-degree + equal-degree splitting.
// ---------------------------------------------------------------------------

fn split_squarefree_fq(f: &Poly) -> Vec<Poly> {
    let field = f.field().clone();
    let q = field.order().expect("finite field");
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = Poly::var(&field);

    // h tracks x^(q^d) mod rest.
    let mut d = 0usize;
    let mut h = x.clone();
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap_or(0) {
            // what is left is irreducible
            out.push(rest.clone());
            break;
        }
        h = poly_powmod_big(&h, &BigUint::from(q), &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_constant() {
            equal_degree_split(&g, d, q, &mut out);
            rest = rest.div_exact(&g);
            h = h.divmod(&rest).1;
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting of a product of distinct
/// irreducibles of degree `d`. Deterministically seeded, so factorizations
/// are reproducible.
fn equal_degree_split(g: &Poly, d: usize, q: u64, out: &mut Vec<Poly>) {
    let deg = g.degree().unwrap_or(0);
    if deg == d {
        out.push(g.monic());
        return;
    }
    let field = g.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (deg as u64) << 16 ^ d as u64);
    loop {
        let a = random_poly_below(&field, deg, &mut rng);
        if a.is_constant() {
            continue;
        }
        let candidate = if q % 2 == 1 {
            // a^((q^d - 1)/2) - 1 splits odd-characteristic products.
            let exp = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            let b = poly_powmod_big(&a, &exp, g);
            b.sub(&Poly::one(&field))
        } else {
            // Characteristic two: use the trace map of F_{q^d} over F_2.
            let k = (q.trailing_zeros() as usize) * d; // q^d = 2^k
            let mut tr = a.clone();
            let mut pw = a.clone();
            for _ in 1..k {
                pw = poly_powmod_big(&pw, &BigUint::from(2u32), g);
                tr = tr.add(&pw).divmod(g).1;
            }
            tr
        };
        let h = candidate.gcd(g);
        if !h.is_constant() && h.degree() < g.degree() {
            equal_degree_split(&h, d, q, out);
            equal_degree_split(&g.div_exact(&h), d, q, out);
            return;
        }
    }
}

fn random_poly_below(field: &Field, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let elems = field.elements();
    let coeffs: Vec<Elem> = (0..deg).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
    Poly::new(field.clone(), coeffs)
}

fn poly_powmod_big(base: &Poly, exp: &BigUint, modulus: &Poly) -> Poly {
    let field = base.field().clone();
    let mut result = Poly::one(&field);
    let mut b = base.divmod(modulus).1;
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            result = result.mul(&b).divmod(modulus).1;
        }
        b = b.mul(&b).divmod(modulus).1;
    }
    result
}

/// Monic irreducibles over a finite field, sieved by trial division:
/// `table[k]` holds every monic irreducible of degree `k` (`table[0]` empty).
pub fn irreducibles_table(field: &Field, dmax: usize) -> Vec<Vec<Poly>> {
    let mut table: Vec<Vec<Poly>> = vec![vec![]];
    for k in 1..=dmax {
        let mut irr_k = Vec::new();
        'cand: for p in monic_polys(field, k) {
            for smaller in table.iter().skip(1).take(k / 2).flatten() {
                if p.divmod(smaller).1.is_zero() {
                    continue 'cand;
                }
            }
            irr_k.push(p);
        }
        table.push(irr_k);
    }
    table
}

/// All monic irreducible polynomials of exact degree `d` over a finite field.
pub fn monic_irreducibles(field: &Field, d: usize) -> Vec<Poly> {
    irreducibles_table(field, d).pop().unwrap_or_default()
}

/// All monic polynomials of exact degree `d` over a finite field.
pub fn monic_polys(field: &Field, d: usize) -> Vec<Poly> {
    let elems = field.elements();
    let n = elems.len();
    let total = n.pow(d as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rem = idx;
        for _ in 0..d {
            coeffs.push(elems[rem % n].clone());
            rem /= n;
        }
        coeffs.push(field.one());
        out.push(Poly::new(field.clone(), coeffs));
    }
    out
}

// ---------------------------------------------------------------------------
// Rationals: root search plus certified low-degree splitting.
// ---------------------------------------------------------------------------

fn split_squarefree_q(f: &Poly, bound: usize) -> Result<Vec<Poly>> {
    let field = f.field().clone();
    let mut out = Vec::new();
    let mut rest = f.monic();

    // Strip rational roots.
    loop {
        if rest.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        match rational_root(&rest)? {
            Some(r) => {
                let lin = Poly::new(field.clone(), vec![r.neg(), field.one()]);
                rest = rest.div_exact(&lin);
                out.push(lin);
            }
            None => break,
        }
    }

    let deg = rest.degree().unwrap_or(0);
    match deg {
        0 => {}
        1 => out.push(rest),
        2 | 3 => {
            // No rational root: a quadratic or cubic is irreducible.
            if deg > bound {
                return Err(Error::FactorizationIncomplete { degree: deg, bound });
            }
            out.push(rest);
        }
        4 => {
            if bound < 2 {
                return Err(Error::FactorizationIncomplete { degree: deg, bound });
            }
            match split_quartic(&rest)? {
                Some((a, b)) => {
                    out.extend(split_squarefree_q(&a, bound)?);
                    out.extend(split_squarefree_q(&b, bound)?);
                }
                None => {
                    if deg > bound {
                        return Err(Error::FactorizationIncomplete { degree: deg, bound });
                    }
                    out.push(rest);
                }
            }
        }
        d => return Err(Error::FactorizationIncomplete { degree: d, bound }),
    }
    Ok(out)
}

fn big_rational_of(e: &Elem) -> BigRational {
    e.as_rational().expect("rational field element").clone()
}

/// One rational root of a monic polynomial over `Q`, if any.
fn rational_root(f: &Poly) -> Result<Option<Elem>> {
    let field = f.field().clone();
    if f.coeff(0).is_zero() {
        return Ok(Some(field.zero()));
    }
    // Clear denominators: g in Z[x], primitive.
    let coeffs: Vec<BigRational> = f.coeffs().iter().map(big_rational_of).collect();
    let mut denlcm = BigInt::one();
    for c in &coeffs {
        denlcm = denlcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from(denlcm.clone())).to_integer())
        .collect();
    let c0 = ints[0].clone();
    let lead = ints.last().unwrap().clone();
    let p_divs = small_divisors(&c0)?;
    let q_divs = small_divisors(&lead)?;
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p.clone() * BigInt::from(sign), q.clone());
                let cand_e = elem_from_rational(&field, &cand);
                if f.eval(&cand_e).is_zero() {
                    return Ok(Some(cand_e));
                }
            }
        }
    }
    Ok(None)
}

fn elem_from_rational(field: &Field, r: &BigRational) -> Elem {
    // Build via small integer limbs to stay exact; the values reached in
    // practice fit i64, and we fail loudly otherwise.
    let n = r.numer().to_i64().expect("rational root numerator exceeds i64");
    let d = r.denom().to_i64().expect("rational root denominator exceeds i64");
    field.from_rational(n, d).expect("nonzero denominator")
}

fn small_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let as64 = n
        .to_u64()
        .ok_or_else(|| Error::FactorizationIncomplete { degree: usize::MAX, bound: 0 })?;
    if as64 == 0 {
        return Ok(vec![BigInt::one()]);
    }
    if as64 > 1_000_000_000_000 {
        return Err(Error::FactorizationIncomplete { degree: usize::MAX, bound: 0 });
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= as64 {
        if as64 % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(as64 / d));
        }
        d += 1;
    }
    Ok(out)
}

/// Splits a monic quartic over `Q` with no rational roots into two monic
/// quadratics, or certifies irreducibility (`None`).
fn split_quartic(f: &Poly) -> Result<Option<(Poly, Poly)>> {
    let field = f.field().clone();
    // Depress: x = y - c3/4.
    let c3 = f.coeff(3);
    let shift = c3.div(&field.from_integer(4)).neg();
    let y_sub = Poly::new(field.clone(), vec![shift.clone(), field.one()]);
    let dep = compose_poly(f, &y_sub);
    let p = dep.coeff(2);
    let qq = dep.coeff(1);
    let r = dep.coeff(0);
    debug_assert!(dep.coeff(3).is_zero());

    let half = field.from_rational(1, 2).unwrap();
    let lift = |quad_dep: &Poly| -> Poly {
        // Undo the depression x = y - shift, i.e. y = x + shift.
        let back = Poly::new(field.clone(), vec![shift.neg(), field.one()]);
        compose_poly(quad_dep, &back)
    };

    if qq.is_zero() {
        // Biquadratic y^4 + p y^2 + r = (y^2 + alpha)(y^2 + beta).
        let disc = p.mul(&p).sub(&r.mul(&field.from_integer(4)));
        if let Some(s) = rational_sqrt(&disc) {
            let alpha = p.add(&s).mul(&half);
            let beta = p.sub(&s).mul(&half);
            let qa = Poly::new(field.clone(), vec![alpha, field.zero(), field.one()]);
            let qb = Poly::new(field.clone(), vec![beta, field.zero(), field.one()]);
            return Ok(Some((lift(&qa), lift(&qb))));
        }
        // (y^2 + a y + b)(y^2 - a y + b) with b^2 = r, a^2 = 2b - p.
        for sign in [1i64, -1] {
            if let Some(broot) = rational_sqrt(&r) {
                let b = broot.mul(&field.from_integer(sign));
                let a2 = b.mul(&field.from_integer(2)).sub(&p);
                if let Some(a) = rational_sqrt(&a2) {
                    let qa = Poly::new(field.clone(), vec![b.clone(), a.clone(), field.one()]);
                    let qb = Poly::new(field.clone(), vec![b, a.neg(), field.one()]);
                    return Ok(Some((lift(&qa), lift(&qb))));
                }
            }
        }
        return Ok(None);
    }

    // General case: resolve a^2 from A^3 + 2p A^2 + (p^2-4r) A - q^2 = 0.
    let resolvent = Poly::new(
        field.clone(),
        vec![
            qq.mul(&qq).neg(),
            p.mul(&p).sub(&r.mul(&field.from_integer(4))),
            p.mul(&field.from_integer(2)),
            field.one(),
        ],
    );
    if let Some(aa) = rational_root(&resolvent)? {
        if let Some(a) = rational_sqrt(&aa) {
            if !a.is_zero() {
                let sum = p.add(&aa); // b + d
                let diff = qq.div(&a); // d - b
                let b = sum.sub(&diff).mul(&half);
                let d = sum.add(&diff).mul(&half);
                let qa = Poly::new(field.clone(), vec![b, a.clone(), field.one()]);
                let qb = Poly::new(field.clone(), vec![d, a.neg(), field.one()]);
                return Ok(Some((lift(&qa), lift(&qb))));
            }
        }
        // Other rational roots of the resolvent may still be squares;
        // scan them all by deflating.
        let lin = Poly::new(field.clone(), vec![aa.neg(), field.one()]);
        let rest = resolvent.div_exact(&lin);
        for cand in quadratic_rational_roots(&rest) {
            if let Some(a) = rational_sqrt(&cand) {
                if !a.is_zero() {
                    let sum = p.add(&cand);
                    let diff = qq.div(&a);
                    let b = sum.sub(&diff).mul(&half);
                    let d = sum.add(&diff).mul(&half);
                    let qa = Poly::new(field.clone(), vec![b, a.clone(), field.one()]);
                    let qb = Poly::new(field.clone(), vec![d, a.neg(), field.one()]);
                    return Ok(Some((lift(&qa), lift(&qb))));
                }
            }
        }
    }
    Ok(None)
}

fn quadratic_rational_roots(f: &Poly) -> Vec<Elem> {
    // Roots of a monic quadratic over Q, when rational.
    let field = f.field().clone();
    if f.degree() != Some(2) {
        return vec![];
    }
    let b = f.coeff(1);
    let c = f.coeff(0);
    let disc = b.mul(&b).sub(&c.mul(&field.from_integer(4)));
    match rational_sqrt(&disc) {
        Some(s) => {
            let half = field.from_rational(1, 2).unwrap();
            vec![
                b.neg().add(&s).mul(&half),
                b.neg().sub(&s).mul(&half),
            ]
        }
        None => vec![],
    }
}

fn rational_sqrt(e: &Elem) -> Option<Elem> {
    let r = e.as_rational()?;
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(e.field().zero());
    }
    let num = r.numer().to_biguint()?;
    let den = r.denom().to_biguint()?;
    let ns = num.sqrt();
    let ds = den.sqrt();
    if &ns * &ns == num && &ds * &ds == den {
        let f = e.field();
        let n = BigInt::from(ns).to_i64()?;
        let d = BigInt::from(ds).to_i64()?;
        f.from_rational(n, d).ok()
    } else {
        None
    }
}

fn compose_poly(f: &Poly, g: &Poly) -> Poly {
    let field = f.field().clone();
    let mut acc = Poly::zero(&field);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(g).add(&Poly::constant(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares_f3() {
        let f3 = Field::prime(3).unwrap();
        let p = Poly::from_integers(&f3, &[-1, 0, 1]); // u^2 - 1
        let f = factor(&p).unwrap();
        assert!(f.lc.is_one());
        assert_eq!(f.factors.len(), 2);
        for (fac, m) in &f.factors {
            assert_eq!(*m, 1);
            assert_eq!(fac.degree(), Some(1));
        }
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn irreducible_quadratic_f2() {
        // u^2+u+1 has no roots in F_2, hence is irreducible.
        let f2 = Field::prime(2).unwrap();
        let p = Poly::from_integers(&f2, &[1, 1, 1]);
        for x in f2.elements() {
            assert!(!p.eval(&x).is_zero());
        }
        let f = factor(&p).unwrap();
        assert_eq!(f.factors, vec![(p.clone(), 1)]);
    }

    #[test]
    fn rational_factorization_with_content() {
        let q = Field::rationals();
        let p = Poly::from_integers(&q, &[-2, 0, 2]); // 2u^2 - 2
        let f = factor(&p).unwrap();
        assert_eq!(f.lc, q.from_integer(2));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn quartic_certified_irreducible() {
        let q = Field::rationals();
        // u^4 + 1 is irreducible over Q.
        let p = Poly::from_integers(&q, &[1, 0, 0, 0, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.factors, vec![(p, 1)]);
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        let q = Field::rationals();
        // (u^2+1)(u^2-2) = u^4 - u^2 - 2
        let a = Poly::from_integers(&q, &[1, 0, 1]);
        let b = Poly::from_integers(&q, &[-2, 0, 1]);
        let p = a.mul(&b);
        let f = factor(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn bound_exceeded_is_reported() {
        let q = Field::rationals();
        // u^5 - u - 1 is irreducible over Q of degree 5 > 4.
        let p = Poly::from_integers(&q, &[-1, -1, 0, 0, 0, 1]);
        match factor(&p) {
            Err(Error::FactorizationIncomplete { .. }) => {}
            other => panic!("expected incomplete factorization, got {other:?}"),
        }
    }

    #[test]
    fn big_product_over_f4_roundtrips() {
        let f4 = Field::finite_canonical(2, 2).unwrap();
        let g = f4.generator().unwrap();
        // (u - g)(u - g^2)(u^2+u+g) * u^3
        let lin1 = Poly::new(f4.clone(), vec![g.neg(), f4.one()]);
        let lin2 = Poly::new(f4.clone(), vec![g.pow(2).neg(), f4.one()]);
        let quad = Poly::new(f4.clone(), vec![g.clone(), f4.one(), f4.one()]);
        let p = lin1.mul(&lin2).mul(&quad).mul(&Poly::var(&f4).pow(3));
        let f = factor(&p).unwrap();
        assert_eq!(f.expand(), p);
        let total: usize = f
            .factors
            .iter()
            .map(|(fac, m)| fac.degree().unwrap() * m)
            .sum();
        assert_eq!(total, p.degree().unwrap());
    }

    #[test]
    fn char2_squarefree_with_pth_powers() {
        let f2 = Field::prime(2).unwrap();
        // (u^2+u+1)^2 = u^4+u^2+1 has zero derivative over F_2.
        let base = Poly::from_integers(&f2, &[1, 1, 1]);
        let p = base.pow(2);
        let f = factor(&p).unwrap();
        assert_eq!(f.factors, vec![(base, 2)]);
    }

    #[test]
    fn monic_irreducible_enumeration_counts() {
        // Over F_2 there are 1, 2, 3 irreducibles of degrees 2, 3, 4.
        let f2 = Field::prime(2).unwrap();
        assert_eq!(monic_irreducibles(&f2, 2).len(), 1);
        assert_eq!(monic_irreducibles(&f2, 3).len(), 2);
        assert_eq!(monic_irreducibles(&f2, 4).len(), 3);
    }
}
