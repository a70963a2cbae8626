//! Zero-cycles on the line and the `div` correspondence with Witt vectors.
//!
//! A zero-cycle is a `Z`-linear combination of closed points of `A^1`
//! (monic irreducible polynomials), here always supported away from `{u=0}`.
//! The multiplicative convolution is the pushforward along the
//! multiplication map `(t, u) -> tu`; on the Witt side it corresponds to the
//! `⋆`-product under `div`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::ext::{elem_key, embed_into, frobenius_orbit};
use crate::algebra::{factor, resultant_bivariate, Elem, Field, PlaceP1, Poly, RatFunc};
use crate::error::Error;
use crate::witt::WittVector;
use crate::Result;

/// A zero-cycle on `A^1`.
///
/// Keys are monic irreducible polynomials, ordered canonically by their
/// display string so iteration and equality are deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct ZeroCycleA1 {
    field: Field,
    terms: BTreeMap<String, (Poly, i64)>,
}

impl ZeroCycleA1 {
    pub fn zero(field: &Field) -> Self {
        ZeroCycleA1 { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Single place with multiplicity.
    pub fn place(poly: Poly, mult: i64) -> Result<Self> {
        let field = poly.field().clone();
        let mut z = Self::zero(&field);
        z.add_place(poly, mult)?;
        Ok(z)
    }

    /// The rational point `{a}`.
    pub fn rational_point(a: &Elem, mult: i64) -> Result<Self> {
        let field = a.field().clone();
        let poly = Poly::new(field.clone(), vec![a.neg(), field.one()]);
        Self::place(poly, mult)
    }

    pub fn add_place(&mut self, poly: Poly, mult: i64) -> Result<()> {
        if mult == 0 {
            return Ok(());
        }
        let poly = poly.monic();
        if poly.is_constant() {
            return Err(Error::InvalidInput("constant cannot be a place".into()));
        }
        if !factor::is_irreducible(&poly)? {
            return Err(Error::InvalidInput(format!("{poly} is not irreducible")));
        }
        let key = format!("{poly}");
        let entry = self.terms.entry(key.clone()).or_insert_with(|| (poly, 0));
        entry.1 += mult;
        if entry.1 == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn add(&self, other: &ZeroCycleA1) -> ZeroCycleA1 {
        let mut out = self.clone();
        for (poly, mult) in other.iter() {
            let key = format!("{poly}");
            let entry = out.terms.entry(key.clone()).or_insert_with(|| (poly.clone(), 0));
            entry.1 += mult;
            if entry.1 == 0 {
                out.terms.remove(&key);
            }
        }
        out
    }

    pub fn neg(&self) -> ZeroCycleA1 {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            v.1 = -v.1;
        }
        out
    }

    pub fn sub(&self, other: &ZeroCycleA1) -> ZeroCycleA1 {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: i64) -> ZeroCycleA1 {
        if n == 0 {
            return Self::zero(&self.field);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            v.1 *= n;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Poly, i64)> {
        self.terms.values().map(|(p, m)| (p, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum mult * deg(place)`.
    pub fn degree(&self) -> i64 {
        self.iter()
            .map(|(p, m)| m * p.degree().unwrap_or(0) as i64)
            .sum()
    }

    pub fn is_effective(&self) -> bool {
        self.iter().all(|(_, m)| m > 0)
    }

    /// True when no place equals `{u=0}`.
    pub fn avoids_zero(&self) -> bool {
        self.iter().all(|(p, _)| !p.coeff(0).is_zero())
    }

    fn require_avoids_zero(&self) -> Result<()> {
        if self.avoids_zero() {
            Ok(())
        } else {
            Err(Error::SupportAtExcludedPoint("u=0".into()))
        }
    }
}

impl fmt::Display for ZeroCycleA1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(p, m)| format!("{m}*[{}]", p.to_string_with("u")))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ZeroCycleA1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// div and its inverse
// ---------------------------------------------------------------------------

/// `div(f)` for `f` with constant term 1: the divisor of roots, a cycle
/// supported away from `{u=0}` of degree `deg f`.
pub fn div_witt(f: &Poly) -> Result<ZeroCycleA1> {
    if !f.coeff(0).is_one() {
        return Err(Error::InvalidInput("div needs constant term 1".into()));
    }
    let field = f.field().clone();
    let mut out = ZeroCycleA1::zero(&field);
    if f.is_constant() {
        return Ok(out);
    }
    let fac = factor::factor(f)?;
    for (pi, mult) in fac.factors {
        out.add_place(pi, mult as i64)?;
    }
    debug_assert_eq!(out.degree(), f.degree().unwrap_or(0) as i64);
    Ok(out)
}

/// `div` of a Witt vector's representative polynomial.
pub fn div_witt_vector(w: &WittVector) -> Result<ZeroCycleA1> {
    div_witt(&w.poly())
}

/// Inverse of `div` on effective cycles avoiding `{u=0}`:
/// `[place pi] -> pi(u)/pi(0)`, extended multiplicatively.
pub fn witt_of_cycle(alpha: &ZeroCycleA1) -> Result<Poly> {
    alpha.require_avoids_zero()?;
    if !alpha.is_effective() {
        return Err(Error::InvalidInput(
            "negative multiplicity: use witt_ratfunc_of_cycle for the rational form".into(),
        ));
    }
    let field = alpha.field().clone();
    let mut out = Poly::one(&field);
    for (pi, mult) in alpha.iter() {
        let normalized = pi.scale(&pi.coeff(0).inv());
        out = out.mul(&normalized.pow(mult as usize));
    }
    Ok(out)
}

/// Rational-function form of the inverse of `div`, defined for any cycle
/// avoiding `{u=0}`.
pub fn witt_ratfunc_of_cycle(alpha: &ZeroCycleA1) -> Result<RatFunc> {
    alpha.require_avoids_zero()?;
    let field = alpha.field().clone();
    let mut num = Poly::one(&field);
    let mut den = Poly::one(&field);
    for (pi, mult) in alpha.iter() {
        let normalized = pi.scale(&pi.coeff(0).inv());
        if mult > 0 {
            num = num.mul(&normalized.pow(mult as usize));
        } else {
            den = den.mul(&normalized.pow((-mult) as usize));
        }
    }
    RatFunc::new(num, den)
}

/// The class of a cycle in `W_m`: the truncated series of its witt
/// rational function.
pub fn witt_class_of_cycle(alpha: &ZeroCycleA1, m: usize) -> Result<WittVector> {
    let r = witt_ratfunc_of_cycle(alpha)?;
    let num_series = WittVector::from_poly(r.num(), m)?;
    let den_series = WittVector::from_poly(r.den(), m)?;
    num_series.sub(&den_series)
}

// ---------------------------------------------------------------------------
// multiplicative convolution
// ---------------------------------------------------------------------------

/// Pushforward of `alpha x beta` along `(t, u) -> tu`, computed on place
/// pairs by the resultant formula
/// `conv([div a], [div b]) = div( Res_t(a(t), t^{deg b} b(u/t)) / const )`
/// and extended bilinearly.
pub fn mult_convolution(alpha: &ZeroCycleA1, beta: &ZeroCycleA1) -> Result<ZeroCycleA1> {
    alpha.require_avoids_zero()?;
    beta.require_avoids_zero()?;
    let field = alpha.field().clone();
    if field != *beta.field() {
        return Err(Error::FieldMismatch("convolution over different fields".into()));
    }
    let mut out = ZeroCycleA1::zero(&field);
    for (pa, ma) in alpha.iter() {
        for (pb, mb) in beta.iter() {
            let c = convolve_places(pa, pb)?;
            out = out.add(&c.scale(ma * mb));
        }
    }
    Ok(out)
}

fn convolve_places(pa: &Poly, pb: &Poly) -> Result<ZeroCycleA1> {
    let field = pa.field().clone();
    // a(t) = witt poly of pa (constant term 1), likewise b.
    let a = pa.scale(&pa.coeff(0).inv());
    let b = pb.scale(&pb.coeff(0).inv());
    let db = b.degree().unwrap();
    // B(t, u) = t^{db} * b(u/t) as a polynomial in t with k[u] coefficients:
    // sum_j b_j u^j t^{db - j}.
    let u = Poly::var(&field);
    let mut bt: Vec<Poly> = vec![Poly::zero(&field); db + 1];
    for (j, c) in b.coeffs().iter().enumerate() {
        bt[db - j] = u.pow(j).scale(c);
    }
    // a(t) has constant k[u]-coefficients.
    let at: Vec<Poly> = a.coeffs().iter().map(|c| Poly::constant(c.clone())).collect();
    let res = resultant_bivariate(&at, &bt, &field);
    let c0 = res.coeff(0);
    if c0.is_zero() {
        return Err(Error::SupportAtExcludedPoint("u=0 in convolution image".into()));
    }
    div_witt(&res.scale(&c0.inv()))
}

/// Independent oracle for the convolution: enumerate geometric points in a
/// common extension field, multiply coordinates, push down to closed points
/// by grouping Frobenius orbits. Finite fields only.
pub fn mult_convolution_oracle(alpha: &ZeroCycleA1, beta: &ZeroCycleA1) -> Result<ZeroCycleA1> {
    alpha.require_avoids_zero()?;
    beta.require_avoids_zero()?;
    let field = alpha.field().clone();
    if !field.is_finite() {
        return Err(Error::InvalidInput("oracle route needs a finite field".into()));
    }
    let p = field.characteristic();
    let base_e = ext_degree(&field);
    let mut out = ZeroCycleA1::zero(&field);
    for (pa, ma) in alpha.iter() {
        for (pb, mb) in beta.iter() {
            let da = pa.degree().unwrap();
            let db = pb.degree().unwrap();
            let l = num_integer::lcm(da, db);
            let big = Field::finite_canonical(p, base_e * l)?;
            let into_big = embed_into(&field, &big)?;
            let pa_big = into_big.map_poly(pa);
            let pb_big = into_big.map_poly(pb);
            let roots_a = crate::algebra::roots_in(&pa_big, &big);
            let roots_b = crate::algebra::roots_in(&pb_big, &big);
            assert_eq!(roots_a.len(), da);
            assert_eq!(roots_b.len(), db);
            let mut products: Vec<Elem> = Vec::new();
            for ra in &roots_a {
                for rb in &roots_b {
                    products.push(ra.mul(rb));
                }
            }
            // Group into Frobenius orbits over the original field.
            let q = field.order().unwrap();
            let mut remaining = products;
            while let Some(x) = remaining.first().cloned() {
                let mut orbit = vec![x.clone()];
                let mut cur = x.pow(q);
                while cur != x {
                    orbit.push(cur.clone());
                    cur = cur.pow(q);
                }
                let mut mp = Poly::one(&big);
                for c in &orbit {
                    mp = mp.mul(&Poly::new(big.clone(), vec![c.neg(), big.one()]));
                }
                let mp_small = descend_poly(&mp, &field, &into_big)?;
                let count_before = remaining.len();
                remaining.retain(|y| !orbit.contains(y));
                let removed = count_before - remaining.len();
                debug_assert_eq!(removed % orbit.len(), 0);
                let copies = removed / orbit.len();
                out = out.add(&ZeroCycleA1::place(mp_small, (copies as i64) * ma * mb)?);
            }
        }
    }
    Ok(out)
}

fn descend_poly(p: &Poly, small: &Field, emb: &crate::algebra::Embedding) -> Result<Poly> {
    let mut coeffs = Vec::new();
    for c in p.coeffs() {
        let found = small
            .elements()
            .into_iter()
            .find(|s| emb.apply(s) == *c)
            .ok_or_else(|| Error::InvalidInput("coefficient not in the base field".into()))?;
        coeffs.push(found);
    }
    Ok(Poly::new(small.clone(), coeffs))
}

// ---------------------------------------------------------------------------
// pushforward / pullback along the standard maps
// ---------------------------------------------------------------------------

/// Pushforward along `t -> t^d`: roots are raised to the `d`-th power.
/// Degree is preserved.
pub fn pushforward_power(alpha: &ZeroCycleA1, d: usize) -> Result<ZeroCycleA1> {
    assert!(d >= 1);
    let field = alpha.field().clone();
    let mut out = ZeroCycleA1::zero(&field);
    for (pi, m) in alpha.iter() {
        // Res_t(pi(t), u - t^d) = prod (u - theta^d)
        let at: Vec<Poly> = pi.coeffs().iter().map(|c| Poly::constant(c.clone())).collect();
        let mut bt: Vec<Poly> = vec![Poly::zero(&field); d + 1];
        bt[0] = Poly::var(&field);
        bt[d] = Poly::constant(field.from_integer(-1));
        let res = resultant_bivariate(&at, &bt, &field).monic();
        let fac = factor::factor(&res)?;
        for (rho, mult) in fac.factors {
            out.add_place(rho, mult as i64 * m)?;
        }
    }
    debug_assert_eq!(out.degree(), alpha.degree());
    Ok(out)
}

/// Pullback along `t -> t^d`: `[div pi(u)] -> div pi(t^d)`. Degree times `d`.
pub fn pullback_power(alpha: &ZeroCycleA1, d: usize) -> Result<ZeroCycleA1> {
    assert!(d >= 1);
    let field = alpha.field().clone();
    let mut out = ZeroCycleA1::zero(&field);
    for (pi, m) in alpha.iter() {
        let composed = pi.compose_power(d);
        let fac = factor::factor(&composed)?;
        for (rho, mult) in fac.factors {
            out.add_place(rho, mult as i64 * m)?;
        }
    }
    debug_assert_eq!(out.degree(), alpha.degree() * d as i64);
    Ok(out)
}

/// Pullback along the inversion `t -> 1/t`: reverse coefficients and
/// normalize monic. An involution on cycles avoiding `{u=0}`.
pub fn pullback_inversion(alpha: &ZeroCycleA1) -> Result<ZeroCycleA1> {
    alpha.require_avoids_zero()?;
    let field = alpha.field().clone();
    let mut out = ZeroCycleA1::zero(&field);
    for (pi, m) in alpha.iter() {
        out.add_place(pi.reversed().monic(), m)?;
    }
    Ok(out)
}

/// A finite self-map of `P^1` given by a polynomial `f` with `f(0) != 0`,
/// extended by `[U0 : U1] -> [U0^deg : U0^deg f(U1/U0)]`; fixes `infinity`
/// with ramification `deg f`.
#[derive(Clone, Debug)]
pub struct PolyMapP1 {
    f: Poly,
}

impl PolyMapP1 {
    pub fn new(f: Poly) -> Result<Self> {
        if f.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidInput("constant map".into()));
        }
        if f.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "f(0) = 0: use the dedicated power-map operations".into(),
            ));
        }
        Ok(PolyMapP1 { f })
    }

    pub fn poly(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }
}

/// A divisor on `P^1`: a finite-part cycle plus a multiplicity at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorP1 {
    pub finite: ZeroCycleA1,
    pub at_infinity: i64,
}

impl DivisorP1 {
    pub fn degree(&self) -> i64 {
        self.finite.degree() + self.at_infinity
    }

    /// Coefficient at `{u=0}` (zero if absent).
    pub fn coeff_at_zero(&self) -> i64 {
        self.finite
            .iter()
            .find(|(p, _)| p.coeff(0).is_zero())
            .map(|(_, m)| m)
            .unwrap_or(0)
    }
}

/// Pushforward of a cycle along a polynomial self-map.
pub fn pushforward_polymap(alpha: &ZeroCycleA1, map: &PolyMapP1) -> Result<ZeroCycleA1> {
    let field = alpha.field().clone();
    let mut out = ZeroCycleA1::zero(&field);
    for (pi, m) in alpha.iter() {
        // Res_t(pi(t), u - f(t))
        let at: Vec<Poly> = pi.coeffs().iter().map(|c| Poly::constant(c.clone())).collect();
        let deg_f = map.degree();
        let mut bt: Vec<Poly> = vec![Poly::zero(&field); deg_f + 1];
        for (j, c) in map.f.coeffs().iter().enumerate() {
            bt[j] = Poly::constant(c.neg());
        }
        bt[0] = bt[0].add(&Poly::var(&field));
        let res = resultant_bivariate(&at, &bt, &field).monic();
        let fac = factor::factor(&res)?;
        for (rho, mult) in fac.factors {
            out.add_place(rho, mult as i64 * m)?;
        }
    }
    debug_assert_eq!(out.degree(), alpha.degree());
    Ok(out)
}

/// The fiber `F^*{point}` as a divisor on `P^1`, including the multiplicity
/// at infinity dictated by the homogeneous extension (`F` is totally
/// ramified over infinity; fibers of finite points stay finite).
///
/// For `f = 1 + u^m g(u)` the fiber over `{1}` satisfies
/// `F^*{1} >= m * {0}`, which is asserted.
pub fn fiber_divisor(map: &PolyMapP1, point: &PlaceP1) -> Result<DivisorP1> {
    let field = map.f.field().clone();
    match point {
        PlaceP1::Infinity => Ok(DivisorP1 {
            finite: ZeroCycleA1::zero(&field),
            at_infinity: map.degree() as i64,
        }),
        PlaceP1::Finite(pi) => {
            // div of pi(f(u)): all u with f(u) in V(pi).
            let composed = compose_into(pi, &map.f);
            let fac = factor::factor(&composed)?;
            let mut finite = ZeroCycleA1::zero(&field);
            for (rho, mult) in fac.factors {
                finite.add_place(rho, mult as i64)?;
            }
            let div = DivisorP1 { finite, at_infinity: 0 };
            if pi.degree() == Some(1) && pi.coeff(0).add(&field.one()).is_zero() {
                // fiber over {1}: check F*{1} >= m{0} with m = ord_u(f - 1)
                let m = map.f.sub(&Poly::one(&field)).order_at_zero() as i64;
                assert!(div.coeff_at_zero() >= m, "fiber over 1 violates the zero bound");
            }
            Ok(div)
        }
    }
}

fn compose_into(outer: &Poly, inner: &Poly) -> Poly {
    let field = outer.field().clone();
    let mut acc = Poly::zero(&field);
    for c in outer.coeffs().iter().rev() {
        acc = acc.mul(inner).add(&Poly::constant(c.clone()));
    }
    acc
}

/// Products `root(place) * value` grouped into Frobenius orbits over the
/// prime field; used by the Witt action on point cycles. Returns orbit
/// representatives (in a canonical extension) with their orbit sizes.
pub fn conjugate_scale_points(place: &Poly, value: &Elem) -> Result<Vec<(Elem, usize)>> {
    let field = place.field().clone();
    let vfield = value.field().clone();
    assert_eq!(field.characteristic(), vfield.characteristic());
    let p = field.characteristic();
    let e_place = place.degree().unwrap();
    let e_val = ext_degree(&vfield);
    let e_base = ext_degree(&field);
    let l = num_integer::lcm(e_base * e_place, e_val.max(1));
    let big = Field::finite_canonical(p, l)?;
    let emb_place = embed_into(&field, &big)?;
    let emb_val = embed_into(&vfield, &big)?;
    let roots = crate::algebra::roots_in(&emb_place.map_poly(place), &big);
    let v = emb_val.apply(value);
    let mut out = Vec::new();
    for r in roots {
        let prod = r.mul(&v);
        let orbit = frobenius_orbit(&prod);
        let rep = orbit.iter().min_by_key(|x| elem_key(x)).unwrap().clone();
        out.push((rep, orbit.len()));
    }
    Ok(out)
}

pub(crate) fn ext_degree(f: &Field) -> usize {
    match f.inner() {
        crate::algebra::FieldInner::Prime { .. } => 1,
        crate::algebra::FieldInner::Finite { e, .. } => *e,
        _ => panic!("not finite"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn div_of_one_minus_u_is_the_unit_point() {
        // div(1-u) = [{1}]
        let f = q();
        let p = Poly::from_integers(&f, &[1, -1]);
        let d = div_witt(&p).unwrap();
        let expect = ZeroCycleA1::rational_point(&f.one(), 1).unwrap();
        assert_eq!(d, expect);

        // div(1+u) = [{-1}]
        let p2 = Poly::from_integers(&f, &[1, 1]);
        let d2 = div_witt(&p2).unwrap();
        assert_eq!(d2, ZeroCycleA1::rational_point(&f.from_integer(-1), 1).unwrap());
    }

    #[test]
    fn div_of_irreducible_quadratic_over_f2() {
        let p = Poly::from_integers(&f2(), &[1, 1, 1]);
        let d = div_witt(&p).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.degree(), 2);
    }

    #[test]
    fn witt_of_cycle_round_trips() {
        // [{1}] -> 1-u, and div . witt_of_cycle = id on effective cycles
        let f = q();
        let c = ZeroCycleA1::rational_point(&f.one(), 1).unwrap();
        let w = witt_of_cycle(&c).unwrap();
        assert_eq!(w, Poly::from_integers(&f, &[1, -1]));
        assert_eq!(div_witt(&w).unwrap(), c);

        // multiplicativity on rational points {a}, {b}
        let a = f.from_integer(2);
        let b = f.from_integer(5);
        let ca = ZeroCycleA1::rational_point(&a, 1).unwrap();
        let cb = ZeroCycleA1::rational_point(&b, 1).unwrap();
        let w2 = witt_of_cycle(&ca.add(&cb)).unwrap();
        assert_eq!(w2, witt_of_cycle(&ca).unwrap().mul(&witt_of_cycle(&cb).unwrap()));

        // over F_2: place u^2+u+1 -> 1+u+u^2 (pi(0) = 1)
        let pi = Poly::from_integers(&f2(), &[1, 1, 1]);
        let c3 = ZeroCycleA1::place(pi.clone(), 1).unwrap();
        assert_eq!(witt_of_cycle(&c3).unwrap(), pi);
    }

    #[test]
    fn support_at_zero_is_rejected() {
        let f = q();
        let c = ZeroCycleA1::rational_point(&f.zero(), 1).unwrap();
        assert!(matches!(
            witt_of_cycle(&c),
            Err(Error::SupportAtExcludedPoint(_))
        ));
    }

    #[test]
    fn convolution_of_rational_points_multiplies() {
        let f = q();
        let a = f.from_integer(2);
        let b = f.from_integer(3);
        let ca = ZeroCycleA1::rational_point(&a, 1).unwrap();
        let cb = ZeroCycleA1::rational_point(&b, 1).unwrap();
        let c = mult_convolution(&ca, &cb).unwrap();
        assert_eq!(c, ZeroCycleA1::rational_point(&f.from_integer(6), 1).unwrap());

        // conv([{1/2}], [{1/3}]) = [{1/6}]
        let h = |n, d| f.from_rational(n, d).unwrap();
        let c2 = mult_convolution(
            &ZeroCycleA1::rational_point(&h(1, 2), 1).unwrap(),
            &ZeroCycleA1::rational_point(&h(1, 3), 1).unwrap(),
        )
        .unwrap();
        assert_eq!(c2, ZeroCycleA1::rational_point(&h(1, 6), 1).unwrap());
    }

    #[test]
    fn convolution_of_quadratic_place_with_itself_over_f2() {
        // [pi] * [pi] for pi = u^2+u+1 over F_2: products of the primitive
        // cube roots land on omega^2 (a conjugate pair) and on 1 twice.
        let pi = Poly::from_integers(&f2(), &[1, 1, 1]);
        let c = ZeroCycleA1::place(pi.clone(), 1).unwrap();
        let conv = mult_convolution(&c, &c).unwrap();
        let oracle = mult_convolution_oracle(&c, &c).unwrap();
        assert_eq!(conv, oracle);
        assert_eq!(conv.degree(), 4);
        let unit_mult = conv
            .iter()
            .find(|(p, _)| p.degree() == Some(1) && p.coeff(0).is_one())
            .map(|(_, m)| m);
        assert_eq!(unit_mult, Some(2));
    }

    #[test]
    fn convolution_degree_is_multiplicative() {
        let f3 = Field::prime(3).unwrap();
        let pi2 = Poly::from_integers(&f3, &[1, 0, 1]); // u^2+1 irreducible over F_3
        let a = ZeroCycleA1::place(pi2, 2).unwrap();
        let b = ZeroCycleA1::rational_point(&f3.from_integer(2), 3).unwrap();
        let c = mult_convolution(&a, &b).unwrap();
        assert_eq!(c.degree(), a.degree() * b.degree());
    }

    #[test]
    fn pushforward_pullback_power() {
        let f = q();
        // pullback of [{1}] along t -> t^3 is div(t^3 - 1)
        let one_pt = ZeroCycleA1::rational_point(&f.one(), 1).unwrap();
        let pb = pullback_power(&one_pt, 3).unwrap();
        assert_eq!(pb.degree(), 3);
        // pushforward of [{a}] is [{a^d}]
        let a = f.from_integer(2);
        let pf = pushforward_power(&ZeroCycleA1::rational_point(&a, 1).unwrap(), 4).unwrap();
        assert_eq!(pf, ZeroCycleA1::rational_point(&a.pow(4), 1).unwrap());
        // pushforward . pullback = d * id
        let f3 = Field::prime(3).unwrap();
        let c = ZeroCycleA1::rational_point(&f3.from_integer(-1), 1).unwrap();
        let round = pushforward_power(&pullback_power(&c, 2).unwrap(), 2).unwrap();
        assert_eq!(round, c.scale(2));
    }

    #[test]
    fn inversion_is_an_involution() {
        let f = q();
        // [{2}] -> [{1/2}]
        let c = ZeroCycleA1::rational_point(&f.from_integer(2), 1).unwrap();
        let inv = pullback_inversion(&c).unwrap();
        assert_eq!(
            inv,
            ZeroCycleA1::rational_point(&f.from_rational(1, 2).unwrap(), 1).unwrap()
        );
        assert_eq!(pullback_inversion(&inv).unwrap(), c);

        // self-reciprocal place over F_2
        let pi = Poly::from_integers(&f2(), &[1, 1, 1]);
        let c2 = ZeroCycleA1::place(pi, 1).unwrap();
        assert_eq!(pullback_inversion(&c2).unwrap(), c2);
    }

    #[test]
    fn polymap_fiber_and_pushforward() {
        // f = 1+u^3 over F_2: fiber over {1} is 3*[{0}]
        let f = Poly::from_integers(&f2(), &[1, 0, 0, 1]);
        let map = PolyMapP1::new(f).unwrap();
        let fib = fiber_divisor(&map, &PlaceP1::rational(&f2().one())).unwrap();
        assert_eq!(fib.coeff_at_zero(), 3);
        assert_eq!(fib.at_infinity, 0);
        assert_eq!(fib.degree(), 3);

        // fiber over infinity: d * [infinity]
        let fib_inf = fiber_divisor(&map, &PlaceP1::Infinity).unwrap();
        assert_eq!(fib_inf.at_infinity, 3);

        // pushforward along f of [{0}] is [{f(0)}] = [{1}]
        let zero_pt = ZeroCycleA1::rational_point(&f2().zero(), 1).unwrap();
        let pushed = pushforward_polymap(&zero_pt, &map).unwrap();
        assert_eq!(pushed, ZeroCycleA1::rational_point(&f2().one(), 1).unwrap());

        // pushforward along 1+u^2 over F_3 of [{1}] is [{2}]
        let f3 = Field::prime(3).unwrap();
        let g = Poly::from_integers(&f3, &[1, 0, 1]);
        let map3 = PolyMapP1::new(g).unwrap();
        let pushed3 = pushforward_polymap(
            &ZeroCycleA1::rational_point(&f3.one(), 1).unwrap(),
            &map3,
        )
        .unwrap();
        assert_eq!(pushed3, ZeroCycleA1::rational_point(&f3.from_integer(2), 1).unwrap());
    }

    #[test]
    fn div_intertwines_star_and_convolution() {
        // div(f ⋆ g) = conv(div f, div g) over F_2, degree <= 3 samples
        let f = f2();
        let polys = [
            Poly::from_integers(&f, &[1, 1]),
            Poly::from_integers(&f, &[1, 1, 1]),
            Poly::from_integers(&f, &[1, 0, 1, 1]),
            Poly::from_integers(&f, &[1, 1, 0, 1]),
        ];
        for a in &polys {
            for b in &polys {
                let n = a.degree().unwrap() * b.degree().unwrap();
                let wa = WittVector::from_poly(a, n).unwrap();
                let wb = WittVector::from_poly(b, n).unwrap();
                let star = wa.star_generators(&wb).unwrap();
                let lhs = div_witt(&star.poly()).unwrap();
                let rhs =
                    mult_convolution(&div_witt(a).unwrap(), &div_witt(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn generator_rule_at_cycle_level() {
        // conv of div(1-a u^m)-style cycles matches d*div(1-a^{n/d}b^{m/d}t^{mn/d})
        let f5 = Field::prime(5).unwrap();
        for m in 1..=3usize {
            for n in 1..=3usize {
                for a in 1..5i64 {
                    for b in 1..5i64 {
                        let pa = {
                            let mut v = vec![1i64];
                            v.resize(m, 0);
                            v.push(-a);
                            Poly::from_integers(&f5, &v)
                        };
                        let pb = {
                            let mut v = vec![1i64];
                            v.resize(n, 0);
                            v.push(-b);
                            Poly::from_integers(&f5, &v)
                        };
                        let d = num_integer::gcd(m, n);
                        let l = m / d * n;
                        let ae = f5.from_integer(a).pow((n / d) as u64);
                        let be = f5.from_integer(b).pow((m / d) as u64);
                        let c = ae.mul(&be);
                        let target = {
                            let mut v = vec![f5.one()];
                            v.resize(l, f5.zero());
                            v.push(c.neg());
                            Poly::new(f5.clone(), v)
                        };
                        let lhs = mult_convolution(
                            &div_witt(&pa).unwrap(),
                            &div_witt(&pb).unwrap(),
                        )
                        .unwrap();
                        let rhs = div_witt(&target).unwrap().scale(d as i64);
                        assert_eq!(lhs, rhs, "m={m} n={n} a={a} b={b}");
                    }
                }
            }
        }
    }
}
