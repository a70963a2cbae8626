//! Rational functions on `P^1` and valuations at its places.

use std::fmt;

use super::field::{Elem, Field};
use super::poly::Poly;
use crate::error::Error;
use crate::Result;

/// A reduced ratio of polynomials; the denominator is monic and nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// A closed point of `P^1` over the coefficient field: either `infinity` or
/// the vanishing locus of a monic irreducible polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlaceP1 {
    Infinity,
    Finite(Poly),
}

impl PlaceP1 {
    pub fn degree(&self) -> usize {
        match self {
            PlaceP1::Infinity => 1,
            PlaceP1::Finite(p) => p.degree().expect("place polynomial is nonzero"),
        }
    }

    /// The rational point `{a}` as a place.
    pub fn rational(a: &Elem) -> PlaceP1 {
        let field = a.field().clone();
        PlaceP1::Finite(Poly::new(field.clone(), vec![a.neg(), field.one()]))
    }

    /// For a degree-one finite place `x - a`, returns `a`.
    pub fn rational_value(&self) -> Option<Elem> {
        match self {
            PlaceP1::Finite(p) if p.degree() == Some(1) => Some(p.coeff(0).neg()),
            _ => None,
        }
    }
}

impl fmt::Display for PlaceP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceP1::Infinity => write!(f, "inf"),
            PlaceP1::Finite(p) => write!(f, "[{}]", p.to_string_with("u")),
        }
    }
}

impl fmt::Debug for PlaceP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(den.field()) };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let lcinv = den.leading_coeff().inv();
        RatFunc { num: num.scale(&lcinv), den: den.scale(&lcinv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn constant(c: Elem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The coordinate function `t`.
    pub fn var(field: &Field) -> Self {
        Self::from_poly(Poly::var(field))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Elem> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn sub_constant(&self, c: &Elem) -> RatFunc {
        self.sub(&RatFunc::constant(c.clone()))
    }

    /// Value at a point of the field; `None` at a pole.
    pub fn eval(&self, x: &Elem) -> Option<Elem> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    /// Value at `t = infinity` on `P^1`: `Some(c)` if finite, `None` for a pole.
    pub fn eval_at_infinity(&self) -> Option<Elem> {
        let dn = self.num.degree_i();
        let dd = self.den.degree_i();
        if dn > dd {
            None
        } else if dn < dd {
            Some(self.field().zero())
        } else if dn < 0 {
            Some(self.field().zero())
        } else {
            Some(self.num.leading_coeff().div(&self.den.leading_coeff()))
        }
    }

    /// Substitutes another rational function for the variable.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        // Horner over RatFunc arithmetic for num and den separately.
        let comp_poly = |p: &Poly| -> RatFunc {
            let mut acc = RatFunc::constant(p.field().zero());
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(inner).add(&RatFunc::constant(c.clone()));
            }
            acc
        };
        comp_poly(&self.num)
            .div(&comp_poly(&self.den))
            .expect("composition denominator vanished identically")
    }

    /// Order of vanishing at a place (negative for a pole). Errors on the
    /// zero function, whose valuation is undefined.
    pub fn valuation(&self, place: &PlaceP1) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::InvalidInput("valuation of the zero function".into()));
        }
        match place {
            PlaceP1::Infinity => Ok(self.den.degree_i() - self.num.degree_i()),
            PlaceP1::Finite(pi) => {
                let up = self.num.multiplicity_of(pi) as i64;
                let down = self.den.multiplicity_of(pi) as i64;
                Ok(up - down)
            }
        }
    }

    /// Pole order at a place (`0` if regular there).
    pub fn pole_order(&self, place: &PlaceP1) -> Result<i64> {
        Ok((-self.valuation(place)?).max(0))
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.to_string_with(var)
        } else {
            format!("({})/({})", self.num.to_string_with(var), self.den.to_string_with(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn valuation_at_zero_and_pole() {
        let f = RatFunc::var(&q()); // t
        let at0 = PlaceP1::rational(&q().from_integer(0));
        assert_eq!(f.valuation(&at0).unwrap(), 1);

        // 1/(t-1)^2
        let den = Poly::from_integers(&q(), &[-1, 1]).pow(2);
        let g = RatFunc::new(Poly::one(&q()), den).unwrap();
        let at1 = PlaceP1::rational(&q().from_integer(1));
        assert_eq!(g.valuation(&at1).unwrap(), -2);
    }

    #[test]
    fn valuation_at_infinity_matches_substitution_oracle() {
        // f = (t^2+1)/t has valuation -1 at infinity; oracle: substitute
        // t = 1/s and read the order at s = 0.
        let num = Poly::from_integers(&q(), &[1, 0, 1]);
        let den = Poly::var(&q());
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.valuation(&PlaceP1::Infinity).unwrap(), -1);

        let s_inv = RatFunc::new(Poly::one(&q()), Poly::var(&q())).unwrap(); // 1/s
        let g = f.compose(&s_inv);
        let at0 = PlaceP1::rational(&q().from_integer(0));
        assert_eq!(g.valuation(&at0).unwrap(), -1);
    }

    #[test]
    fn degree_sum_of_valuations_is_zero() {
        // f = t(t-1)/(t^2+1) over Q: zeros at 0, 1; poles at the conjugate
        // pair (degree 2) — the weighted sum over all places vanishes.
        let num = Poly::var(&q()).mul(&Poly::from_integers(&q(), &[-1, 1]));
        let den = Poly::from_integers(&q(), &[1, 0, 1]);
        let f = RatFunc::new(num, den).unwrap();
        let places = [
            PlaceP1::rational(&q().from_integer(0)),
            PlaceP1::rational(&q().from_integer(1)),
            PlaceP1::Finite(Poly::from_integers(&q(), &[1, 0, 1])),
            PlaceP1::Infinity,
        ];
        let total: i64 = places
            .iter()
            .map(|p| f.valuation(p).unwrap() * p.degree() as i64)
            .sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn compose_inverts() {
        // lambda(t) = 1/t is an involution.
        let lam = RatFunc::new(Poly::one(&q()), Poly::var(&q())).unwrap();
        let f = RatFunc::new(
            Poly::from_integers(&q(), &[1, 2]),
            Poly::from_integers(&q(), &[3, 0, 1]),
        )
        .unwrap();
        assert_eq!(f.compose(&lam).compose(&lam), f);
    }
}
