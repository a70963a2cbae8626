//! Finite-field extensions: construction, embeddings, norm, trace and root
//! enumeration. Everything here is desk-scale exhaustive where that is the
//! simplest correct method.

use super::factor::is_irreducible;
use super::field::{Elem, Field, FieldInner};
use super::poly::Poly;
use crate::error::Error;
use crate::Result;

/// An extension `top / base` of finite fields together with the data needed
/// to move elements around: the image of the base generator and a designated
/// root of the defining modulus.
#[derive(Clone, Debug)]
pub struct Extension {
    pub base: Field,
    pub top: Field,
    /// Image of the base field's generator inside `top` (the base generator
    /// is `x mod modulus` for extensions, or absent for prime fields).
    base_gen_image: Option<Elem>,
    /// A root in `top` of the polynomial this extension was built from.
    pub root: Elem,
}

/// Builds `base[x]/(modulus)` as a field extension. The result's `top` field
/// is presented canonically (`F_{p^(e*d)}` with the canonical modulus) and
/// `root` is a root of `modulus` inside it.
pub fn field_extend(base: &Field, modulus: &Poly) -> Result<Extension> {
    if !base.is_finite() {
        return Err(Error::InvalidInput(
            "field_extend is supported over finite fields only".into(),
        ));
    }
    if modulus.field() != base {
        return Err(Error::FieldMismatch("extension modulus".into()));
    }
    let d = modulus
        .degree()
        .ok_or_else(|| Error::InvalidInput("zero modulus".into()))?;
    if d == 0 {
        return Err(Error::InvalidInput("constant modulus".into()));
    }
    if !is_irreducible(modulus)? {
        return Err(Error::ReducibleModulus(format!("{modulus}")));
    }
    let p = base.characteristic();
    let e = base_degree(base);
    let top = Field::finite_canonical(p, e * d)?;
    let emb = embed_into(base, &top)?;
    // Find a root of the modulus (coefficients mapped through emb) in top.
    let mapped = modulus.map_coeffs(&top, &|c| emb.apply(c));
    let root = roots_in(&mapped, &top)
        .into_iter()
        .next()
        .expect("irreducible modulus must split in the degree-d extension");
    Ok(Extension {
        base: base.clone(),
        top,
        base_gen_image: emb.gen_image.clone(),
        root,
    })
}

impl Extension {
    /// Ring embedding of the base field into the top field.
    pub fn embed(&self, x: &Elem) -> Elem {
        assert!(x.field() == &self.base, "embed: element not in the base field");
        embed_with(x, &self.top, &self.base_gen_image)
    }

    /// Degree `[top : base]`.
    pub fn degree(&self) -> usize {
        base_degree(&self.top) / base_degree(&self.base)
    }

    /// Norm down to the base: the product of the Galois conjugates over base.
    pub fn norm(&self, x: &Elem) -> Elem {
        assert!(x.field() == &self.top);
        let qb = self.base.order().expect("finite base");
        let d = self.degree();
        let mut acc = self.top.one();
        let mut pw = x.clone();
        for _ in 0..d {
            acc = acc.mul(&pw);
            pw = pw.pow(qb);
        }
        self.descend(&acc).expect("norm lands in the base field")
    }

    /// Trace down to the base: the sum of the Galois conjugates over base.
    pub fn trace(&self, x: &Elem) -> Elem {
        assert!(x.field() == &self.top);
        let qb = self.base.order().expect("finite base");
        let d = self.degree();
        let mut acc = self.top.zero();
        let mut pw = x.clone();
        for _ in 0..d {
            acc = acc.add(&pw);
            pw = pw.pow(qb);
        }
        self.descend(&acc).expect("trace lands in the base field")
    }

    /// Writes an element of `top` as an element of `base` when it is fixed by
    /// the base-degree Frobenius.
    pub fn descend(&self, x: &Elem) -> Option<Elem> {
        let qb = self.base.order()?;
        if x.pow(qb) != *x {
            return None;
        }
        // The base is small: match against the embedded image.
        self.base
            .elements()
            .into_iter()
            .find(|c| self.embed(c) == *x)
    }
}

fn base_degree(field: &Field) -> usize {
    match field.inner() {
        FieldInner::Prime { .. } => 1,
        FieldInner::Finite { e, .. } => *e,
        _ => panic!("not a finite field"),
    }
}

/// An embedding `small -> big` of finite fields of the same characteristic
/// with `[small] | [big]`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub small: Field,
    pub big: Field,
    gen_image: Option<Elem>,
}

pub fn embed_into(small: &Field, big: &Field) -> Result<Embedding> {
    if small.characteristic() != big.characteristic() {
        return Err(Error::FieldMismatch("embedding across characteristics".into()));
    }
    let ds = base_degree(small);
    let db = base_degree(big);
    if db % ds != 0 {
        return Err(Error::InvalidInput(format!(
            "no embedding F_{{p^{ds}}} -> F_{{p^{db}}}"
        )));
    }
    let gen_image = match small.inner() {
        FieldInner::Prime { .. } => None,
        FieldInner::Finite { modulus, .. } => {
            // Send the generator to a root of the small modulus inside big.
            let p = small.characteristic();
            let prime = Field::prime(p)?;
            let coeffs: Vec<Elem> = modulus.iter().map(|&c| prime.from_integer(c as i64)).collect();
            let small_mod = Poly::new(prime, coeffs);
            let mapped = small_mod.map_coeffs(big, &|c| {
                big.from_integer(c.as_prime_residue().expect("prime coeff") as i64)
            });
            let root = roots_in(&mapped, big).into_iter().next().ok_or_else(|| {
                Error::InvalidInput("modulus has no root in the target field".into())
            })?;
            Some(root)
        }
        _ => unreachable!(),
    };
    Ok(Embedding { small: small.clone(), big: big.clone(), gen_image })
}

impl Embedding {
    pub fn apply(&self, x: &Elem) -> Elem {
        assert!(x.field() == &self.small, "embedding applied to a foreign element");
        embed_with(x, &self.big, &self.gen_image)
    }

    pub fn map_poly(&self, p: &Poly) -> Poly {
        p.map_coeffs(&self.big, &|c| self.apply(c))
    }
}

fn embed_with(x: &Elem, big: &Field, gen_image: &Option<Elem>) -> Elem {
    match x.as_ext_coeffs() {
        Some(coeffs) if coeffs.len() > 1 => {
            let g = gen_image.as_ref().expect("generator image for extension base");
            let mut acc = big.zero();
            for &c in coeffs.iter().rev() {
                acc = acc.mul(g).add(&big.from_integer(c as i64));
            }
            acc
        }
        _ => {
            let r = x.as_prime_residue().expect("prime subfield residue");
            big.from_integer(r as i64)
        }
    }
}

/// All roots of a polynomial in the given finite field, by exhaustive
/// evaluation (the fields in scope are small by design).
pub fn roots_in(p: &Poly, field: &Field) -> Vec<Elem> {
    assert!(p.field() == field, "roots_in: field mismatch");
    field
        .elements()
        .into_iter()
        .filter(|x| p.eval(x).is_zero())
        .collect()
}

/// Frobenius orbit of an element over the prime field, i.e. all conjugates.
pub fn frobenius_orbit(x: &Elem) -> Vec<Elem> {
    let p = x.field().characteristic();
    let mut out = vec![x.clone()];
    let mut cur = x.pow(p);
    while cur != *x {
        out.push(cur.clone());
        cur = cur.pow(p);
    }
    out
}

/// Canonical sort key for finite-field elements (used to pick orbit
/// representatives deterministically).
pub fn elem_key(x: &Elem) -> Vec<u64> {
    if let Some(coeffs) = x.as_ext_coeffs() {
        let mut k = vec![coeffs.len() as u64];
        k.extend_from_slice(coeffs);
        k
    } else if let Some(r) = x.as_prime_residue() {
        vec![1, r]
    } else {
        panic!("elem_key on an infinite-field element")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_norm_of_generator_is_one() {
        // F_2 extended by x^2+x+1 gives F_4; the class of x has norm
        // x * x^2 = x^3 = 1.
        let f2 = Field::prime(2).unwrap();
        let modulus = Poly::from_integers(&f2, &[1, 1, 1]);
        let ext = field_extend(&f2, &modulus).unwrap();
        assert_eq!(ext.degree(), 2);
        let n = ext.norm(&ext.root);
        assert!(n.is_one());
        assert!(ext.norm(&ext.top.one()).is_one());
    }

    #[test]
    fn roots_of_quadratic_over_f4() {
        // t^2+t+1 splits over F_4 into the two non-trivial cube roots of 1.
        let f4 = Field::finite_canonical(2, 2).unwrap();
        let p = Poly::from_integers(&f4, &[1, 1, 1]);
        let roots = roots_in(&p, &f4);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(r.pow(3).is_one());
            assert!(!r.is_one());
        }
    }

    #[test]
    fn embedding_is_ring_hom() {
        let f2 = Field::prime(2).unwrap();
        let f4 = Field::finite_canonical(2, 2).unwrap();
        let f16 = Field::finite_canonical(2, 4).unwrap();
        let emb = embed_into(&f4, &f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(emb.apply(&a.add(&b)), emb.apply(&a).add(&emb.apply(&b)));
                assert_eq!(emb.apply(&a.mul(&b)), emb.apply(&a).mul(&emb.apply(&b)));
            }
        }
        let _ = f2;
    }

    #[test]
    fn norm_is_multiplicative_f9_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let modulus = Poly::from_integers(&f3, &[1, 0, 1]); // x^2 + 1
        let ext = field_extend(&f3, &modulus).unwrap();
        let elems = ext.top.elements();
        for a in &elems {
            for b in &elems {
                assert_eq!(ext.norm(&a.mul(b)), ext.norm(a).mul(&ext.norm(b)));
            }
        }
    }

    #[test]
    fn extension_of_extension_lands_in_composite() {
        // F_4 extended by a degree-2 irreducible gives F_16.
        let f4 = Field::finite_canonical(2, 2).unwrap();
        let quad = super::super::factor::monic_irreducibles(&f4, 2)
            .into_iter()
            .next()
            .unwrap();
        let ext = field_extend(&f4, &quad).unwrap();
        assert_eq!(ext.top.order(), Some(16));
        let mapped = quad.map_coeffs(&ext.top, &|c| ext.embed(c));
        assert!(mapped.eval(&ext.root).is_zero());
    }
}
