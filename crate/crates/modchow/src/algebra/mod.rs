//! Exact coefficient-field and univariate-polynomial arithmetic.

pub mod ext;
pub mod factor;
pub mod field;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod resultant;

pub use ext::{embed_into, field_extend, frobenius_orbit, roots_in, Embedding, Extension};
pub use factor::{factor, factor_bounded, is_irreducible, monic_irreducibles, Factorization};
pub use field::{Elem, Field, FieldInner};
pub use poly::Poly;
pub use ratfunc::{PlaceP1, RatFunc};
pub use resultant::{resultant, resultant_bivariate, resultant_sylvester};
