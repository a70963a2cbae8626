//! Exact computer algebra for zero-cycles with modulus.
//!
//! The crate provides, bottom up:
//!
//! * [`algebra`] — exact coefficient fields (`Q`, `F_p`, `F_{p^e}`, one
//!   transcendental extension), dense univariate polynomials, rational
//!   functions, places of the projective line, resultants and factorization.
//! * [`witt`] — truncated big Witt rings `W_m(k)` with two independent
//!   `⋆`-product algorithms (ghost coordinates and generator decomposition).
//! * [`divisor`] — zero-cycles on the line, the `div` correspondence with
//!   Witt vectors, multiplicative convolution and pushforward/pullback along
//!   power maps, inversion and polynomial self-maps of `P^1`.
//! * [`cubical`] — cubical abelian groups given by integer matrices, the
//!   reduced/degenerate splitting, chain complexes over `Z` and homology via
//!   Smith normal form.
//! * [`cycles`] — modulus pairs, parametrized curves, the modulus-condition
//!   checkers, boundaries, the rigidity shift, the Witt action on cycles,
//!   the vanishing homotopy and powered generic translation.
//! * [`chow`] — the batch computation of `CH_0` of the line with modulus
//!   over small finite fields, operation tables and the invariant suite.

pub mod algebra;
pub mod chow;
pub mod cubical;
pub mod cycles;
pub mod divisor;
pub mod error;
pub mod par;
pub mod suite;
pub mod witt;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
