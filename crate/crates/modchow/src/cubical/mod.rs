//! Cubical abelian groups, chain complexes over `Z`, Smith normal form and
//! homology.

pub mod complex;
pub mod group;
pub mod matrix;
pub mod snf;

pub use complex::{ChainComplexOverZ, HomologyGroup};
pub use group::CubicalGroup;
pub use matrix::IntMat;
pub use snf::{rank, smith_normal_form, Snf};
