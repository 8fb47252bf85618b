//! Discriminant loci, dual varieties and jumping sets of linear systems of
//! homogeneous polynomials, computed exactly.
//!
//! The algebra is generic over [`Field`]; the aliases below fix the two
//! fields used in practice.

pub mod catalog;
pub mod cli;
pub mod duality;
pub mod error;
pub mod field;
pub mod ideals;
pub mod linalg;
pub mod numerics;
pub mod polyring;
pub mod report;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use polyring::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// Default fast prime field.
pub type Gf32003 = Fp<32003>;
/// Second prime used for consistency checks.
pub type Gf65537 = Fp<65537>;

pub type QPoly = Polynomial<Rational>;
pub type GfPoly = Polynomial<Gf32003>;
