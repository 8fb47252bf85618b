//! Sparse multivariate polynomials over exact fields.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ring;
pub mod univariate;

pub use gcd::{gcd, gcd_all, is_squarefree, lcm, squarefree_part};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{format_lines, parse_polynomial, parse_polynomial_at};
pub use polynomial::{linear_form, sum, Polynomial};
pub use ring::{Ring, RingRef};
pub use univariate::{interpolate, UniPoly};

