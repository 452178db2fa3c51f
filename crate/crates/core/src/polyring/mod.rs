//! Coefficients, monomials, orders, sparse polynomials and division.

mod division;
mod field;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use division::{divide, remainder, StandardExpression};
pub(crate) use division::reduce_unchecked;
pub use field::{is_prime, Coeff, FieldSpec};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_generators, parse_polynomial};
pub use poly::Polynomial;
pub use ring::{is_identifier, PolyRing, RingRef};
pub(crate) use ring::same_ring;
