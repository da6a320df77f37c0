//! Exact arithmetic over a prime field: variables indexed by matrix cells,
//! monomials in the skew-diagonal lex order, sparse polynomials and minors.

mod field;
mod monomial;
mod polynomial;

pub use field::{FieldElem, PrimeField, DEFAULT_PRIME};
pub use monomial::{compare_monomials, compare_vars, Monomial, Variable};
pub use polynomial::{minor_determinant, Polynomial};
