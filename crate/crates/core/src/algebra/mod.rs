//! Exact rational arithmetic and multivariate polynomials.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use gcd::{gcd, squarefree_part, squarefree_test};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::{format_monomial, poly_arith, ArithOp, Polynomial};
pub use ring::RingSpec;

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
