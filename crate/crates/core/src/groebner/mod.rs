//! Groebner bases and the ideal operations built on them.

mod basis;
pub(crate) mod engine;
mod ideal;
pub mod linalg;
mod monomial_ideal;

pub use basis::{normal_form, GroebnerBasis};
pub use ideal::{monomials_of_degree, monomials_up_to_degree, Ideal, Limits};
pub use monomial_ideal::{minimalize, monomial_radical, MonomialIdeal};

use crate::algebra::{MonomialOrder, Polynomial, RingSpec};
use crate::error::Result;

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(
    ring: &RingSpec,
    gens: &[Polynomial],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, gens, order, Some(limits.max_pairs), None)
}

/// Groebner basis valid up to a degree bound, for inputs homogeneous with
/// respect to the degree of `order` (weighted degree for weighted orders).
/// Normal forms of polynomials of degree at most `bound` are exact.
pub fn truncated_buchberger(
    ring: &RingSpec,
    gens: &[Polynomial],
    order: &MonomialOrder,
    bound: u64,
    limits: Limits,
) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, gens, order, Some(limits.max_pairs), Some(bound))
}

pub fn ideal_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(p)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.intersect(b)
}

pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    ideal.eliminate(drop)
}

pub fn quotient_dimension(ideal: &Ideal) -> Result<usize> {
    ideal.quotient_dimension()
}

pub fn nilpotency_index(ideal: &Ideal) -> Result<usize> {
    ideal.nilpotency_index()
}
