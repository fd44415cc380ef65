use num_integer::Integer;

use super::jsc::jsc_homogeneous_reduced;
use super::{ClosureKind, ClosureResult, Method};
use crate::algebra::{squarefree_test, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialIdeal};

/// A weighted homogeneous polynomial in two variables: every term
/// `c * x^i * y^j` has `a*i + b*j = degree`, with `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedForm {
    pub poly: Polynomial,
    pub weights: (u32, u32),
    pub terms: Vec<(u32, u32, Rational)>,
    pub degree: u32,
}

impl WeightedForm {
    pub fn new(poly: &Polynomial, weights: (u32, u32)) -> Result<Self> {
        if poly.ring().nvars() != 2 {
            return Err(Error::Unsupported("weighted forms need exactly two variables".into()));
        }
        let (a, b) = weights;
        if a == 0 || b == 0 || a.gcd(&b) != 1 {
            return Err(Error::WeightMismatch(format!("weights ({a}, {b}) must be positive and coprime")));
        }
        if poly.is_zero() || poly.is_constant() {
            return Err(Error::ConstantInput);
        }
        let terms: Vec<(u32, u32, Rational)> =
            poly.terms().map(|(m, c)| (m.exps()[0], m.exps()[1], c.clone())).collect();
        let degree = a * terms[0].0 + b * terms[0].1;
        if terms.iter().any(|&(i, j, _)| a * i + b * j != degree) {
            return Err(Error::WeightMismatch(format!("{poly} is not weighted homogeneous for weights ({a}, {b})")));
        }
        Ok(WeightedForm { poly: poly.clone(), weights, terms, degree })
    }

    /// Infers the weights from the exponent differences. Needs at least two
    /// terms; a single monomial is weighted homogeneous for every weight.
    pub fn from_polynomial(poly: &Polynomial) -> Result<Self> {
        if poly.ring().nvars() != 2 {
            return Err(Error::Unsupported("weighted forms need exactly two variables".into()));
        }
        if poly.is_zero() || poly.is_constant() {
            return Err(Error::ConstantInput);
        }
        let exps: Vec<(i64, i64)> = poly.terms().map(|(m, _)| (m.exps()[0] as i64, m.exps()[1] as i64)).collect();
        if exps.len() < 2 {
            return Err(Error::WeightMismatch(format!("a single term does not determine weights: {poly}")));
        }
        let (di, dj) = (exps[1].0 - exps[0].0, exps[1].1 - exps[0].1);
        // a*di + b*dj = 0 with a, b > 0.
        let (mut a, mut b) = (dj, -di);
        if a < 0 {
            a = -a;
            b = -b;
        }
        if a <= 0 || b <= 0 {
            return Err(Error::WeightMismatch(format!("{poly} has no positive weights")));
        }
        let g = a.gcd(&b);
        WeightedForm::new(poly, ((a / g) as u32, (b / g) as u32))
    }

    fn in_region(&self, u: u32, v: u32, m: usize) -> bool {
        self.terms.iter().all(|&(i, j, _)| (u * i + v * j) as usize > m)
    }

    /// Minimal points of `{(u, v) ≥ (1, 1) : u*i + v*j ≥ m+1 for every term}`.
    pub fn minimal_region_points(&self, m: usize) -> Vec<(u32, u32)> {
        let top = m as u32 + 1;
        let mut out: Vec<(u32, u32)> = Vec::new();
        let mut best_v = u32::MAX;
        for u in 1..=top {
            if let Some(v) = (1..=top).find(|&v| self.in_region(u, v, m)) {
                if v < best_v {
                    out.push((u, v));
                    best_v = v;
                }
            }
        }
        out
    }
}

/// Monomials `x^p y^q` with `p*u + q*v ≥ m+1` for every `(u, v)` listed,
/// all of which are at least `(1, 1)`; the unit ideal for an empty list.
fn weight_cut(poly: &Polynomial, points: &[(u32, u32)], m: usize) -> MonomialIdeal {
    let ring = poly.ring();
    if points.is_empty() {
        return MonomialIdeal::new(ring, vec![Monomial::one(2)]);
    }
    let top = m as u32 + 1;
    let mut gens = Vec::new();
    for p in 0..=top {
        for q in 0..=top - p {
            if points.iter().all(|&(u, v)| (p * u + q * v) as usize > m) {
                gens.push(Monomial::new(vec![p, q]));
                break;
            }
        }
    }
    MonomialIdeal::new(ring, gens)
}

/// `(f)^{m-jsc}` for a weighted homogeneous form in two variables.
///
/// Below the weighted degree the closure is the monomial ideal cut out by
/// the minimal points of the region above. From the weighted degree on it
/// is `(f, x^p y^q : a*p + b*q ≥ m+1)` intersected with the monomial ideal
/// cut out by the region points with `u ≤ a` or `v ≤ b`; this needs `f`
/// reduced. Equal weights go through the homogeneous formula.
pub fn jsc_weighted_bivariate(form: &WeightedForm, m: usize) -> Result<ClosureResult> {
    let f = &form.poly;
    let (a, b) = form.weights;
    let d = form.degree as usize;
    if a == b && m >= d {
        return jsc_homogeneous_reduced(f, m);
    }
    let input = Ideal::new(f.ring(), vec![f.clone()])?;
    let closure = if m < d {
        weight_cut(f, &form.minimal_region_points(m), m).to_ideal()
    } else {
        if !squarefree_test(f)? {
            return Err(Error::NotReduced);
        }
        let top = m as u32 + 1;
        let mut points = Vec::new();
        for u in 1..=a {
            if let Some(v) = (1..=top).find(|&v| form.in_region(u, v, m)) {
                points.push((u, v));
            }
        }
        for v in 1..=b {
            if let Some(u) = (1..=top).find(|&u| form.in_region(u, v, m)) {
                points.push((u, v));
            }
        }
        let first = weight_cut(f, &[(a, b)], m).to_ideal().with_generators([f.clone()]);
        let second = weight_cut(f, &points, m).to_ideal();
        first.intersect(&second)?
    };
    ClosureResult::finish(&input, m, ClosureKind::Jsc, Method::Weighted, closure)
}
