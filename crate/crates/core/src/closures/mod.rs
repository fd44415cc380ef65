//! Jet closures and jet support closures.
//!
//! Every closure of order `m` contains `I + m^(m+1)`, so it is determined
//! by the finitely many monomials of degree at most `m`. The polynomial
//! ideals returned here are `m`-primary and therefore agree with their
//! power series counterparts.

mod jc;
mod jsc;
mod weighted;

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

pub use jc::{jc_contains, jet_closure, jet_closure_elim, OriginJets};
pub use jsc::{jet_support_closure, jsc_homogeneous_reduced, jsc_monomial, jsc_monomial_contains, jsc_monomial_oracle};
pub use weighted::{jsc_weighted_bivariate, WeightedForm};

use crate::algebra::{Monomial, Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::linalg::{nullspace, SparseVec};
use crate::groebner::Ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Jc,
    Jsc,
}

impl ClosureKind {
    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Jc => "jc",
            ClosureKind::Jsc => "jsc",
        }
    }
}

impl std::str::FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jc" => Ok(ClosureKind::Jc),
            "jsc" => Ok(ClosureKind::Jsc),
            other => Err(Error::Unsupported(format!("closure kind `{other}`"))),
        }
    }
}

/// Which algorithm produced a closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Linear kernel of the arc map modulo the at-origin jet ideal.
    Kernel,
    /// Preimage of the jet ideal through elimination of jet variables.
    Elimination,
    /// Combinatorial membership test for monomial ideals.
    MonomialTest,
    /// Linear kernel modulo the monomial radical of the jet ideal.
    MonomialKernel,
    /// `(f) + m^(m+1)` for reduced homogeneous `f`.
    Homogeneous,
    /// Closed form for weighted homogeneous forms in two variables.
    Weighted,
    /// A generator is a unit, so every closure is the unit ideal.
    Unit,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Kernel => "kernel",
            Method::Elimination => "elimination",
            Method::MonomialTest => "monomial",
            Method::MonomialKernel => "monomial-kernel",
            Method::Homogeneous => "homogeneous",
            Method::Weighted => "weighted",
            Method::Unit => "unit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub input: Ideal,
    pub m: usize,
    pub kind: ClosureKind,
    pub method: Method,
    /// Canonical form: reduced degrevlex basis.
    pub closure: Ideal,
    /// Whether the closure is just `input + m^(m+1)`.
    pub good: bool,
    pub dim: usize,
}

impl ClosureResult {
    pub(crate) fn finish(input: &Ideal, m: usize, kind: ClosureKind, method: Method, closure: Ideal) -> Result<Self> {
        let closure = closure.canonical()?;
        let good = closure.equals(&input.plus_maximal_power(m as u32 + 1))?;
        let dim = closure.quotient_dimension()?;
        Ok(ClosureResult { input: input.clone(), m, kind, method, closure, good, dim })
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.closure.generators()
    }
}

/// Closure of the requested kind with the default algorithm.
pub fn closure(ideal: &Ideal, m: usize, kind: ClosureKind) -> Result<ClosureResult> {
    match kind {
        ClosureKind::Jc => jet_closure(ideal, m),
        ClosureKind::Jsc => jet_support_closure(ideal, m),
    }
}

pub fn is_good(ideal: &Ideal, m: usize, kind: ClosureKind) -> Result<bool> {
    Ok(closure(ideal, m, kind)?.good)
}

pub fn closure_dim(ideal: &Ideal, m: usize, kind: ClosureKind) -> Result<usize> {
    Ok(closure(ideal, m, kind)?.dim)
}

pub(crate) fn has_unit_generator(ideal: &Ideal) -> bool {
    ideal.generators().iter().any(|g| !g.constant_term().is_zero())
}

/// Base ring polynomials `g` of degree `1..=m` whose arc images vanish
/// after `reduce`, as a basis of the kernel. `images` pairs each monomial
/// with its arc coefficients `F_0, ..., F_m`.
pub(crate) fn arc_kernel(
    base: &RingSpec,
    images: &[(Monomial, Vec<Polynomial>)],
    reduce: impl Fn(&Polynomial) -> Polynomial,
    max_matrix: usize,
) -> Result<Vec<Polynomial>> {
    let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut columns: Vec<SparseVec> = Vec::with_capacity(images.len());
    for (_, image) in images {
        let mut col = SparseVec::new();
        for (j, coeff) in image.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (mono, c) in reduce(coeff).into_terms() {
                let next = rows.len();
                let row = *rows.entry((j, mono)).or_insert(next);
                col.insert(row, c);
            }
        }
        columns.push(col);
        let cells = rows.len().saturating_mul(columns.len());
        if cells > max_matrix {
            return Err(Error::MatrixLimit { rows: rows.len(), cols: images.len(), limit: max_matrix });
        }
    }
    Ok(nullspace(&columns)
        .into_iter()
        .map(|v| Polynomial::from_terms(base, v.into_iter().map(|(k, c)| (images[k].0.clone(), c))))
        .collect())
}
