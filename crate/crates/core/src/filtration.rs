//! Jet indices, Milnor numbers and the filtration given by jet closures.
//!
//! All quantities here are local at the origin: an ideal `I` is replaced by
//! `I + m^N` where `N` is the local nilpotency index, which is the
//! polynomial shadow of `I` in the power series ring.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{squarefree_part, Polynomial};
use crate::closures::{jet_closure, OriginJets, WeightedForm};
use crate::error::{Error, Result};
use crate::groebner::{truncated_buchberger, Ideal};
use crate::jets::{hs_expand, JetRing};

/// How far the search for `m^N ⊆ I` goes before declaring the singularity
/// non isolated.
pub const ISOLATION_CAP: usize = 40;

/// `I + m^N` with `N` the local nilpotency index, together with `N`.
pub fn localize(ideal: &Ideal) -> Result<(Ideal, usize)> {
    let n = ideal.local_nilpotency_index(ISOLATION_CAP)?;
    if n == 0 {
        return Ok((Ideal::unit(ideal.ring()).with_limits(ideal.limits()), 0));
    }
    Ok((ideal.plus_maximal_power(n as u32), n))
}

pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    let n = f.ring().nvars();
    Ideal::new(f.ring(), (0..n).map(|i| f.partial_derivative(i)).collect())
}

pub fn tjurina_ideal(f: &Polynomial) -> Result<Ideal> {
    Ok(jacobian_ideal(f)?.with_generators([f.clone()]))
}

/// Local Milnor number: dimension of the local ring modulo the Jacobian
/// ideal.
pub fn milnor_number(f: &Polynomial) -> Result<usize> {
    localize(&jacobian_ideal(f)?)?.0.quotient_dimension()
}

pub fn tjurina_number(f: &Polynomial) -> Result<usize> {
    localize(&tjurina_ideal(f)?)?.0.quotient_dimension()
}

#[derive(Clone, Debug)]
pub struct JetIndexReport {
    pub ideal: Ideal,
    /// Least `m` with `I^{m-jc} = I`.
    pub index: usize,
    pub cap: usize,
    /// `(m, dim R/I^{m-jc})` for every order tried.
    pub trace: Vec<(usize, usize)>,
}

/// Least `m` such that `I` is `m`-jet closed, searching `m ≤ cap`. The cap
/// defaults to `2 * dim(R/I) + 2`.
pub fn jet_index(ideal: &Ideal, cap: Option<usize>) -> Result<JetIndexReport> {
    let (local, _) = localize(ideal)?;
    let dim = local.quotient_dimension()?;
    let cap = cap.unwrap_or(2 * dim + 2);
    let mut trace = Vec::new();
    for m in 0..=cap {
        let c = jet_closure(ideal, m)?;
        trace.push((m, c.dim));
        if c.dim == dim && c.closure.equals(&local)? {
            return Ok(JetIndexReport { ideal: ideal.clone(), index: m, cap, trace });
        }
    }
    Err(Error::CapExceeded(cap))
}

/// Jet index of the Jacobian ideal.
pub fn jet_milnor_index(f: &Polynomial, cap: Option<usize>) -> Result<JetIndexReport> {
    jet_index(&jacobian_ideal(f)?, cap)
}

/// Jet index of `(f) + J(f)`.
pub fn jet_tjurina_index(f: &Polynomial, cap: Option<usize>) -> Result<JetIndexReport> {
    jet_index(&tjurina_ideal(f)?, cap)
}

/// A value of the jet filtration: a natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltrationValue {
    Finite(usize),
    Infinite,
}

impl FiltrationValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            FiltrationValue::Finite(v) => Some(v),
            FiltrationValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == FiltrationValue::Infinite
    }
}

impl std::ops::Add for FiltrationValue {
    type Output = FiltrationValue;

    fn add(self, rhs: FiltrationValue) -> FiltrationValue {
        match (self, rhs) {
            (FiltrationValue::Finite(a), FiltrationValue::Finite(b)) => FiltrationValue::Finite(a + b),
            _ => FiltrationValue::Infinite,
        }
    }
}

impl fmt::Display for FiltrationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationValue::Finite(v) => write!(f, "{v}"),
            FiltrationValue::Infinite => f.write_str("inf"),
        }
    }
}

/// The descending chain `m ⊇ I^{1-jc} ⊇ I^{2-jc} ⊇ ...` with its jet
/// ideals built on demand. Order `m + 1` starts from the basis of order
/// `m`, since the arc coefficients up to `t^m` do not change.
pub struct FiltrationChain {
    ideal: Ideal,
    local: Ideal,
    cap: usize,
    levels: Vec<OriginJets>,
}

impl FiltrationChain {
    pub fn new(ideal: &Ideal, cap: Option<usize>) -> Result<Self> {
        let (local, _) = localize(ideal)?;
        let dim = local.quotient_dimension()?;
        Ok(FiltrationChain { ideal: ideal.clone(), local, cap: cap.unwrap_or(2 * dim + 2), levels: Vec::new() })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The ideal `I + m^N` that the chain stabilizes at.
    pub fn local_ideal(&self) -> &Ideal {
        &self.local
    }

    fn level(&mut self, m: usize) -> Result<&OriginJets> {
        while self.levels.len() < m {
            let next = self.levels.len() + 1;
            let jets = match self.levels.last() {
                Some(prev) => extend(&self.ideal, prev)?,
                None => OriginJets::new(&self.ideal, next)?,
            };
            self.levels.push(jets);
        }
        Ok(&self.levels[m - 1])
    }

    /// Whether `g ∈ I^{m-jc}`, with `I^{0-jc} = m`.
    pub fn contains(&mut self, m: usize, g: &Polynomial) -> Result<bool> {
        if m == 0 {
            return Ok(g.constant_term().is_zero() || self.local.is_unit()?);
        }
        self.level(m)?.contains(g)
    }

    /// `f_I(g)`: infinite on `I`, zero off the maximal ideal, otherwise the
    /// least `k ≥ 1` with `g ∉ I^{k-jc}`.
    pub fn value(&mut self, g: &Polynomial) -> Result<FiltrationValue> {
        if g.ring() != self.ideal.ring() {
            return Err(Error::RingMismatch);
        }
        if self.local.contains(g)? {
            return Ok(FiltrationValue::Infinite);
        }
        if !g.constant_term().is_zero() {
            return Ok(FiltrationValue::Finite(0));
        }
        for k in 1..=self.cap {
            if !self.contains(k, g)? {
                return Ok(FiltrationValue::Finite(k));
            }
        }
        Err(Error::CapExceeded(self.cap))
    }
}

fn extend(ideal: &Ideal, prev: &OriginJets) -> Result<OriginJets> {
    let m = prev.order() + 1;
    let Some(basis) = prev.basis() else { return OriginJets::new(ideal, m) };
    let jets = JetRing::new(ideal.ring(), m)?;
    let mut seeds = basis.polynomials().iter().map(|p| p.embed(jets.ring())).collect::<Result<Vec<_>>>()?;
    for f in ideal.generators() {
        let top = hs_expand(f, &jets, true).coefficients.pop().expect("order m coefficient");
        if !top.is_zero() {
            seeds.push(top);
        }
    }
    let basis = truncated_buchberger(jets.ring(), &seeds, &jets.weighted_order(), m as u64, ideal.limits())?;
    Ok(OriginJets::from_parts(ideal, jets, basis))
}

pub fn filtration_value(ideal: &Ideal, g: &Polynomial, cap: Option<usize>) -> Result<FiltrationValue> {
    FiltrationChain::new(ideal, cap)?.value(g)
}

/// Radical of a monomial ideal or of a principal homogeneous ideal.
pub fn supported_radical(ideal: &Ideal) -> Result<Ideal> {
    let canon = ideal.canonical()?;
    if let Some(mono) = canon.monomial_view() {
        return Ok(mono.radical().to_ideal());
    }
    if let [f] = canon.generators() {
        if f.is_homogeneous() {
            return Ideal::new(ideal.ring(), vec![squarefree_part(f)?]);
        }
    }
    Err(Error::Unsupported("radical of an ideal that is neither monomial nor principal homogeneous".into()))
}

/// `f̄_I(g)`: the largest `r` with `g ∈ √I + m^r`, infinite on `√I`.
///
/// `√I` is homogeneous, so this is the least degree of a homogeneous
/// component of `g` outside `√I`.
pub fn homogeneous_filtration_value(ideal: &Ideal, g: &Polynomial) -> Result<FiltrationValue> {
    if g.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let radical = supported_radical(ideal)?;
    if radical.contains(g)? {
        return Ok(FiltrationValue::Infinite);
    }
    let top = g.total_degree().unwrap_or(0);
    for d in 0..=top {
        let part = Polynomial::from_terms(
            g.ring(),
            g.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())),
        );
        if !radical.contains(&part)? {
            return Ok(FiltrationValue::Finite(d as usize));
        }
    }
    unreachable!("some homogeneous component lies outside the radical")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    /// `J(f)^{m-jc} = J(f) + m^(m+1)` for weighted homogeneous `f`.
    WeightedJc,
    /// `j_τ(f) + 1 = N((f) + J(f))` for isolated singularities.
    TjurinaNilpotency,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::WeightedJc => "weighted-jc",
            ScanKind::TjurinaNilpotency => "tjurina-nilpotency",
        }
    }
}

impl std::str::FromStr for ScanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weighted-jc" => Ok(ScanKind::WeightedJc),
            "tjurina-nilpotency" => Ok(ScanKind::TjurinaNilpotency),
            other => Err(Error::Unsupported(format!("scan kind `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds(String),
    Counterexample(String),
    NotApplicable(String),
    Failed(String),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Holds(_) => "holds",
            Verdict::Counterexample(_) => "counterexample",
            Verdict::NotApplicable(_) => "not-applicable",
            Verdict::Failed(_) => "error",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Verdict::Holds(s) | Verdict::Counterexample(s) | Verdict::NotApplicable(s) | Verdict::Failed(s) => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub poly: Polynomial,
    pub verdict: Verdict,
}

impl ScanRecord {
    /// `f=<poly>\tverdict=<tag>\tdetail=<text>`
    pub fn to_line(&self) -> String {
        format!("f={}\tverdict={}\tdetail={}", self.poly, self.verdict.tag(), self.verdict.detail())
    }
}

fn is_weighted_homogeneous(f: &Polynomial) -> bool {
    f.is_homogeneous() || (f.ring().nvars() == 2 && WeightedForm::from_polynomial(f).is_ok())
}

/// Checks one polynomial; errors end up in the verdict.
pub fn scan_one(kind: ScanKind, f: &Polynomial, cap: usize) -> ScanRecord {
    let verdict = match scan_inner(kind, f, cap) {
        Ok(v) => v,
        Err(e) => Verdict::Failed(e.to_string()),
    };
    ScanRecord { poly: f.clone(), verdict }
}

fn scan_inner(kind: ScanKind, f: &Polynomial, cap: usize) -> Result<Verdict> {
    match kind {
        ScanKind::WeightedJc => {
            if !is_weighted_homogeneous(f) {
                return Ok(Verdict::NotApplicable("not weighted homogeneous".into()));
            }
            let j = jacobian_ideal(f)?;
            for m in 0..=cap {
                let c = jet_closure(&j, m)?;
                if !c.good {
                    let base = j.plus_maximal_power(m as u32 + 1);
                    let extra = c.generators().iter().find(|g| !base.contains(g).unwrap_or(true));
                    let witness = extra.map(ToString::to_string).unwrap_or_default();
                    return Ok(Verdict::Counterexample(format!(
                        "m={m}: {witness} lies in the closure but not in J(f) + m^{}",
                        m + 1
                    )));
                }
            }
            Ok(Verdict::Holds(format!("checked m <= {cap}")))
        }
        ScanKind::TjurinaNilpotency => {
            let t = tjurina_ideal(f)?;
            let (_, n) = localize(&t)?;
            let report = jet_index(&t, Some(cap))?;
            let detail = format!("j_tau={} N={}", report.index, n);
            if report.index + 1 == n {
                Ok(Verdict::Holds(detail))
            } else {
                Ok(Verdict::Counterexample(detail))
            }
        }
    }
}

pub fn conjecture_scan(kind: ScanKind, corpus: &[Polynomial], cap: usize) -> Vec<ScanRecord> {
    corpus.iter().map(|f| scan_one(kind, f, cap)).collect()
}
