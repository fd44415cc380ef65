use num_traits::Zero;

use super::{arc_kernel, has_unit_generator, ClosureKind, ClosureResult, Method};
use crate::algebra::{Polynomial, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::{truncated_buchberger, GroebnerBasis, Ideal};
use crate::jets::{hs_expand, origin_monomial_images, JetRing};

/// The at-origin jet ideal of order `m` with a Groebner basis good up to
/// weight `m`, which is all the arc coefficients `F_1, ..., F_m` need.
///
/// The generators `F_j` are homogeneous of weight `j` when `x_i_j` has
/// weight `j`, so a weighted basis truncated at `m` gives exact normal forms
/// for everything the closure computation reduces.
#[derive(Clone, Debug)]
pub struct OriginJets {
    ideal: Ideal,
    jets: JetRing,
    /// `None` when some generator is a unit, making the jet ideal trivial.
    basis: Option<GroebnerBasis>,
}

impl OriginJets {
    pub fn new(ideal: &Ideal, m: usize) -> Result<Self> {
        let jets = JetRing::new(ideal.ring(), m)?;
        if has_unit_generator(ideal) {
            return Ok(OriginJets { ideal: ideal.clone(), jets, basis: None });
        }
        let mut gens = Vec::new();
        for f in ideal.generators() {
            let e = hs_expand(f, &jets, true);
            gens.extend(e.coefficients.into_iter().skip(1).filter(|c| !c.is_zero()));
        }
        let basis = truncated_buchberger(jets.ring(), &gens, &jets.weighted_order(), m as u64, ideal.limits())?;
        Ok(OriginJets { ideal: ideal.clone(), jets, basis: Some(basis) })
    }

    pub(crate) fn from_parts(ideal: &Ideal, jets: JetRing, basis: GroebnerBasis) -> Self {
        OriginJets { ideal: ideal.clone(), jets, basis: Some(basis) }
    }

    pub fn jets(&self) -> &JetRing {
        &self.jets
    }

    pub fn order(&self) -> usize {
        self.jets.order()
    }

    /// The jet ideal's basis; `None` for the unit ideal.
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        self.basis.as_ref()
    }

    /// Whether `g` lies in the jet closure: every arc coefficient of `g`
    /// vanishes modulo the jet ideal.
    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        if g.ring() != self.ideal.ring() {
            return Err(Error::RingMismatch);
        }
        let Some(basis) = &self.basis else { return Ok(true) };
        if !g.constant_term().is_zero() {
            return Ok(false);
        }
        let e = hs_expand(g, &self.jets, true);
        Ok(e.coefficients.iter().skip(1).all(|c| basis.reduces_to_zero(c)))
    }

    /// The closure as an ideal (not yet canonicalized).
    pub fn closure_ideal(&self) -> Result<Ideal> {
        let Some(basis) = &self.basis else { return Ok(Ideal::unit(self.ideal.ring())) };
        let m = self.order();
        let images = origin_monomial_images(&self.jets, m as u32);
        let kernel = arc_kernel(self.ideal.ring(), &images, |p| basis.normal_form(p), self.ideal.limits().max_matrix)?;
        Ok(self.ideal.plus_maximal_power(m as u32 + 1).with_generators(kernel))
    }
}

/// `I^{m-jc}` by the linear kernel method: a polynomial lies in the closure
/// exactly when its arc image modulo `t^(m+1)` vanishes modulo the
/// at-origin jet ideal.
pub fn jet_closure(ideal: &Ideal, m: usize) -> Result<ClosureResult> {
    let jets = OriginJets::new(ideal, m)?;
    let method = if jets.basis.is_none() { Method::Unit } else { Method::Kernel };
    ClosureResult::finish(ideal, m, ClosureKind::Jc, method, jets.closure_ideal()?)
}

/// Membership of `g` in `I^{m-jc}` without computing the whole closure.
pub fn jc_contains(ideal: &Ideal, m: usize, g: &Polynomial) -> Result<bool> {
    OriginJets::new(ideal, m)?.contains(g)
}

/// `I^{m-jc}` as a preimage: in the ring of all jet variables, `t` and the
/// base variables, take the jet ideal plus the order-0 variables plus
/// `t^(m+1)`, add the graph `x_i - sum_j x_i_j t^j` and eliminate everything
/// but the base variables. Much slower than [`jet_closure`]; kept as an
/// independent check.
pub fn jet_closure_elim(ideal: &Ideal, m: usize) -> Result<ClosureResult> {
    let base = ideal.ring();
    let jets = JetRing::new(base, m)?;
    let nj = jets.ring().nvars();
    let mut names: Vec<String> = jets.ring().names().to_vec();
    let mut probe = names.clone();
    probe.extend(base.names().iter().cloned());
    let t = RingSpec::new(&probe)?.fresh_name("t");
    names.push(t);
    names.extend(base.names().iter().cloned());
    let work = RingSpec::new(&names)?;
    let tv = Polynomial::var(&work, nj);

    let mut gens = Vec::new();
    for f in ideal.generators() {
        for c in hs_expand(f, &jets, false).coefficients {
            if !c.is_zero() {
                gens.push(c.embed(&work)?);
            }
        }
    }
    for i in jets.origin_variables() {
        gens.push(Polynomial::var(&work, i));
    }
    gens.push(tv.pow(m as u32 + 1));
    for i in 0..base.nvars() {
        let mut arc = Polynomial::var(&work, nj + 1 + i);
        for j in 0..=m {
            arc = &arc - &(&Polynomial::var(&work, jets.index(i, j)) * &tv.pow(j as u32));
        }
        gens.push(arc);
    }
    let graph = Ideal::new(&work, gens)?.with_limits(ideal.limits());
    let drop: Vec<usize> = (0..=nj).collect();
    let preimage = graph.eliminate(&drop)?.embed(base)?;
    ClosureResult::finish(ideal, m, ClosureKind::Jc, Method::Elimination, preimage)
}
