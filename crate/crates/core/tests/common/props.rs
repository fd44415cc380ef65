//! Property checks shared by the proptest suites and the acceptance
//! harness. Each returns a description of the first violation.

use jetclosure::algebra::{integer, Polynomial};
use jetclosure::closures::{jc_contains, jet_closure, jsc_monomial};
use jetclosure::filtration::{homogeneous_filtration_value, FiltrationChain, FiltrationValue};
use jetclosure::groebner::{Ideal, MonomialIdeal};

pub type Check = Result<(), String>;

fn fail<T>(what: impl Into<String>) -> Result<T, String> {
    Err(what.into())
}

fn ok_or<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `I + m^(m+1) ⊆ I^{m-jc}`.
pub fn containment(i: &Ideal, m: usize) -> Check {
    let c = ok_or(jet_closure(i, m))?.closure;
    if !ok_or(c.contains_ideal(&i.plus_maximal_power(m as u32 + 1)))? {
        return fail(format!("I + m^{} not inside the closure of ({i}) at {m}", m + 1));
    }
    Ok(())
}

/// The closure of the closure is the closure.
pub fn idempotence(i: &Ideal, m: usize) -> Check {
    let c = ok_or(jet_closure(i, m))?.closure;
    let cc = ok_or(jet_closure(&c, m))?.closure;
    if !ok_or(cc.equals(&c))? {
        return fail(format!("closure of ({i}) at {m} is not closed"));
    }
    Ok(())
}

/// `I^{(m+1)-jc} ⊆ I^{m-jc}`.
pub fn monotonicity(i: &Ideal, m: usize) -> Check {
    let a = ok_or(jet_closure(i, m))?.closure;
    let b = ok_or(jet_closure(i, m + 1))?.closure;
    if !ok_or(a.contains_ideal(&b))? {
        return fail(format!("closure of ({i}) at {} not inside the one at {m}", m + 1));
    }
    Ok(())
}

/// `m · I^{m-jc} ⊆ I^{(m+1)-jc}`, generator by generator.
pub fn shift(i: &Ideal, m: usize) -> Check {
    let a = ok_or(jet_closure(i, m))?.closure;
    let ring = i.ring();
    for g in a.generators() {
        for v in 0..ring.nvars() {
            let h = &Polynomial::var(ring, v) * g;
            if !ok_or(jc_contains(i, m + 1, &h))? {
                return fail(format!("{h} not in the closure of ({i}) at {}", m + 1));
            }
        }
    }
    Ok(())
}

/// `M^{m-jc} ⊆ M^{m-jsc}` for a monomial ideal.
pub fn jc_inside_jsc(mono: &MonomialIdeal, m: usize) -> Check {
    let jc = ok_or(jet_closure(&mono.to_ideal(), m))?.closure;
    let jsc = ok_or(jsc_monomial(mono, m))?.closure;
    if !ok_or(jsc.contains_ideal(&jc))? {
        return fail(format!("jc not inside jsc for ({}) at {m}", mono.to_ideal()));
    }
    Ok(())
}

/// The filtration axioms on an Artinian ideal: `f(1) = 0`, `f(0) = inf`,
/// `f(x + y) ≥ min`, `f(xy) ≥ f(x) + f(y)`.
pub fn filtration_axioms(i: &Ideal, x: &Polynomial, y: &Polynomial) -> Check {
    let mut chain = ok_or(FiltrationChain::new(i, None))?;
    let ring = i.ring();
    let one = ok_or(chain.value(&Polynomial::one(ring)))?;
    let zero = ok_or(chain.value(&Polynomial::zero(ring)))?;
    if one != FiltrationValue::Finite(0) || zero != FiltrationValue::Infinite {
        return fail(format!("f(1) = {one}, f(0) = {zero}"));
    }
    let fx = ok_or(chain.value(x))?;
    let fy = ok_or(chain.value(y))?;
    let sum = ok_or(chain.value(&(x + y)))?;
    let prod = ok_or(chain.value(&(x * y)))?;
    if sum < fx.min(fy) {
        return fail(format!("f({x} + {y}) = {sum} < min({fx}, {fy}) for ({i})"));
    }
    if prod < fx + fy {
        return fail(format!("f(({x})*({y})) = {prod} < {fx} + {fy} for ({i})"));
    }
    Ok(())
}

/// `f_I(g)` straight from the jet closures: infinite on `I`, otherwise the
/// least `k ≥ 1` with `g ∉ I^{k-jc}` (for `g` in the maximal ideal).
pub fn value_from_closures(i: &Ideal, g: &Polynomial, cap: usize) -> Result<FiltrationValue, String> {
    if ok_or(i.contains(g))? {
        return Ok(FiltrationValue::Infinite);
    }
    if !num_traits::Zero::is_zero(&g.constant_term()) {
        return Ok(FiltrationValue::Finite(0));
    }
    for k in 1..=cap {
        if !ok_or(jc_contains(i, k, g))? {
            return Ok(FiltrationValue::Finite(k));
        }
    }
    fail(format!("no value for {g} below {cap}"))
}

/// For a monomial ideal: `f(g^s) = s f(g)` on the samples (and on the
/// generators of the radical) exactly when the ideal is radical.
pub fn homogeneity_iff_radical(mono: &MonomialIdeal, samples: &[Polynomial]) -> Check {
    let i = mono.to_ideal();
    let ring = i.ring();
    let radical = mono.radical();
    let is_radical = radical.generators().iter().all(|g| mono.contains(g));
    // Radical generators get an exponent large enough to land in the ideal.
    let top = mono.generators().iter().map(|g| g.degree()).max().unwrap_or(1).max(2);
    let mut probes: Vec<(Polynomial, Vec<u32>)> = samples.iter().map(|g| (g.clone(), vec![2, 3])).collect();
    probes.extend(radical.generators().iter().map(|g| (Polynomial::monomial(ring, g.clone(), integer(1)), vec![top])));
    let mut homogeneous = true;
    for (g, powers) in &probes {
        let d = g.total_degree().unwrap_or(0) as usize;
        let fg = value_from_closures(&i, g, d + 2)?;
        for &s in powers {
            let fs = value_from_closures(&i, &g.pow(s), s as usize * d + 2)?;
            let expect = match fg {
                FiltrationValue::Finite(v) => FiltrationValue::Finite(s as usize * v),
                inf => inf,
            };
            if fs != expect {
                homogeneous = false;
            }
        }
    }
    if homogeneous != is_radical {
        return fail(format!("({i}): radical = {is_radical}, homogeneous on samples = {homogeneous}"));
    }
    Ok(())
}

/// `f̄_I(g) ≥ f_I(g)` for monomial or principal homogeneous `I`.
pub fn bar_dominates(i: &Ideal, g: &Polynomial) -> Check {
    let d = g.total_degree().unwrap_or(0) as usize;
    let f = value_from_closures(i, g, d + 2)?;
    let bar = ok_or(homogeneous_filtration_value(i, g))?;
    if bar < f {
        return fail(format!("f̄({g}) = {bar} < f({g}) = {f} for ({i})"));
    }
    Ok(())
}
