use super::weighted::{jsc_weighted_bivariate, WeightedForm};
use super::{arc_kernel, has_unit_generator, ClosureKind, ClosureResult, Method};
use crate::algebra::{squarefree_test, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{monomials_of_degree, monomials_up_to_degree, Ideal, MonomialIdeal};
use crate::jets::{monomial_jet_radical, origin_monomial_images, JetRing};

/// Membership of `x^b` in the `m`-th jet support closure of a monomial
/// ideal.
///
/// `x^b` is a member iff for every weight vector `t` with `1 ≤ t_i ≤ m` on
/// the support of `b` and `sum t_i b_i ≤ m`, some generator `x^a` with
/// support inside that of `b` has `sum t_i a_i ≤ m`. Monomials of degree
/// above `m` are always members.
pub fn jsc_monomial_contains(ideal: &MonomialIdeal, m: usize, b: &Monomial) -> bool {
    if b.degree() as usize > m {
        return true;
    }
    let support = b.support();
    let witnesses: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .filter(|a| a.exps().iter().enumerate().all(|(i, &e)| e == 0 || b.exps()[i] > 0))
        .collect();
    let mut t = vec![0usize; support.len()];
    all_weights(&support, b, &witnesses, m, 0, 0, &mut t)
}

// Depth-first over weight vectors; false as soon as one has no witness.
fn all_weights(
    support: &[usize],
    b: &Monomial,
    witnesses: &[&Monomial],
    m: usize,
    k: usize,
    used: usize,
    t: &mut Vec<usize>,
) -> bool {
    if k == support.len() {
        return witnesses
            .iter()
            .any(|a| support.iter().zip(t.iter()).map(|(&i, &ti)| ti * a.exps()[i] as usize).sum::<usize>() <= m);
    }
    let bi = b.exps()[support[k]] as usize;
    let rest: usize = support[k + 1..].iter().map(|&i| b.exps()[i] as usize).sum();
    let mut ti = 1;
    while ti <= m && used + ti * bi + rest <= m {
        t[k] = ti;
        if !all_weights(support, b, witnesses, m, k + 1, used + ti * bi, t) {
            return false;
        }
        ti += 1;
    }
    true
}

/// `M^{m-jsc}` for a monomial ideal through the membership test above.
pub fn jsc_monomial(ideal: &MonomialIdeal, m: usize) -> Result<ClosureResult> {
    let n = ideal.ring().nvars();
    let mut members: Vec<Monomial> =
        monomials_up_to_degree(n, m as u32).into_iter().filter(|b| jsc_monomial_contains(ideal, m, b)).collect();
    members.extend(monomials_of_degree(n, m as u32 + 1));
    let closure = MonomialIdeal::new(ideal.ring(), members).to_ideal();
    ClosureResult::finish(&ideal.to_ideal(), m, ClosureKind::Jsc, Method::MonomialTest, closure)
}

/// `M^{m-jsc}` as the kernel of the arc map modulo the radical of the jet
/// ideal. The radical is monomial, so reduction deletes divisible terms.
/// Independent of [`jsc_monomial`]; meant for small cross-checks.
pub fn jsc_monomial_oracle(ideal: &MonomialIdeal, m: usize) -> Result<ClosureResult> {
    let input = ideal.to_ideal();
    if ideal.is_unit() {
        return ClosureResult::finish(&input, m, ClosureKind::Jsc, Method::Unit, Ideal::unit(ideal.ring()));
    }
    let jets = JetRing::new(ideal.ring(), m)?;
    let origin = jets.origin_variables();
    // The order-0 variables are zero on the arcs used, so generators
    // involving them drop out.
    let radical: Vec<Monomial> = monomial_jet_radical(ideal, &jets)
        .generators()
        .iter()
        .filter(|g| origin.iter().all(|&i| g.exps()[i] == 0))
        .cloned()
        .collect();
    let reduce = |p: &Polynomial| {
        Polynomial::from_terms(
            p.ring(),
            p.terms()
                .filter(|(mono, _)| !radical.iter().any(|r| r.divides(mono)))
                .map(|(mono, c)| (mono.clone(), c.clone())),
        )
    };
    let images = origin_monomial_images(&jets, m as u32);
    let kernel = arc_kernel(ideal.ring(), &images, reduce, input.limits().max_matrix)?;
    let closure = input.plus_maximal_power(m as u32 + 1).with_generators(kernel);
    ClosureResult::finish(&input, m, ClosureKind::Jsc, Method::MonomialKernel, closure)
}

/// `(f)^{m-jsc} = (f) + m^(m+1)` for reduced homogeneous `f`.
pub fn jsc_homogeneous_reduced(f: &Polynomial, m: usize) -> Result<ClosureResult> {
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    if !squarefree_test(f)? {
        return Err(Error::NotReduced);
    }
    let input = Ideal::new(f.ring(), vec![f.clone()])?;
    let closure = input.plus_maximal_power(m as u32 + 1);
    ClosureResult::finish(&input, m, ClosureKind::Jsc, Method::Homogeneous, closure)
}

/// `I^{m-jsc}` for the supported classes: ideals with a unit generator,
/// monomial ideals, principal homogeneous ideals and principal weighted
/// homogeneous ideals in two variables. Anything else needs a general
/// radical computation and is refused.
pub fn jet_support_closure(ideal: &Ideal, m: usize) -> Result<ClosureResult> {
    if has_unit_generator(ideal) {
        return ClosureResult::finish(ideal, m, ClosureKind::Jsc, Method::Unit, Ideal::unit(ideal.ring()));
    }
    let canon = ideal.canonical()?;
    let mut out = if let Some(mono) = canon.monomial_view() {
        jsc_monomial(&mono, m)?
    } else if let [f] = canon.generators() {
        let degree = f.total_degree().unwrap_or(0) as usize;
        if ideal.ring().nvars() == 2 {
            jsc_weighted_bivariate(&WeightedForm::from_polynomial(f)?, m)?
        } else if f.is_homogeneous() && m < degree {
            // No arc of order m sees f at all.
            ClosureResult::finish(
                ideal,
                m,
                ClosureKind::Jsc,
                Method::Homogeneous,
                Ideal::maximal_power(ideal.ring(), m as u32 + 1),
            )?
        } else if f.is_homogeneous() {
            jsc_homogeneous_reduced(f, m)?
        } else {
            return Err(Error::Unsupported(
                "jet support closure of a non homogeneous polynomial in more than two variables".into(),
            ));
        }
    } else {
        return Err(Error::Unsupported("jet support closure of a non monomial ideal with several generators".into()));
    };
    out.input = ideal.clone();
    Ok(out)
}
