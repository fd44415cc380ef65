//! Jet rings, truncated arc substitution and jet ideals.
//!
//! The jet ring of order `m` over a base ring with variables `x, y, ...`
//! has variables `x_0, ..., x_m, y_0, ..., y_m, ...`; `x_j` is the
//! coefficient of `t^j` in the arc `x(t) = x_0 + x_1 t + ... + x_m t^m`.

use std::collections::HashMap;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, RingSpec};
use crate::error::Result;
use crate::groebner::{minimalize, monomials_of_degree, Ideal, MonomialIdeal};

/// Variables `x_i_j` for every base variable `x_i` and `0 ≤ j ≤ m`, laid
/// out block by block: position `i * (m + 1) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetRing {
    base: RingSpec,
    order: usize,
    ring: RingSpec,
}

impl JetRing {
    pub fn new(base: &RingSpec, order: usize) -> Result<Self> {
        let mut names = Vec::with_capacity(base.nvars() * (order + 1));
        for name in base.names() {
            for j in 0..=order {
                names.push(format!("{name}_{j}"));
            }
        }
        Ok(JetRing { base: base.clone(), order, ring: RingSpec::new(&names)? })
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn index(&self, var: usize, j: usize) -> usize {
        debug_assert!(j <= self.order && var < self.base.nvars());
        var * (self.order + 1) + j
    }

    /// Inverse of [`JetRing::index`].
    pub fn position(&self, idx: usize) -> (usize, usize) {
        (idx / (self.order + 1), idx % (self.order + 1))
    }

    pub fn var(&self, var: usize, j: usize) -> Polynomial {
        Polynomial::var(&self.ring, self.index(var, j))
    }

    /// Weight `j` for `x_i_j` (weight 1 for the order 0 variables). Every
    /// at-origin jet coefficient `F_j` is homogeneous of weight `j`.
    pub fn weights(&self) -> Vec<u32> {
        (0..self.ring.nvars()).map(|k| self.position(k).1.max(1) as u32).collect()
    }

    pub fn weighted_order(&self) -> MonomialOrder {
        MonomialOrder::weighted(&self.weights())
    }

    /// The order-0 variables, generating the extension of the maximal ideal.
    pub fn origin_variables(&self) -> Vec<usize> {
        (0..self.base.nvars()).map(|i| self.index(i, 0)).collect()
    }
}

/// Coefficients `F_0, ..., F_m` of `f(x(t))` modulo `t^(m+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JetExpansion {
    pub source: Polynomial,
    pub order: usize,
    pub coefficients: Vec<Polynomial>,
    pub at_origin: bool,
}

type Series = Vec<Polynomial>;

pub(crate) fn series_mul(a: &Series, b: &Series, m: usize) -> Series {
    let ring = a[0].ring().clone();
    let mut out = vec![Polynomial::zero(&ring); m + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(m + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Expands `f` along the generic arc of order `m`. With `at_origin` the arc
/// starts at the origin, i.e. every `x_i_0` is set to zero first.
pub fn hs_expand(f: &Polynomial, jets: &JetRing, at_origin: bool) -> JetExpansion {
    assert!(f.ring() == jets.base(), "polynomial is not over the jet ring's base");
    let m = jets.order;
    let ring = jets.ring();
    let n = jets.base.nvars();
    let arcs: Vec<Series> = (0..n)
        .map(|i| (0..=m).map(|j| if j == 0 && at_origin { Polynomial::zero(ring) } else { jets.var(i, j) }).collect())
        .collect();
    let mut powers: Vec<Vec<Series>> = vec![Vec::new(); n];
    let mut unit = vec![Polynomial::zero(ring); m + 1];
    unit[0] = Polynomial::one(ring);
    let mut total = vec![Polynomial::zero(ring); m + 1];
    for (mono, c) in f.terms() {
        let mut acc = unit.clone();
        for (i, &e) in mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut powers[i];
            if cache.is_empty() {
                cache.push(unit.clone());
            }
            while cache.len() <= e as usize {
                let next = series_mul(cache.last().expect("nonempty"), &arcs[i], m);
                cache.push(next);
            }
            acc = series_mul(&acc, &cache[e as usize], m);
        }
        for (k, a) in acc.iter().enumerate() {
            if !a.is_zero() {
                total[k] = &total[k] + &a.scale(c);
            }
        }
    }
    JetExpansion { source: f.clone(), order: m, coefficients: total, at_origin }
}

/// At-origin arc images of every base monomial of degree `1..=max_degree`,
/// by increasing degree. Each image is built from one of degree one less.
pub fn origin_monomial_images(jets: &JetRing, max_degree: u32) -> Vec<(Monomial, Vec<Polynomial>)> {
    let m = jets.order;
    let ring = jets.ring();
    let n = jets.base.nvars();
    let arcs: Vec<Series> = (0..n)
        .map(|i| (0..=m).map(|j| if j == 0 { Polynomial::zero(ring) } else { jets.var(i, j) }).collect())
        .collect();
    let mut known: HashMap<Monomial, Series> = HashMap::new();
    known.insert(Monomial::one(n), {
        let mut unit = vec![Polynomial::zero(ring); m + 1];
        unit[0] = Polynomial::one(ring);
        unit
    });
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for mono in monomials_of_degree(n, d) {
            let i = mono.exps().iter().position(|&e| e > 0).expect("positive degree");
            let mut parent = mono.exps().to_vec();
            parent[i] -= 1;
            let image = series_mul(&known[&Monomial::new(parent)], &arcs[i], m);
            known.insert(mono.clone(), image.clone());
            out.push((mono, image));
        }
    }
    out
}

/// The `m`-th jet ideal: all arc coefficients of all generators. With
/// `at_origin` the arcs start at the origin, which is the same as adding the
/// order-0 variables and dropping them. A generator with nonzero constant
/// term then contributes that constant, so the ideal is the unit ideal.
pub fn jet_ideal(ideal: &Ideal, m: usize, at_origin: bool) -> Result<(JetRing, Ideal)> {
    let jets = JetRing::new(ideal.ring(), m)?;
    let mut gens = Vec::new();
    for f in ideal.generators() {
        let e = hs_expand(f, &jets, at_origin);
        gens.extend(e.coefficients.into_iter().filter(|c| !c.is_zero()));
    }
    let out = Ideal::new(jets.ring(), gens)?.with_limits(ideal.limits());
    Ok((jets, out))
}

/// Radical of the jet ideal of a monomial ideal, as a square-free monomial
/// ideal of the jet ring (order-0 variables included).
///
/// For a generator `x_1^a_1 ... x_r^a_r` every arc monomial is a product
/// choosing `a_i` indices for variable `x_i` with total index sum at most
/// `m`; its radical keeps one factor per distinct jet variable.
pub fn monomial_jet_radical(ideal: &MonomialIdeal, jets: &JetRing) -> MonomialIdeal {
    let m = jets.order;
    let nj = jets.ring.nvars();
    let mut out = Vec::new();
    for a in ideal.generators() {
        let support: Vec<(usize, u32)> =
            a.exps().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
        let mut chosen = vec![0u32; nj];
        enumerate_blocks(&support, 0, m, jets, &mut chosen, &mut out);
    }
    MonomialIdeal::new(jets.ring(), minimalize(out))
}

fn enumerate_blocks(
    support: &[(usize, u32)],
    k: usize,
    budget: usize,
    jets: &JetRing,
    chosen: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if k == support.len() {
        out.push(Monomial::new(chosen.iter().map(|&c| c.min(1)).collect()));
        return;
    }
    let (var, count) = support[k];
    // Nondecreasing index sequences of length `count` with sum ≤ budget.
    fn rec(
        var: usize,
        left: u32,
        min_idx: usize,
        budget: usize,
        support: &[(usize, u32)],
        k: usize,
        jets: &JetRing,
        chosen: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            enumerate_blocks(support, k + 1, budget, jets, chosen, out);
            return;
        }
        let mut idx = min_idx;
        while idx <= jets.order && idx * left as usize <= budget {
            let pos = jets.index(var, idx);
            chosen[pos] += 1;
            rec(var, left - 1, idx, budget - idx, support, k, jets, chosen, out);
            chosen[pos] -= 1;
            idx += 1;
        }
    }
    rec(var, count, 0, budget, support, k, jets, chosen, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn xy() -> RingSpec {
        RingSpec::parse("x,y").unwrap()
    }

    #[test]
    fn naming_and_layout() {
        let j = JetRing::new(&xy(), 2).unwrap();
        assert_eq!(j.ring().names(), &["x_0", "x_1", "x_2", "y_0", "y_1", "y_2"]);
        assert_eq!(j.index(1, 2), 5);
        assert_eq!(j.position(4), (1, 1));
        assert_eq!(j.weights(), vec![1, 1, 2, 1, 1, 2]);
    }

    #[test]
    fn cusp_expansion_matches_hand_computation() {
        let j = JetRing::new(&xy(), 2).unwrap();
        let f = parse_polynomial(&xy(), "x^2 - y^3").unwrap();
        let e = hs_expand(&f, &j, false);
        let jp = |s: &str| parse_polynomial(j.ring(), s).unwrap();
        assert_eq!(e.coefficients[0], jp("x_0^2 - y_0^3"));
        assert_eq!(e.coefficients[1], jp("2*x_0*x_1 - 3*y_0^2*y_1"));
        assert_eq!(e.coefficients[2], jp("2*x_0*x_2 + x_1^2 - 3*y_0^2*y_2 - 3*y_1^2*y_0"));
    }

    #[test]
    fn at_origin_expansions() {
        let j = JetRing::new(&xy(), 3).unwrap();
        let jp = |s: &str| parse_polynomial(j.ring(), s).unwrap();
        let e = hs_expand(&parse_polynomial(&xy(), "x").unwrap(), &j, true);
        assert_eq!(e.coefficients, vec![jp("0"), jp("x_1"), jp("x_2"), jp("x_3")]);
        let e = hs_expand(&parse_polynomial(&xy(), "x^2 + y^3").unwrap(), &j, true);
        assert_eq!(e.coefficients[2], jp("x_1^2"));
        assert_eq!(e.coefficients[3], jp("2*x_1*x_2 + y_1^3"));
    }

    #[test]
    fn jet_ideals() {
        let i = Ideal::parse(&xy(), "x").unwrap();
        let (j, ji) = jet_ideal(&i, 2, true).unwrap();
        let expect = Ideal::parse(j.ring(), "x_1, x_2").unwrap();
        assert!(ji.equals(&expect).unwrap());
        let (_, z) = jet_ideal(&Ideal::zero(&xy()), 3, false).unwrap();
        assert!(z.is_zero_ideal());
    }

    #[test]
    fn monomial_radicals() {
        let j = JetRing::new(&xy(), 2).unwrap();
        let jp = |s: &str| parse_polynomial(j.ring(), s).unwrap();
        let xy_ideal = Ideal::parse(&xy(), "x*y").unwrap().monomial_view().unwrap();
        let r = monomial_jet_radical(&xy_ideal, &j);
        assert_eq!(r.generators().len(), 6);
        for s in ["x_0*y_0", "x_0*y_1", "x_1*y_0", "x_0*y_2", "x_1*y_1", "x_2*y_0"] {
            let m = jp(s).terms().next().unwrap().0.clone();
            assert!(r.generators().contains(&m), "{s}");
        }
        let x1 = JetRing::new(&xy(), 1).unwrap();
        let r = monomial_jet_radical(&Ideal::parse(&xy(), "x").unwrap().monomial_view().unwrap(), &x1);
        assert_eq!(r.to_string(), "(x_0, x_1)");
        let r = monomial_jet_radical(&Ideal::parse(&xy(), "x^2").unwrap().monomial_view().unwrap(), &j);
        assert_eq!(r.to_string(), "(x_0, x_1)");
    }
}
