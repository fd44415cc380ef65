use std::collections::{HashSet, VecDeque};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational, RingSpec};
use crate::error::{Error, Result};

use super::engine::{self, Ctx, GPoly, GbOptions};

/// A reduced Groebner basis for a fixed ring and monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingSpec,
    ctx: Ctx,
    polys: Vec<GPoly>,
    monic: Vec<Polynomial>,
    truncated_at: Option<u64>,
}

impl GroebnerBasis {
    pub(crate) fn compute(
        ring: &RingSpec,
        gens: &[Polynomial],
        order: &MonomialOrder,
        max_pairs: Option<usize>,
        degree_bound: Option<u64>,
    ) -> Result<Self> {
        let ctx = Ctx { order: order.clone() };
        let input: Vec<GPoly> = gens.iter().map(|p| GPoly::from_poly(&ctx, p).0).collect();
        let polys = engine::buchberger(&ctx, input, &GbOptions { max_pairs, degree_bound })?;
        let monic = polys
            .iter()
            .map(|g| {
                let lc = Rational::from_integer(g.lc().clone());
                g.to_polynomial(ring, &lc)
            })
            .collect();
        Ok(GroebnerBasis { ring: ring.clone(), ctx, polys, monic, truncated_at: degree_bound })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.ctx.order
    }

    /// Basis elements with leading coefficient 1, sorted by increasing
    /// leading monomial.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.monic
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Degree bound when the basis is only valid up to that (weighted) degree.
    pub fn truncated_at(&self) -> Option<u64> {
        self.truncated_at
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().e.iter().all(|&e| e == 0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|g| Monomial::new(g.lm().e.to_vec())).collect()
    }

    /// Remainder of `p` on division by the basis. Linear in `p`.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert!(p.ring() == &self.ring, "normal form in a different ring");
        if p.is_zero() {
            return p.clone();
        }
        let (g, s) = GPoly::from_poly(&self.ctx, p);
        let basis: Vec<&GPoly> = self.polys.iter().collect();
        let (r, t) = engine::reduce(&self.ctx, &g, &basis);
        r.to_polynomial(&self.ring, &(s * t))
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let (g, _) = GPoly::from_poly(&self.ctx, p);
        let basis: Vec<&GPoly> = self.polys.iter().collect();
        engine::reduce(&self.ctx, &g, &basis).0.is_zero()
    }

    /// Standard monomials (outside the leading term ideal), provided there
    /// are finitely many. Sorted by degrevlex ascending.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        if self.is_unit() {
            return Ok(Vec::new());
        }
        for i in 0..n {
            let pure =
                leads.iter().any(|m| m.exps()[i] > 0 && m.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0));
            if !pure {
                return Err(Error::InfiniteQuotient);
            }
        }
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut queue = VecDeque::new();
        let one = Monomial::one(n);
        seen.insert(one.clone());
        queue.push_back(one);
        let mut out = Vec::new();
        while let Some(m) = queue.pop_front() {
            out.push(m.clone());
            for i in 0..n {
                let next = m.mul(&Monomial::var(n, i));
                if seen.contains(&next) || leads.iter().any(|l| l.divides(&next)) {
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        out.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a.exps(), b.exps()));
        Ok(out)
    }
}

/// Remainder of `p` modulo `gb`, checking that the basis was computed for `order`.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis, order: &MonomialOrder) -> Result<Polynomial> {
    if gb.order() != order {
        return Err(Error::Unsupported(format!(
            "basis was computed for {} but {} was requested",
            gb.order().name(),
            order.name()
        )));
    }
    if p.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(gb.normal_form(p))
}
