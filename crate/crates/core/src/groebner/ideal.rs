use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::algebra::{parse_polynomial_list, Monomial, MonomialOrder, Polynomial, Rational, RingSpec};
use crate::error::{Error, Result};

use super::{GroebnerBasis, MonomialIdeal};

/// Resource caps for the exact computations. Exceeding one is reported as an
/// error, never answered approximately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pair reductions in one Groebner basis run.
    pub max_pairs: usize,
    /// Maximum rows times columns of an exact linear system.
    pub max_matrix: usize,
}

impl Limits {
    pub const DEFAULT_MAX_PAIRS: usize = 200_000;
    pub const DEFAULT_MAX_MATRIX: usize = 50_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: Self::DEFAULT_MAX_PAIRS, max_matrix: Self::DEFAULT_MAX_MATRIX }
    }
}

type Slot = Arc<OnceLock<Result<Arc<GroebnerBasis>>>>;

/// An ideal of a polynomial ring over the rationals, given by generators.
///
/// Reduced Groebner bases are cached per monomial order. The cache is
/// filled at most once per order; clones share it.
#[derive(Clone)]
pub struct Ideal {
    ring: RingSpec,
    gens: Vec<Polynomial>,
    limits: Limits,
    cache: Arc<Mutex<HashMap<MonomialOrder, Slot>>>,
}

impl Ideal {
    pub fn new(ring: &RingSpec, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, limits: Limits::default(), cache: Default::default() })
    }

    /// Parses a comma separated generator list.
    pub fn parse(ring: &RingSpec, text: &str) -> Result<Self> {
        Self::new(ring, parse_polynomial_list(ring, text)?)
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Self::new(ring, Vec::new()).expect("same ring")
    }

    pub fn unit(ring: &RingSpec) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The power `m^e` of the maximal ideal at the origin.
    pub fn maximal_power(ring: &RingSpec, e: u32) -> Self {
        let gens = monomials_of_degree(ring.nvars(), e)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, Rational::from_integer(1.into())))
            .collect();
        Self::new(ring, gens).expect("same ring")
    }

    pub fn from_monomials(ring: &RingSpec, monos: &[Monomial]) -> Self {
        let gens =
            monos.iter().map(|m| Polynomial::monomial(ring, m.clone(), Rational::from_integer(1.into()))).collect();
        Self::new(ring, gens).expect("same ring")
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        if limits != self.limits {
            self.limits = limits;
            self.cache = Default::default();
        }
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    fn derived(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal { ring: self.ring.clone(), gens, limits: self.limits, cache: Default::default() }
    }

    /// Reduced Groebner basis for `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        let slot = {
            let mut cache = self.cache.lock().expect("cache lock");
            cache.entry(order.clone()).or_default().clone()
        };
        slot.get_or_init(|| {
            GroebnerBasis::compute(&self.ring, &self.gens, order, Some(self.limits.max_pairs), None).map(Arc::new)
        })
        .clone()
    }

    /// Degrevlex reduced basis, the canonical one.
    pub fn standard_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(&MonomialOrder::DegRevLex)
    }

    /// The reduced degrevlex basis as an ideal, with monic generators sorted
    /// by increasing leading monomial.
    pub fn canonical(&self) -> Result<Ideal> {
        let gb = self.standard_basis()?;
        let out = self.derived(gb.polynomials().to_vec());
        out.cache.lock().expect("cache lock").insert(MonomialOrder::DegRevLex, Arc::new(OnceLock::from(Ok(gb))));
        Ok(out)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.standard_basis()?.normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        Ok(self.standard_basis()?.reduces_to_zero(p))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let a = self.standard_basis()?;
        let b = other.standard_basis()?;
        Ok(a.polynomials() == b.polynomials())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.standard_basis()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.derived(gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(self.derived(gens))
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.into_iter().filter(|g| !g.is_zero()));
        self.derived(gens)
    }

    /// `I + m^e`.
    pub fn plus_maximal_power(&self, e: u32) -> Ideal {
        self.sum(&Ideal::maximal_power(&self.ring, e)).expect("same ring")
    }

    /// Moves the ideal into another ring by matching variable names.
    pub fn embed(&self, target: &RingSpec) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens)?.with_limits(self.limits))
    }

    /// Elements of the ideal free of the variables in `drop`, as an ideal of
    /// the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let dropped: Vec<bool> = (0..n).map(|i| drop.contains(&i)).collect();
        let mut names: Vec<String> = (0..n).filter(|&i| dropped[i]).map(|i| self.ring.name(i).to_string()).collect();
        let k = names.len();
        names.extend((0..n).filter(|&i| !dropped[i]).map(|i| self.ring.name(i).to_string()));
        let work = RingSpec::new(&names)?;
        let gens = self.gens.iter().map(|g| g.embed(&work)).collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis::compute(
            &work,
            &gens,
            &MonomialOrder::Elimination { block: k },
            Some(self.limits.max_pairs),
            None,
        )?;
        let kept = gb
            .polynomials()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
            .map(|p| p.embed(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(kept))
    }

    pub fn eliminate_names(&self, drop: &[&str]) -> Result<Ideal> {
        let idx = drop.iter().map(|n| self.ring.require(n)).collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// `I ∩ J` through `t*I + (1-t)*J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(self.derived(Vec::new()));
        }
        let t = self.ring.fresh_name("t");
        let mut names = vec![t];
        names.extend(self.ring.names().iter().cloned());
        let work = RingSpec::new(&names)?;
        let tv = Polynomial::var(&work, 0);
        let one_minus_t = &Polynomial::one(&work) - &tv;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&tv * &f.embed(&work)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&work)?);
        }
        let gb = GroebnerBasis::compute(
            &work,
            &gens,
            &MonomialOrder::Elimination { block: 1 },
            Some(self.limits.max_pairs),
            None,
        )?;
        let kept = gb
            .polynomials()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.exps()[0] == 0))
            .map(|p| p.embed(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(kept))
    }

    /// Dimension of the quotient ring as a vector space over the rationals.
    pub fn quotient_dimension(&self) -> Result<usize> {
        if self.gens.is_empty() {
            return Err(Error::InfiniteQuotient);
        }
        Ok(self.standard_basis()?.standard_monomials()?.len())
    }

    pub fn is_zero_dimensional(&self) -> Result<bool> {
        match self.quotient_dimension() {
            Ok(_) => Ok(true),
            Err(Error::InfiniteQuotient) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Least `N` with every monomial of degree `N` in the ideal.
    ///
    /// Fails with `InfiniteQuotient` for non Artinian quotients and with
    /// `NotIsolated` when the quotient is finite but supported away from the
    /// origin as well.
    pub fn nilpotency_index(&self) -> Result<usize> {
        let dim = self.quotient_dimension()?;
        let gb = self.standard_basis()?;
        for n in 0..=dim {
            let all_in = monomials_of_degree(self.ring.nvars(), n as u32)
                .into_iter()
                .all(|m| gb.reduces_to_zero(&Polynomial::monomial(&self.ring, m, Rational::from_integer(1.into()))));
            if all_in {
                return Ok(n);
            }
        }
        Err(Error::NotIsolated(dim))
    }

    /// Nilpotency index of the maximal ideal in the localization at the
    /// origin: least `N` with `m^N ⊆ I + m^(N+1)`, which by Nakayama's lemma
    /// means `m^N ⊆ I` in the local ring. Searches `N ≤ cap`.
    pub fn local_nilpotency_index(&self, cap: usize) -> Result<usize> {
        if self.gens.iter().any(|g| !g.constant_term().is_zero()) {
            return Ok(0);
        }
        for n in 1..=cap {
            let trunc = self.plus_maximal_power(n as u32 + 1);
            let gb = trunc.standard_basis()?;
            let all_in = monomials_of_degree(self.ring.nvars(), n as u32)
                .into_iter()
                .all(|m| gb.reduces_to_zero(&Polynomial::monomial(&self.ring, m, Rational::from_integer(1.into()))));
            if all_in {
                return Ok(n);
            }
        }
        Err(Error::NotIsolated(cap))
    }

    /// Membership of `p` in the radical, via `1 ∈ I + (1 - z*p)`.
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let z = self.ring.fresh_name("z");
        let mut names = self.ring.names().to_vec();
        names.push(z);
        let work = RingSpec::new(&names)?;
        let zv = Polynomial::var(&work, names.len() - 1);
        let mut gens = self.gens.iter().map(|g| g.embed(&work)).collect::<Result<Vec<_>>>()?;
        gens.push(&Polynomial::one(&work) - &(&zv * &p.embed(&work)?));
        let gb = GroebnerBasis::compute(&work, &gens, &MonomialOrder::DegRevLex, Some(self.limits.max_pairs), None)?;
        Ok(gb.is_unit())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// The monomial ideal view when every generator is a monomial.
    pub fn monomial_view(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        Some(MonomialIdeal::new(
            &self.ring,
            self.gens.iter().map(|g| g.terms().next().expect("monomial").0.clone()).collect(),
        ))
    }

    /// Generators as display strings of the canonical basis.
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        Ok(self.standard_basis()?.polynomials().iter().map(ToString::to_string).collect())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}]({})", self.ring, self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// All monomials of total degree `d` in `n` variables, lexicographically
/// decreasing.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All monomials of total degree at most `d`, by increasing degree.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}
