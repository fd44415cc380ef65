//! Buchberger's algorithm over primitive integer polynomials.
//!
//! Polynomials are kept as term vectors sorted decreasingly for the active
//! order, with integer coefficients. Reductions are fraction free; when an
//! exact rational normal form is needed the accumulated scale factor is
//! tracked alongside.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational, RingSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    pub e: Box<[u32]>,
    mask: u64,
    /// Degree used for pair selection and truncation (weighted for weighted orders).
    pub key: u64,
}

#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub order: MonomialOrder,
}

impl Ctx {
    pub fn mono(&self, e: Box<[u32]>) -> Mono {
        let mut mask = 0u64;
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                mask |= 1 << (i % 64);
            }
        }
        let key = self.order.sugar(&e);
        Mono { e, mask, key }
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match &self.order {
            MonomialOrder::DegRevLex | MonomialOrder::WeightedDegRevLex(_) => a.key.cmp(&b.key).then_with(|| {
                for (x, y) in a.e.iter().zip(b.e.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            other => other.cmp(&a.e, &b.e),
        }
    }

    fn mul(&self, a: &Mono, b: &Mono) -> Mono {
        Mono { e: a.e.iter().zip(b.e.iter()).map(|(x, y)| x + y).collect(), mask: a.mask | b.mask, key: a.key + b.key }
    }

    fn lcm(&self, a: &Mono, b: &Mono) -> Mono {
        self.mono(a.e.iter().zip(b.e.iter()).map(|(&x, &y)| x.max(y)).collect())
    }

    fn div(&self, a: &Mono, b: &Mono) -> Mono {
        self.mono(a.e.iter().zip(b.e.iter()).map(|(x, y)| x - y).collect())
    }
}

pub(crate) fn divides(a: &Mono, b: &Mono) -> bool {
    a.mask & !b.mask == 0 && a.e.iter().zip(b.e.iter()).all(|(x, y)| x <= y)
}

fn coprime(a: &Mono, b: &Mono) -> bool {
    a.e.iter().zip(b.e.iter()).all(|(&x, &y)| x == 0 || y == 0)
}

pub(crate) type Terms = Vec<(Mono, BigInt)>;

#[derive(Clone, Debug)]
pub(crate) struct GPoly {
    pub terms: Terms,
}

impl GPoly {
    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Converts to an integer polynomial `s * p`; returns it with `s`.
    pub fn from_poly(ctx: &Ctx, p: &Polynomial) -> (GPoly, Rational) {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Terms = p
            .terms()
            .map(|(m, c)| {
                let v = c.numer() * (&den / c.denom());
                (ctx.mono(m.exps().into()), v)
            })
            .collect();
        terms.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
        (GPoly { terms }, Rational::from_integer(den))
    }

    /// Divides by the content and makes the leading coefficient positive.
    /// Returns the signed divisor.
    pub fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
        g
    }

    pub fn to_polynomial(&self, ring: &RingSpec, scale: &Rational) -> Polynomial {
        let inv = scale.recip();
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (Monomial::new(m.e.to_vec()), Rational::from_integer(c.clone()) * &inv)),
        )
    }
}

/// `a * qa * f - b * qb * g`, with cancelled terms removed.
fn combine(
    ctx: &Ctx,
    a: &BigInt,
    qa: Option<&Mono>,
    f: &[(Mono, BigInt)],
    b: &BigInt,
    qb: &Mono,
    g: &[(Mono, BigInt)],
) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let shift = |m: &Mono, q: Option<&Mono>| match q {
        Some(q) => ctx.mul(m, q),
        None => m.clone(),
    };
    let mut i = 0;
    let mut j = 0;
    let mut fi = f.first().map(|t| shift(&t.0, qa));
    let mut gj = g.first().map(|t| ctx.mul(&t.0, qb));
    loop {
        match (&fi, &gj) {
            (None, None) => break,
            (Some(fm), None) => {
                out.push((fm.clone(), a * &f[i].1));
                i += 1;
                fi = f.get(i).map(|t| shift(&t.0, qa));
            }
            (None, Some(gm)) => {
                out.push((gm.clone(), -(b * &g[j].1)));
                j += 1;
                gj = g.get(j).map(|t| ctx.mul(&t.0, qb));
            }
            (Some(fm), Some(gm)) => match ctx.cmp(fm, gm) {
                Ordering::Greater => {
                    out.push((fm.clone(), a * &f[i].1));
                    i += 1;
                    fi = f.get(i).map(|t| shift(&t.0, qa));
                }
                Ordering::Less => {
                    out.push((gm.clone(), -(b * &g[j].1)));
                    j += 1;
                    gj = g.get(j).map(|t| ctx.mul(&t.0, qb));
                }
                Ordering::Equal => {
                    let c = a * &f[i].1 - b * &g[j].1;
                    if !c.is_zero() {
                        out.push((fm.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    fi = f.get(i).map(|t| shift(&t.0, qa));
                    gj = g.get(j).map(|t| ctx.mul(&t.0, qb));
                }
            },
        }
    }
    out
}

fn find_divisor<'a>(m: &Mono, basis: &[&'a GPoly]) -> Option<&'a GPoly> {
    basis.iter().find(|g| divides(g.lm(), m)).copied()
}

/// Full reduction of `f` modulo `basis`.
///
/// Returns `(r, s)` with `r` reduced and `r = s * f` modulo the ideal.
pub(crate) fn reduce(ctx: &Ctx, f: &GPoly, basis: &[&GPoly]) -> (GPoly, Rational) {
    let mut rem: Terms = Vec::new();
    let mut cur: Terms = f.terms.clone();
    let mut start = 0usize;
    let mut scale = Rational::one();
    let mut steps = 0usize;
    while start < cur.len() {
        let m = &cur[start].0;
        match find_divisor(m, basis) {
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
            Some(g) => {
                let q = ctx.div(m, g.lm());
                let c = &cur[start].1;
                let d = c.gcd(g.lc());
                let mut a = g.lc() / &d;
                let mut b = c / &d;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                cur = combine(ctx, &a, None, &cur[start..], &b, &q, &g.terms);
                start = 0;
                if !a.is_one() {
                    for t in rem.iter_mut() {
                        t.1 *= &a;
                    }
                    scale *= Rational::from_integer(a);
                }
                steps += 1;
                if steps.is_multiple_of(4) {
                    let mut content = BigInt::zero();
                    for (_, c) in rem.iter().chain(cur.iter()) {
                        content = content.gcd(c);
                        if content.is_one() {
                            break;
                        }
                    }
                    if !content.is_zero() && !content.is_one() {
                        for (_, c) in rem.iter_mut().chain(cur.iter_mut()) {
                            *c /= &content;
                        }
                        scale /= Rational::from_integer(content);
                    }
                }
            }
        }
    }
    (GPoly { terms: rem }, scale)
}

/// Options for one Groebner basis run.
#[derive(Clone, Debug, Default)]
pub(crate) struct GbOptions {
    pub max_pairs: Option<usize>,
    /// Ignore S-pairs whose lcm has degree (weighted, for weighted orders)
    /// above the bound. Only meaningful for inputs homogeneous for that degree.
    pub degree_bound: Option<u64>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// Reduced Groebner basis of the integer polynomials `input`.
///
/// The result is sorted by increasing leading monomial, every element is
/// primitive with positive leading coefficient.
pub(crate) fn buchberger(ctx: &Ctx, input: Vec<GPoly>, opts: &GbOptions) -> Result<Vec<GPoly>> {
    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut seeds: Vec<GPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
    for s in seeds.iter_mut() {
        s.make_primitive();
    }
    if seeds.iter().any(|s| s.lm().e.iter().all(|&x| x == 0)) {
        return Ok(vec![unit_poly(ctx, seeds[0].lm().e.len())]);
    }
    seeds.sort_by(|a, b| ctx.cmp(a.lm(), b.lm()));

    for s in seeds {
        let basis: Vec<&GPoly> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let (mut h, _) = reduce(ctx, &s, &basis);
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        if h.lm().e.iter().all(|&x| x == 0) {
            return Ok(vec![unit_poly(ctx, h.lm().e.len())]);
        }
        update(ctx, &mut polys, &mut active, &mut pairs, h);
    }

    let mut count = 0usize;
    loop {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.lcm.key.cmp(&q.lcm.key).then(p.i.cmp(&q.i)).then(p.j.cmp(&q.j)))
            .map(|(k, _)| k);
        let Some(k) = best else { break };
        if let Some(bound) = opts.degree_bound {
            if pairs[k].lcm.key > bound {
                break;
            }
        }
        let pair = pairs.swap_remove(k);
        count += 1;
        if let Some(limit) = opts.max_pairs {
            if count > limit {
                return Err(Error::StepLimit(limit));
            }
        }
        let s = spoly(ctx, &polys[pair.i], &polys[pair.j], &pair.lcm);
        if s.is_zero() {
            continue;
        }
        let basis: Vec<&GPoly> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let (mut h, _) = reduce(ctx, &s, &basis);
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        if h.lm().e.iter().all(|&x| x == 0) {
            return Ok(vec![unit_poly(ctx, h.lm().e.len())]);
        }
        update(ctx, &mut polys, &mut active, &mut pairs, h);
    }

    let mut minimal: Vec<GPoly> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    minimal.sort_by(|a, b| ctx.cmp(a.lm(), b.lm()));
    Ok(interreduce(ctx, minimal))
}

fn unit_poly(ctx: &Ctx, nvars: usize) -> GPoly {
    GPoly { terms: vec![(ctx.mono(vec![0; nvars].into()), BigInt::one())] }
}

fn spoly(ctx: &Ctx, f: &GPoly, g: &GPoly, lcm: &Mono) -> GPoly {
    let qf = ctx.div(lcm, f.lm());
    let qg = ctx.div(lcm, g.lm());
    let d = f.lc().gcd(g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    // a*qf*f - b*qg*g; the leading terms cancel.
    let terms = combine(ctx, &a, Some(&qf), &f.terms, &b, &qg, &g.terms);
    GPoly { terms }
}

/// Gebauer-Moeller installation of a new basis element.
fn update(ctx: &Ctx, polys: &mut Vec<GPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: GPoly) {
    let t = polys.len();
    let hm = h.lm().clone();
    polys.push(h);
    active.push(true);

    let mut cands: Vec<(usize, Mono, bool)> = (0..t)
        .filter(|&g| active[g])
        .map(|g| {
            let gm = polys[g].lm();
            (g, ctx.lcm(gm, &hm), coprime(gm, &hm))
        })
        .collect();

    // Chain criterion among the new pairs: keep a pair if its leading terms
    // are coprime or no other remaining/kept pair has an lcm dividing its lcm.
    let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
    while let Some(c) = cands.pop() {
        let dominated = !c.2 && (cands.iter().any(|o| divides(&o.1, &c.1)) || kept.iter().any(|o| divides(&o.1, &c.1)));
        if !dominated {
            kept.push(c);
        }
    }

    // Old pairs survive unless lt(h) divides their lcm strictly on both sides.
    pairs.retain(|p| {
        if !divides(&hm, &p.lcm) {
            return true;
        }
        let l1 = ctx.lcm(polys[p.i].lm(), &hm);
        let l2 = ctx.lcm(polys[p.j].lm(), &hm);
        l1.e == p.lcm.e || l2.e == p.lcm.e
    });

    for (g, lcm, cop) in kept {
        if !cop {
            pairs.push(Pair { i: g, j: t, lcm });
        }
    }

    for g in 0..t {
        if active[g] && divides(&hm, polys[g].lm()) {
            active[g] = false;
        }
    }
}

fn interreduce(ctx: &Ctx, minimal: Vec<GPoly>) -> Vec<GPoly> {
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&GPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        let (mut r, _) = reduce(ctx, g, &others);
        r.make_primitive();
        debug_assert!(!r.is_zero() && r.lm().e == g.lm().e);
        out.push(r);
    }
    out
}
