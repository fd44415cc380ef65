//! Shared generators and independent oracles for the integration tests and
//! the acceptance harness. Nothing here calls the closure algorithms it is
//! used to check.
#![allow(dead_code)]

pub mod props;

use std::ops::{Add, Mul, Neg, Sub};

use jetclosure::algebra::{integer, Monomial, Polynomial, Rational, RingSpec};
use jetclosure::catalog::AdeType;
use jetclosure::groebner::{Ideal, MonomialIdeal};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> RingSpec {
    RingSpec::parse(["x", "y", "z"][..n].join(",").as_str()).unwrap()
}

pub fn xy() -> RingSpec {
    ring(2)
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All exponent vectors in `n` variables of total degree `d`.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Rational {
    let c: i64 = rng.gen_range(1..=5);
    integer(if rng.gen_bool(0.5) { c } else { -c })
}

/// A nonzero homogeneous polynomial of degree `d` with up to `max_terms`
/// terms.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &RingSpec, d: u32, max_terms: usize) -> Polynomial {
    let all = exponents_of_degree(ring.nvars(), d);
    let k = rng.gen_range(1..=max_terms.min(all.len()));
    let mut picked = Vec::new();
    while picked.len() < k {
        let e = all[rng.gen_range(0..all.len())].clone();
        if !picked.contains(&e) {
            picked.push(e);
        }
    }
    Polynomial::from_terms(ring, picked.into_iter().map(|e| (Monomial::new(e), nonzero_coeff(rng))))
}

/// A polynomial vanishing at the origin with terms of degree 1..=max_deg.
pub fn random_polynomial(rng: &mut ChaCha8Rng, ring: &RingSpec, max_deg: u32, max_terms: usize) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<(Monomial, Rational)> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            let all = exponents_of_degree(ring.nvars(), d);
            (Monomial::new(all[rng.gen_range(0..all.len())].clone()), nonzero_coeff(rng))
        })
        .collect();
    let p = Polynomial::from_terms(ring, terms);
    if p.is_zero() {
        Polynomial::var(ring, 0)
    } else {
        p
    }
}

pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    let n = rng.gen_range(1..=3);
    let r = ring(n);
    let k = rng.gen_range(1..=2);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=4);
            random_homogeneous(rng, &r, d, 3)
        })
        .collect();
    Ideal::new(&r, gens).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
        let d: u32 = e.iter().sum();
        if d >= 1 && d <= max_deg {
            return Monomial::new(e);
        }
    }
}

pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, r: &RingSpec, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    MonomialIdeal::new(r, (0..k).map(|_| random_monomial(rng, r.nvars(), max_deg)).collect())
}

pub fn random_squarefree_monomial_ideal(rng: &mut ChaCha8Rng, r: &RingSpec, max_gens: usize) -> MonomialIdeal {
    let n = r.nvars();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
            if e.contains(&1) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::new(r, gens)
}

/// Gaussian rational `re + i*im`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gq {
    pub re: Rational,
    pub im: Rational,
}

impl Gq {
    pub fn real(c: Rational) -> Self {
        Gq { re: c, im: Rational::zero() }
    }
    pub fn int(c: i64) -> Self {
        Gq::real(integer(c))
    }
    pub fn i() -> Self {
        Gq { re: Rational::zero(), im: Rational::one() }
    }
    pub fn zero() -> Self {
        Gq::int(0)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &Gq {
    type Output = Gq;
    fn add(self, o: &Gq) -> Gq {
        Gq { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &Gq {
    type Output = Gq;
    fn sub(self, o: &Gq) -> Gq {
        Gq { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &Gq {
    type Output = Gq;
    fn mul(self, o: &Gq) -> Gq {
        Gq { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for &Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -&self.re, im: -&self.im }
    }
}

/// Power series truncated after `t^m`, stored as `m + 1` coefficients.
pub type Series = Vec<Gq>;

fn s_zero(m: usize) -> Series {
    vec![Gq::zero(); m + 1]
}

fn s_one(m: usize) -> Series {
    let mut s = s_zero(m);
    s[0] = Gq::int(1);
    s
}

fn s_mul(a: &Series, b: &Series) -> Series {
    let m = a.len() - 1;
    let mut out = s_zero(m);
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(m + 1 - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn s_add(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn s_pow(a: &Series, e: u32) -> Series {
    (0..e).fold(s_one(a.len() - 1), |acc, _| s_mul(&acc, a))
}

/// `t^order * (random series with nonzero constant term)`; the zero series
/// when `order > m`.
fn random_series(rng: &mut ChaCha8Rng, order: usize, m: usize) -> Series {
    let mut s = s_zero(m);
    for (k, c) in s.iter_mut().enumerate().skip(order) {
        let v: i64 = rng.gen_range(-3..=3);
        *c = Gq::int(if k == order && v == 0 { 1 } else { v });
    }
    s
}

/// A curve `s -> (X(s), Y(s))` with Gaussian rational coefficients, given
/// as `(exponent, coefficient)` lists.
#[derive(Clone, Debug)]
pub struct Branch {
    pub x: Vec<(u32, Gq)>,
    pub y: Vec<(u32, Gq)>,
}

fn branch(x: Vec<(u32, Gq)>, y: Vec<(u32, Gq)>) -> Branch {
    Branch { x, y }
}

/// Parametrizations of every branch of the catalog curve of type `t`.
pub fn catalog_branches(t: AdeType) -> Vec<Branch> {
    let one = || Gq::int(1);
    let minus = || Gq::int(-1);
    let i = Gq::i;
    let mi = || -&Gq::i();
    match t {
        AdeType::A(k) if k % 2 == 1 => {
            let n = k.div_ceil(2);
            vec![branch(vec![(n, i())], vec![(1, one())]), branch(vec![(n, mi())], vec![(1, one())])]
        }
        AdeType::A(k) => vec![branch(vec![(k + 1, one())], vec![(2, minus())])],
        AdeType::D(k) if k % 2 == 0 => {
            let n = k / 2;
            vec![
                branch(vec![(1, one())], vec![]),
                branch(vec![(n - 1, i())], vec![(1, one())]),
                branch(vec![(n - 1, mi())], vec![(1, one())]),
            ]
        }
        AdeType::D(k) => {
            let n = (k - 1) / 2;
            vec![branch(vec![(1, one())], vec![]), branch(vec![(2 * n - 1, one())], vec![(2, minus())])]
        }
        AdeType::E6 => vec![branch(vec![(4, minus())], vec![(3, one())])],
        AdeType::E7 => vec![branch(vec![], vec![(1, one())]), branch(vec![(3, one())], vec![(2, minus())])],
        AdeType::E8 => vec![branch(vec![(5, minus())], vec![(3, one())])],
    }
}

fn compose(curve: &[(u32, Gq)], sigma: &Series) -> Series {
    let m = sigma.len() - 1;
    curve.iter().fold(s_zero(m), |acc, (e, c)| {
        let p = s_pow(sigma, *e);
        s_add(&acc, &p.iter().map(|v| c * v).collect())
    })
}

fn eval_terms(terms: &[(u32, u32, Rational)], xp: &[Series], yp: &[Series]) -> Series {
    let m = xp[0].len() - 1;
    terms.iter().fold(s_zero(m), |acc, (i, j, c)| {
        let prod = s_mul(&xp[*i as usize], &yp[*j as usize]);
        s_add(&acc, &prod.iter().map(|v| &Gq::real(c.clone()) * v).collect())
    })
}

fn powers(s: &Series, upto: usize) -> Vec<Series> {
    let mut out = vec![s_one(s.len() - 1)];
    for k in 1..=upto {
        out.push(s_mul(&out[k - 1], s));
    }
    out
}

// Incremental row echelon form over the rationals.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn insert(&mut self, mut row: Vec<Rational>) {
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let c = row[*p].clone();
                for (a, b) in row.iter_mut().zip(r) {
                    *a -= &c * b;
                }
            }
        }
        if let Some(p) = row.iter().position(|v| !v.is_zero()) {
            let inv = Rational::one() / &row[p];
            row.iter_mut().for_each(|v| *v *= &inv);
            for (_, r) in self.rows.iter_mut() {
                if !r[p].is_zero() {
                    let c = r[p].clone();
                    for (a, b) in r.iter_mut().zip(&row) {
                        *a -= &c * b;
                    }
                }
            }
            self.rows.push((p, row));
        }
    }
}

#[derive(Debug)]
pub struct ArcOracle {
    /// Generators of the candidate that could not be shown to lie in the
    /// jet support closure.
    pub unsound: Vec<String>,
    /// Proven lower bound for the quotient dimension of the true closure.
    pub rank: usize,
    /// Quotient dimension of the candidate.
    pub candidate_dim: usize,
    pub arcs_used: usize,
}

impl ArcOracle {
    pub fn verified(&self) -> bool {
        self.unsound.is_empty() && self.rank == self.candidate_dim
    }
}

/// Checks a candidate for `(f)^{m-jsc}`, `f` in two variables, from both
/// sides.
///
/// Upper bound: `x^p y^q` lies in the closure when every order pair
/// `(u, v)` of an arc with `p*u + q*v ≤ m` forces a single term of `f` to
/// be the unique lowest one below `t^(m+1)`, so no such arc lies on the jet
/// scheme. Every candidate generator must lie in `f` plus those monomials.
///
/// Lower bound: explicit arcs with `f(arc) ≡ 0 mod t^(m+1)` (deep arcs and
/// reparametrized, perturbed branch arcs, all verified) give linear
/// functionals vanishing on the closure; their rank bounds the quotient
/// dimension from below.
pub fn jsc_arc_oracle(f: &Polynomial, branches: &[Branch], m: usize, candidate: &Ideal, seed: u64) -> ArcOracle {
    let ring = f.ring().clone();
    let terms: Vec<(u32, u32, Rational)> = f.terms().map(|(mo, c)| (mo.exps()[0], mo.exps()[1], c.clone())).collect();
    let top = m + 1;
    let max_exp = terms.iter().map(|&(i, j, _)| i.max(j) as usize).max().unwrap_or(0);

    // Orders u, v run over 1..=m+1, with m+1 standing for "at least m+1".
    let excluded = |u: usize, v: usize| {
        let orders: Vec<usize> = terms.iter().map(|&(i, j, _)| u * i as usize + v * j as usize).collect();
        let w = *orders.iter().min().unwrap();
        w <= m && orders.iter().filter(|&&o| o == w).count() == 1
    };
    let mut sound_monos = Vec::new();
    for d in 1..=top as u32 {
        for e in exponents_of_degree(2, d) {
            let (p, q) = (e[0] as usize, e[1] as usize);
            let ok = (1..=top).all(|u| (1..=top).all(|v| p * u + q * v > m || excluded(u, v)));
            if ok {
                sound_monos.push(Monomial::new(e));
            }
        }
    }
    let upper = MonomialIdeal::new(&ring, sound_monos).to_ideal().with_generators([f.clone()]);
    let unsound: Vec<String> =
        candidate.generators().iter().filter(|g| !upper.contains(g).unwrap()).map(|g| g.to_string()).collect();

    let candidate_dim = candidate.quotient_dimension().unwrap();
    let columns: Vec<(u32, u32)> =
        (0..=m as u32).flat_map(|d| exponents_of_degree(2, d)).map(|e| (e[0], e[1])).collect();
    let mut ech = Echelon { rows: Vec::new() };
    let mut arcs_used = 0;
    let mut rng = rng(seed);

    let feed = |x: Series, y: Series, ech: &mut Echelon| -> bool {
        let xp = powers(&x, top.max(max_exp));
        let yp = powers(&y, top.max(max_exp));
        if eval_terms(&terms, &xp, &yp).iter().any(|c| !c.is_zero()) {
            return false;
        }
        let images: Vec<Series> = columns.iter().map(|&(p, q)| s_mul(&xp[p as usize], &yp[q as usize])).collect();
        for k in 0..=m {
            ech.insert(images.iter().map(|s| s[k].re.clone()).collect());
            ech.insert(images.iter().map(|s| s[k].im.clone()).collect());
        }
        true
    };

    'deep: for u in 1..=top {
        for v in 1..=top {
            let orders = terms.iter().map(|&(i, j, _)| u * i as usize + v * j as usize);
            if orders.min().unwrap() > m {
                for _ in 0..2 {
                    let x = random_series(&mut rng, u, m);
                    let y = random_series(&mut rng, v, m);
                    if feed(x, y, &mut ech) {
                        arcs_used += 1;
                    }
                    if ech.rows.len() >= candidate_dim {
                        break 'deep;
                    }
                }
            }
        }
    }
    'branches: for pass in 0..3 {
        for b in branches {
            for k in 1..=m {
                for rx in 1..=top {
                    for ry in 1..=top {
                        if ech.rows.len() >= candidate_dim {
                            break 'branches;
                        }
                        // First pass: unperturbed arcs only.
                        if pass == 0 && (rx < top || ry < top) {
                            continue;
                        }
                        let sigma = random_series(&mut rng, k, m);
                        let mut x = compose(&b.x, &sigma);
                        let mut y = compose(&b.y, &sigma);
                        x = s_add(&x, &random_series(&mut rng, rx, m));
                        y = s_add(&y, &random_series(&mut rng, ry, m));
                        if feed(x, y, &mut ech) {
                            arcs_used += 1;
                        }
                    }
                }
            }
        }
    }
    ArcOracle { unsound, rank: ech.rows.len(), candidate_dim, arcs_used }
}
