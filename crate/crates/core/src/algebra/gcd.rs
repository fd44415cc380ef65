//! Multivariate gcd over the rationals by recursive content / primitive part
//! splitting and subresultant remainder sequences, plus the square-free tests
//! built on it.

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Coefficients of `p` as a polynomial in variable `var`; entry `k` holds the
/// coefficient of `var^k` (free of `var`).
fn split(p: &Polynomial, var: usize) -> Vec<Polynomial> {
    let ring = p.ring();
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut out = vec![Polynomial::zero(ring); deg + 1];
    for (m, c) in p.terms() {
        let k = m.exps()[var] as usize;
        let mut e = m.exps().to_vec();
        e[var] = 0;
        out[k].add_term(Monomial::new(e), c.clone());
    }
    out
}

fn join(coeffs: &[Polynomial], var: usize) -> Polynomial {
    let ring = coeffs[0].ring();
    let mut out = Polynomial::zero(ring);
    for (k, c) in coeffs.iter().enumerate() {
        for (m, a) in c.terms() {
            let mut e = m.exps().to_vec();
            e[var] = k as u32;
            out.add_term(Monomial::new(e), a.clone());
        }
    }
    out
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.len() > 1 && v.last().map(Polynomial::is_zero).unwrap_or(false) {
        v.pop();
    }
}

fn udeg(v: &[Polynomial]) -> usize {
    v.len() - 1
}

fn is_upoly_zero(v: &[Polynomial]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, exactly that power.
fn prem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = udeg(b);
    let lb = &b[db];
    let delta = udeg(a) - db;
    let mut r: Vec<Polynomial> = a.to_vec();
    let mut steps = 0;
    while !is_upoly_zero(&r) && udeg(&r) >= db {
        let dr = udeg(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[k + dr - db] = &r[k + dr - db] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(Polynomial::zero(lb.ring()));
        }
        trim(&mut r);
        steps += 1;
    }
    let missing = delta + 1 - steps;
    if missing > 0 {
        let f = lb.pow(missing as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn content(v: &[Polynomial]) -> Polynomial {
    let mut g = Polynomial::zero(v[0].ring());
    for c in v {
        g = gcd(&g, c);
        if g.is_constant() && !g.is_zero() {
            return Polynomial::one(c.ring());
        }
    }
    g
}

fn divide_all(v: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    v.iter().map(|c| c.div_exact(d).expect("exact division by content")).collect()
}

fn first_common_var(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    let ua = a.used_variables();
    let ub = b.used_variables();
    ua.into_iter().find(|v| ub.contains(v))
}

/// Greatest common divisor, normalized with leading coefficient 1 for
/// degrevlex. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(ring);
    }
    let var = match first_common_var(a, b) {
        Some(v) => v,
        None => {
            // No shared variable: the gcd is the gcd of the contents of
            // `a` with respect to any of its variables and `b`.
            let v = a.used_variables()[0];
            let ca = content(&split(a, v));
            return gcd(&ca, b);
        }
    };
    let mut sa = split(a, var);
    let mut sb = split(b, var);
    let ca = content(&sa);
    let cb = content(&sb);
    let c = gcd(&ca, &cb);
    sa = divide_all(&sa, &ca);
    sb = divide_all(&sb, &cb);
    if udeg(&sa) < udeg(&sb) {
        std::mem::swap(&mut sa, &mut sb);
    }
    let g = subresultant_gcd(sa, sb);
    let pg = divide_all(&g, &content(&g));
    (&c * &join(&pg, var)).monic()
}

/// Gcd of two primitive polynomials in the main variable, up to a factor
/// free of that variable.
fn subresultant_gcd(mut a: Vec<Polynomial>, mut b: Vec<Polynomial>) -> Vec<Polynomial> {
    let ring = a[0].ring().clone();
    let one = Polynomial::one(&ring);
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        if udeg(&b) == 0 {
            return vec![one];
        }
        let delta = udeg(&a) - udeg(&b);
        let r = prem(&a, &b);
        if is_upoly_zero(&r) {
            return b;
        }
        if udeg(&r) == 0 {
            return vec![one];
        }
        let d = &g * &h.pow(delta as u32);
        a = b;
        b = divide_all(&r, &d);
        g = a[udeg(&a)].clone();
        if delta == 0 {
            // h stays
        } else {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            h = num.div_exact(&den).expect("subresultant h update is exact");
        }
    }
}

/// Gcd of a polynomial with all of its partial derivatives.
fn gcd_with_partials(p: &Polynomial) -> Polynomial {
    let mut g = p.clone();
    for v in p.used_variables() {
        g = gcd(&g, &p.partial_derivative(v));
        if g.is_constant() {
            break;
        }
    }
    g
}

/// True when `p` has no repeated irreducible factor.
pub fn squarefree_test(p: &Polynomial) -> Result<bool> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    Ok(gcd_with_partials(p).is_constant())
}

/// Product of the distinct irreducible factors of `p`, made monic.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let g = gcd_with_partials(p);
    Ok(p.div_exact(&g).expect("gcd divides p").monic())
}
