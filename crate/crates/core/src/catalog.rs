//! The simple (ADE) plane curve singularities with their published jet
//! closure and jet support closure data, and classification by jet support
//! closure dimensions.
//!
//! Expected values are returned only inside the ranges where a closed form
//! or table entry exists; everywhere else the answer is `None`.

use std::fmt;

use crate::algebra::{integer, Monomial, Polynomial, RingSpec};
use crate::closures::{jet_closure, jet_support_closure};
use crate::error::{Error, Result};
use crate::filtration::milnor_number;
use crate::groebner::{Ideal, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn binomial_poly(ring: &RingSpec, terms: &[(u32, u32)]) -> Polynomial {
    Polynomial::from_terms(ring, terms.iter().map(|&(i, j)| (Monomial::new(vec![i, j]), integer(1))))
}

impl AdeType {
    pub fn new_a(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Unsupported("A_k needs k >= 1".into()));
        }
        Ok(AdeType::A(k))
    }

    pub fn new_d(k: u32) -> Result<Self> {
        if k < 4 {
            return Err(Error::Unsupported("D_k needs k >= 4".into()));
        }
        Ok(AdeType::D(k))
    }

    pub fn milnor(self) -> u32 {
        match self {
            AdeType::A(k) | AdeType::D(k) => k,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    /// Every type with Milnor number at most `max`, A before D before E.
    pub fn up_to(max: u32) -> Vec<AdeType> {
        let mut out: Vec<AdeType> = (1..=max).map(AdeType::A).collect();
        out.extend((4..=max).map(AdeType::D));
        out.extend([AdeType::E6, AdeType::E7, AdeType::E8].into_iter().filter(|t| t.milnor() <= max));
        out
    }

    pub fn ring() -> RingSpec {
        RingSpec::parse("x,y").expect("valid ring")
    }

    /// Exponents of the normal form used for the closure formulas:
    /// `x^2 + y^(k+1)`, `x^2 y + y^(k-1)`, `x^3 + y^4`, `x^3 + x y^3`,
    /// `x^3 + y^5`.
    fn exponents(self) -> Vec<(u32, u32)> {
        match self {
            AdeType::A(k) => vec![(2, 0), (0, k + 1)],
            AdeType::D(k) => vec![(2, 1), (0, k - 1)],
            AdeType::E6 => vec![(3, 0), (0, 4)],
            AdeType::E7 => vec![(3, 0), (1, 3)],
            AdeType::E8 => vec![(3, 0), (0, 5)],
        }
    }

    /// Defining polynomial in the first two variables of `ring`.
    pub fn defining_poly_in(self, ring: &RingSpec) -> Polynomial {
        binomial_poly(ring, &self.exponents())
    }

    pub fn defining_poly(self) -> Polynomial {
        self.defining_poly_in(&Self::ring())
    }

    /// The other common normal form: `x^(k+1) + y^2` for `A_k`, which is the
    /// closure-formula form with `x` and `y` swapped and then reordered.
    /// Closure dimensions do not depend on the choice. Other types keep
    /// their form.
    pub fn arnold_poly_in(self, ring: &RingSpec) -> Polynomial {
        match self {
            AdeType::A(k) => binomial_poly(ring, &[(k + 1, 0), (0, 2)]),
            other => other.defining_poly_in(ring),
        }
    }

    pub fn ideal(self) -> Ideal {
        Ideal::new(&Self::ring(), vec![self.defining_poly()]).expect("nonzero")
    }

    /// `I + m^(m+1)` where the jet closure is known to be good, plus the
    /// single exception `m^(m+1) + I + (x^3)` for `A_k` at `m = k + 2`.
    pub fn expected_jc(self, m: usize) -> Option<Ideal> {
        let i = self.ideal();
        let good = Some(i.plus_maximal_power(m as u32 + 1));
        if self.defining_poly().is_homogeneous() {
            return good;
        }
        match self {
            AdeType::A(k) => {
                let n = k as usize + 1;
                if m <= n {
                    good
                } else if m == n + 1 {
                    Some(i.plus_maximal_power(m as u32 + 1).with_generators([binomial_poly(&Self::ring(), &[(3, 0)])]))
                } else {
                    None
                }
            }
            AdeType::D(k) => (m < k as usize).then(|| i.plus_maximal_power(m as u32 + 1)),
            AdeType::E6 | AdeType::E7 => (m <= 4).then(|| i.plus_maximal_power(m as u32 + 1)),
            AdeType::E8 => (m <= 5).then(|| i.plus_maximal_power(m as u32 + 1)),
        }
    }

    /// Published jet support closure: the closed forms for A and D types
    /// and for E types at large `m`, the small-order table for E types.
    /// Dimensions are given exactly as published, even where they disagree
    /// with the published ideal.
    pub fn expected_jsc(self, m: usize) -> Option<(Ideal, usize)> {
        if m == 0 {
            return None;
        }
        let ring = Self::ring();
        let f = self.defining_poly();
        let mono = |gens: &[(u32, u32)]| {
            MonomialIdeal::new(&ring, gens.iter().map(|&(i, j)| Monomial::new(vec![i, j])).collect()).to_ideal()
        };
        let mu = m as u32;
        match self {
            AdeType::A(k) if k % 2 == 1 => {
                let n = (k as usize).div_ceil(2);
                if m < 2 * n {
                    Some((mono(&[(2, 0), (1, ceil_div(m, 2) as u32), (0, mu + 1)]), m + 1 + ceil_div(m, 2)))
                } else {
                    Some((weight_cut_with(&f, (n as u32, 1), m), 2 * m + 2 - n))
                }
            }
            AdeType::A(k) => {
                let n = k as usize / 2;
                if m < 2 * n + 1 {
                    Some((mono(&[(2, 0), (1, ceil_div(m, 2) as u32), (0, mu + 1)]), m + 1 + ceil_div(m + 1, 2)))
                } else if m < 4 * n + 2 {
                    Some((
                        mono(&[(2, 0), (1, ceil_div(m + 1, 4) as u32), (0, ceil_div(m + 1, 2) as u32)]),
                        ceil_div(3 * (m + 1), 4),
                    ))
                } else {
                    Some((weight_cut_with(&f, (2 * n as u32 + 1, 2), m), m + 1 - n))
                }
            }
            AdeType::D(k) if k % 2 == 0 => {
                let n = k as usize / 2;
                if m < 2 * n - 1 {
                    Some((
                        mono(&[(mu + 1, 0), (2, 1), (1, ceil_div(m + 1, 2) as u32), (0, mu + 1)]),
                        2 * m + ceil_div(m, 2),
                    ))
                } else {
                    let q = m / (n - 1);
                    let mut gens: Vec<(u32, u32)> = (0..=q).map(|j| (j as u32, (m + 1 - j * (n - 1)) as u32)).collect();
                    gens.push((mu + 1, 0));
                    Some((mono(&gens).with_generators([f.clone()]), 3 * m + 2 - n))
                }
            }
            AdeType::D(k) => {
                let n = (k as usize - 1) / 2;
                if m < 2 * n {
                    Some((
                        mono(&[(mu + 1, 0), (2, 1), (1, ceil_div(m + 1, 2) as u32), (0, mu + 1)]),
                        2 * m + ceil_div(m + 1, 2),
                    ))
                } else if m < 4 * n {
                    let gens = [(mu + 1, 0), (2, 1), (1, ceil_div(m + 2, 4) as u32), (0, ceil_div(m + 1, 2) as u32)];
                    Some((mono(&gens), ceil_div(7 * m + 1, 4)))
                } else {
                    let left = mono(&[(mu + 1, 0), (2, 1), (1, n as u32 + 1), (0, mu + 1)]);
                    let right = weight_cut_with(&f, (2 * n as u32 - 1, 2), m);
                    Some((left.intersect(&right).ok()?, 2 * m + 1 - n))
                }
            }
            AdeType::E6 if m >= 12 => Some((weight_cut_with(&f, (4, 3), m), m - 2)),
            AdeType::E7 if m >= 9 => Some((weight_cut_with(&f, (3, 2), m), ceil_div(3 * m - 5, 2))),
            AdeType::E8 if m >= 15 => Some((weight_cut_with(&f, (5, 3), m), m - 3)),
            e => {
                let row = table_row(e, m)?;
                Some((mono(row.0), row.1))
            }
        }
    }

    pub fn expected_jsc_dim(self, m: usize) -> Option<usize> {
        self.expected_jsc(m).map(|(_, d)| d)
    }
}

// Small-order jet support closures of the E types: minimal monomial
// generators and quotient dimension.
fn table_row(t: AdeType, m: usize) -> Option<(&'static [(u32, u32)], usize)> {
    const M2: &[(u32, u32)] = &[(2, 0), (1, 1), (0, 2)];
    const M3: &[(u32, u32)] = &[(3, 0), (2, 1), (1, 2), (0, 3)];
    const LOW3: &[(u32, u32)] = &[(2, 0), (1, 2), (0, 4)];
    let rows: &[(&[(u32, u32)], usize)] = match t {
        AdeType::E6 => &[
            (M2, 3),
            (M3, 6),
            (LOW3, 6),
            (M3, 6),
            (M3, 6),
            (&[(3, 0), (2, 1), (1, 2), (0, 4)], 7),
            (&[(3, 0), (2, 1), (1, 3), (0, 4)], 8),
        ],
        AdeType::E7 => &[
            (M2, 3),
            (M3, 6),
            (LOW3, 6),
            (&[(3, 0), (2, 1), (1, 3), (0, 5)], 9),
            (&[(3, 0), (2, 1), (1, 3), (0, 6)], 10),
            (&[(3, 0), (2, 1), (1, 3), (0, 7)], 11),
            (&[(3, 0), (2, 1), (1, 3), (0, 8)], 12),
            (&[(3, 0), (2, 2), (1, 3), (0, 9)], 14),
        ],
        AdeType::E8 => &[
            (M2, 3),
            (M3, 6),
            (LOW3, 6),
            (&[(3, 0), (2, 1), (1, 3), (0, 5)], 9),
            (M3, 6),
            (&[(3, 0), (2, 1), (1, 2), (0, 4)], 7),
            (&[(3, 0), (2, 1), (1, 3), (0, 4)], 8),
            (&[(3, 0), (2, 2), (1, 3), (0, 5)], 10),
            (&[(3, 0), (2, 1), (1, 3), (0, 5)], 9),
        ],
        _ => return None,
    };
    rows.get(m.checked_sub(1)?).copied()
}

/// `(f, x^p y^q : a*p + b*q ≥ m+1)`.
fn weight_cut_with(f: &Polynomial, (a, b): (u32, u32), m: usize) -> Ideal {
    let top = m as u32 + 1;
    let gens: Vec<Monomial> =
        (0..=top.div_ceil(a)).map(|p| Monomial::new(vec![p, (top.saturating_sub(a * p)).div_ceil(b)])).collect();
    MonomialIdeal::new(f.ring(), gens).to_ideal().with_generators([f.clone()])
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(k) => write!(f, "A{k}"),
            AdeType::D(k) => write!(f, "D{k}"),
            AdeType::E6 => f.write_str("E6"),
            AdeType::E7 => f.write_str("E7"),
            AdeType::E8 => f.write_str("E8"),
        }
    }
}

impl std::str::FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unsupported(format!("unknown singularity type `{s}`"));
        let t = s.trim().replace('_', "");
        let (family, rest) = t.split_at(1.min(t.len()));
        let k: u32 = rest.parse().map_err(|_| bad())?;
        match family.to_ascii_uppercase().as_str() {
            "A" => AdeType::new_a(k),
            "D" => AdeType::new_d(k),
            "E" if (6..=8).contains(&k) => Ok([AdeType::E6, AdeType::E7, AdeType::E8][k as usize - 6]),
            _ => Err(bad()),
        }
    }
}

/// Catalog type of an ideal given literally by one of the stored normal
/// forms (in either A convention), up to a nonzero scalar.
pub fn identify(ideal: &Ideal) -> Option<AdeType> {
    let ring = ideal.ring();
    if ring.nvars() != 2 {
        return None;
    }
    let canon = ideal.canonical().ok()?;
    let [f] = canon.generators() else { return None };
    let mu = milnor_number(f).ok()? as u32;
    let candidates = [AdeType::A(mu), AdeType::D(mu), AdeType::E6, AdeType::E7, AdeType::E8];
    candidates.into_iter().filter(|t| t.milnor() == mu && (*t != AdeType::D(mu) || mu >= 4)).find(|t| {
        [t.defining_poly_in(ring), t.arnold_poly_in(ring)]
            .into_iter()
            .any(|g| Ideal::new(ring, vec![g]).and_then(|j| j.equals(ideal)).unwrap_or(false))
    })
}

/// `dim R/I^{m-jsc}` for `m = 1..=upto`.
pub fn jsc_dimension_sequence(ideal: &Ideal, upto: usize) -> Result<Vec<usize>> {
    (1..=upto).map(|m| jet_support_closure(ideal, m).map(|r| r.dim)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    /// First order where the dimensions differ.
    Distinct(usize),
    Inconclusive(String),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::Distinct(_) => "distinct",
            Verdict::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: Verdict,
    pub types: Option<(AdeType, AdeType)>,
    /// Largest order compared: one more than the larger Milnor number.
    pub upto: usize,
    pub dims: (Vec<usize>, Vec<usize>),
}

/// Compares two simple curve singularities by the dimensions of their jet
/// support closures for `m` up to one more than the larger Milnor number.
/// Inputs outside the catalog are inconclusive.
pub fn classify(a: &Ideal, b: &Ideal) -> Result<Classification> {
    let (Some(ta), Some(tb)) = (identify(a), identify(b)) else {
        let which = if identify(a).is_none() { "first" } else { "second" };
        return Ok(Classification {
            verdict: Verdict::Inconclusive(format!("the {which} ideal is not a catalog simple curve singularity")),
            types: None,
            upto: 0,
            dims: (Vec::new(), Vec::new()),
        });
    };
    let upto = ta.milnor().max(tb.milnor()) as usize + 1;
    let da = jsc_dimension_sequence(a, upto)?;
    let db = jsc_dimension_sequence(b, upto)?;
    let verdict = match da.iter().zip(db.iter()).position(|(x, y)| x != y) {
        Some(i) => Verdict::Distinct(i + 1),
        None => Verdict::Isomorphic,
    };
    Ok(Classification { verdict, types: Some((ta, tb)), upto, dims: (da, db) })
}

/// One line of the catalog dump.
#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub ty: AdeType,
    pub m: usize,
    pub expected_jc: Option<Vec<String>>,
    pub jc: Vec<String>,
    pub jc_dim: usize,
    pub expected_jsc: Option<Vec<String>>,
    pub expected_jsc_dim: Option<usize>,
    pub jsc: Vec<String>,
    pub jsc_dim: usize,
}

impl CatalogRow {
    pub fn compute(ty: AdeType, m: usize) -> Result<Self> {
        let i = ty.ideal();
        let jc = jet_closure(&i, m)?;
        let jsc = jet_support_closure(&i, m)?;
        let strings = |id: &Ideal| id.canonical_strings();
        let expected_jsc = ty.expected_jsc(m);
        Ok(CatalogRow {
            ty,
            m,
            expected_jc: ty.expected_jc(m).map(|e| strings(&e)).transpose()?,
            jc: strings(&jc.closure)?,
            jc_dim: jc.dim,
            expected_jsc: expected_jsc.as_ref().map(|(e, _)| strings(e)).transpose()?,
            expected_jsc_dim: expected_jsc.map(|(_, d)| d),
            jsc: strings(&jsc.closure)?,
            jsc_dim: jsc.dim,
        })
    }
}
