use std::cmp::Ordering;
use std::sync::Arc;

/// Exponent vector of a monomial; the length equals the number of ring variables.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors. Term orders used for Groebner bases live in [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    /// Indices of the variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// The square-free monomial on the same support.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

/// A term order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degrevlex on the first `block` variables, then degrevlex on the rest.
    /// Any monomial involving the first block is larger than every monomial
    /// free of it, so it eliminates that block.
    Elimination {
        block: usize,
    },
    /// Weighted degree first (all weights positive), ties broken by revlex.
    WeightedDegRevLex(Arc<[u32]>),
}

impl MonomialOrder {
    pub fn weighted(weights: &[u32]) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        MonomialOrder::WeightedDegRevLex(weights.into())
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Elimination { block } => {
                let k = (*block).min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
            MonomialOrder::WeightedDegRevLex(w) => {
                let wa: u64 = a.iter().zip(w.iter()).map(|(&e, &x)| e as u64 * x as u64).sum();
                let wb: u64 = b.iter().zip(w.iter()).map(|(&e, &x)| e as u64 * x as u64).sum();
                wa.cmp(&wb).then_with(|| revlex(a, b))
            }
        }
    }

    /// The degree used for pair selection: weighted degree for weighted
    /// orders, total degree otherwise.
    pub fn sugar(&self, e: &[u32]) -> u64 {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => e.iter().zip(w.iter()).map(|(&e, &x)| e as u64 * x as u64).sum(),
            _ => e.iter().map(|&x| x as u64).sum(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Elimination { block } => format!("elim({block})"),
            MonomialOrder::WeightedDegRevLex(w) => {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("wdegrevlex({})", ws.join(","))
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

/// Tie break of degrevlex: at the last differing variable, the smaller
/// exponent wins.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
