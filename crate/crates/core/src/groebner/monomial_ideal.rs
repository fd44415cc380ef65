use crate::algebra::{format_monomial, Monomial, RingSpec};

use super::Ideal;

/// A monomial ideal kept as its minimal generators (an antichain under
/// divisibility), sorted by degree and then lexicographically decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: RingSpec,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &RingSpec, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: minimalize(gens) }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Radical: every generator replaced by the product of its variables.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().map(Monomial::radical).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_monomials(&self.ring, &self.gens)
    }

    /// Number of monomials outside the ideal, or `None` when infinite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.to_ideal().quotient_dimension().ok()
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|m| if m.is_one() { "1".to_string() } else { format_monomial(&self.ring, m) })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Minimal generators of the monomial ideal generated by `gens`.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Radical of a monomial ideal.
pub fn monomial_radical(m: &MonomialIdeal) -> MonomialIdeal {
    m.radical()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(gens: &[&[u32]]) -> MonomialIdeal {
        let r = RingSpec::parse("x,y").unwrap();
        MonomialIdeal::new(&r, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
    }

    #[test]
    fn radical_examples() {
        assert_eq!(monomial_radical(&mi(&[&[2, 3]])), mi(&[&[1, 1]]));
        assert_eq!(monomial_radical(&mi(&[&[2, 0], &[0, 2]])), mi(&[&[1, 0], &[0, 1]]));
        assert_eq!(monomial_radical(&mi(&[&[2, 1], &[0, 4]])), mi(&[&[0, 1]]));
    }

    #[test]
    fn antichain_and_membership() {
        let m = mi(&[&[2, 0], &[3, 1], &[0, 2], &[1, 1]]);
        assert_eq!(m.generators().len(), 3);
        assert!(m.contains(&Monomial::new(vec![5, 0])));
        assert!(!m.contains(&Monomial::new(vec![1, 0])));
        assert_eq!(m.to_string(), "(x^2, x*y, y^2)");
        assert_eq!(m.quotient_dimension(), Some(3));
        let i = mi(&[&[2, 0]]).intersect(&mi(&[&[3, 0], &[0, 1]]));
        assert_eq!(i, mi(&[&[2, 1], &[3, 0]]));
    }
}
