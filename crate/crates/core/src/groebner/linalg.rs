//! Exact nullspace of a sparse rational matrix given column by column.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

fn axpy(target: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (k, v) in x {
        let e = target.entry(*k).or_insert_with(Rational::zero);
        *e += a * v;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

/// Basis of `{c : sum_j c_j * columns[j] = 0}`.
///
/// Columns are processed in order; each column either extends the echelon
/// form of the span so far or yields one kernel vector, expressed in the
/// original column indices. Kernel vectors come out with a 1 in their
/// last nonzero position, which is the column that produced them.
pub fn nullspace(columns: &[SparseVec]) -> Vec<SparseVec> {
    // pivot row -> (reduced vector, combination of original columns)
    let mut echelon: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut comb: SparseVec = BTreeMap::new();
        comb.insert(j, Rational::from_integer(1.into()));
        while let Some((&row, val)) = v.iter().next() {
            match echelon.get(&row) {
                Some((pv, pc)) => {
                    let f = -(val / &pv[&row]);
                    axpy(&mut v, &f, pv);
                    axpy(&mut comb, &f, pc);
                }
                None => break,
            }
        }
        match v.keys().next().copied() {
            None => kernel.push(comb),
            Some(row) => {
                echelon.insert(row, (v, comb));
            }
        }
    }
    kernel
}
