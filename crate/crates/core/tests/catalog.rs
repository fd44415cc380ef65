mod common;

use std::collections::HashMap;

use jetclosure::catalog::{classify, identify, jsc_dimension_sequence, AdeType, CatalogRow, Verdict};
use jetclosure::closures::{jet_closure, jet_support_closure};
use jetclosure::filtration::milnor_number;
use jetclosure::groebner::Ideal;

/// How a published closed form or table row disagrees with the closure the
/// arc oracle confirms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mismatch {
    /// The ideal matches, the stated dimension does not.
    Dim,
    /// The ideal differs; the stated dimension is the true one.
    Ideal,
    /// Both differ.
    Both,
}

fn known_mismatches() -> HashMap<(String, usize), Mismatch> {
    use Mismatch::*;
    let rows: &[(&str, usize, Mismatch)] = &[
        // A_{2n}, even m ≤ 2n: the dimension is one less than stated.
        ("A2", 2, Dim),
        ("A4", 2, Dim),
        ("A4", 4, Dim),
        ("A6", 2, Dim),
        ("A6", 4, Dim),
        ("A6", 6, Dim),
        ("A8", 2, Dim),
        ("A8", 4, Dim),
        ("A8", 6, Dim),
        ("A8", 8, Dim),
        // A_{2n} beyond 2n: the x*y^e generator has a smaller exponent.
        ("A2", 4, Ideal),
        ("A4", 8, Ideal),
        ("A6", 8, Ideal),
        ("A6", 12, Ideal),
        ("A8", 12, Ideal),
        // D_{2n}, even m < 2n: the dimension is one more than stated.
        ("D4", 2, Dim),
        ("D6", 2, Dim),
        ("D6", 4, Dim),
        ("D8", 2, Dim),
        ("D8", 4, Dim),
        ("D8", 6, Dim),
        // D_{2n+1}, m ≥ 4n: the stated ideal misses f.
        ("D5", 8, Ideal),
        ("D5", 9, Ideal),
        ("D5", 10, Ideal),
        ("D5", 11, Ideal),
        ("D5", 12, Ideal),
        ("D7", 12, Ideal),
        // E7, m ≥ 9: the stated ideal contains y^5, which is nonzero on the
        // branch x = 0.
        ("E7", 9, Both),
        ("E7", 10, Both),
        ("E7", 11, Both),
        ("E7", 12, Both),
    ];
    rows.iter().map(|&(t, m, k)| ((t.to_string(), m), k)).collect()
}

#[test]
fn support_closures_match_the_oracle_and_the_published_data() {
    let known = known_mismatches();
    let mut seen = HashMap::new();
    for t in AdeType::up_to(8) {
        for m in 1..=12 {
            let got = jet_support_closure(&t.ideal(), m).unwrap();
            let oracle = common::jsc_arc_oracle(&t.defining_poly(), &common::catalog_branches(t), m, &got.closure, 11);
            assert!(oracle.verified(), "{t} at {m}: {oracle:?}");
            assert_eq!(t.expected_jsc(m).map(|(_, d)| d), t.expected_jsc_dim(m));
            let Some((printed, dim)) = t.expected_jsc(m) else { continue };
            let same = got.closure.equals(&printed).unwrap();
            let kind = match (same, dim == got.dim) {
                (true, true) => continue,
                (true, false) => Mismatch::Dim,
                (false, true) => Mismatch::Ideal,
                (false, false) => Mismatch::Both,
            };
            seen.insert((t.to_string(), m), kind);
        }
    }
    assert_eq!(seen, known);
}

#[test]
fn oracle_rejects_wrong_candidates() {
    let t = AdeType::E7;
    let (printed, _) = t.expected_jsc(9).unwrap();
    let o = common::jsc_arc_oracle(&t.defining_poly(), &common::catalog_branches(t), 9, &printed, 11);
    assert!(!o.verified());
    let got = jet_support_closure(&t.ideal(), 6).unwrap().closure;
    let bigger = got.with_generators([jetclosure::algebra::parse_polynomial(&AdeType::ring(), "x^2").unwrap()]);
    let o = common::jsc_arc_oracle(&t.defining_poly(), &common::catalog_branches(t), 6, &bigger, 11);
    assert!(!o.verified());
}

#[test]
fn jet_closures_match_the_covered_ranges() {
    for t in AdeType::up_to(8) {
        for m in 1..=10 {
            let Some(want) = t.expected_jc(m) else { continue };
            let got = jet_closure(&t.ideal(), m).unwrap().closure;
            assert!(got.equals(&want).unwrap(), "{t} at {m}");
        }
    }
}

#[test]
fn published_examples() {
    let a4 = AdeType::new_a(4).unwrap();
    assert!(a4.expected_jc(5).unwrap().equals(&a4.ideal().plus_maximal_power(6)).unwrap());
    assert!(AdeType::E8.expected_jc(5).unwrap().equals(&AdeType::E8.ideal().plus_maximal_power(6)).unwrap());
    assert!(AdeType::E6.expected_jc(7).is_none());
    assert_eq!(AdeType::A(3).expected_jsc_dim(3), Some(6));
    assert_eq!(AdeType::E7.expected_jsc_dim(8), Some(14));
    assert_eq!(AdeType::E6.expected_jsc_dim(12), Some(10));
    assert_eq!(AdeType::E6.expected_jsc_dim(9), None);
}

#[test]
fn milnor_numbers_match() {
    for t in AdeType::up_to(8) {
        assert_eq!(milnor_number(&t.defining_poly()).unwrap(), t.milnor() as usize, "{t}");
        let arnold = t.arnold_poly_in(&AdeType::ring());
        assert_eq!(milnor_number(&arnold).unwrap(), t.milnor() as usize, "{t}");
    }
}

#[test]
fn names_round_trip() {
    for t in AdeType::up_to(8) {
        assert_eq!(t.to_string().parse::<AdeType>().unwrap(), t);
    }
    assert!("A0".parse::<AdeType>().is_err());
    assert!("D3".parse::<AdeType>().is_err());
    assert!("E9".parse::<AdeType>().is_err());
}

#[test]
fn dimension_sequences_are_injective() {
    let mut seen: HashMap<Vec<usize>, AdeType> = HashMap::new();
    for t in AdeType::up_to(8) {
        let seq = jsc_dimension_sequence(&t.ideal(), 9).unwrap();
        if let Some(other) = seen.insert(seq.clone(), t) {
            panic!("{t} and {other} share {seq:?}");
        }
    }
    assert_eq!(seen.len(), 16);
}

#[test]
fn both_conventions_give_the_same_sequence() {
    for t in [AdeType::A(3), AdeType::A(4), AdeType::A(5)] {
        let arnold = Ideal::new(&AdeType::ring(), vec![t.arnold_poly_in(&AdeType::ring())]).unwrap();
        assert_eq!(jsc_dimension_sequence(&arnold, 6).unwrap(), jsc_dimension_sequence(&t.ideal(), 6).unwrap(), "{t}");
        assert_eq!(identify(&arnold), Some(t));
    }
}

#[test]
fn classification_examples() {
    let a3 = AdeType::A(3).ideal();
    assert_eq!(classify(&a3, &a3).unwrap().verdict, Verdict::Isomorphic);
    let c = classify(&AdeType::E6.ideal(), &AdeType::E7.ideal()).unwrap();
    assert_eq!(c.verdict, Verdict::Distinct(4));
    assert_eq!((c.dims.0[3], c.dims.1[3]), (6, 9));
    let c = classify(&AdeType::A(5).ideal(), &AdeType::D(4).ideal()).unwrap();
    assert!(matches!(c.verdict, Verdict::Distinct(_)));
    let c = classify(&Ideal::parse(&AdeType::ring(), "x^2 + y^2 + x^3").unwrap(), &a3).unwrap();
    assert!(matches!(c.verdict, Verdict::Inconclusive(_)));
}

#[test]
fn rows_carry_both_sides() {
    let row = CatalogRow::compute(AdeType::E7, 8).unwrap();
    assert_eq!(row.jsc_dim, 14);
    assert_eq!(row.expected_jsc_dim, Some(14));
    assert!(row.expected_jc.is_none());
    let row = CatalogRow::compute(AdeType::A(3), 2).unwrap();
    assert_eq!(row.expected_jc.as_ref().map(|g| g.len()), Some(row.jc.len()));
}
