mod common;

use jetclosure::algebra::{parse_polynomial, Polynomial, RingSpec};
use jetclosure::closures::{
    closure_dim, is_good, jet_closure, jet_closure_elim, jet_support_closure, jsc_homogeneous_reduced, jsc_monomial,
    jsc_monomial_oracle, jsc_weighted_bivariate, ClosureKind, Method, WeightedForm,
};
use jetclosure::groebner::Ideal;
use jetclosure::jets::jet_ideal;
use jetclosure::Error;

fn p(r: &RingSpec, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn ideal(s: &str) -> Ideal {
    Ideal::parse(&common::xy(), s).unwrap()
}

#[test]
fn jet_closure_examples() {
    let i = ideal("x^2 + y^2");
    assert!(jet_closure(&i, 3).unwrap().closure.equals(&i.plus_maximal_power(4)).unwrap());
    let i = ideal("x^2 + y^3");
    let r = jet_closure(&i, 4).unwrap();
    assert!(r.closure.equals(&i.plus_maximal_power(5).with_generators([p(&common::xy(), "x^3")])).unwrap());
    assert_eq!(r.method, Method::Kernel);
    let r = jet_closure(&Ideal::zero(&common::xy()), 2).unwrap();
    assert!(r.closure.equals(&Ideal::maximal_power(&common::xy(), 3)).unwrap());
    let i = ideal("x^2*y + y^4");
    assert!(jet_closure(&i, 4).unwrap().good);
}

#[test]
fn elimination_examples() {
    for (s, m) in [("x^2 - y^3", 2), ("x", 1), ("x*y", 2)] {
        let i = ideal(s);
        let r = jet_closure_elim(&i, m).unwrap();
        assert_eq!(r.method, Method::Elimination);
        assert!(r.closure.equals(&jet_closure(&i, m).unwrap().closure).unwrap(), "{s}");
    }
}

#[test]
fn monomial_support_closures() {
    let m = |s: &str| ideal(s).monomial_view().unwrap();
    let r = jsc_monomial_oracle(&m("x^2, y^2"), 2).unwrap();
    assert!(r.closure.equals(&ideal("x^2, y^2, x*y").plus_maximal_power(3)).unwrap());
    assert!(jsc_monomial_oracle(&m("x*y"), 2).unwrap().good);
    for k in [4, 5] {
        let a = jsc_monomial(&m("x^2*y^3"), k).unwrap();
        let b = jsc_monomial_oracle(&m("x^2*y^3"), k).unwrap();
        assert!(a.closure.equals(&b.closure).unwrap());
        assert!(b.closure.is_monomial(), "kernel output is monomial");
    }
    let r3 = common::ring(3);
    let xyz = Ideal::parse(&r3, "x*y*z").unwrap().monomial_view().unwrap();
    assert!(jsc_monomial(&xyz, 4).unwrap().good);
}

#[test]
fn homogeneous_support_closures() {
    let r = common::xy();
    assert!(jsc_homogeneous_reduced(&p(&r, "x^2 + y^2"), 3).unwrap().good);
    assert!(jsc_homogeneous_reduced(&p(&r, "x"), 2).unwrap().good);
    let r3 = common::ring(3);
    let a = jsc_homogeneous_reduced(&p(&r3, "x*y*z"), 4).unwrap();
    let b = jsc_monomial(&Ideal::parse(&r3, "x*y*z").unwrap().monomial_view().unwrap(), 4).unwrap();
    assert!(a.closure.equals(&b.closure).unwrap());
    assert!(matches!(jsc_homogeneous_reduced(&p(&r, "x^2"), 3), Err(Error::NotReduced)));
    assert!(matches!(jsc_homogeneous_reduced(&p(&r, "x^2 + y"), 3), Err(Error::NotHomogeneous)));
}

#[test]
fn weighted_support_closures() {
    let r = common::xy();
    let form = |s: &str| WeightedForm::from_polynomial(&p(&r, s)).unwrap();
    let a = jsc_weighted_bivariate(&form("x^2 + y^4"), 3).unwrap();
    assert!(a.closure.equals(&ideal("x^2, x*y^2, y^4")).unwrap());
    assert_eq!(a.dim, 6);
    let e6 = jsc_weighted_bivariate(&form("x^3 + y^4"), 4).unwrap();
    assert!(e6.closure.equals(&ideal("x^3, x^2*y, x*y^2, y^3")).unwrap());
    let e7 = jsc_weighted_bivariate(&form("x^3 + x*y^3"), 8).unwrap();
    assert!(e7.closure.equals(&ideal("x^3, x^2*y^2, x*y^3, y^9")).unwrap());
    assert_eq!(e7.dim, 14);
    for m in 4..=9 {
        assert_eq!(jsc_weighted_bivariate(&form("x^2 + y^4"), m).unwrap().dim, 2 * m);
    }
    assert!(WeightedForm::new(&p(&r, "x^3 + y^4"), (2, 4)).is_err());
    assert!(WeightedForm::new(&p(&r, "x^3 + y^4"), (3, 4)).is_err());
}

#[test]
fn goodness_and_dimensions() {
    assert!(is_good(&ideal("x^2 + x*y"), 5, ClosureKind::Jc).unwrap());
    assert!(!is_good(&ideal("x^2, y^2"), 2, ClosureKind::Jsc).unwrap());
    assert!(!is_good(&ideal("x^2 + y^3"), 4, ClosureKind::Jc).unwrap());
    assert_eq!(closure_dim(&ideal("x^2 + y^3"), 3, ClosureKind::Jc).unwrap(), 7);
    assert_eq!(closure_dim(&ideal("x^2 + y^3"), 4, ClosureKind::Jc).unwrap(), 8);
    assert_eq!(closure_dim(&ideal("x^3 + y^5"), 9, ClosureKind::Jsc).unwrap(), 9);
}

#[test]
fn jc_inside_jsc_for_weighted_forms() {
    for s in ["x^2 + y^3", "x^3 + y^4", "x^3 + x*y^3", "x^2*y + y^4"] {
        for m in 1..=6 {
            let jc = jet_closure(&ideal(s), m).unwrap().closure;
            let jsc = jet_support_closure(&ideal(s), m).unwrap().closure;
            assert!(jsc.contains_ideal(&jc).unwrap(), "{s} at {m}");
        }
    }
}

#[test]
fn closures_have_the_same_jet_fibres() {
    // The closure and the ideal cut out the same truncated arcs through the
    // origin, so their order-m jet ideals have the same basis.
    for (s, m) in [("x^2 + y^3", 4), ("x^2 + y^3", 3), ("x^3 + x*y^3", 4), ("x*y, y^3", 3)] {
        let i = ideal(s);
        let c = jet_closure(&i, m).unwrap().closure;
        let (_, a) = jet_ideal(&i, m, true).unwrap();
        let (_, b) = jet_ideal(&c, m, true).unwrap();
        assert!(a.equals(&b).unwrap(), "{s} at {m}");
    }
}

#[test]
fn outputs_round_trip_through_text() {
    let r = common::xy();
    for (s, m) in [("x^2 + y^3", 4), ("x^3 + x*y^3", 9), ("x^2*y + y^4", 8)] {
        for c in [jet_closure(&ideal(s), m).unwrap(), jet_support_closure(&ideal(s), m).unwrap()] {
            let text = c.closure.canonical_strings().unwrap().join(", ");
            assert!(Ideal::parse(&r, &text).unwrap().equals(&c.closure).unwrap(), "{text}");
        }
    }
}

#[test]
fn unsupported_support_closures_are_refused() {
    let r3 = common::ring(3);
    let i = Ideal::parse(&r3, "x^2 + y^3 + z^5").unwrap();
    assert!(matches!(jet_support_closure(&i, 6), Err(Error::Unsupported(_))));
    assert!(matches!(jet_support_closure(&ideal("x^2 + y, x*y + y^3"), 2), Err(Error::Unsupported(_))));
}
