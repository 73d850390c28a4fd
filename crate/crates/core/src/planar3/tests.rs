use super::*;
use crate::exactfield::CycNum;
use crate::polyring::{identity_triple, parse_poly3, parse_ratfun, parse_upoly, URatFun};
use crate::projline::Moebius;

fn rf(s: &str) -> URatFun {
    parse_ratfun(s).unwrap()
}

fn emb(p: &str, q: &str, r: &str) -> PlanarEmbedding {
    PlanarEmbedding::new(parse_upoly(p).unwrap(), rf(q), rf(r)).unwrap()
}

#[test]
fn witness_examples() {
    let w = witness_search(&rf("x"), (&rf("1/x"), &rf("x + 1/x")), 12).unwrap();
    assert_eq!(w, parse_poly3("Y - X").unwrap());
    let w = witness_search(&rf("1/x"), (&rf("1/x"), &rf("x")), 12).unwrap();
    assert_eq!(w, parse_poly3("X").unwrap());
    assert!(witness_search(&rf("x"), (&rf("x^2"), &rf("x^3")), 12).is_none());
}

#[test]
fn normalize_first_example() {
    let e = emb("x", "1/x", "x + 1/x");
    let (n, c) = normalize_planar(&e, 12).unwrap();
    assert!(c.passed(), "{c}");
    assert_eq!(n.a_poly, parse_poly3("Z - Y").unwrap());
    assert_eq!(n.ab, (CycNum::one(), CycNum::zero()));
    assert_eq!((n.u.clone(), n.v.clone(), n.s.clone()), (parse_upoly("1").unwrap(), parse_upoly("0").unwrap(), parse_upoly("1").unwrap()));
    assert_eq!(n.b_poly, parse_poly3("-X").unwrap());
    assert_eq!(n.c_poly, parse_poly3("Y").unwrap());
}

#[test]
fn normalize_degenerate_r_is_not_an_embedding() {
    // x -> (0, 1/x, 0) misses x in C[Q, R]
    let e = emb("x", "1/x", "0");
    let err = normalize_planar(&e, 12).unwrap_err();
    assert!(matches!(err, crate::Error::WitnessNotFound { ref step, .. } if step.starts_with("A")));
}

#[test]
fn normalize_two_punctures() {
    let e = emb("x^2 - x", "1/(x^2 - x)", "x");
    let (n, c) = normalize_planar(&e, 12).unwrap();
    assert!(c.passed(), "{c}");
    assert_eq!(n.a_poly, parse_poly3("Z").unwrap());
    for f in &n.chain {
        assert_eq!(crate::polyring::compose_triple(f.forward(), f.inverse()), identity_triple());
    }
}

#[test]
fn pole_condition_and_validation() {
    assert!(PlanarEmbedding::new(parse_upoly("x^2").unwrap(), rf("1/x"), rf("x")).is_err());
    assert!(PlanarEmbedding::new(parse_upoly("x").unwrap(), rf("1/(x-1)"), rf("x")).is_err());
    // Q, R polynomial while P = x: no pole at 0 for any (a, b)
    let e = emb("x", "x", "x^2");
    assert_eq!(normalize_planar(&e, 4).unwrap_err(), crate::Error::PoleConditionUnsatisfiable);
}

#[test]
fn equivalence_of_two_embeddings() {
    let e = emb("x^2 - x", "1/(x^2 - x)", "x");
    // x = R - Q^2, 1/P = Q - 2x
    let e2 = emb("x^2 - x", "2*x + 1/(x^2 - x)", "x + (2*x + 1/(x^2 - x))^2");
    let (alpha, c) = equivalence(&e, &e2, 12).unwrap();
    assert!(c.passed(), "{c}");
    assert_eq!(apply_triple(alpha.forward(), &e.as_triple()), e2.as_triple());
}

#[test]
fn extension_example_passes() {
    for (a, b) in [(2, 3), (1, -1), (-5, 7), (3, 3)] {
        let ex = extension_example(&CycNum::from_int(a), &CycNum::from_int(b)).unwrap();
        let f = ex.composite();
        let c = verify_extension(f.forward(), &ex.tau, &ex.rho);
        assert!(c.passed(), "(a,b) = ({a},{b}): {c}");
    }
    assert!(extension_example(&CycNum::zero(), &CycNum::one()).is_err());
}

#[test]
fn extension_mutations_fail() {
    let ex = extension_example(&CycNum::from_int(2), &CycNum::from_int(3)).unwrap();
    let mut f = ex.composite().forward().clone();
    f[0] = -&f[0];
    let c = verify_extension(&f, &ex.tau, &ex.rho);
    assert!(!c.passed());
    assert!(c.failures().all(|cl| cl.witness.as_deref().is_some_and(|w| w.contains("residual"))));
    let id = identity_triple();
    assert!(verify_extension(&id, &ex.tau, &Moebius::identity()).passed());
}

#[test]
fn triple_parsing() {
    let t = parse_triple("(Z, Y, X + Y^2)").unwrap();
    assert_eq!(fmt_triple(&t), "(Z, Y, Y^2 + X)");
    assert!(parse_triple("(X, Y)").is_err());
    assert!(Aut3::new(t.clone(), t).is_err());
}
