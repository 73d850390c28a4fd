use super::*;
use crate::exactfield::{root_of_unity, CycNum};
use crate::polyring::{parse_hpoly, HPoly2};
use crate::projline::{FinSubgroupH, Moebius, P1Point};

fn pt(a: i64, b: i64) -> P1Point {
    P1Point::new(cn(a), cn(b)).unwrap()
}

fn cn(n: i64) -> CycNum {
    CycNum::from_int(n)
}

fn ratio(num: &str, den: &str) -> Ratio {
    Ratio::reduced(parse_hpoly(num).unwrap(), parse_hpoly(den).unwrap())
}

#[test]
fn iota_examples() {
    assert_eq!(iota(&pt(1, 0), &pt(0, 1)).unwrap(), PointA3::from_ints(1, 0, 0));
    assert_eq!(iota(&pt(0, 1), &pt(1, 0)).unwrap(), PointA3::from_ints(-1, 0, 0));
    assert_eq!(iota(&pt(3, 1), &pt(3, 1)), Err(crate::Error::OnDiagonal));
    assert_eq!(iota_inverse(&PointA3::from_ints(1, 0, 0)).unwrap(), (pt(1, 0), pt(0, 1)));
    assert_eq!(iota_inverse(&PointA3::from_ints(-1, 0, 0)).unwrap(), (pt(0, 1), pt(1, 0)));
    assert_eq!(iota_inverse(&PointA3::from_ints(1, 1, 1)), Err(crate::Error::NotOnQuadric));
    let q = iota(&pt(2, 1), &pt(-1, 3)).unwrap();
    assert!(q.on_quadric());
    assert_eq!(iota_inverse(&q).unwrap(), (pt(2, 1), pt(-1, 3)));
}

#[test]
fn rep3_examples() {
    assert_eq!(rep3(&Moebius::identity()), Rep3::identity());
    let s = rep3(&Moebius::from_ints(0, 1, 1, 0).unwrap());
    let want = [[-1, 0, 0], [0, 0, -1], [0, -1, 0]].map(|r| r.map(cn));
    assert_eq!(s.m, want);
}

#[test]
fn rep3_is_a_homomorphism_on_the_tetrahedral_group() {
    let h = FinSubgroupH::tetrahedral().unwrap();
    let els = h.elements();
    for g in els {
        for k in els {
            assert_eq!(rep3(&(g * k)), rep3(g).compose(&rep3(k)));
        }
    }
}

#[test]
fn iota_equivariance_certificates() {
    let z = root_of_unity(12, 1);
    let hs = [
        Moebius::identity(),
        Moebius::from_ints(0, 1, 1, 0).unwrap(),
        Moebius::new([[z.clone(), cn(2)], [cn(-1), &z * &z]]).unwrap(),
    ];
    for h in &hs {
        let c = verify_iota_equivariance(h);
        assert!(c.passed(), "{c}");
    }
}

#[test]
fn cyclic_preset_components() {
    let p = preset_family(PresetKind::Cyclic(2), &[(cn(1), cn(-1))]).unwrap();
    let e = &p.embedding;
    assert_eq!(e.comps[0], ratio("x^2 + y^2", "x^2 - y^2"));
    assert_eq!(e.comps[1], ratio("2*x*y", "x^2 - y^2"));
    assert_eq!(e.comps[2], ratio("2*x*y", "x^2 - y^2"));
    assert_eq!(p.orbits[0].power, parse_hpoly("(x^2 - y^2)^2").unwrap());
    let c = verify_tau(e, &p.h);
    assert!(c.passed(), "{c}");
    let p = preset_family(PresetKind::Cyclic(3), &[(cn(2), cn(3))]).unwrap();
    assert_eq!(p.embedding.comps[0], ratio("2*x^3 - 3*y^3", "2*x^3 + 3*y^3"));
    assert_eq!(p.embedding.comps[1], ratio("-6*x*y^2", "2*x^3 + 3*y^3"));
    assert_eq!(p.embedding.comps[2], ratio("4*x^2*y", "2*x^3 + 3*y^3"));
}

#[test]
fn dihedral_preset_components() {
    let p = preset_family(PresetKind::Dihedral(3), &[(cn(1), cn(2))]).unwrap();
    assert_eq!(p.embedding.comps[0], ratio("x^6 - y^6", "x^6 + 4*x^3*y^3 + y^6"));
    let c = verify_tau(&p.embedding, &p.h);
    assert!(c.passed(), "{c}");
}

#[test]
fn tetrahedral_preset_pairs() {
    let p = preset_family(PresetKind::Tetrahedral, &[(cn(0), cn(1))]).unwrap();
    let o = &p.orbits[0];
    assert_eq!(o.pair.f1, parse_hpoly("-11*x^8*y^3 - 22*x^4*y^7 + y^11").unwrap());
    assert_eq!(o.pair.f2, parse_hpoly("-(x^11 - 22*x^7*y^4 - 11*x^3*y^8)").unwrap());
    assert_eq!(o.power, tetra_b());
    let c = verify_tau(&p.embedding, &p.h);
    assert!(c.passed(), "{c}");
    let p = preset_family(PresetKind::Tetrahedral, &[(cn(1), cn(0))]).unwrap();
    assert_eq!(p.lambda.len(), 6);
    assert!(verify_tau(&p.embedding, &p.h).passed());
}

#[test]
fn preset_rejections() {
    let z = (cn(0), cn(0));
    assert!(matches!(preset_family(PresetKind::Cyclic(2), &[z]), Err(crate::Error::DegenerateParams(_))));
    let same = [(cn(1), cn(-1)), (cn(2), cn(-2))];
    assert!(matches!(preset_family(PresetKind::Cyclic(2), &same), Err(crate::Error::DegenerateParams(_))));
    // b = 0 doubles all six roots; uniform multiplicity is accepted
    assert!(preset_family(PresetKind::Tetrahedral, &[(cn(1), cn(0))]).is_ok());
}

#[test]
fn generic_and_preset_agree_in_properties() {
    // cube roots of unity, cyclic of order 3
    let w = root_of_unity(3, 1);
    let lambda: Vec<P1Point> = (0..3).map(|k| P1Point::affine(w.pow(k))).collect();
    let h = FinSubgroupH::cyclic(3).unwrap();
    let g = build_tau(&h, &lambda).unwrap();
    let c = verify_tau(&g, &h);
    assert!(c.passed(), "{c}");
    let (a, b) = preset_params_through(PresetKind::Cyclic(3), &lambda[0]);
    let p = preset_family(PresetKind::Cyclic(3), &[(a, b)]).unwrap();
    assert_eq!(p.lambda.poly(), g.lambda.poly());
    assert!(verify_tau(&p.embedding, &p.h).passed());
    for q in [pt(0, 1), pt(2, 1), pt(1, 0)] {
        assert!(g.eval(&q).unwrap().on_quadric());
        assert!(p.embedding.eval(&q).unwrap().on_quadric());
    }
    assert!(g.eval(&lambda[1]).is_err());
}

#[test]
fn corrupted_embedding_fails() {
    let p = preset_family(PresetKind::Cyclic(3), &[(cn(2), cn(3))]).unwrap();
    let mut e = p.embedding.clone();
    // swap the y and z numerators
    let (y, z) = (e.comps[1].num.clone(), e.comps[2].num.clone());
    e.comps[1].num = z;
    e.comps[2].num = y;
    let c = verify_tau(&e, &p.h);
    assert!(!c.passed());
    assert!(c.failures().all(|f| f.witness.is_some()));
    let mut e = p.embedding.clone();
    e.comps[0].num = HPoly2::from_int_terms(&[(3, 0, 3), (0, 3, -2)]);
    assert!(!verify_tau(&e, &p.h).passed());
}

#[test]
fn special_cases() {
    for kind in [SpecialKind::AffLine, SpecialKind::PuncturedLine] {
        let (e, c) = special_case_embedding(kind);
        assert!(c.passed(), "{c}");
        assert!(!e.samples.is_empty());
    }
    let (mut e, _) = special_case_embedding(SpecialKind::PuncturedLine);
    e.tau[1] = e.tau[0].clone();
    assert!(!verify_special(&e).passed());
}
