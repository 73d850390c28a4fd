use super::*;
use crate::exactfield::{root_of_unity, CycNum};

fn pt(n: i64) -> P1Point {
    P1Point::from_int(n)
}

fn omega() -> CycNum {
    root_of_unity(3, 1)
}

#[test]
fn apply_examples() {
    assert_eq!(Moebius::identity().apply(&pt(5)), pt(5));
    let swap = Moebius::from_ints(0, 1, 1, 0).unwrap();
    assert_eq!(swap.apply(&pt(0)), P1Point::infinity());
    let rot = Moebius::new([[omega(), 0.into()], [0.into(), 1.into()]]).unwrap();
    assert_eq!(rot.apply(&pt(1)), P1Point::affine(omega()));
}

#[test]
fn closure_examples() {
    let c3 = FinSubgroupH::cyclic(3).unwrap();
    assert_eq!((c3.kind(), c3.order()), (GroupKind::Cyclic(3), 3));
    let d4 = FinSubgroupH::dihedral(4).unwrap();
    assert_eq!((d4.kind(), d4.order()), (GroupKind::Dihedral(4), 8));
    let t = FinSubgroupH::tetrahedral().unwrap();
    assert_eq!((t.kind(), t.order()), (GroupKind::Tetrahedral, 12));
    let shift = Moebius::from_ints(1, 1, 0, 1).unwrap();
    assert_eq!(group_closure(&[shift], 50).unwrap_err(), crate::Error::NotFiniteWithinCap(50));
}

#[test]
fn closure_is_a_group() {
    for h in [FinSubgroupH::dihedral(3).unwrap(), FinSubgroupH::tetrahedral().unwrap()] {
        for g in h.elements() {
            assert!(h.contains(&g.inverse()));
            for k in h.elements() {
                assert!(h.contains(&g.compose(k)));
            }
        }
    }
}

#[test]
fn aut_of_three_points_is_sym3() {
    let lam = [pt(0), pt(1), P1Point::infinity()];
    let h = aut_of_lambda(&lam, 120).unwrap();
    assert_eq!(h.order(), 6);
    assert_eq!(h.kind(), GroupKind::Dihedral(3));
    let rho = Moebius::from_ints(0, 1, -1, 1).unwrap();
    let sigma = Moebius::from_ints(-1, 1, 0, 1).unwrap();
    assert!(h.contains(&rho) && h.contains(&sigma));
    assert!(aut_of_lambda(&lam[..2], 120).is_err());
}

#[test]
fn aut_of_cube_roots() {
    let w = omega();
    let lam = [pt(1), P1Point::affine(w.clone()), P1Point::affine(&w * &w)];
    let h = aut_of_lambda(&lam, 120).unwrap();
    assert_eq!(h.order(), 6);
    for i in 0..3 {
        // [x:y] -> [y : x w^i]
        let inv = Moebius::new([[0.into(), 1.into()], [w.pow(i), 0.into()]]).unwrap();
        assert!(h.contains(&inv));
    }
}

#[test]
fn aut_of_nine_points_contains_rotation() {
    let w = omega();
    let mut lam = Vec::new();
    for a in [1, 2, 5] {
        for j in 0..3 {
            lam.push(P1Point::affine(&CycNum::from_int(a) * &w.pow(j)));
        }
    }
    let h = aut_of_lambda(&lam, 120).unwrap();
    let rot = Moebius::new([[w.clone(), 0.into()], [0.into(), 1.into()]]).unwrap();
    assert!(h.contains(&rot));
    assert_eq!(h.order() % 3, 0);
}

#[test]
fn pullbacks() {
    let n = 4;
    let g = sl2_pullback(&FinSubgroupH::cyclic(n).unwrap()).unwrap();
    assert_eq!(g.order(), 2 * n as usize);
    let z = root_of_unity(2 * n, 1);
    let want = SL2Elem::new([[z.clone(), 0.into()], [0.into(), z.inv().unwrap()]]).unwrap();
    assert!(g.elements().contains(&want));
    let d = sl2_pullback(&FinSubgroupH::dihedral(3).unwrap()).unwrap();
    let i = root_of_unity(4, 1);
    let s = SL2Elem::new([[0.into(), i.clone()], [i, 0.into()]]).unwrap();
    assert!(d.elements().contains(&s) || d.elements().contains(&s.neg()));
    let t = sl2_pullback(&FinSubgroupH::trivial()).unwrap();
    assert_eq!(t.order(), 2);
    assert!(t.elements().contains(&SL2Elem::minus_identity()));
    let tet = sl2_pullback(&FinSubgroupH::tetrahedral().unwrap()).unwrap();
    assert_eq!(tet.order(), 24);
    for e in tet.elements() {
        assert!(mat2_det(e.matrix()).is_one());
    }
}

#[test]
fn orbits() {
    let c3 = FinSubgroupH::cyclic(3).unwrap();
    let w = omega();
    let lam = [pt(1), P1Point::affine(w.clone()), P1Point::affine(&w * &w)];
    assert_eq!(orbit_decompose(&c3, &lam).unwrap().len(), 1);
    let o = orbit_decompose(&c3, &[pt(0), P1Point::infinity()]).unwrap();
    assert_eq!(o.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1]);
    let c2 = FinSubgroupH::cyclic(2).unwrap();
    let o = orbit_decompose(&c2, &[pt(2), pt(-2), pt(3), pt(-3)]).unwrap();
    assert_eq!(o.len(), 2);
    assert!(o.iter().all(|x| x.len() == 2));
    assert!(matches!(orbit_decompose(&c2, &[pt(2)]), Err(crate::Error::NotInvariant(_))));
}

#[test]
fn cross_ratios() {
    let x = CycNum::rational(7, 3);
    let cr = cross_ratio(&[pt(0), P1Point::infinity(), pt(1), P1Point::affine(x.clone())]).unwrap();
    assert_eq!(cr, x);
    // Cor 2.5 configuration: the reciprocal of w(w - a2)/(a2 - 1) in this normalisation
    let w = omega();
    let a2 = CycNum::from_int(2);
    let v = [pt(1), P1Point::affine(w.clone()), P1Point::affine(&w * &w), P1Point::affine(a2.clone())];
    let paper = (&w * &(&w - &a2)).checked_div(&(&a2 - &CycNum::one())).unwrap();
    assert_eq!(cross_ratio(&v).unwrap(), paper.inv().unwrap());
    assert!(cross_ratio(&[pt(0), pt(0), pt(1), pt(2)]).is_err());
}

#[test]
fn fixed_point_examples() {
    let shift = Moebius::from_ints(1, 1, 0, 1).unwrap();
    assert_eq!(fixed_points(&shift).unwrap(), FixedPoints::Points(vec![P1Point::infinity()]));
    let rho = Moebius::from_ints(0, 1, -1, 1).unwrap();
    let FixedPoints::Points(f) = fixed_points(&rho).unwrap() else { panic!() };
    let w = omega();
    assert_eq!(f.len(), 2);
    assert!(f.contains(&P1Point::affine(-&(&w * &w))) && f.contains(&P1Point::affine(-&w)));
    let neg = Moebius::from_ints(-1, 0, 0, 1).unwrap();
    let FixedPoints::Points(f) = fixed_points(&neg).unwrap() else { panic!() };
    assert!(f.contains(&pt(0)) && f.contains(&P1Point::infinity()));
    assert_eq!(fixed_points(&Moebius::identity()).unwrap(), FixedPoints::AllOfP1);
}

#[test]
fn parsing() {
    let pts = P1Point::parse_list("[1:1], [-1:1], [1:0], [cyc(4; 0, 1) : 2]").unwrap();
    assert_eq!(pts.len(), 4);
    assert_eq!(pts[2], P1Point::infinity());
    assert_eq!(pts[3], P1Point::affine(root_of_unity(4, 1).scale(&crate::exactfield::rat(1, 2))));
    let g = Moebius::parse("[[0,1],[-1,1]]").unwrap();
    assert_eq!(g, Moebius::from_ints(0, 1, -1, 1).unwrap());
    assert_eq!(Moebius::parse(&g.to_string()).unwrap(), g);
    assert!(P1Point::parse("[0:0]").is_err());
    assert!(Moebius::parse("[[1,1],[1,1]]").is_err());
}
