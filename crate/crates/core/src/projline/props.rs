use proptest::prelude::*;

use super::*;
use crate::testkit::{affine_point, moebius, point};

fn standard(k: usize) -> FinSubgroupH {
    match k {
        0 => FinSubgroupH::cyclic(3),
        1 => FinSubgroupH::cyclic(4),
        2 => FinSubgroupH::dihedral(2),
        3 => FinSubgroupH::dihedral(3),
        _ => FinSubgroupH::tetrahedral(),
    }
    .unwrap()
}

/// A standard group moved by `c`.
fn conjugate(h: &FinSubgroupH, c: &Moebius) -> FinSubgroupH {
    let ci = c.inverse();
    let gens: Vec<Moebius> = h.generators().iter().map(|g| c.compose(g).compose(&ci)).collect();
    group_closure(&gens, DEFAULT_GROUP_CAP).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closure_is_a_group_of_the_predicted_order(k in 0usize..5, c in moebius()) {
        let h = conjugate(&standard(k), &c);
        prop_assert_eq!(h.order(), h.kind().order());
        prop_assert_eq!(h.kind(), standard(k).kind());
        for g in h.elements() {
            prop_assert!(h.contains(&g.inverse()));
            for e in h.elements() {
                prop_assert!(h.contains(&g.compose(e)));
            }
        }
    }

    #[test]
    fn pullback_has_determinant_one(k in 0usize..4, c in moebius()) {
        let h = conjugate(&standard(k), &c);
        let g = sl2_pullback(&h).unwrap();
        prop_assert_eq!(g.order(), 2 * h.order());
        for (e, &i) in g.elements().iter().zip(g.projection()) {
            prop_assert!(mat2_det(e.matrix()).is_one());
            prop_assert_eq!(&e.to_moebius(), &h.elements()[i]);
            prop_assert_eq!(e.neg().to_moebius(), e.to_moebius());
        }
    }

    #[test]
    fn finite_order_maps_fix_two_points(k in 0usize..5, c in moebius()) {
        let h = conjugate(&standard(k), &c);
        for g in h.elements().iter().filter(|g| !g.is_identity()) {
            match fixed_points(g).unwrap() {
                FixedPoints::Points(pts) => {
                    prop_assert_eq!(pts.len(), 2);
                    for p in &pts {
                        prop_assert_eq!(&g.apply(p), p);
                    }
                }
                FixedPoints::AllOfP1 => prop_assert!(false, "nontrivial map fixes everything"),
            }
        }
    }

    #[test]
    fn cross_ratio_is_invariant(p in prop::array::uniform4(point()), g in moebius()) {
        prop_assume!((0..4).all(|i| (0..i).all(|j| p[i] != p[j])));
        let moved = p.clone().map(|q| g.apply(&q));
        prop_assert_eq!(cross_ratio(&p).unwrap(), cross_ratio(&moved).unwrap());
    }

    #[test]
    fn aut_of_lambda_preserves_lambda(k in 0usize..4, c in moebius(), q in affine_point()) {
        let h = conjugate(&standard(k), &c);
        let mut lam: Vec<P1Point> = h.elements().iter().map(|g| g.apply(&q)).collect();
        sort_points(&mut lam);
        lam.dedup();
        prop_assume!(lam.len() >= 3);
        let a = aut_of_lambda(&lam, DEFAULT_GROUP_CAP).unwrap();
        for g in a.elements() {
            prop_assert!(lam.iter().all(|p| lam.contains(&g.apply(p))));
        }
        for g in h.elements() {
            prop_assert!(a.contains(g));
        }
    }
}
