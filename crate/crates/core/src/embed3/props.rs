use proptest::prelude::*;

use super::*;
use crate::projline::{FinSubgroupH, P1Point};
use crate::testkit::{affine_point, moebius, point};

fn standard(k: usize) -> FinSubgroupH {
    match k {
        0 => FinSubgroupH::cyclic(3),
        1 => FinSubgroupH::dihedral(2),
        2 => FinSubgroupH::dihedral(3),
        _ => FinSubgroupH::tetrahedral(),
    }
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn iota_is_equivariant(h in moebius(), p in point(), q in point()) {
        prop_assume!(p != q);
        let v = iota(&p, &q).unwrap();
        prop_assert!(v.on_quadric());
        prop_assert_eq!(iota_inverse(&v).unwrap(), (p.clone(), q.clone()));
        prop_assert_eq!(iota(&h.apply(&p), &h.apply(&q)).unwrap(), rep3(&h).apply(&v));
        prop_assert!(verify_iota_equivariance(&h).passed());
    }

    #[test]
    fn rep3_is_a_homomorphism(a in moebius(), b in moebius()) {
        prop_assert_eq!(rep3(&a.compose(&b)), rep3(&a).compose(&rep3(&b)));
        prop_assert_eq!(rep3(&a.compose(&a.inverse())), Rep3::identity());
    }

    #[test]
    fn rep3_preserves_the_quadric_form(h in moebius(), x in -4i64..=4, y in -4i64..=4, z in -4i64..=4) {
        let form = |p: &PointA3| &(&p.x * &p.x) - &(&p.y * &p.z);
        let p = PointA3::from_ints(x, y, z);
        prop_assert_eq!(form(&rep3(&h).apply(&p)), form(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn tau_is_equivariant_on_samples(k in 0usize..4, c in affine_point(), s in affine_point()) {
        let h = standard(k);
        let mut lambda: Vec<P1Point> = Vec::new();
        for g in h.elements() {
            let q = g.apply(&c);
            if !lambda.contains(&q) {
                lambda.push(q);
            }
        }
        let e = build_tau(&h, &lambda).unwrap();
        prop_assert!(verify_tau(&e, &h).passed());
        if !lambda.contains(&s) {
            let v = e.eval(&s).unwrap();
            prop_assert!(v.on_quadric());
            for g in h.elements() {
                prop_assert_eq!(e.eval(&g.apply(&s)).unwrap(), rep3(g).apply(&v));
            }
        }
    }
}
