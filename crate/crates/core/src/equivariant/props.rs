use proptest::prelude::*;

use super::*;
use crate::polyring::HPoly2;
use crate::projline::{orbit_decompose, sl2_pullback, FinSubgroupH, P1Point};
use crate::testkit::{affine_point, hpoly, nonzero_rational, sl2};

fn standard(k: usize) -> FinSubgroupH {
    match k {
        0 => FinSubgroupH::cyclic(2),
        1 => FinSubgroupH::cyclic(3),
        2 => FinSubgroupH::dihedral(2),
        3 => FinSubgroupH::dihedral(3),
        _ => FinSubgroupH::tetrahedral(),
    }
    .unwrap()
}

fn orbit(h: &FinSubgroupH, pts: &[P1Point]) -> Vec<P1Point> {
    let mut out: Vec<P1Point> = Vec::new();
    for p in pts {
        for g in h.elements() {
            let q = g.apply(p);
            if !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}

fn pair(d: u32) -> impl Strategy<Value = EndoPair> {
    (hpoly(d), hpoly(d)).prop_map(|(a, b)| EndoPair::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn contraction_is_equivariant(f in pair(3), g in sl2()) {
        prop_assert_eq!(f.act(&g).rho(), g.act_on_poly(&f.rho()));
        prop_assert_eq!(f.act(&g).act(&g.inverse()), f);
    }

    #[test]
    fn split_is_a_section(p in hpoly(4)) {
        prop_assert_eq!(split_endomorphism(&p).unwrap().rho(), p);
    }

    #[test]
    fn reynolds_average_is_fixed(k in 0usize..4, c in affine_point(), s in nonzero_rational()) {
        let h = standard(k);
        let g = sl2_pullback(&h).unwrap();
        let locus = Locus::from_points(&orbit(&h, &[c])).unwrap();
        let (d, _) = invariant_power(locus.poly(), &g).unwrap();
        let p = locus.poly().pow(d);
        prop_assume!(p.degree() >= 2);
        // (q x, q y) lies in the kernel of the contraction
        let q = HPoly2::y().pow(p.degree() - 2).scale(&s);
        let kernel = EndoPair::new(&q * &HPoly2::x(), &q * &HPoly2::y()).unwrap();
        let f = split_endomorphism(&p).unwrap().checked_add(&kernel).unwrap();
        let avg = reynolds_average(&f, &g).unwrap();
        prop_assert!(first_mover(&avg, &g).is_none());
        prop_assert_eq!(avg.rho(), p);
        prop_assert_eq!(reynolds_average(&avg, &g).unwrap(), avg);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn delta_fixes_exactly_lambda(k in 0usize..5, pts in prop::collection::vec(affine_point(), 1..3)) {
        let h = standard(k);
        let lambda = orbit(&h, &pts);
        let (delta, orbits) = build_delta(&h, &lambda).unwrap();
        prop_assert_eq!(orbits.len(), orbit_decompose(&h, &lambda).unwrap().len());
        let c = verify_delta_equivariance(&delta, &h);
        prop_assert!(c.passed(), "{}", c);
        let c = verify_fixed_locus(&delta, &Locus::from_points(&lambda).unwrap());
        prop_assert!(c.passed(), "{}", c);
        for o in &orbits {
            prop_assert!(o.power.scalar_ratio(&o.p().pow(o.d)).is_some());
            prop_assert_eq!(rho_contract(&o.pair), o.power.clone());
        }
    }
}
