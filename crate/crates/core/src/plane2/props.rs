use proptest::prelude::*;

use super::*;
use crate::projline::{FinSubgroupH, Moebius, P1Point};
use crate::testkit::{affine_point, moebius};

fn orbit_of(g: &Moebius, pts: &[P1Point], n: usize) -> Vec<P1Point> {
    let mut out: Vec<P1Point> = Vec::new();
    for p in pts {
        let mut q = p.clone();
        for _ in 0..n {
            if !out.contains(&q) {
                out.push(q.clone());
            }
            q = g.apply(&q);
        }
    }
    out
}

fn finite_element(k: usize) -> (Moebius, usize) {
    let h = match k {
        0 => FinSubgroupH::cyclic(2),
        1 => FinSubgroupH::cyclic(3),
        2 => FinSubgroupH::cyclic(4),
        _ => FinSubgroupH::cyclic(6),
    }
    .unwrap();
    let g = h.generators()[0].clone();
    let n = h.order();
    (g, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn finite_orders_and_fixed_points(k in 0usize..4, c in moebius(), pts in prop::collection::vec(affine_point(), 1..3)) {
        let (g0, n) = finite_element(k);
        let g = c.compose(&g0).compose(&c.inverse());
        let lambda = orbit_of(&g, &pts, n);
        let a = CurveAut::new(&lambda, g.clone(), DEFAULT_ORDER_CAP).unwrap();
        prop_assert_eq!(a.order(), Order::Finite(n));
        prop_assert_eq!(a.fixed_in_gamma() + a.fixed_in_lambda().len(), 2);
        for q in a.lambda() {
            prop_assert!(a.lambda().contains(&g.apply(q)));
        }
    }

    #[test]
    fn decisions_are_total_and_certified(k in 0usize..4, c in moebius(), pts in prop::collection::vec(affine_point(), 1..3)) {
        let (g0, n) = finite_element(k);
        let g = c.compose(&g0).compose(&c.inverse());
        let a = CurveAut::new(&orbit_of(&g, &pts, n), g, DEFAULT_ORDER_CAP).unwrap();
        match decide_extendability(&a).unwrap() {
            ExtendabilityVerdict::Extendable(e) => prop_assert!(e.certificate.passed(), "{}", e.certificate),
            ExtendabilityVerdict::Obstructed { order, .. } => prop_assert_eq!(order, n),
            ExtendabilityVerdict::OpenCase(_) => {}
        }
    }
}
