use proptest::prelude::*;

use super::*;
use crate::exactfield::CycNum;
use crate::polyring::{identity_triple, Poly3, URatFun, UPoly};
use crate::testkit::upoly;

/// `v_i -> v_i + c * v_j^k` together with its inverse.
fn shear(i: usize, j: usize, c: i64, k: u32) -> Aut3 {
    let bump = |s: i64| Poly3::var(j).pow(k).scale(&CycNum::from_int(s));
    let mut f = identity_triple();
    let mut g = identity_triple();
    f[i] = &f[i] + &bump(c);
    g[i] = &g[i] + &bump(-c);
    Aut3::new(f, g).unwrap()
}

fn aut3() -> impl Strategy<Value = Aut3> {
    prop::collection::vec((0usize..3, 1usize..3, -2i64..=2, 1u32..3), 1..4).prop_map(|steps| {
        steps
            .into_iter()
            .fold(Aut3::identity(), |acc, (i, off, c, k)| acc.compose(&shear(i, (i + off) % 3, c, k)))
    })
}

fn rf(p: UPoly) -> URatFun {
    URatFun::poly(p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composites_keep_their_inverses(a in aut3(), b in aut3()) {
        let c = a.compose(&b);
        prop_assert!(Aut3::new(c.forward().clone(), c.inverse().clone()).is_ok());
        prop_assert_eq!(c.compose(&c.inverted()), Aut3::new(identity_triple(), identity_triple()).unwrap());
        let tau = [URatFun::x(), URatFun::x().inv().unwrap(), URatFun::one()];
        prop_assert_eq!(c.inverted().apply(&c.apply(&tau)), tau);
    }

    #[test]
    fn triples_print_and_parse(a in aut3()) {
        prop_assert_eq!(&parse_triple(&fmt_triple(a.forward())).unwrap(), a.forward());
    }

    #[test]
    fn witnesses_are_sound(c in prop::collection::vec(-3i64..=3, 6), g1 in upoly(2), g2 in upoly(2)) {
        let (x, y) = (Poly3::var(0), Poly3::var(1));
        let monos = [Poly3::one(), x.clone(), y.clone(), &x * &x, &x * &y, &y * &y];
        let w = monos.iter().zip(&c).fold(Poly3::zero(), |acc, (m, &k)| &acc + &m.scale(&CycNum::from_int(k)));
        let gens = [rf(g1), rf(g2), URatFun::zero()];
        let target = w.eval_ratfun(&gens);
        let found = witness_search(&target, (&gens[0], &gens[1]), 4);
        // a witness of degree at most two exists, so one is found
        let found = found.expect("witness exists");
        prop_assert_eq!(found.eval_ratfun(&gens), target);
        prop_assert!(found.total_degree().unwrap_or(0) <= w.total_degree().unwrap_or(0).max(1));
    }

    #[test]
    fn normalisations_are_certified(q in upoly(2), r in upoly(2)) {
        let p = UPoly::from_ints(&[0, -1, 1]);
        let pinv = URatFun::new(UPoly::one(), p.clone()).unwrap();
        let e = PlanarEmbedding::new(p, &rf(q) + &pinv, rf(r)).unwrap();
        if let Ok((n, c)) = normalize_planar(&e, 6) {
            prop_assert!(c.passed(), "{}", c);
            prop_assert_eq!(n.composite().apply(&e.as_triple()), e.normal_form());
        }
    }
}
