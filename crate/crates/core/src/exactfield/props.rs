use proptest::prelude::*;

use super::*;
use crate::testkit::{cyc_in, nonzero_rat, CONDUCTORS};

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(|m| (cyc_in(m), cyc_in(m), cyc_in(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, CycNum::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn lifting_commutes_with_arithmetic(
        a in prop::sample::select(&CONDUCTORS[..]).prop_flat_map(cyc_in),
        b in prop::sample::select(&CONDUCTORS[..]).prop_flat_map(cyc_in),
    ) {
        use num_integer::Integer;
        let big = canonical_conductor(a.conductor().lcm(&b.conductor()));
        let (la, lb) = (a.lift(big), b.lift(big));
        prop_assert_eq!((&la + &lb).key(big), (&a + &b).key(big));
        prop_assert_eq!((&la * &lb).key(big), (&a * &b).key(big));
        prop_assert_eq!(la.minimize(), a.minimize());
    }

    #[test]
    fn sqrt_of_square_is_plus_or_minus(
        r in nonzero_rat(),
        q in prop::sample::select(vec![1i64, -1, 2, -2, 3, -3, 5, 6, -6]),
        w in prop::sample::select(vec![1u64, 2, 3, 4, 6, 8]),
        k in 0i64..24,
    ) {
        // the search domain: rational square roots times roots of unity
        let s = &(&sqrt_rational(&rat(q, 1)).unwrap() * &root_of_unity(w, k)) * &CycNum::from_rat(r);
        let t = try_sqrt(&(&s * &s)).expect("square root found");
        prop_assert!(t == s || t == -&s, "{} vs {}", t, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn sqrt_of_general_square(m in prop::sample::select(vec![3u64, 4, 5, 8, 12]).prop_flat_map(cyc_in)) {
        prop_assume!(!m.is_zero());
        let t = try_sqrt(&(&m * &m)).expect("square root found");
        prop_assert!(t == m || t == -&m, "{} vs {}", t, m);
    }
}
