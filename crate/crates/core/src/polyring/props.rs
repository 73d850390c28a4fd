use proptest::prelude::*;

use super::*;
use crate::exactfield::CycNum;
use crate::projline::mat2_mul;
use crate::testkit::{hpoly, rational, upoly};

fn int_mat() -> impl Strategy<Value = [[CycNum; 2]; 2]> {
    prop::array::uniform4(-4i64..=4).prop_map(|m| [[m[0].into(), m[1].into()], [m[2].into(), m[3].into()]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn compose_matrix_is_contravariant(d in 0u32..=6, m in int_mat(), n in int_mat(), seed in any::<u64>()) {
        let f = HPoly2::from_terms(d, (0..=d).map(|i| (i, CycNum::from_int(((seed >> (3 * i)) & 7) as i64 - 3))));
        let lhs = f.compose_matrix(&mat2_mul(&m, &n));
        let rhs = f.compose_matrix(&m).compose_matrix(&n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_part_divides(b in upoly(4), c in upoly(3)) {
        let a = &b * &(&c * &c);
        let s = a.squarefree_part();
        if !a.is_zero() {
            prop_assert!(s.divides(&a));
            prop_assert_eq!(s.squarefree_part(), s.clone());
            // every root of a is a root of s
            prop_assert!(s.divides(&a.squarefree_part()));
        }
    }

    #[test]
    fn xgcd_identity(a in upoly(10), b in upoly(10)) {
        let (g, u, v) = a.xgcd(&b);
        prop_assert_eq!(&(&u * &a) + &(&v * &b), g.clone());
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
        }
    }

    #[test]
    fn evaluation_is_multiplicative(a in upoly(6), b in upoly(6), x in rational(), f in hpoly(3), h in hpoly(2), y in rational()) {
        prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
        prop_assert_eq!((&f * &h).eval(&x, &y), &f.eval(&x, &y) * &h.eval(&x, &y));
    }

    #[test]
    fn display_parses_back(f in hpoly(4), a in upoly(5)) {
        prop_assert_eq!(parse_hpoly(&f.to_string()).unwrap(), f);
        prop_assert_eq!(parse_upoly(&a.to_string()).unwrap(), a);
    }
}
