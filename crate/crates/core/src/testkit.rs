//! Shared proptest strategies.

use proptest::prelude::*;

use crate::exactfield::{euler_phi, rat, CycNum, Rat};
use crate::polyring::{HPoly2, UPoly};
use crate::projline::{Moebius, P1Point, SL2Elem};

pub const CONDUCTORS: [u64; 6] = [1, 3, 4, 5, 8, 12];

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| *r != rat(0, 1))
}

pub fn cyc_in(m: u64) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(small_rat(), euler_phi(m) as usize)
        .prop_map(move |c| CycNum::from_power_sum(m, &c).unwrap())
}

pub fn rational() -> impl Strategy<Value = CycNum> {
    small_rat().prop_map(CycNum::from_rat)
}

pub fn nonzero_rational() -> impl Strategy<Value = CycNum> {
    nonzero_rat().prop_map(CycNum::from_rat)
}

pub fn affine_point() -> impl Strategy<Value = P1Point> {
    rational().prop_map(P1Point::affine)
}

pub fn point() -> impl Strategy<Value = P1Point> {
    prop_oneof![9 => affine_point(), 1 => Just(P1Point::infinity())]
}

pub fn moebius() -> impl Strategy<Value = Moebius> {
    prop::array::uniform4(-5i64..=5)
        .prop_filter("invertible", |m| m[0] * m[3] != m[1] * m[2])
        .prop_map(|m| Moebius::from_ints(m[0], m[1], m[2], m[3]).unwrap())
}

/// Products of elementary shears: integer matrices of determinant one.
pub fn sl2() -> impl Strategy<Value = SL2Elem> {
    prop::collection::vec((any::<bool>(), -3i64..=3), 1..4).prop_map(|steps| {
        steps.into_iter().fold(SL2Elem::identity(), |acc, (upper, k)| {
            let m = if upper { [[1, k], [0, 1]] } else { [[1, 0], [k, 1]] };
            let e = SL2Elem::new(m.map(|r| r.map(CycNum::from_int))).unwrap();
            acc.compose(&e)
        })
    })
}

pub fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
}

pub fn hpoly(deg: u32) -> impl Strategy<Value = HPoly2> {
    prop::collection::vec(-4i64..=4, deg as usize + 1)
        .prop_map(move |c| HPoly2::from_terms(deg, c.into_iter().enumerate().map(|(i, v)| (i as u32, v.into()))))
}
