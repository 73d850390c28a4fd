//! Deciding whether one automorphism of a punctured line extends to A^2.

use eqcurve::plane2::{decide_extendability, CurveAut, DEFAULT_ORDER_CAP};
use eqcurve::projline::{Moebius, P1Point};

fn main() -> eqcurve::Result<()> {
    let cases = [
        ("x -> 2x on P^1 \\ {0, inf}", vec![P1Point::from_int(0), P1Point::infinity()], Moebius::from_ints(2, 0, 0, 1)?),
        ("x -> -x on P^1 \\ {1, -1}", vec![P1Point::from_int(1), P1Point::from_int(-1)], Moebius::from_ints(-1, 0, 0, 1)?),
        ("order 3 on P^1 \\ {0, 1, inf}", vec![P1Point::from_int(0), P1Point::from_int(1), P1Point::infinity()], Moebius::from_ints(0, 1, -1, 1)?),
    ];
    for (name, lambda, g) in cases {
        let c = CurveAut::new(&lambda, g, DEFAULT_ORDER_CAP)?;
        let v = decide_extendability(&c)?.view();
        println!("{name}: order {}, {} fixed in Gamma", c.order(), c.fixed_in_gamma());
        println!("  {}: {}", v.verdict, v.detail.trim_end().replace('\n', "\n  "));
    }
    Ok(())
}
