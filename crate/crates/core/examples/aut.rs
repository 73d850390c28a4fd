//! Finite groups of Moebius maps: stabilisers of point sets and SL(2) lifts.

use eqcurve::projline::{aut_of_lambda, fixed_points, sl2_pullback, FixedPoints, P1Point, DEFAULT_GROUP_CAP};

fn main() -> eqcurve::Result<()> {
    let sets: [(&str, Vec<P1Point>); 2] = [
        ("{0, 1, inf}", vec![P1Point::from_int(0), P1Point::from_int(1), P1Point::infinity()]),
        ("{0, 1, -1, inf}", vec![P1Point::from_int(0), P1Point::from_int(1), P1Point::from_int(-1), P1Point::infinity()]),
    ];
    for (name, lambda) in sets {
        let h = aut_of_lambda(&lambda, DEFAULT_GROUP_CAP)?;
        println!("Aut {name}: {} of order {}", h.kind(), h.order());
        for g in h.elements().iter().filter(|g| !g.is_identity()) {
            if let FixedPoints::Points(p) = fixed_points(g)? {
                let p: Vec<String> = p.iter().map(ToString::to_string).collect();
                println!("  {g} fixes {}", p.join(", "));
            }
        }
        let g = sl2_pullback(&h)?;
        println!("  lift to SL(2) has order {}", g.order());
    }
    Ok(())
}
