//! Point sets stable under [x:y] -> [x : w y], and the induced automorphism.

use eqcurve::exactfield::CycNum;
use eqcurve::plane2::{cor25_family, cor25_h, decide_extendability, CurveAut, DEFAULT_ORDER_CAP};

fn main() -> eqcurve::Result<()> {
    let h = cor25_h();
    for a in [vec![1], vec![1, 2]] {
        let a: Vec<CycNum> = a.into_iter().map(CycNum::from_int).collect();
        let pts = cor25_family(a.len(), &a)?;
        assert!(pts.iter().all(|p| pts.contains(&h.apply(p))));
        let c = CurveAut::new(&pts, h.clone(), DEFAULT_ORDER_CAP)?;
        let v = decide_extendability(&c)?.view();
        println!("|Lambda| = {}: {} fixed in Gamma, {}", pts.len(), c.fixed_in_gamma(), v.verdict);
    }
    Ok(())
}
