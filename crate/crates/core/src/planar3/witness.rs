use crate::exactfield::CycNum;
use crate::linalg::solve;
use crate::polyring::{Poly3, URatFun, UPoly};

pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// Finds `W(X, Y)` of least total degree with `W(g1, g2) = target`.
///
/// Monomials are ordered by total degree, then by descending `X`-power;
/// among the solutions of the first solvable system the one with all free
/// coefficients zero is returned. `None` when no degree up to `cap` works.
pub fn witness_search(target: &URatFun, gens: (&URatFun, &URatFun), cap: u32) -> Option<Poly3> {
    let (g1, g2) = gens;
    let p1 = powers(g1, cap);
    let p2 = powers(g2, cap);
    for d in 1..=cap {
        let monos: Vec<(u32, u32)> =
            (0..=d).flat_map(|k| (0..=k).rev().map(move |i| (i, k - i))).collect();
        let vals: Vec<URatFun> = monos.iter().map(|&(i, j)| &p1[i as usize] * &p2[j as usize]).collect();
        // common denominator
        let den = vals.iter().chain([target]).fold(UPoly::one(), |l, v| lcm(&l, v.den()));
        let cleared = |v: &URatFun| &v.num().clone() * &den.div_exact(v.den()).expect("lcm");
        let cols: Vec<UPoly> = vals.iter().map(cleared).collect();
        let rhs = cleared(target);
        let rows = cols.iter().chain([&rhs]).filter_map(UPoly::degree).max().unwrap_or(0) + 1;
        let a: Vec<Vec<CycNum>> = (0..rows).map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect();
        let b: Vec<CycNum> = (0..rows).map(|r| rhs.coeff(r)).collect();
        if let Some(x) = solve(&a, &b) {
            let w = Poly3::from_terms(monos.iter().zip(x).map(|(&(i, j), c)| ([i, j, 0], c)));
            // independent re-check
            if w.eval_ratfun(&[g1.clone(), g2.clone(), URatFun::zero()]) == *target {
                return Some(w);
            }
        }
    }
    None
}

fn powers(g: &URatFun, n: u32) -> Vec<URatFun> {
    let mut v = vec![URatFun::one()];
    for k in 1..=n as usize {
        let next = &v[k - 1] * g;
        v.push(next);
    }
    v
}

fn lcm(a: &UPoly, b: &UPoly) -> UPoly {
    let g = a.gcd(b);
    (a * &b.div_exact(&g).expect("gcd divides")).monic()
}
