use std::fmt;

use super::{orbit_data, EndoPair, Locus, OrbitData};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::HPoly2;
use crate::projline::{orbit_decompose, sl2_pullback, FinSubgroupH, P1Point};

/// `delta: [x:y] -> [g1:g2]`, also kept in reduced (coprime) form.
#[derive(Clone, Debug)]
pub struct DeltaMap {
    pub g1: HPoly2,
    pub g2: HPoly2,
    pub reduced1: HPoly2,
    pub reduced2: HPoly2,
}

impl DeltaMap {
    pub fn new(g1: HPoly2, g2: HPoly2) -> Result<Self> {
        let pair = EndoPair::new(g1, g2)?;
        if pair.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let alpha = pair.f1.gcd(&pair.f2);
        let reduced1 = pair.f1.div_exact(&alpha).expect("gcd divides");
        let reduced2 = pair.f2.div_exact(&alpha).expect("gcd divides");
        Ok(DeltaMap { g1: pair.f1, g2: pair.f2, reduced1, reduced2 })
    }

    pub fn apply(&self, q: &P1Point) -> P1Point {
        let a = self.reduced1.eval(q.a(), q.b());
        let b = self.reduced2.eval(q.a(), q.b());
        P1Point::new(a, b).expect("coprime pair has no common zero")
    }

    /// `reduced1 y - reduced2 x`: its zeros are the fixed points.
    pub fn contraction(&self) -> HPoly2 {
        super::rho_contract(&EndoPair::new(self.reduced1.clone(), self.reduced2.clone()).expect("same degree"))
    }
}

impl fmt::Display for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.reduced1, self.reduced2)
    }
}

/// `g_k = (1/r) sum_i f_{i,k} prod_{j != i} P_j`.
pub fn combine_orbits(orbits: &[OrbitData]) -> Result<DeltaMap> {
    let r = orbits.len();
    if r == 0 {
        return Err(Error::DegeneratePoints("no orbits".into()));
    }
    let total: u32 = orbits.iter().map(|o| o.power.degree()).sum();
    for o in orbits {
        if o.pair.degree() + 1 != o.power.degree() {
            return Err(Error::DegreeAlignment(format!(
                "pair of degree {} for P of degree {}",
                o.pair.degree(),
                o.power.degree()
            )));
        }
    }
    let mut g1 = HPoly2::zero(total - 1);
    let mut g2 = HPoly2::zero(total - 1);
    for (i, o) in orbits.iter().enumerate() {
        let others = orbits
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(HPoly2::one(), |acc, (_, q)| &acc * &q.power);
        g1 = g1.checked_add(&(&o.pair.f1 * &others))?;
        g2 = g2.checked_add(&(&o.pair.f2 * &others))?;
    }
    let inv_r = CycNum::rational(1, r as i64);
    let (g1, g2) = (g1.scale(&inv_r), g2.scale(&inv_r));
    let prod = orbits.iter().fold(HPoly2::one(), |acc, o| &acc * &o.power);
    let contraction = super::rho_contract(&EndoPair::new(g1.clone(), g2.clone())?);
    if contraction != prod {
        return Err(Error::DegreeAlignment(format!("g1 y - g2 x = {contraction} != {prod}")));
    }
    DeltaMap::new(g1, g2)
}

/// Full pipeline for an `H`-invariant point set: an `H`-equivariant `delta`
/// whose fixed points are exactly `lambda`.
pub fn build_delta(h: &FinSubgroupH, lambda: &[P1Point]) -> Result<(DeltaMap, Vec<OrbitData>)> {
    if lambda.is_empty() {
        return Err(Error::DegeneratePoints("empty point set".into()));
    }
    let g = sl2_pullback(h)?;
    let orbits = orbit_decompose(h, lambda)?
        .iter()
        .map(|o| orbit_data(o, &g))
        .collect::<Result<Vec<_>>>()?;
    let delta = combine_orbits(&orbits)?;
    Ok((delta, orbits))
}

/// Per generator `h = (a,b;c,d)`:
/// `f1(h(x,y)) (c f1 + d f2) - f2(h(x,y)) (a f1 + b f2) = 0` on the reduced
/// pair, and `h` preserves the fixed locus.
pub fn verify_delta_equivariance(delta: &DeltaMap, h: &FinSubgroupH) -> Certificate {
    let mut cert = Certificate::new("delta-equivariance");
    let (f1, f2) = (&delta.reduced1, &delta.reduced2);
    let locus = delta.contraction().squarefree().map(|(s, _)| s).ok();
    for g in h.generators() {
        let [[a, b], [c, d]] = g.matrix();
        let h1 = f1.compose_matrix(g.matrix());
        let h2 = f2.compose_matrix(g.matrix());
        let lin = |u: &CycNum, v: &CycNum| f1.scale(u).checked_add(&f2.scale(v)).expect("same degree");
        let diff = (&h1 * &lin(c, d)).checked_sub(&(&h2 * &lin(a, b))).expect("same degree");
        cert.check(
            format!("delta o h = h o delta for h = {g}"),
            (!diff.is_zero()).then(|| diff.to_string()),
        );
        if let Some(l) = &locus {
            let moved = l.compose_matrix(g.inverse().matrix());
            cert.check(
                format!("fixed locus invariant under h = {g}"),
                moved.scalar_ratio(l).is_none().then(|| moved.to_string()),
            );
        }
    }
    cert
}

/// The fixed points of `delta` are exactly `lambda`.
pub fn verify_fixed_locus(delta: &DeltaMap, lambda: &Locus) -> Certificate {
    let mut cert = Certificate::new("fixed-locus");
    let c = delta.contraction();
    if c.is_zero() {
        cert.push("fixed locus is finite", false, Some("reduced1 y - reduced2 x = 0: delta is the identity".into()));
        return cert;
    }
    cert.push("fixed locus is finite", true, None);
    let (sqf, _) = c.squarefree().expect("nonzero");
    let lam = lambda.poly();
    cert.check(
        "every point of the removed set is fixed",
        (!lam.divides(&c)).then(|| format!("{lam} does not divide {c}")),
    );
    cert.check(
        "every fixed point lies in the removed set",
        (!sqf.divides(lam)).then(|| format!("{sqf} does not divide {lam}")),
    );
    if let Some(pts) = lambda.points() {
        let bad: Vec<String> = pts.iter().filter(|q| delta.apply(q) != **q).map(|q| q.to_string()).collect();
        cert.check("delta(q) = q at each listed point", (!bad.is_empty()).then(|| bad.join(", ")));
    }
    cert
}
