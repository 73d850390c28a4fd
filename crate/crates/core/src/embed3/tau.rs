use std::fmt;

use serde::Serialize;

use super::{rep3, Rep3};
use crate::certificate::Certificate;
use crate::equivariant::{build_delta, combine_orbits, DeltaMap, Locus, OrbitData};
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::HPoly2;
use crate::projline::{FinSubgroupH, Moebius, P1Point};

/// A ratio of homogeneous forms of equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: HPoly2,
    pub den: HPoly2,
}

impl Ratio {
    /// Divides out the common factor and normalises the denominator.
    pub fn reduced(num: HPoly2, den: HPoly2) -> Ratio {
        if num.is_zero() {
            return Ratio { num: HPoly2::zero(0), den: HPoly2::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let s = den.top_coeff().expect("nonzero denominator").inv().expect("nonzero");
        Ratio { num: num.scale(&s), den: den.scale(&s) }
    }

    pub fn eval(&self, q: &P1Point) -> Result<CycNum> {
        let d = self.den.eval(q.a(), q.b());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(q.a(), q.b()) * &d.inv()?)
    }

    fn compose_matrix(&self, m: &crate::projline::Mat2) -> Ratio {
        Ratio { num: self.num.compose_matrix(m), den: self.den.compose_matrix(m) }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// An `H`-equivariant closed embedding of `P^1 \ Lambda` into `A^3`.
#[derive(Clone, Debug)]
pub struct EmbeddingA3 {
    /// Reduced `x`, `y`, `z` coordinates.
    pub comps: [Ratio; 3],
    /// Per-orbit terms; `comps[k]` is the sum of `per_orbit[i][k]`.
    pub per_orbit: Vec<[Ratio; 3]>,
    pub reps: Vec<(Moebius, Rep3)>,
    pub lambda: Locus,
    pub delta: DeltaMap,
}

#[derive(Serialize)]
pub struct EmbeddingView {
    pub x: String,
    pub y: String,
    pub z: String,
    pub reps: Vec<(String, String)>,
    pub lambda: String,
}

/// Unreduced `iota((x,y), (f1, f2))` per coordinate.
fn iota_terms(f1: &HPoly2, f2: &HPoly2) -> [(HPoly2, HPoly2); 3] {
    let (x, y) = (HPoly2::x(), HPoly2::y());
    let two = CycNum::from_int(2);
    let (xf2, yf1) = (&x * f2, &y * f1);
    let den = xf2.checked_sub(&yf1).expect("same degree");
    [
        (xf2.checked_add(&yf1).expect("same degree"), den.clone()),
        ((&x * f1).scale(&two), den.clone()),
        ((&y * f2).scale(&two), den),
    ]
}

impl EmbeddingA3 {
    /// `tau = iota o (id, delta)`, with `delta` assembled from the orbits.
    pub fn from_orbits(h: &FinSubgroupH, orbits: &[OrbitData]) -> Result<Self> {
        let delta = combine_orbits(orbits)?;
        let lambda = Locus::union(&orbits.iter().map(|o| o.locus.clone()).collect::<Vec<_>>())?;
        let r = CycNum::rational(1, orbits.len() as i64);
        let per_orbit = orbits
            .iter()
            .map(|o| iota_terms(&o.pair.f1, &o.pair.f2).map(|(n, d)| Ratio { num: n.scale(&r), den: d }))
            .collect();
        let comps = iota_terms(&delta.reduced1, &delta.reduced2).map(|(n, d)| Ratio::reduced(n, d));
        let reps = h.generators().iter().map(|g| (g.clone(), rep3(g))).collect();
        Ok(EmbeddingA3 { comps, per_orbit, reps, lambda, delta })
    }

    /// Value at a point of `Gamma`.
    pub fn eval(&self, q: &P1Point) -> Result<super::PointA3> {
        Ok(super::PointA3::new(self.comps[0].eval(q)?, self.comps[1].eval(q)?, self.comps[2].eval(q)?))
    }

    pub fn view(&self) -> EmbeddingView {
        EmbeddingView {
            x: self.comps[0].to_string(),
            y: self.comps[1].to_string(),
            z: self.comps[2].to_string(),
            reps: self.reps.iter().map(|(g, r)| (g.to_string(), r.to_string())).collect(),
            lambda: self.lambda.poly().to_string(),
        }
    }
}

impl fmt::Display for EmbeddingA3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, c) in ["x", "y", "z"].iter().zip(&self.comps) {
            writeln!(f, "{name} = {c}")?;
        }
        for (g, r) in &self.reps {
            writeln!(f, "rep3 {g} = {r}")?;
        }
        Ok(())
    }
}

/// Generic path: `delta` from the equivariant pipeline, then `iota`.
pub fn build_tau(h: &FinSubgroupH, lambda: &[P1Point]) -> Result<EmbeddingA3> {
    let (_, orbits) = build_delta(h, lambda)?;
    let e = EmbeddingA3::from_orbits(h, &orbits)?;
    for (o, terms) in orbits.iter().zip(&e.per_orbit) {
        let (sqf, _) = terms[0].den.squarefree()?;
        if sqf.scalar_ratio(o.p()).is_none() {
            return Err(Error::DegreeAlignment(format!("orbit denominator {} does not cut out {}", terms[0].den, o.p())));
        }
    }
    Ok(e)
}

fn product<'a>(it: impl IntoIterator<Item = &'a HPoly2>) -> HPoly2 {
    it.into_iter().fold(HPoly2::one(), |acc, p| &acc * p)
}

fn residual(lhs: &HPoly2, rhs: &HPoly2) -> Option<String> {
    match lhs.checked_sub(rhs) {
        Ok(r) if r.is_zero() => None,
        Ok(r) => Some(r.to_string()),
        Err(e) => Some(e.to_string()),
    }
}

/// `sum_i n_i / d_i == n / d`, cleared of denominators.
fn sum_matches(terms: &[&Ratio], total: &Ratio) -> Option<String> {
    let dens = product(terms.iter().map(|t| &t.den));
    let mut lhs = HPoly2::zero(dens.degree());
    for (i, t) in terms.iter().enumerate() {
        let others = product(terms.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| &s.den));
        match lhs.checked_add(&(&t.num * &others)) {
            Ok(s) => lhs = s,
            Err(e) => return Some(e.to_string()),
        }
    }
    residual(&(&lhs * &total.den), &(&total.num * &dens))
}

/// Exact equivariance, regularity and injectivity certificate.
pub fn verify_tau(e: &EmbeddingA3, h: &FinSubgroupH) -> Certificate {
    let mut cert = Certificate::new("tau");
    let c = &e.comps;
    for (k, name) in ["x", "y", "z"].iter().enumerate() {
        if c[k].num.degree() != c[k].den.degree() {
            cert.push(format!("{name}-component is a ratio of equal degrees"), false, Some(c[k].to_string()));
        }
    }

    // rep3(h) tau = tau o h
    let dens = product(c.iter().map(|r| &r.den));
    for g in h.generators() {
        let r = rep3(g);
        let moved: Vec<Ratio> = c.iter().map(|t| t.compose_matrix(g.matrix())).collect();
        for k in 0..3 {
            let mut lhs = HPoly2::zero(dens.degree());
            for j in 0..3 {
                let others = product((0..3).filter(|l| *l != j).map(|l| &c[l].den));
                let t = (&c[j].num * &others).scale(&r.m[k][j]);
                lhs = lhs.checked_add(&t).expect("same degree");
            }
            let res = residual(&(&lhs * &moved[k].den), &(&moved[k].num * &dens));
            cert.check(format!("rep3({g}) tau_{k} = tau_{k} o {g}"), res);
        }
    }

    // regularity on Gamma, poles exactly on Lambda
    let lam = e.lambda.poly();
    for (k, r) in c.iter().enumerate() {
        let ok = r.den.squarefree().map(|(s, _)| s.divides(lam)).unwrap_or(false);
        cert.push(format!("denominator of tau_{k} vanishes only on Lambda"), ok, (!ok).then(|| r.den.to_string()));
    }
    match dens.squarefree() {
        Ok((s, _)) => {
            let ok = s.scalar_ratio(lam).is_some();
            cert.push("poles of tau cover Lambda", ok, (!ok).then(|| s.to_string()));
        }
        Err(err) => cert.push("poles of tau cover Lambda", false, Some(err.to_string())),
    }

    // the image lies on the quadric
    let (nx, dx) = (&c[0].num, &c[0].den);
    let (ny, dy) = (&c[1].num, &c[1].den);
    let (nz, dz) = (&c[2].num, &c[2].den);
    let q_lhs = &(&(ny * nz) * dx) * dx;
    let q_rhs = (&(nx * nx)).checked_sub(&(dx * dx)).map(|t| &(&t * dy) * dz);
    cert.check(
        "yz = x^2 - 1 on the image",
        q_rhs.map_or_else(|e| Some(e.to_string()), |r| residual(&q_lhs, &r)),
    );

    // iota^{-1} o tau recovers [x:y] on both charts
    let (x, y) = (HPoly2::x(), HPoly2::y());
    let b1 = nx.checked_add(dx).map(|s| &(&s * dz) * &y);
    cert.check(
        "[X+1 : Z] = [x : y]",
        b1.map_or_else(|e| Some(e.to_string()), |l| residual(&l, &(&(nz * dx) * &x))),
    );
    let b2 = nx.checked_sub(dx).map(|s| &(&s * dy) * &x);
    cert.check(
        "[Y : X-1] = [x : y]",
        b2.map_or_else(|e| Some(e.to_string()), |r| residual(&(&(ny * dx) * &y), &r)),
    );

    // per-orbit form agrees with the reduced form
    if !e.per_orbit.is_empty() {
        for k in 0..3 {
            let terms: Vec<&Ratio> = e.per_orbit.iter().map(|t| &t[k]).collect();
            cert.check(format!("per-orbit sum equals tau_{k}"), sum_matches(&terms, &c[k]));
        }
    }
    cert
}
