use super::{apply_triple, witness_search, Aut3};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::{Poly3, URatFun, UPoly};

/// `x -> (0, Q(x), R(x))` on `Gamma = A^1 \ {P = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    p: UPoly,
    q: URatFun,
    r: URatFun,
}

impl PlanarEmbedding {
    /// `P` must be nonzero and squarefree; `Q`, `R` may only have poles at
    /// roots of `P`.
    pub fn new(p: UPoly, q: URatFun, r: URatFun) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.squarefree_part().degree() != p.degree() {
            return Err(Error::NotSquarefree(p.to_string()));
        }
        for (name, f) in [("Q", &q), ("R", &r)] {
            if !f.den().squarefree_part().divides(&p) {
                return Err(Error::InvalidEmbedding(format!("{name} = {f} has a pole off P = 0")));
            }
        }
        Ok(PlanarEmbedding { p: p.monic(), q, r })
    }

    pub fn p(&self) -> &UPoly {
        &self.p
    }

    pub fn q(&self) -> &URatFun {
        &self.q
    }

    pub fn r(&self) -> &URatFun {
        &self.r
    }

    pub fn as_triple(&self) -> [URatFun; 3] {
        [URatFun::zero(), self.q.clone(), self.r.clone()]
    }

    /// The normal form `x -> (x, 1/P, 0)`.
    pub fn normal_form(&self) -> [URatFun; 3] {
        normal_form(&self.p)
    }
}

pub fn normal_form(p: &UPoly) -> [URatFun; 3] {
    let inv_p = URatFun::new(UPoly::one(), p.clone()).expect("nonzero");
    [URatFun::x(), inv_p, URatFun::zero()]
}

/// Every step of the chain and its ingredients.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub a_poly: Poly3,
    pub ab: (CycNum, CycNum),
    pub u: UPoly,
    pub v: UPoly,
    pub s: UPoly,
    pub b_poly: Poly3,
    pub c_poly: Poly3,
    /// `f2, f3, f4, f5`, applied in this order.
    pub chain: Vec<Aut3>,
}

impl Normalization {
    /// `f5 o f4 o f3 o f2`.
    pub fn composite(&self) -> Aut3 {
        self.chain.iter().fold(Aut3::identity(), |acc, f| f.compose(&acc))
    }
}

/// The deterministic sample sequence for `(a, b)`; `a = 0` is skipped since
/// `(X, aY + bZ, Z)` must be invertible.
pub fn ab_samples() -> impl Iterator<Item = (i64, i64)> {
    [(1, 0), (0, 1), (1, 1), (1, -1), (2, 3), (3, -2), (1, 2), (2, -1), (5, 7), (-3, 4), (7, -5), (4, 9)]
        .into_iter()
        .filter(|&(a, _)| a != 0)
}

fn v(i: usize) -> Poly3 {
    Poly3::var(i)
}

fn k(c: &CycNum) -> Poly3 {
    Poly3::constant(c.clone())
}

fn step_err(step: &str, cap: u32) -> Error {
    Error::WitnessNotFound { step: step.into(), cap }
}

/// Builds `f2, ..., f5` carrying `e` to `x -> (x, 1/P, 0)`.
pub fn normalize_planar(e: &PlanarEmbedding, cap: u32) -> Result<(Normalization, Certificate)> {
    let (p, q, r) = (&e.p, &e.q, &e.r);
    let x = URatFun::x();

    // f2: X + A(Y, Z)
    let a_w = witness_search(&x, (q, r), cap).ok_or_else(|| step_err("A(Q, R) = x", cap))?;
    let a_poly = a_w.permute([1, 2, 0]);
    let f2 = Aut3::new([&v(0) + &a_poly, v(1), v(2)], [&v(0) - &a_poly, v(1), v(2)])?;

    // f3: every root of P a pole of aQ + bR
    let (qq, (a, b)) = ab_samples()
        .map(|(a, b)| (CycNum::from_int(a), CycNum::from_int(b)))
        .map(|(a, b)| (&q.scale(&a) + &r.scale(&b), (a, b)))
        .find(|(t, _)| p.divides(t.den()))
        .ok_or(Error::PoleConditionUnsatisfiable)?;
    let ai = a.inv()?;
    let f3 = Aut3::new(
        [v(0), &(&k(&a) * &v(1)) + &(&k(&b) * &v(2)), v(2)],
        [v(0), &(&v(1) - &(&k(&b) * &v(2))) * &k(&ai), v(2)],
    )?;

    // 1/P = S U (Q1/Q2) + V
    let (g, u, vv) = qq.num().xgcd(p);
    debug_assert!(g == UPoly::one());
    let s = qq.den().div_exact(p).expect("P divides Q2");

    // f4: Z + B(X, Y) with B(x, Q1/Q2) = 1/P - R
    let inv_p = URatFun::new(UPoly::one(), p.clone())?;
    let b_poly = witness_search(&(&inv_p - r), (&x, &qq), cap)
        .ok_or_else(|| step_err("B(x, Q1/Q2) = 1/P - R", cap))?;
    let f4 = Aut3::new([v(0), v(1), &v(2) + &b_poly], [v(0), v(1), &v(2) - &b_poly])?;

    // f5: (X, Z, Y - C(X, Z)) with C(x, 1/P) = Q1/Q2
    let c_poly = witness_search(&qq, (&x, &inv_p), cap).ok_or_else(|| step_err("C(x, 1/P) = Q1/Q2", cap))?;
    let c_xz = c_poly.permute([0, 2, 1]);
    let f5 = Aut3::new([v(0), v(2), &v(1) - &c_xz], [v(0), &v(2) + &c_poly, v(1)])?;

    let n = Normalization { a_poly, ab: (a, b), u, v: vv, s, b_poly, c_poly, chain: vec![f2, f3, f4, f5] };
    let mut cert = Certificate::new("planar normalization");
    for (name, f) in ["f2", "f3", "f4", "f5"].iter().zip(&n.chain) {
        let id = crate::polyring::identity_triple();
        let ok = crate::polyring::compose_triple(f.forward(), f.inverse()) == id
            && crate::polyring::compose_triple(f.inverse(), f.forward()) == id;
        cert.push(format!("{name} = {f} is invertible"), ok, None);
    }
    let one = &(&n.u * qq.num()) + &(&n.v * p);
    cert.check_eq("U Q1 + V P = 1", &one, &UPoly::one());
    let got = n.composite().apply(&e.as_triple());
    let want = e.normal_form();
    let ok = got == want;
    cert.push(
        "f5 f4 f3 f2 (0, Q, R) = (x, 1/P, 0)",
        ok,
        (!ok).then(|| format!("({}, {}, {})", got[0], got[1], got[2])),
    );
    Ok((n, cert))
}

/// Carries `e` to `e2` (same `P`): `chain(e2)^{-1} o chain(e)`.
pub fn equivalence(e: &PlanarEmbedding, e2: &PlanarEmbedding, cap: u32) -> Result<(Aut3, Certificate)> {
    if e.p != e2.p {
        return Err(Error::InvalidEmbedding("different curves".into()));
    }
    let (n1, _) = normalize_planar(e, cap)?;
    let (n2, _) = normalize_planar(e2, cap)?;
    let alpha = n2.composite().inverted().compose(&n1.composite());
    let mut cert = Certificate::new("planar equivalence");
    let got = apply_triple(alpha.forward(), &e.as_triple());
    let ok = got == e2.as_triple();
    cert.push("alpha o e = e'", ok, (!ok).then(|| format!("{got:?}")));
    Ok((alpha, cert))
}
