use std::fmt;

use serde::Serialize;

use super::{CurveAut, Order};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactfield::{try_sqrt, CycNum};
use crate::planar3::moebius_ratfun;
use crate::polyring::{Poly3, URatFun, UPoly};
use crate::projline::{mat2, Moebius, P1Point};

/// A closed embedding of `Gamma` into `A^2` and a plane automorphism
/// extending `g`.
///
/// The embedding is parametrised by `t = coord(x)` where `x` is the
/// affine coordinate on the original `P^1`.
#[derive(Clone, Debug)]
pub struct PlaneExtension {
    pub coord: Moebius,
    /// `g` in the coordinate `t`.
    pub g_t: Moebius,
    pub embedding: [URatFun; 2],
    /// Polynomial map in `X, Y`.
    pub extension: [Poly3; 2],
    /// Equation of the image, when recorded.
    pub curve: Option<Poly3>,
    pub certificate: Certificate,
}

impl fmt::Display for PlaneExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coordinate t = {}", self.coord)?;
        writeln!(f, "g(t) = {}", self.g_t)?;
        writeln!(f, "embedding t -> ({}, {})", self.embedding[0].to_string().replace('x', "t"), self.embedding[1].to_string().replace('x', "t"))?;
        writeln!(f, "extension (X, Y) -> ({}, {})", self.extension[0], self.extension[1])?;
        if let Some(c) = &self.curve {
            writeln!(f, "image {c} = 0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum ExtendabilityVerdict {
    Extendable(Box<PlaneExtension>),
    Obstructed { reason: String, fixed: String, order: usize },
    OpenCase(String),
}

#[derive(Serialize)]
pub struct VerdictView {
    pub verdict: &'static str,
    pub detail: String,
}

impl ExtendabilityVerdict {
    pub fn view(&self) -> VerdictView {
        match self {
            ExtendabilityVerdict::Extendable(e) => VerdictView { verdict: "extendable", detail: e.to_string() },
            ExtendabilityVerdict::Obstructed { reason, fixed, order } => VerdictView {
                verdict: "obstructed",
                detail: format!("{reason} (order {order}, fixed points {fixed} = 0)"),
            },
            ExtendabilityVerdict::OpenCase(r) => VerdictView { verdict: "open", detail: r.clone() },
        }
    }
}

/// Case split on the number of fixed points in `Gamma` and the order.
pub fn decide_extendability(c: &CurveAut) -> Result<ExtendabilityVerdict> {
    if c.fixed_in_gamma() <= 1 {
        return Ok(ExtendabilityVerdict::Extendable(Box::new(construct_thm23_1(c)?)));
    }
    match c.order() {
        Order::Finite(2) => Ok(ExtendabilityVerdict::Extendable(Box::new(construct_prop26(c)?))),
        Order::Finite(n) if n % 2 == 1 => Ok(ExtendabilityVerdict::Obstructed {
            reason: format!(
                "g has odd order {n} and fixes two points of the curve; no closed embedding into the plane lets g extend"
            ),
            fixed: c.fixed_form().to_string(),
            order: n,
        }),
        Order::Finite(n) => Ok(ExtendabilityVerdict::OpenCase(format!(
            "g has even order {n} > 2 and fixes two points of the curve; only odd orders and order 2 are decided"
        ))),
        Order::Infinite => Ok(ExtendabilityVerdict::OpenCase(
            "g has infinite order and fixes two points of the curve".into(),
        )),
    }
}

fn x() -> Poly3 {
    Poly3::var(0)
}

fn y() -> Poly3 {
    Poly3::var(1)
}

fn k(c: &CycNum) -> Poly3 {
    Poly3::constant(c.clone())
}

/// Clauses shared by both constructions: `ext o emb = emb o g` in `t` and
/// in the original coordinate.
fn equivariance_clauses(cert: &mut Certificate, e: &PlaneExtension, g: &Moebius) {
    let emb3 = [e.embedding[0].clone(), e.embedding[1].clone(), URatFun::zero()];
    let lhs: Vec<URatFun> = e.extension.iter().map(|p| p.eval_ratfun(&emb3)).collect();
    let gt = moebius_ratfun(&e.g_t).expect("invertible");
    for i in 0..2 {
        let rhs = e.embedding[i].compose(&gt);
        let ok = rhs.as_ref().is_ok_and(|r| *r == lhs[i]);
        cert.push(
            format!("coordinate {}: extension(emb(t)) = emb(g(t))", i + 1),
            ok,
            (!ok).then(|| format!("{} vs {:?}", lhs[i], rhs)),
        );
    }
    // original coordinate: emb(coord(x)) and g(x)
    let c = moebius_ratfun(&e.coord).expect("invertible");
    let gx = moebius_ratfun(g).expect("invertible");
    let back = e.coord.compose(g).compose(&e.coord.inverse());
    cert.check_eq("coord o g o coord^-1 = g_t", &back, &e.g_t);
    let base: std::result::Result<Vec<URatFun>, _> = e.embedding.iter().map(|f| f.compose(&c)).collect();
    match base {
        Ok(b) => {
            let b3 = [b[0].clone(), b[1].clone(), URatFun::zero()];
            for i in 0..2 {
                let lhs = e.extension[i].eval_ratfun(&b3);
                let rhs = b[i].compose(&gx);
                let ok = rhs.as_ref().is_ok_and(|r| *r == lhs);
                cert.push(format!("coordinate {} in x: extension = emb o g", i + 1), ok, None);
            }
        }
        Err(err) => cert.push("embedding in x is defined", false, Some(err.to_string())),
    }
}

fn line_to_infinity(q: &P1Point) -> Moebius {
    if q.is_infinity() {
        return Moebius::identity();
    }
    // t = 1/(x - q)
    Moebius::new(mat2(0.into(), 1.into(), 1.into(), -q.a())).expect("invertible")
}

/// Move a fixed point of `g` in `Lambda` to infinity; then `g(t) = a t + b`,
/// `P(a t + b) = mu P(t)` and `(X, Y) -> (a X + b, Y / mu)` extends `g` on
/// `t -> (t, 1/P(t))`.
pub fn construct_thm23_1(c: &CurveAut) -> Result<PlaneExtension> {
    let fixed = c.fixed_in_lambda();
    let q = fixed
        .iter()
        .find(|q| q.is_infinity())
        .or_else(|| fixed.first())
        .ok_or(Error::NoFixedPointInLambda)?;
    let coord = line_to_infinity(q);
    let g_t = coord.compose(c.g()).compose(&coord.inverse());
    let [[ga, gb], [gc, gd]] = g_t.matrix().clone();
    debug_assert!(gc.is_zero());
    let di = gd.inv()?;
    let (a, b) = (&ga * &di, &gb * &di);
    let roots: Vec<CycNum> = c
        .lambda()
        .iter()
        .map(|p| coord.apply(p))
        .filter(|p| !p.is_infinity())
        .map(|p| p.a().clone())
        .collect();
    let p = UPoly::from_roots(&roots);
    let moved = p.compose(&UPoly::new(vec![b.clone(), a.clone()]));
    let mu = &moved.leading().cloned().unwrap_or_else(CycNum::one) * &p.leading().expect("nonzero").inv()?;
    let inv_p = URatFun::new(UPoly::one(), p.clone())?;
    let mut e = PlaneExtension {
        coord,
        g_t: g_t.clone(),
        embedding: [URatFun::x(), inv_p],
        extension: [&(&k(&a) * &x()) + &k(&b), &k(&mu.inv()?) * &y()],
        curve: Some(&(&y() * &Poly3::from_upoly(&p, 0)) - &Poly3::one()),
        certificate: Certificate::new("plane extension, fixed point removed"),
    };
    let mut cert = Certificate::new("plane extension, fixed point removed");
    cert.check_eq("P(a t + b) = mu P(t)", &moved, &p.scale(&mu));
    equivariance_clauses(&mut cert, &e, c.g());
    e.certificate = cert;
    Ok(e)
}

/// Order two with both fixed points on `Gamma`: conjugate to `t -> 1/t`,
/// embed `y^2 - 1 = x^2` and untwist the remaining punctures
/// `y = a_i` by `x -> x / prod (y - a_i)`.
pub fn construct_prop26(c: &CurveAut) -> Result<PlaneExtension> {
    if c.order() != Order::Finite(2) {
        return Err(Error::DegenerateParams(format!("order {} is not 2", c.order())));
    }
    if let Some(q) = c.fixed_in_lambda().first() {
        return Err(Error::FixedPointInLambda(q.to_string()));
    }
    let p = c.lambda().last().expect("nonempty").clone();
    let gp = c.g().apply(&p);
    // [x:y] -> [L_p : L_gp] sends p to 0 and g(p) to infinity
    let (lp, lg) = (p.linear_form(), gp.linear_form());
    let m = Moebius::new(mat2(lp.coeff(1), lp.coeff(0), lg.coeff(1), lg.coeff(0)))?;
    let conj = m.compose(c.g()).compose(&m.inverse());
    let [[_, beta], [gamma, _]] = conj.matrix().clone();
    let lam = beta.checked_div(&gamma)?;
    let s = try_sqrt(&lam).ok_or_else(|| Error::SqrtNotFound { element: conj.to_string(), det: lam.to_string() })?;
    let scale = Moebius::new(mat2(1.into(), 0.into(), 0.into(), s))?;
    let coord = scale.compose(&m);
    let g_t = coord.compose(c.g()).compose(&coord.inverse());

    let half = CycNum::rational(1, 2);
    let mut a_vals: Vec<CycNum> = Vec::new();
    for q in c.lambda().iter().filter(|q| **q != p && **q != gp) {
        let u = coord.apply(q);
        let u = u.a();
        let ai = &(u + &u.inv()?) * &half;
        if ai == CycNum::one() || ai == -&CycNum::one() {
            return Err(Error::FixedPointInLambda(q.to_string()));
        }
        if !a_vals.contains(&ai) {
            a_vals.push(ai);
        }
    }
    a_vals.sort_by(|a, b| a.cmp_canonical(b));

    let t = URatFun::x();
    let tinv = t.inv()?;
    let xt = (&t - &tinv).scale(&half);
    let yt = (&t + &tinv).scale(&half);
    let prod_t = a_vals.iter().fold(URatFun::one(), |acc, ai| &acc * &(&yt - &URatFun::constant(ai.clone())));
    let prod_y = a_vals.iter().fold(Poly3::one(), |acc, ai| &acc * &(&y() - &k(ai)));
    let curve = &(&(&y() * &y()) - &Poly3::one()) - &(&(&x() * &x()) * &(&prod_y * &prod_y));
    let mut e = PlaneExtension {
        coord,
        g_t,
        embedding: [xt.checked_div(&prod_t)?, yt.clone()],
        extension: [-&x(), y()],
        curve: Some(curve.clone()),
        certificate: Certificate::new("plane extension, order two"),
    };
    let mut cert = Certificate::new("plane extension, order two");
    cert.check_eq("g in t is t -> 1/t", &e.g_t, &Moebius::from_ints(0, 1, 1, 0)?);
    let emb3 = [e.embedding[0].clone(), e.embedding[1].clone(), URatFun::zero()];
    let on = curve.eval_ratfun(&emb3);
    cert.check("image lies on y^2 - 1 = x^2 prod(y - a_i)^2", (!on.is_zero()).then(|| on.to_string()));
    let flipped: Vec<_> = e.embedding.iter().map(|f| f.compose(&tinv)).collect();
    let ok = matches!(&flipped[..], [Ok(a), Ok(b)] if *a == -&e.embedding[0] && *b == e.embedding[1]);
    cert.push("t -> 1/t negates x and fixes y", ok, None);
    for ai in &a_vals {
        cert.push(format!("a = {ai} is not +-1"), *ai != CycNum::one() && *ai != -&CycNum::one(), None);
    }
    // y(t) = y(t') iff t' in {t, 1/t}; x vanishes on C* only at t = +-1
    let (tx, ty) = (Poly3::var(0), Poly3::var(1));
    let cross = &(&(&(&tx * &tx) + &Poly3::one()) * &ty) - &(&(&(&ty * &ty) + &Poly3::one()) * &tx);
    let factored = &(&tx - &ty) * &(&(&tx * &ty) - &Poly3::one());
    cert.check_eq("2 t t' (y(t) - y(t')) = (t - t')(t t' - 1)", &cross, &factored);
    let xnum = e.embedding[0].num().clone();
    let mut rest = xnum.div_exact(&UPoly::from_ints(&[-1, 0, 1]));
    while let Some(r) = rest.clone() {
        match r.div_exact(&UPoly::x()) {
            Some(q) if r.degree() > Some(0) => rest = Some(q),
            _ => break,
        }
    }
    let ok = rest.as_ref().is_some_and(|r| r.is_constant());
    cert.push("x(t) = 0 on t != 0 only at t = +-1", ok, (!ok).then(|| xnum.to_string()));
    equivariance_clauses(&mut cert, &e, c.g());
    e.certificate = cert;
    Ok(e)
}
