use crate::certificate::Certificate;
use crate::exactfield::{rat, CycNum};
use crate::polyring::{Poly3, Triple, URatFun};

/// The two removed sets with infinite automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    /// `P^1` minus one point.
    AffLine,
    /// `P^1` minus two points.
    PuncturedLine,
}

/// One member of a parametric family: the curve automorphism and its
/// extension to `A^3`.
#[derive(Clone, Debug)]
pub struct SpecialAction {
    pub name: String,
    pub curve: URatFun,
    pub ambient: Triple,
}

#[derive(Clone, Debug)]
pub struct SpecialEmbedding {
    pub kind: SpecialKind,
    pub tau: [URatFun; 3],
    /// Generators of the ideal of the image.
    pub ideal: Vec<Poly3>,
    pub samples: Vec<SpecialAction>,
}

fn c(n: i64, d: i64) -> CycNum {
    CycNum::from(rat(n, d))
}

fn var(i: usize) -> Poly3 {
    Poly3::var(i)
}

fn k(v: &CycNum) -> Poly3 {
    Poly3::constant(v.clone())
}

fn t() -> URatFun {
    URatFun::x()
}

/// `tau(t) = (t, 0, 0)` with `(ax + b(y+1), y, z)`, or `tau(t) = (t, 1/t, 0)`
/// with `Phi_l = (l x, y/l, z)` over `t -> l t` and `Psi_l = (y/l, l x, z)`
/// over `t -> 1/(l t)`, sampled at five
/// parameter values and certified.
pub fn special_case_embedding(kind: SpecialKind) -> (SpecialEmbedding, Certificate) {
    let e = match kind {
        SpecialKind::AffLine => {
            let samples = [(2, 1, 3, 1), (-1, 1, 1, 2), (3, 1, -2, 1), (1, 3, 5, 1), (-4, 1, -7, 1)]
                .iter()
                .map(|&(an, ad, bn, bd)| {
                    let (a, b) = (c(an, ad), c(bn, bd));
                    let x = &(&k(&a) * &var(0)) + &(&k(&b) * &(&var(1) + &Poly3::one()));
                    SpecialAction {
                        name: format!("a = {a}, b = {b}"),
                        curve: &t().scale(&a) + &URatFun::constant(b),
                        ambient: [x, var(1), var(2)],
                    }
                })
                .collect();
            SpecialEmbedding {
                kind,
                tau: [t(), URatFun::zero(), URatFun::zero()],
                ideal: vec![var(1), var(2)],
                samples,
            }
        }
        SpecialKind::PuncturedLine => {
            let mut samples = Vec::new();
            for (n, d) in [(2, 1), (-1, 1), (1, 3), (5, 1), (-7, 2)] {
                let l = c(n, d);
                let li = l.inv().expect("nonzero");
                samples.push(SpecialAction {
                    name: format!("Phi_{l}"),
                    curve: t().scale(&l),
                    ambient: [&k(&l) * &var(0), &k(&li) * &var(1), var(2)],
                });
                samples.push(SpecialAction {
                    name: format!("Psi_{l}"),
                    curve: t().inv().expect("nonzero").scale(&li),
                    ambient: [&k(&li) * &var(1), &k(&l) * &var(0), var(2)],
                });
            }
            SpecialEmbedding {
                kind,
                tau: [t(), t().inv().expect("nonzero"), URatFun::zero()],
                ideal: vec![var(2), &(&var(0) * &var(1)) - &Poly3::one()],
                samples,
            }
        }
    };
    let cert = verify_special(&e);
    (e, cert)
}

/// `A o tau = tau o phi` for each sample, and every ideal generator vanishes
/// on `A(tau(t))`.
pub fn verify_special(e: &SpecialEmbedding) -> Certificate {
    let mut cert = Certificate::new(format!("{:?}", e.kind));
    for g in &e.ideal {
        let r = g.eval_ratfun(&e.tau);
        cert.check(format!("{g} vanishes on the image"), (!r.is_zero()).then(|| r.to_string()));
    }
    for s in &e.samples {
        let lhs: Vec<URatFun> = s.ambient.iter().map(|a| a.eval_ratfun(&e.tau)).collect();
        let rhs: Vec<Result<URatFun, _>> = e.tau.iter().map(|c| c.compose(&s.curve)).collect();
        let ok = lhs.iter().zip(&rhs).all(|(l, r)| r.as_ref().is_ok_and(|r| r == l));
        cert.push(
            format!("{}: A o tau = tau o ({})", s.name, s.curve),
            ok,
            (!ok).then(|| format!("{lhs:?} vs {rhs:?}")),
        );
        let moved: [URatFun; 3] = std::array::from_fn(|i| lhs[i].clone());
        for g in &e.ideal {
            let r = g.eval_ratfun(&moved);
            cert.check(format!("{}: {g} preserved", s.name), (!r.is_zero()).then(|| r.to_string()));
        }
    }
    cert
}
