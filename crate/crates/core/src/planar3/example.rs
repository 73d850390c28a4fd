use super::Aut3;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::{Poly3, Triple, URatFun, UPoly};
use crate::projline::Moebius;

/// `phi` as a rational function of the affine coordinate.
pub fn moebius_ratfun(phi: &Moebius) -> Result<URatFun> {
    let [[a, b], [c, d]] = phi.matrix();
    URatFun::new(UPoly::new(vec![b.clone(), a.clone()]), UPoly::new(vec![d.clone(), c.clone()]))
}

/// Exact check of `F(tau(phi(x))) = tau(x)`.
pub fn verify_extension(f: &Triple, tau: &[URatFun; 3], phi: &Moebius) -> Certificate {
    let mut cert = Certificate::new("extension");
    let phi_r = match moebius_ratfun(phi) {
        Ok(r) => r,
        Err(e) => {
            cert.push("phi is a rational map", false, Some(e.to_string()));
            return cert;
        }
    };
    let moved: std::result::Result<Vec<URatFun>, _> = tau.iter().map(|c| c.compose(&phi_r)).collect();
    let moved = match moved {
        Ok(m) => [m[0].clone(), m[1].clone(), m[2].clone()],
        Err(e) => {
            cert.push("tau o phi is defined", false, Some(e.to_string()));
            return cert;
        }
    };
    for (k, name) in ["X", "Y", "Z"].iter().enumerate() {
        let diff = &f[k].eval_ratfun(&moved) - &tau[k];
        cert.check(
            format!("{name}: F(tau(phi(x))) = tau(x)"),
            (!diff.is_zero()).then(|| format!("residual numerator {}", diff.num())),
        );
    }
    cert
}

/// The five maps extending `x -> 1/(1-x)` on `A^1 \ {0, 1}`, for
/// parameters with `ab != 0`.
#[derive(Clone, Debug)]
pub struct ExtensionExample {
    pub maps: Vec<Aut3>,
    pub tau: [URatFun; 3],
    pub rho: Moebius,
}

impl ExtensionExample {
    /// `f5 o f4 o f3 o f2 o f1`.
    pub fn composite(&self) -> Aut3 {
        self.maps.iter().fold(Aut3::identity(), |acc, f| f.compose(&acc))
    }
}

pub fn extension_example(a: &CycNum, b: &CycNum) -> Result<ExtensionExample> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateParams("need ab != 0".into()));
    }
    let v = Poly3::var;
    let k = |c: &CycNum| Poly3::constant(c.clone());
    let n = |i: i64| Poly3::constant(CycNum::from_int(i));
    let (x, y, z) = (v(0), v(1), v(2));

    let f1 = Aut3::new([z.clone(), y.clone(), x.clone()], [z.clone(), y.clone(), x.clone()])?;

    // X + Y + 2 - Y Z^2
    let s2 = &(&y + &n(2)) - &(&y * &z.pow(2));
    let f2 = Aut3::new([&x + &s2, y.clone(), z.clone()], [&x - &s2, y.clone(), z.clone()])?;

    let f3 = Aut3::new(
        [x.clone(), &(&k(a) * &y) + &(&k(b) * &z), z.clone()],
        [x.clone(), &(&y - &(&k(b) * &z)) * &k(&a.inv()?), z.clone()],
    )?;

    // (1/ab) [(b + (a-b) X)(Y - aX + 2a) - (a-b)^2] (1 + X)
    let amb = a - b;
    let two_a = a * &CycNum::from_int(2);
    let l1 = &k(b) + &(&k(&amb) * &x);
    let l2 = &(&y - &(&k(a) * &x)) + &k(&two_a);
    let br = &(&l1 * &l2) - &k(&(&amb * &amb));
    let s4 = &(&br * &(&n(1) + &x)) * &k(&(a * b).inv()?);
    let f4 = Aut3::new([x.clone(), y.clone(), &z - &s4], [x.clone(), y.clone(), &z + &s4])?;

    // Y - C(X, Z) with C(X, Z) = aX - 2a - aZ - (b - a) X Z
    let bma = b - a;
    let c_of = |w: &Poly3| &(&(&(&k(a) * &x) - &k(&two_a)) - &(&k(a) * w)) - &(&k(&bma) * &(&x * w));
    let f5 = Aut3::new([x.clone(), z.clone(), &y - &c_of(&z)], [x.clone(), &z + &c_of(&y), y.clone()])?;

    let tau = [
        URatFun::x(),
        URatFun::new(UPoly::one(), UPoly::from_ints(&[0, -1, 1]))?,
        URatFun::zero(),
    ];
    let rho = Moebius::from_ints(0, 1, -1, 1)?;
    Ok(ExtensionExample { maps: vec![f1, f2, f3, f4, f5], tau, rho })
}
