use std::fmt;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::linalg::mat_mul;
use crate::projline::{mat2_det, Mat2, Moebius, P1Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointA3 {
    pub x: CycNum,
    pub y: CycNum,
    pub z: CycNum,
}

impl PointA3 {
    pub fn new(x: CycNum, y: CycNum, z: CycNum) -> Self {
        PointA3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(x.into(), y.into(), z.into())
    }

    /// True on the quadric `yz = x^2 - 1`.
    pub fn on_quadric(&self) -> bool {
        &self.y * &self.z == &(&self.x * &self.x) - &CycNum::one()
    }
}

impl fmt::Display for PointA3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `([y0:y1], [z0:z1]) -> ((y0 z1 + y1 z0)/D, 2 y0 z0/D, 2 y1 z1/D)`,
/// `D = y0 z1 - y1 z0`.
pub fn iota(p: &P1Point, q: &P1Point) -> Result<PointA3> {
    let (y0, y1, z0, z1) = (p.a(), p.b(), q.a(), q.b());
    let d = &(y0 * z1) - &(y1 * z0);
    if d.is_zero() {
        return Err(Error::OnDiagonal);
    }
    let di = d.inv()?;
    let two = CycNum::from_int(2);
    Ok(PointA3 {
        x: &(&(y0 * z1) + &(y1 * z0)) * &di,
        y: &(&two * &(y0 * z0)) * &di,
        z: &(&two * &(y1 * z1)) * &di,
    })
}

/// Inverse of [`iota`] on the quadric.
pub fn iota_inverse(pt: &PointA3) -> Result<(P1Point, P1Point)> {
    if !pt.on_quadric() {
        return Err(Error::NotOnQuadric);
    }
    let one = CycNum::one();
    let (x, y, z) = (&pt.x, &pt.y, &pt.z);
    let mk = |a: CycNum, b: CycNum| P1Point::new(a, b).expect("on the quadric");
    if *x != -&one {
        let xp = x + &one;
        Ok((mk(xp.clone(), z.clone()), mk(y.clone(), xp)))
    } else {
        let xm = x - &one;
        Ok((mk(y.clone(), xm.clone()), mk(xm, z.clone())))
    }
}

/// The linear action on A^3 making `iota` equivariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep3 {
    pub m: [[CycNum; 3]; 3],
}

impl Rep3 {
    pub fn apply(&self, p: &PointA3) -> PointA3 {
        let v = [&p.x, &p.y, &p.z];
        let row = |i: usize| {
            (0..3).fold(CycNum::zero(), |acc, j| &acc + &(&self.m[i][j] * v[j]))
        };
        PointA3 { x: row(0), y: row(1), z: row(2) }
    }

    pub fn compose(&self, other: &Rep3) -> Rep3 {
        Rep3 { m: mat_mul(&self.m, &other.m) }
    }

    pub fn identity() -> Rep3 {
        Rep3 { m: std::array::from_fn(|i| std::array::from_fn(|j| CycNum::from_int((i == j) as i64))) }
    }
}

impl fmt::Display for Rep3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `1/(ad-bc) [[ad+bc, ac, bd], [2ab, a^2, b^2], [2cd, c^2, d^2]]`.
pub fn rep3(h: &Moebius) -> Rep3 {
    rep3_of(h.matrix())
}

pub fn rep3_of(m: &Mat2) -> Rep3 {
    let [[a, b], [c, d]] = m;
    let s = mat2_det(m).inv().expect("invertible");
    let two = CycNum::from_int(2);
    let raw = [
        [&(a * d) + &(b * c), a * c, b * d],
        [&two * &(a * b), a * a, b * b],
        [&two * &(c * d), c * c, d * d],
    ];
    Rep3 { m: raw.map(|r| r.map(|v| &v * &s)) }
}

/// Bilinear forms `sum n_ij y_i z_j` of the numerators of `iota` and of `D`.
fn iota_forms() -> ([Mat2; 3], Mat2) {
    let m = |a: i64, b: i64, c: i64, d: i64| [[a.into(), b.into()], [c.into(), d.into()]];
    ([m(0, 1, 1, 0), m(2, 0, 0, 0), m(0, 0, 0, 2)], m(0, 1, -1, 0))
}

fn transpose(m: &Mat2) -> Mat2 {
    [[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]]
}

/// Certifies `iota(h p, h q) = rep3(h) iota(p, q)` identically in the four
/// homogeneous coordinates. Substituting `y -> M y, z -> M z` turns a
/// bilinear form `B` into `M^T B M`, and `D` into `det(M) D`, so the claim
/// is `M^T N_k M = det(M) sum_j R_kj N_j` for each numerator `N_k`.
pub fn verify_iota_equivariance(h: &Moebius) -> Certificate {
    let mut cert = Certificate::new(format!("iota-equivariance {h}"));
    let m = h.matrix();
    let mt = transpose(m);
    let (nums, den) = iota_forms();
    let det = mat2_det(m);
    let r = rep3(h);
    let moved_den = mat_mul(&mat_mul(&mt, &den), m);
    let scaled_den: Mat2 = den.clone().map(|row| row.map(|v| &v * &det));
    cert.check_eq("denominator transforms by det(M)", &Forms(moved_den), &Forms(scaled_den));
    for (k, name) in ["x", "y", "z"].iter().enumerate() {
        let lhs = mat_mul(&mat_mul(&mt, &nums[k]), m);
        let mut rhs: Mat2 = std::array::from_fn(|_| std::array::from_fn(|_| CycNum::zero()));
        for j in 0..3 {
            let s = &r.m[k][j] * &det;
            for (u, v) in (0..2).flat_map(|u| (0..2).map(move |v| (u, v))) {
                rhs[u][v] += &(&nums[j][u][v] * &s);
            }
        }
        cert.check_eq(format!("{name}-coordinate"), &Forms(lhs), &Forms(rhs));
    }
    cert
}

#[derive(PartialEq)]
struct Forms(Mat2);

impl fmt::Display for Forms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "{}*y0*z0 + {}*y0*z1 + {}*y1*z0 + {}*y1*z1", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
