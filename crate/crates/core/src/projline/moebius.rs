use std::fmt;
use std::ops::Mul;

use super::P1Point;
use crate::error::{Error, Result};
use crate::exactfield::{root_of_unity, try_sqrt, CycNum};
use crate::polyring::{parse_constant, HPoly2};

pub type Mat2 = [[CycNum; 2]; 2];

/// Orders beyond this are not examined by [`Moebius::finite_eigenvalues`].
const EIGEN_ORDER_CAP: usize = 120;

/// Eigenvalues `mu1 = rho mu2` of a finite-order map, with `sqrt_ratio^2 = rho`.
#[derive(Clone, Debug)]
pub struct Eigenvalues {
    pub mu1: CycNum,
    pub mu2: CycNum,
    pub sqrt_ratio: CycNum,
}

pub fn mat2(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Mat2 {
    [[a, b], [c, d]]
}

pub fn mat2_int(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    mat2(a.into(), b.into(), c.into(), d.into())
}

pub fn mat2_identity() -> Mat2 {
    mat2_int(1, 0, 0, 1)
}

pub fn mat2_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    crate::linalg::mat_mul(x, y)
}

pub fn mat2_det(m: &Mat2) -> CycNum {
    crate::linalg::det2(m)
}

/// Adjugate; equals the inverse times the determinant.
pub fn mat2_adj(m: &Mat2) -> Mat2 {
    mat2(m[1][1].clone(), -&m[0][1], -&m[1][0], m[0][0].clone())
}

pub fn mat2_scale(m: &Mat2, s: &CycNum) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &m[i][j] * s))
}

/// Projective class of an invertible 2x2 matrix, acting on columns `[x:y]`.
///
/// Stored with the first nonzero entry (row-major) equal to 1, so derived
/// equality is projective equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Moebius {
    m: Mat2,
}

impl Moebius {
    pub fn new(m: Mat2) -> Result<Self> {
        if mat2_det(&m).is_zero() {
            return Err(Error::DegeneratePoints("singular matrix".into()));
        }
        let lead = m.iter().flatten().find(|v| !v.is_zero()).expect("det != 0").clone();
        let m = if lead.is_one() { m } else { mat2_scale(&m, &lead.inv()?) };
        Ok(Moebius { m })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(mat2_int(a, b, c, d))
    }

    pub fn identity() -> Self {
        Moebius { m: mat2_identity() }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn det(&self) -> CycNum {
        mat2_det(&self.m)
    }

    pub fn is_identity(&self) -> bool {
        *self == Moebius::identity()
    }

    pub fn inverse(&self) -> Moebius {
        Moebius::new(mat2_adj(&self.m)).expect("invertible")
    }

    pub fn compose(&self, other: &Moebius) -> Moebius {
        Moebius::new(mat2_mul(&self.m, &other.m)).expect("invertible")
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        let m = &self.m;
        let a = &(&m[0][0] * p.a()) + &(&m[0][1] * p.b());
        let b = &(&m[1][0] * p.a()) + &(&m[1][1] * p.b());
        P1Point::new(a, b).expect("invertible map sends points to points")
    }

    /// Order in PGL(2), if at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// A representative of determinant 1, if the determinant's square root is
    /// found in a cyclotomic field.
    pub fn sl2_lift(&self) -> Result<SL2Elem> {
        let det = self.det();
        let s = self.det_sqrt().ok_or_else(|| Error::SqrtNotFound {
            element: self.to_string(),
            det: det.to_string(),
        })?;
        Ok(SL2Elem { m: mat2_scale(&self.m, &s.inv()?) })
    }

    /// Square root of the determinant: direct search first, then the
    /// eigenvalues of a finite-order map.
    pub fn det_sqrt(&self) -> Option<CycNum> {
        let det = self.det();
        if let Some(s) = try_sqrt(&det) {
            return Some(s);
        }
        self.finite_eigenvalues().map(|ev| &ev.mu2 * &ev.sqrt_ratio)
    }

    /// Eigenvalues of a map of finite order `n >= 3`, found without square
    /// roots: their ratio is a primitive `n`-th root of unity `rho` with
    /// `tr^2 rho = det (1 + rho)^2`, and then `mu2 = tr / (1 + rho)`.
    pub fn finite_eigenvalues(&self) -> Option<Eigenvalues> {
        use num_integer::Integer;
        let n = self.order(EIGEN_ORDER_CAP)?;
        if n < 3 {
            return None;
        }
        let [[a, _], [_, d]] = &self.m;
        let tr = a + d;
        let det = self.det();
        let lhs = &tr * &tr;
        for k in (1..n as i64).filter(|k| k.gcd(&(n as i64)) == 1) {
            let rho = root_of_unity(n as u64, k);
            let one_rho = &CycNum::one() + &rho;
            if &lhs * &rho == &det * &(&one_rho * &one_rho) {
                let mu2 = tr.checked_div(&one_rho).ok()?;
                return Some(Eigenvalues {
                    mu1: &rho * &mu2,
                    mu2,
                    sqrt_ratio: root_of_unity(2 * n as u64, k),
                });
            }
        }
        None
    }

    /// The unique map sending `p[k]` to `q[k]` for three distinct points each.
    pub fn through_three(p: &[P1Point; 3], q: &[P1Point; 3]) -> Result<Moebius> {
        let tp = to_standard_triple(p)?;
        let tq = to_standard_triple(q)?;
        Moebius::new(mat2_mul(&mat2_adj(&tq), &tp))
    }

    /// Parses `[[a,b],[c,d]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("matrix `{s}` must look like [[a,b],[c,d]]"));
        let body = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let rows = super::split_top(body, ',');
        let [r0, r1] = rows.as_slice() else { return Err(bad()) };
        let row = |r: &str| -> Result<[CycNum; 2]> {
            let inner = r.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
            let e = super::split_top(inner, ',');
            let [x, y] = e.as_slice() else { return Err(bad()) };
            Ok([parse_constant(x)?, parse_constant(y)?])
        };
        Moebius::new([row(r0)?, row(r1)?]).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Matrix sending `p0 -> [0:1]`, `p1 -> [1:0]`, `p2 -> [1:1]`.
fn to_standard_triple(p: &[P1Point; 3]) -> Result<Mat2> {
    // L_k(x, y) = b_k x - a_k y vanishes at p_k
    let l = |k: usize, at: &P1Point| &(p[k].b() * at.a()) - &(p[k].a() * at.b());
    let s0 = l(1, &p[2]);
    let s1 = l(0, &p[2]);
    if s0.is_zero() || s1.is_zero() || l(0, &p[1]).is_zero() {
        return Err(Error::DegeneratePoints(format!("{} {} {}", p[0], p[1], p[2])));
    }
    Ok(mat2(
        &s0 * p[0].b(),
        -&(&s0 * p[0].a()),
        &s1 * p[1].b(),
        -&(&s1 * p[1].a()),
    ))
}

impl Mul for &Moebius {
    type Output = Moebius;
    fn mul(self, rhs: &Moebius) -> Moebius {
        self.compose(rhs)
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_mat2(f, &self.m)
    }
}

impl fmt::Debug for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_mat2(f: &mut fmt::Formatter<'_>, m: &Mat2) -> fmt::Result {
    write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

/// A matrix of determinant exactly 1.
#[derive(Clone, PartialEq, Eq)]
pub struct SL2Elem {
    m: Mat2,
}

impl SL2Elem {
    /// Checks the determinant.
    pub fn new(m: Mat2) -> Result<Self> {
        if !mat2_det(&m).is_one() {
            return Err(Error::DegeneratePoints(format!("determinant {} != 1", mat2_det(&m))));
        }
        Ok(SL2Elem { m })
    }

    pub fn identity() -> Self {
        SL2Elem { m: mat2_identity() }
    }

    pub fn minus_identity() -> Self {
        SL2Elem { m: mat2_int(-1, 0, 0, -1) }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn neg(&self) -> SL2Elem {
        SL2Elem { m: mat2_scale(&self.m, &CycNum::from_int(-1)) }
    }

    pub fn inverse(&self) -> SL2Elem {
        SL2Elem { m: mat2_adj(&self.m) }
    }

    pub fn compose(&self, other: &SL2Elem) -> SL2Elem {
        SL2Elem { m: mat2_mul(&self.m, &other.m) }
    }

    pub fn to_moebius(&self) -> Moebius {
        Moebius::new(self.m.clone()).expect("det 1")
    }

    /// `g . P = P o g^{-1}`.
    pub fn act_on_poly(&self, p: &HPoly2) -> HPoly2 {
        p.compose_matrix(&mat2_adj(&self.m))
    }
}

impl fmt::Display for SL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_mat2(f, &self.m)
    }
}

impl fmt::Debug for SL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
