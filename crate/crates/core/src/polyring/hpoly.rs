use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use super::UPoly;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;

/// Homogeneous polynomial in `x, y` of a fixed degree `d`.
///
/// Stored sparsely as `x`-exponent `i` -> coefficient of `x^i y^(d-i)`. The
/// zero polynomial keeps its degree so sums of forms stay well defined.
#[derive(Clone, PartialEq, Eq)]
pub struct HPoly2 {
    deg: u32,
    c: BTreeMap<u32, CycNum>,
}

impl HPoly2 {
    pub fn zero(deg: u32) -> Self {
        HPoly2 { deg, c: BTreeMap::new() }
    }

    pub fn constant(c: CycNum) -> Self {
        Self::from_terms(0, [(0, c)])
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn x() -> Self {
        Self::monomial(CycNum::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(CycNum::one(), 0, 1)
    }

    /// `c x^i y^j`.
    pub fn monomial(c: CycNum, i: u32, j: u32) -> Self {
        Self::from_terms(i + j, [(i, c)])
    }

    /// Builds a form of degree `deg` from `(x-exponent, coefficient)` pairs.
    /// Repeated exponents are summed.
    ///
    /// # Panics
    /// If an exponent exceeds `deg`.
    pub fn from_terms(deg: u32, terms: impl IntoIterator<Item = (u32, CycNum)>) -> Self {
        let mut c: BTreeMap<u32, CycNum> = BTreeMap::new();
        for (i, v) in terms {
            assert!(i <= deg, "x-exponent {i} exceeds degree {deg}");
            *c.entry(i).or_insert_with(CycNum::zero) += &v;
        }
        c.retain(|_, v| !v.is_zero());
        HPoly2 { deg, c }
    }

    /// Integer-coefficient shorthand: `(i, j, c)` means `c x^i y^j`.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        let deg = terms.first().map_or(0, |t| t.0 + t.1);
        assert!(terms.iter().all(|t| t.0 + t.1 == deg), "inhomogeneous terms");
        Self::from_terms(deg, terms.iter().map(|&(i, _, c)| (i, CycNum::from_int(c))))
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Nonzero terms, ascending in the `x`-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &CycNum)> {
        self.c.iter().map(|(i, v)| (*i, v))
    }

    pub fn coeff(&self, i: u32) -> CycNum {
        self.c.get(&i).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn checked_add(&self, other: &HPoly2) -> Result<HPoly2> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &HPoly2) -> Result<HPoly2> {
        self.combine(other, true)
    }

    fn combine(&self, other: &HPoly2, sub: bool) -> Result<HPoly2> {
        let deg = if self.is_zero() {
            other.deg
        } else if other.is_zero() || self.deg == other.deg {
            self.deg
        } else {
            return Err(Error::DegreeMismatch(self.deg, other.deg));
        };
        let mut c = self.c.clone();
        for (i, v) in &other.c {
            let e = c.entry(*i).or_insert_with(CycNum::zero);
            if sub {
                *e -= v;
            } else {
                *e += v;
            }
        }
        c.retain(|_, v| !v.is_zero());
        Ok(HPoly2 { deg, c })
    }

    pub fn scale(&self, s: &CycNum) -> HPoly2 {
        if s.is_zero() {
            return HPoly2::zero(self.deg);
        }
        HPoly2 { deg: self.deg, c: self.c.iter().map(|(i, v)| (*i, v * s)).collect() }
    }

    pub fn pow(&self, e: u32) -> HPoly2 {
        let mut acc = HPoly2::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &CycNum, y: &CycNum) -> CycNum {
        let mut acc = CycNum::zero();
        for (i, v) in &self.c {
            acc += &(&(v * &x.pow(*i as i64)) * &y.pow((self.deg - i) as i64));
        }
        acc
    }

    /// `f(m00 x + m01 y, m10 x + m11 y)`.
    pub fn compose_matrix(&self, m: &[[CycNum; 2]; 2]) -> HPoly2 {
        let lx = HPoly2::from_terms(1, [(1, m[0][0].clone()), (0, m[0][1].clone())]);
        let ly = HPoly2::from_terms(1, [(1, m[1][0].clone()), (0, m[1][1].clone())]);
        // powers are shared between terms
        let px: Vec<HPoly2> = pow_table(&lx, self.deg);
        let py: Vec<HPoly2> = pow_table(&ly, self.deg);
        let mut out = HPoly2::zero(self.deg);
        for (i, v) in &self.c {
            let t = (&px[*i as usize] * &py[(self.deg - i) as usize]).scale(v);
            out = out.checked_add(&t).expect("same degree");
        }
        out
    }

    /// Partial derivative in `x`.
    pub fn dx(&self) -> HPoly2 {
        let deg = self.deg.saturating_sub(1);
        HPoly2::from_terms(
            deg,
            self.c
                .iter()
                .filter(|(i, _)| **i > 0)
                .map(|(i, v)| (i - 1, v * &CycNum::from_int(*i as i64))),
        )
    }

    /// Partial derivative in `y`.
    pub fn dy(&self) -> HPoly2 {
        let deg = self.deg.saturating_sub(1);
        HPoly2::from_terms(
            deg,
            self.c
                .iter()
                .filter(|(i, _)| **i < self.deg)
                .map(|(i, v)| (*i, v * &CycNum::from_int((self.deg - i) as i64))),
        )
    }

    /// `f(x, 1)`.
    pub fn dehomogenize(&self) -> UPoly {
        let mut c = vec![CycNum::zero(); self.c.keys().next_back().map_or(0, |k| *k as usize + 1)];
        for (i, v) in &self.c {
            c[*i as usize] = v.clone();
        }
        UPoly::new(c)
    }

    /// `y^deg u(x/y)`.
    pub fn homogenize(u: &UPoly, deg: u32) -> Result<HPoly2> {
        let ud = u.degree().unwrap_or(0) as u32;
        if ud > deg {
            return Err(Error::DegreeMismatch(ud, deg));
        }
        Ok(HPoly2::from_terms(
            deg,
            u.coeffs().iter().enumerate().map(|(i, v)| (i as u32, v.clone())),
        ))
    }

    /// Multiplicity of the root `[1:0]`, i.e. the power of `y` dividing `f`.
    pub fn y_valuation(&self) -> u32 {
        self.c.keys().next_back().map_or(self.deg, |top| self.deg - top)
    }

    /// Power of `x` dividing `f` (multiplicity of `[0:1]`).
    pub fn x_valuation(&self) -> u32 {
        self.c.keys().next().copied().unwrap_or(self.deg)
    }

    /// Greatest common divisor, normalised (top `x`-coefficient 1).
    pub fn gcd(&self, other: &HPoly2) -> HPoly2 {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let v = self.y_valuation().min(other.y_valuation());
        let gd = g.degree().unwrap_or(0) as u32;
        HPoly2::homogenize(&g, gd + v).expect("degree fits")
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &HPoly2) -> Option<HPoly2> {
        if d.is_zero() || d.deg > self.deg {
            return None;
        }
        if self.is_zero() {
            return Some(HPoly2::zero(self.deg - d.deg));
        }
        if d.y_valuation() > self.y_valuation() {
            return None;
        }
        let q = self.dehomogenize().div_exact(&d.dehomogenize())?;
        HPoly2::homogenize(&q, self.deg - d.deg).ok()
    }

    pub fn divides(&self, other: &HPoly2) -> bool {
        other.div_exact(self).is_some()
    }

    /// Splits `f = sqf * cofactor` where `sqf` has the same roots on P^1,
    /// each simple, normalised to top `x`-coefficient 1.
    pub fn squarefree(&self) -> Result<(HPoly2, HPoly2)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let u = self.dehomogenize().squarefree_part();
        let ud = u.degree().unwrap_or(0) as u32;
        let mut sqf = HPoly2::homogenize(&u, ud).expect("degree fits");
        if self.y_valuation() > 0 {
            sqf = &sqf * &HPoly2::y();
        }
        let cof = self.div_exact(&sqf).expect("squarefree part divides");
        Ok((sqf, cof))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.squarefree() {
            Ok((s, _)) => s.deg == self.deg,
            Err(_) => false,
        }
    }

    /// Coefficient of the highest `x`-power present.
    pub fn top_coeff(&self) -> Option<&CycNum> {
        self.c.values().next_back()
    }

    /// Scales so the highest nonzero `x`-coefficient is 1.
    pub fn normalized(&self) -> HPoly2 {
        match self.top_coeff() {
            Some(t) if !t.is_one() => self.scale(&t.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// `lambda` with `self = lambda * other`, if the two are proportional.
    pub fn scalar_ratio(&self, other: &HPoly2) -> Option<CycNum> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(CycNum::zero());
        }
        if self.deg != other.deg || self.c.len() != other.c.len() {
            return None;
        }
        let (i, o) = other.c.iter().next()?;
        let lam = &self.coeff(*i) * &o.inv().ok()?;
        (other.scale(&lam) == *self).then_some(lam)
    }

    /// Distinct coefficient conductors, for diagnostics.
    pub fn conductor(&self) -> u64 {
        crate::exactfield::common_conductor(self.c.values())
    }
}

fn pow_table(l: &HPoly2, n: u32) -> Vec<HPoly2> {
    let mut v = Vec::with_capacity(n as usize + 1);
    v.push(HPoly2::one());
    for k in 1..=n as usize {
        let next = &v[k - 1] * l;
        v.push(next);
    }
    v
}

impl<'a> Mul<&'a HPoly2> for &'a HPoly2 {
    type Output = HPoly2;
    fn mul(self, rhs: &HPoly2) -> HPoly2 {
        let deg = self.deg + rhs.deg;
        let mut c: BTreeMap<u32, CycNum> = BTreeMap::new();
        for (i, a) in &self.c {
            for (j, b) in &rhs.c {
                *c.entry(i + j).or_insert_with(CycNum::zero) += &(a * b);
            }
        }
        c.retain(|_, v| !v.is_zero());
        HPoly2 { deg, c }
    }
}

impl Neg for &HPoly2 {
    type Output = HPoly2;
    fn neg(self) -> HPoly2 {
        HPoly2 { deg: self.deg, c: self.c.iter().map(|(i, v)| (*i, -v)).collect() }
    }
}

impl fmt::Display for HPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .c
            .iter()
            .rev()
            .map(|(i, v)| (v.clone(), vec![("x", *i), ("y", self.deg - i)]))
            .collect();
        f.write_str(&super::format_terms(&terms))
    }
}

impl fmt::Debug for HPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [deg {}]", self, self.deg)
    }
}
