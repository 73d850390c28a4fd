use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::UPoly;
use crate::error::{Error, Result};
use crate::exactfield::CycNum;

/// Univariate rational function `num / den`, reduced, with monic `den`.
#[derive(Clone, PartialEq, Eq)]
pub struct URatFun {
    num: UPoly,
    den: UPoly,
}

impl URatFun {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading().expect("nonzero").inv()?;
        Ok(URatFun { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn zero() -> Self {
        URatFun { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::poly(UPoly::one())
    }

    pub fn x() -> Self {
        Self::poly(UPoly::x())
    }

    pub fn constant(c: CycNum) -> Self {
        Self::poly(UPoly::constant(c))
    }

    pub fn poly(p: UPoly) -> Self {
        URatFun { num: p, den: UPoly::one() }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<&UPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<URatFun> {
        URatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &URatFun) -> Result<URatFun> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, s: &CycNum) -> URatFun {
        URatFun::new(self.num.scale(s), self.den.clone()).expect("den nonzero")
    }

    /// Integer powers; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<URatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(URatFun { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Value at `x`; `DivisionByZero` at a pole.
    pub fn eval(&self, x: &CycNum) -> Result<CycNum> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(x) * &d.inv()?)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &URatFun) -> Result<URatFun> {
        // Horner in the rational-function field
        let horner = |p: &UPoly| -> URatFun {
            p.coeffs().iter().rev().fold(URatFun::zero(), |acc, c| {
                &(&acc * inner) + &URatFun::constant(c.clone())
            })
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }

    pub fn derivative(&self) -> URatFun {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        URatFun::new(n, self.den.pow(2)).expect("den nonzero")
    }
}

impl fmt::Display for URatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for URatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a URatFun> for &'a URatFun {
    type Output = URatFun;
    fn add(self, rhs: &URatFun) -> URatFun {
        if self.den == rhs.den {
            return URatFun::new(&self.num + &rhs.num, self.den.clone()).expect("den nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        URatFun::new(n, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl<'a> Sub<&'a URatFun> for &'a URatFun {
    type Output = URatFun;
    fn sub(self, rhs: &URatFun) -> URatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a URatFun> for &'a URatFun {
    type Output = URatFun;
    fn mul(self, rhs: &URatFun) -> URatFun {
        URatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl Neg for &URatFun {
    type Output = URatFun;
    fn neg(self) -> URatFun {
        URatFun { num: -&self.num, den: self.den.clone() }
    }
}
