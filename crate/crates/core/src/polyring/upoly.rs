use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactfield::CycNum;

/// Dense univariate polynomial over cyclotomic numbers, ascending degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    c: Vec<CycNum>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn x() -> Self {
        UPoly::new(vec![CycNum::zero(), CycNum::one()])
    }

    pub fn constant(c: CycNum) -> Self {
        UPoly::new(vec![c])
    }

    pub fn new(mut c: Vec<CycNum>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    /// `sum coeffs[i] x^i` from small integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&n| CycNum::from_int(n)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a CycNum>) -> Self {
        roots.into_iter().fold(UPoly::one(), |acc, r| {
            &acc * &UPoly::new(vec![-r, CycNum::one()])
        })
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> CycNum {
        self.c.get(i).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.c.last()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, s: &CycNum) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.c.iter().rev().fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &CycNum::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        self.c
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| &(&acc * inner) + &UPoly::constant(c.clone()))
    }

    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let inv = d.c[dd].inv()?;
        let mut q = vec![CycNum::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &rem[i + dd] * &inv;
            if top.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&top * dj);
            }
            q[i] = top;
        }
        rem.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(rem)))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn xgcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (UPoly::one(), UPoly::zero());
        let (mut v0, mut v1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let u2 = &u0 - &(&q * &u1);
            let v2 = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u2;
            v0 = v1;
            v1 = v2;
        }
        match r0.leading().cloned() {
            Some(l) => {
                let s = l.inv().expect("nonzero");
                (r0.scale(&s), u0.scale(&s), v0.scale(&s))
            }
            None => (r0, u0, v0),
        }
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.is_constant() {
            return if self.is_zero() { UPoly::zero() } else { UPoly::one() };
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Writes the polynomial with variable name `var`.
    pub fn to_string_var(&self, var: &str) -> String {
        let terms: Vec<(CycNum, Vec<(&str, u32)>)> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), vec![(var, i as u32)]))
            .collect();
        super::format_terms(&terms)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![CycNum::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xgcd_coprime_linear() {
        let a = UPoly::x();
        let b = UPoly::from_ints(&[-1, 1]);
        let (g, u, v) = a.xgcd(&b);
        // 1*x + (-1)*(x-1) = 1
        assert_eq!(g, UPoly::one());
        assert_eq!(u, UPoly::from_ints(&[1]));
        assert_eq!(v, UPoly::from_ints(&[-1]));
    }

    #[test]
    fn xgcd_common_factors() {
        let x = UPoly::x();
        let (g, u, v) = x.pow(2).xgcd(&x);
        assert_eq!(g, x);
        assert_eq!(&(&u * &x.pow(2)) + &(&v * &x), g);
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[-1, 1]);
        let (g, _, _) = a.xgcd(&b);
        assert_eq!(g, b);
    }

    #[test]
    fn xgcd_constant_first_argument() {
        // (1, x): 1*1 + 0*x = 1
        let (g, u, v) = UPoly::one().xgcd(&UPoly::x());
        assert_eq!((g, u, v), (UPoly::one(), UPoly::one(), UPoly::zero()));
    }

    #[test]
    fn division_and_squarefree() {
        let p = UPoly::from_ints(&[-1, 0, 1]);
        let sq = p.pow(3);
        assert_eq!(sq.squarefree_part(), p);
        let (q, r) = sq.divrem(&p).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p.pow(2));
        assert!(UPoly::x().divrem(&UPoly::zero()).is_err());
    }

    #[test]
    fn compose_and_eval() {
        let p = UPoly::from_ints(&[1, 2, 1]);
        let q = UPoly::from_ints(&[-1, 1]);
        assert_eq!(p.compose(&q), UPoly::from_ints(&[0, 0, 1]));
        assert_eq!(p.eval(&CycNum::from_int(3)), CycNum::from_int(16));
    }
}
