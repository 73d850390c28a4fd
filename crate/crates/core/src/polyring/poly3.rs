use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{URatFun, UPoly};
use crate::exactfield::CycNum;

/// Sparse polynomial in `X, Y, Z`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly3 {
    c: BTreeMap<[u32; 3], CycNum>,
}

/// A polynomial map `A^3 -> A^3`.
pub type Triple = [Poly3; 3];

pub const VARS: [&str; 3] = ["X", "Y", "Z"];

impl Poly3 {
    pub fn zero() -> Self {
        Poly3::default()
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn constant(c: CycNum) -> Self {
        Self::from_terms([([0, 0, 0], c)])
    }

    /// Variable `X` (0), `Y` (1) or `Z` (2).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::from_terms([(e, CycNum::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; 3], CycNum)>) -> Self {
        let mut c: BTreeMap<[u32; 3], CycNum> = BTreeMap::new();
        for (e, v) in terms {
            *c.entry(e).or_insert_with(CycNum::zero) += &v;
        }
        c.retain(|_, v| !v.is_zero());
        Poly3 { c }
    }

    /// Embeds a univariate polynomial as a polynomial in variable `i`.
    pub fn from_upoly(u: &UPoly, i: usize) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(k, v)| {
            let mut e = [0; 3];
            e[i] = k as u32;
            (e, v.clone())
        }))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &CycNum)> {
        self.c.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.c.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.c.keys().map(|e| e[i]).max()
    }

    /// True when variable `i` does not occur.
    pub fn is_free_of(&self, i: usize) -> bool {
        self.c.keys().all(|e| e[i] == 0)
    }

    pub fn scale(&self, s: &CycNum) -> Poly3 {
        Self::from_terms(self.c.iter().map(|(e, v)| (*e, v * s)))
    }

    pub fn pow(&self, k: u32) -> Poly3 {
        (0..k).fold(Poly3::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, p: &[CycNum; 3]) -> CycNum {
        let mut acc = CycNum::zero();
        for (e, v) in &self.c {
            let mut t = v.clone();
            for k in 0..3 {
                if e[k] > 0 {
                    t = &t * &p[k].pow(e[k] as i64);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `(X, Y, Z) <- subs`.
    pub fn compose(&self, subs: &Triple) -> Poly3 {
        self.substitute(subs, Poly3::one(), |a, b| a * b, |a, b| a + b, |c| Poly3::constant(c))
    }

    /// Substitutes rational functions of one variable.
    pub fn eval_ratfun(&self, subs: &[URatFun; 3]) -> URatFun {
        self.substitute(subs, URatFun::one(), |a, b| a * b, |a, b| a + b, URatFun::constant)
    }

    fn substitute<T: Clone>(
        &self,
        subs: &[T; 3],
        one: T,
        mul: impl Fn(&T, &T) -> T,
        add: impl Fn(&T, &T) -> T,
        konst: impl Fn(CycNum) -> T,
    ) -> T {
        let mut powers: [Vec<T>; 3] = [vec![one.clone()], vec![one.clone()], vec![one]];
        for k in 0..3 {
            let top = self.degree_in(k).unwrap_or(0) as usize;
            for j in 1..=top {
                let nx = mul(&powers[k][j - 1], &subs[k]);
                powers[k].push(nx);
            }
        }
        let mut acc = konst(CycNum::zero());
        for (e, v) in &self.c {
            let mut t = konst(v.clone());
            for k in 0..3 {
                if e[k] > 0 {
                    t = mul(&t, &powers[k][e[k] as usize]);
                }
            }
            acc = add(&acc, &t);
        }
        acc
    }

    /// Renames variables: variable `k` becomes variable `perm[k]`.
    pub fn permute(&self, perm: [usize; 3]) -> Poly3 {
        Self::from_terms(self.c.iter().map(|(e, v)| {
            let mut n = [0; 3];
            for k in 0..3 {
                n[perm[k]] += e[k];
            }
            (n, v.clone())
        }))
    }
}

pub fn identity_triple() -> Triple {
    [Poly3::var(0), Poly3::var(1), Poly3::var(2)]
}

/// `f ∘ g`, i.e. `x -> f(g(x))`.
pub fn compose_triple(f: &Triple, g: &Triple) -> Triple {
    [f[0].compose(g), f[1].compose(g), f[2].compose(g)]
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // graded, descending
        let mut keys: Vec<&[u32; 3]> = self.c.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then(b.cmp(a))
        });
        let terms: Vec<_> = keys
            .into_iter()
            .map(|e| (self.c[e].clone(), (0..3).map(|k| (VARS[k], e[k])).collect()))
            .collect();
        f.write_str(&super::format_terms(&terms))
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        Poly3::from_terms(self.c.iter().chain(rhs.c.iter()).map(|(e, v)| (*e, v.clone())))
    }
}

impl<'a> Sub<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly3> for &'a Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut c: BTreeMap<[u32; 3], CycNum> = BTreeMap::new();
        for (a, u) in &self.c {
            for (b, v) in &rhs.c {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *c.entry(e).or_insert_with(CycNum::zero) += &(u * v);
            }
        }
        c.retain(|_, v| !v.is_zero());
        Poly3 { c }
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 { c: self.c.iter().map(|(e, v)| (*e, -v)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Poly3 {
        Poly3::var(i)
    }

    #[test]
    fn shear_and_inverse() {
        let f = [&v(0) + &v(1), v(1), v(2)];
        let g = [&v(0) - &v(1), v(1), v(2)];
        assert_eq!(compose_triple(&f, &g), identity_triple());
        assert_eq!(compose_triple(&identity_triple(), &g), g);
        let swap = [v(1), v(0), v(2)];
        assert_eq!(compose_triple(&swap, &swap), identity_triple());
    }

    #[test]
    fn evaluation_at_rational_functions() {
        // X*Y at (x, 1/x) is 1
        let p = &v(0) * &v(1);
        let x = URatFun::x();
        let subs = [x.clone(), x.inv().unwrap(), URatFun::zero()];
        assert_eq!(p.eval_ratfun(&subs), URatFun::one());
        assert_eq!(p.permute([2, 1, 0]), &v(2) * &v(1));
    }
}
