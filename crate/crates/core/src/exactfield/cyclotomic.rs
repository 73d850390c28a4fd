use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};

static PHI_CAP: AtomicUsize = AtomicUsize::new(256);

/// Sets the largest admissible field degree `phi(m)`.
pub fn set_conductor_cap(phi_cap: usize) {
    PHI_CAP.store(phi_cap.max(1), Ordering::Relaxed);
}

pub fn conductor_cap() -> usize {
    PHI_CAP.load(Ordering::Relaxed)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Q(zeta_{2k}) = Q(zeta_k) for odd k; conductors are kept off 2 mod 4.
pub fn canonical_conductor(m: u64) -> u64 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

pub fn check_conductor(m: u64) -> Result<()> {
    let phi = euler_phi(m) as usize;
    let cap = conductor_cap();
    if phi > cap {
        Err(Error::ConductorCap { conductor: m, phi, cap })
    } else {
        Ok(())
    }
}

/// Reduction data for Q(zeta_m): the powers zeta^k, k < max(m, 2 phi), written
/// in the power basis modulo the m-th cyclotomic polynomial.
struct FieldData {
    phi: usize,
    cyclo: Vec<BigInt>,
    powers: Vec<Vec<i64>>,
}

thread_local! {
    static FIELDS: RefCell<HashMap<u64, Rc<FieldData>>> = RefCell::new(HashMap::new());
    static CYCLO: RefCell<HashMap<u64, Rc<Vec<BigInt>>>> = RefCell::new(HashMap::new());
}

fn cyclotomic_poly(m: u64) -> Rc<Vec<BigInt>> {
    if let Some(p) = CYCLO.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    // x^m - 1 divided by every Phi_d with d | m, d < m
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let div = cyclotomic_poly(d);
            num = exact_int_div(&num, &div);
        }
    }
    let rc = Rc::new(num);
    CYCLO.with(|c| c.borrow_mut().insert(m, rc.clone()));
    rc
}

fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

fn field(m: u64) -> Rc<FieldData> {
    if let Some(f) = FIELDS.with(|f| f.borrow().get(&m).cloned()) {
        return f;
    }
    let cyclo = cyclotomic_poly(m).as_ref().clone();
    let phi = cyclo.len() - 1;
    let small: Vec<i64> = cyclo
        .iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient fits in i64"))
        .collect();
    let count = (m as usize).max(2 * phi);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..count {
        powers.push(cur.clone());
        // multiply by zeta
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * small[i];
            }
        }
    }
    let data = Rc::new(FieldData { phi, cyclo, powers });
    FIELDS.with(|f| f.borrow_mut().insert(m, data.clone()));
    data
}

/// An exact element of the cyclotomic field Q(zeta_m), stored in the power
/// basis `1, zeta, ..., zeta^(phi(m)-1)`.
///
/// The conductor is kept canonical: never 2 mod 4, and 1 whenever the value is
/// rational. Values from different fields are combined in the field of the lcm
/// of their conductors.
#[derive(Clone)]
pub struct CycNum {
    m: u64,
    c: Vec<Rat>,
}

impl CycNum {
    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum { m: 1, c: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::from_rat(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Builds `sum coeffs[i] zeta_m^i`; `coeffs` may have any length.
    pub fn from_power_sum(m: u64, coeffs: &[Rat]) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let mut acc = CycNum::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&try_root_of_unity(m, i as i64)? * c);
            }
        }
        Ok(acc)
    }

    fn from_parts(m: u64, mut c: Vec<Rat>) -> Self {
        if m != 1 && c[1..].iter().all(|x| x.is_zero()) {
            c.truncate(1);
            return CycNum { m: 1, c };
        }
        CycNum { m, c }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.m == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.m == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.m == 1
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.m == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Coefficients of the image of `self` in Q(zeta_big); `big` must be a
    /// multiple of the conductor.
    pub fn lift(&self, big: u64) -> CycNum {
        let big = canonical_conductor(big);
        if big == self.m {
            return self.clone();
        }
        assert!(big % self.m == 0, "lift target {big} not a multiple of {}", self.m);
        let f = field(big);
        let step = (big / self.m) as usize;
        let mut out = vec![Rat::zero(); f.phi];
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let row = &f.powers[i * step];
            for (j, &e) in row.iter().enumerate() {
                if e != 0 {
                    out[j] += ci * Rat::from_integer(BigInt::from(e));
                }
            }
        }
        CycNum { m: big, c: out }
    }

    /// The automorphism `zeta_m -> zeta_m^k` of Q(zeta_m), `m` the
    /// conductor; `k` must be coprime to `m`.
    pub fn galois(&self, k: u64) -> CycNum {
        let m = self.m;
        debug_assert!(k.gcd(&m) == 1, "{k} not a unit mod {m}");
        let mut acc = CycNum::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if !ci.is_zero() {
                acc += &root_of_unity(m, ((i as u64 * k) % m) as i64).scale(ci);
            }
        }
        acc
    }

    /// Coefficient sequence in the field of conductor `big`, used for ordering.
    pub fn key(&self, big: u64) -> Vec<Rat> {
        self.lift(big).c
    }

    fn unify(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.m == b.m {
            return (a.clone(), b.clone());
        }
        let m = canonical_conductor(a.m.lcm(&b.m));
        if let Err(e) = check_conductor(m) {
            panic!("{e}");
        }
        (a.lift(m), b.lift(m))
    }

    pub fn scale(&self, r: &Rat) -> CycNum {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum { m: self.m, c: self.c.iter().map(|x| x * r).collect() }
    }

    fn mul_same(&self, other: &CycNum) -> CycNum {
        let f = field(self.m);
        let phi = f.phi;
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rat> = prod[..phi].to_vec();
        for (k, ck) in prod.iter().enumerate().skip(phi) {
            if ck.is_zero() {
                continue;
            }
            for (j, &e) in f.powers[k].iter().enumerate() {
                if e != 0 {
                    out[j] += ck * Rat::from_integer(BigInt::from(e));
                }
            }
        }
        CycNum::from_parts(self.m, out)
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum::from_rat(r.recip()));
        }
        let f = field(self.m);
        let modulus: Vec<Rat> = f.cyclo.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let inv = qpoly_inverse_mod(&self.c, &modulus);
        let mut c = inv;
        c.resize(f.phi, Rat::zero());
        Ok(CycNum::from_parts(self.m, c))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> CycNum {
        if e < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-e);
        }
        let mut base = self.clone();
        let mut acc = CycNum::one();
        let mut e = e as u64;
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

    /// Multiplicative order if `self` is a root of unity (searched up to the
    /// number of roots of unity in its field).
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let w = if self.m % 2 == 0 { self.m } else { 2 * self.m };
        let mut acc = self.clone();
        for k in 1..=w {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Rewrites `self` over the smallest cyclotomic field containing it.
    pub fn minimize(&self) -> CycNum {
        let mut cur = self.clone();
        'outer: loop {
            if cur.m == 1 {
                return cur;
            }
            for p in prime_factors(cur.m) {
                let d = canonical_conductor(cur.m / p);
                if let Some(x) = cur.descend(d) {
                    cur = x;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Expresses `self` in Q(zeta_d) when it lies there (d | m).
    fn descend(&self, d: u64) -> Option<CycNum> {
        let fd = field(d);
        let cols: Vec<Vec<Rat>> = (0..fd.phi)
            .map(|i| try_root_of_unity(d, i as i64).expect("subfield").key(self.m))
            .collect();
        let sol = solve_rational(&cols, &self.c)?;
        Some(CycNum::from_parts(d, sol))
    }

    /// Total order used for canonical sorting; compares in the common field.
    pub fn cmp_canonical(&self, other: &CycNum) -> std::cmp::Ordering {
        let (a, b) = CycNum::unify(self, other);
        a.c.cmp(&b.c)
    }

    /// Sign normalisation: true when the first nonzero coefficient (of the
    /// minimal-conductor representation) is positive.
    pub fn leading_positive(&self) -> bool {
        let m = self.minimize();
        m.c.iter().find(|x| !x.is_zero()).map_or(true, |x| x.is_positive())
    }

    pub fn parse(s: &str) -> Result<CycNum> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("cyc(").and_then(|b| b.strip_suffix(')')) {
            let (m, rest) = body
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("missing `;` in `{s}`")))?;
            let m: u64 = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad conductor `{m}`")))?;
            let coeffs = rest
                .split(',')
                .map(parse_rat)
                .collect::<Result<Vec<_>>>()?;
            if m == 0 || coeffs.len() != euler_phi(m) as usize {
                return Err(Error::Parse(format!(
                    "cyc({m}; ..) needs phi({m}) = {} coefficients",
                    euler_phi(m.max(1))
                )));
            }
            return CycNum::from_power_sum(m, &coeffs);
        }
        Ok(CycNum::from_rat(parse_rat(s)?))
    }
}

/// zeta_m^k, the k-th power of the primitive m-th root e^(2 pi i / m).
pub fn root_of_unity(m: u64, k: i64) -> CycNum {
    try_root_of_unity(m, k).unwrap_or_else(|e| panic!("{e}"))
}

pub fn try_root_of_unity(m: u64, k: i64) -> Result<CycNum> {
    if m == 0 {
        return Err(Error::Parse("root of unity of order 0".into()));
    }
    let k = k.rem_euclid(m as i64) as u64;
    if k == 0 {
        return Ok(CycNum::one());
    }
    // reduce to lowest terms first so the conductor is the true order
    let g = k.gcd(&m);
    let (m, k) = (m / g, k / g);
    if m == 2 {
        return Ok(CycNum::from_int(-1));
    }
    if m % 4 == 2 {
        // zeta_{2h} = -zeta_h^{(h+1)/2} for odd h
        let h = m / 2;
        let base = try_root_of_unity(h, ((h + 1) / 2) as i64)?;
        return Ok(-base.pow(k as i64));
    }
    check_conductor(m)?;
    let f = field(m);
    let row = &f.powers[k as usize];
    let c = row.iter().map(|&e| Rat::from_integer(BigInt::from(e))).collect();
    Ok(CycNum::from_parts(m, c))
}

/// Inverse of `a` modulo the monic (irreducible) `modulus` over Q.
fn qpoly_inverse_mod(a: &[Rat], modulus: &[Rat]) -> Vec<Rat> {
    // extended Euclid tracking only the coefficient of `a`
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<Rat> = vec![];
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !(r1.len() == 1) {
        let (q, r) = qpoly_divrem(&r0, &r1);
        let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        debug_assert!(!r1.is_empty(), "inverse of a non-unit");
    }
    let c = r1[0].recip();
    let (_, rem) = qpoly_divrem(&s1.iter().map(|x| x * &c).collect::<Vec<_>>(), modulus);
    rem
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn qpoly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead = b.last().unwrap().recip();
    let mut q = vec![Rat::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        q[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(q), rem)
}

/// Solves `sum_j x_j cols[j] = rhs` over Q when solvable.
fn solve_rational(cols: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut mat: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][col].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][col].is_zero() {
                let f = mat[i][col].clone();
                for j in col..=n {
                    let t = &f * &mat[r][j];
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if mat[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![Rat::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][n].clone();
    }
    Some(sol)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.c == other.c;
        }
        if self.m == 1 || other.m == 1 {
            let (r, x) = if self.m == 1 { (self, other) } else { (other, self) };
            return x.c[0] == r.c[0] && x.c[1..].iter().all(|v| v.is_zero());
        }
        let (a, b) = CycNum::unify(self, other);
        a.c == b.c
    }
}

impl Eq for CycNum {}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimize();
        if m.m == 1 {
            return write!(f, "{}", fmt_rat(&m.c[0]));
        }
        let parts: Vec<String> = m.c.iter().map(fmt_rat).collect();
        write!(f, "cyc({}; {})", m.m, parts.join(", "))
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<Rat> for CycNum {
    fn from(r: Rat) -> Self {
        CycNum::from_rat(r)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.m == 1 && rhs.m == 1 {
            return CycNum::from_rat(&self.c[0] + &rhs.c[0]);
        }
        if self.m == rhs.m || self.m == 1 || rhs.m == 1 {
            let (big, small) = if self.m >= rhs.m { (self, rhs) } else { (rhs, self) };
            let mut c = big.c.clone();
            if small.m == 1 {
                c[0] += &small.c[0];
            } else {
                for (x, y) in c.iter_mut().zip(&small.c) {
                    *x += y;
                }
            }
            return CycNum::from_parts(big.m, c);
        }
        let (a, b) = CycNum::unify(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if rhs.m == 1 {
            return self.scale(&rhs.c[0]);
        }
        if self.m == 1 {
            return rhs.scale(&self.c[0]);
        }
        if self.m == rhs.m {
            return self.mul_same(rhs);
        }
        let (a, b) = CycNum::unify(self, rhs);
        a.mul_same(&b)
    }
}

impl<'a> Mul<&'a Rat> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &Rat) -> CycNum {
        self.scale(rhs)
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: &CycNum) -> CycNum { (&self).$f(rhs) }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::rat;

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = root_of_unity(4, 1);
        assert_eq!(&i * &i, CycNum::from_int(-1));
        assert!((&i * &i).is_rational());
    }

    #[test]
    fn cube_roots_sum() {
        let w = root_of_unity(3, 1);
        assert_eq!(&w + &w.pow(2), CycNum::from_int(-1));
    }

    #[test]
    fn rational_division() {
        let a = CycNum::rational(1, 2);
        let b = CycNum::rational(1, 3);
        assert_eq!(a.checked_div(&b).unwrap(), CycNum::rational(3, 2));
        assert_eq!(a.checked_div(&CycNum::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(root_of_unity(1, 0), CycNum::one());
        assert_eq!(root_of_unity(6, 2), root_of_unity(3, 1));
        assert_eq!(root_of_unity(12, 3), root_of_unity(4, 1));
        // zeta_6 = -zeta_3^2
        assert_eq!(root_of_unity(6, 1), -root_of_unity(3, 2));
        assert_eq!(root_of_unity(8, 1).pow(2), root_of_unity(4, 1));
        assert_eq!(root_of_unity(5, -1), root_of_unity(5, 4));
    }

    #[test]
    fn cyclotomic_polys() {
        let p: Vec<i64> = cyclotomic_poly(12).iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(p, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(15).len() - 1, 8);
    }

    #[test]
    fn inverses_across_fields() {
        let a = &root_of_unity(5, 1) + &CycNum::rational(2, 3);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, CycNum::one());
        let b = &root_of_unity(12, 1) - &root_of_unity(4, 1);
        assert_eq!(&(&b * &a) / &a, b);
    }

    #[test]
    fn minimize_descends() {
        let x = root_of_unity(4, 1).lift(24);
        assert_eq!(x.conductor(), 24);
        let m = x.minimize();
        assert_eq!(m.conductor(), 4);
        assert_eq!(m, root_of_unity(4, 1));
        // sqrt(2) = zeta8 + zeta8^-1 lives in conductor 8
        let s2 = &root_of_unity(8, 1) + &root_of_unity(8, -1);
        assert_eq!(s2.minimize().conductor(), 8);
        assert_eq!(&s2 * &s2, CycNum::from_int(2));
    }

    #[test]
    fn parse_display_roundtrip() {
        let x = CycNum::parse("cyc(4; 1/2, -3)").unwrap();
        assert_eq!(x.to_string(), "cyc(4; 1/2, -3)");
        assert_eq!(CycNum::parse("7/3").unwrap(), CycNum::rational(7, 3));
        assert!(CycNum::parse("cyc(4; 1)").is_err());
        assert_eq!(CycNum::parse("cyc(6; 0, 1)").unwrap(), root_of_unity(6, 1));
        assert_eq!(CycNum::from_rat(rat(-2, 4)).to_string(), "-1/2");
    }

    #[test]
    fn conductor_cap_is_enforced() {
        assert!(matches!(try_root_of_unity(1031, 1), Err(Error::ConductorCap { .. })));
    }
}
