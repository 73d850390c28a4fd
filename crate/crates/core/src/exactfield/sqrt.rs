use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::cyclotomic::{canonical_conductor, check_conductor, euler_phi, root_of_unity, CycNum};
use super::rational::{rat_sqrt, square_free_decomposition, Rat};

/// Square root of a rational number, inside some cyclotomic field.
///
/// Squarefree kernels are handled by Gauss sums, so the conductor grows to
/// the discriminant of Q(sqrt(kernel)).
pub fn sqrt_rational(r: &Rat) -> Option<CycNum> {
    if let Some(s) = rat_sqrt(r) {
        return Some(CycNum::from_rat(s));
    }
    // sqrt(n/d) = sqrt(n d) / d
    let nd = r.numer() * r.denom();
    let (t, kernel) = square_free_decomposition(&nd)?;
    let mut acc = CycNum::from_rat(Rat::new(t, r.denom().clone()));
    if nd.is_negative() {
        acc = &acc * &root_of_unity(4, 1);
    }
    for p in kernel {
        acc = &acc * &sqrt_prime(p)?;
    }
    Some(acc)
}

fn sqrt_prime(p: u64) -> Option<CycNum> {
    if p == 2 {
        return Some(&root_of_unity(8, 1) - &root_of_unity(8, 3));
    }
    let m = p;
    check_conductor(m).ok()?;
    // quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p
    let mut g = CycNum::zero();
    for a in 1..p {
        let leg = legendre(a, p);
        let z = root_of_unity(m, a as i64);
        g = if leg == 1 { &g + &z } else { &g - &z };
    }
    if p % 4 == 1 {
        Some(g)
    } else {
        check_conductor(canonical_conductor(4 * p)).ok()?;
        Some(&g * &root_of_unity(4, 1))
    }
}

fn legendre(a: u64, p: u64) -> i32 {
    let e = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
    if e.is_one() {
        1
    } else {
        -1
    }
}

/// Searches for `s` with `s^2 = a`.
///
/// Elements of the form `r * u` with `r` rational and `u` a root of unity of
/// the field of `a` are always found; the answer may live in a larger
/// cyclotomic field (minimised afterwards). Failing that, roots inside
/// Q(zeta_M), `M` a small multiple of the conductor, are sought by descent
/// through quadratic subfields. `None` does not prove that `a` is a
/// non-square. Among `s, -s` the one whose
/// first nonzero coefficient is positive is returned.
pub fn try_sqrt(a: &CycNum) -> Option<CycNum> {
    if a.is_zero() {
        return Some(CycNum::zero());
    }
    monomial_sqrt(a).or_else(|| sqrt_by_descent(a))
}

/// Roots of the form `sqrt(r) * u`, `r` rational and `u` a root of unity.
fn monomial_sqrt(a: &CycNum) -> Option<CycNum> {
    let m = a.conductor();
    let w = if m % 2 == 0 { m } else { 2 * m };
    for k in 0..w {
        let u_inv = root_of_unity(w, -(k as i64));
        let b = a * &u_inv;
        let Some(r) = b.as_rational() else { continue };
        let root_r = sqrt_rational(r)?;
        let big = canonical_conductor(root_r.conductor().lcm(&(2 * w)));
        check_conductor(big).ok()?;
        let s = (&root_r * &root_of_unity(2 * w, k as i64)).minimize();
        debug_assert!(&s * &s == *a);
        return Some(if s.leading_positive() { s } else { -s });
    }
    None
}

/// Largest field in which [`sqrt_by_descent`] is attempted.
const DESCENT_PHI_CAP: u64 = 64;

/// Square roots lying in Q(zeta_M) for `M` a small multiple of the
/// conductor, found by descending a chain of quadratic subfields.
///
/// For `F = F'(theta)` with `tau theta = -theta`, a root `s = x + y theta`
/// of `a = a0 + a1 theta` satisfies `s tau(s) = +-sqrt(a tau(a))`,
/// `x^2 = (a0 + s tau(s)) / 2` and `y = a1 / (2x)`; the norm and `x^2` lie
/// in `F'`, one step down.
fn sqrt_by_descent(a: &CycNum) -> Option<CycNum> {
    let m = a.conductor();
    for mult in [1, 4, 8, 3] {
        let big = canonical_conductor(m.lcm(&mult));
        if euler_phi(big) > DESCENT_PHI_CAP || check_conductor(big).is_err() {
            continue;
        }
        let chain = quadratic_chain(big);
        if let Some(s) = descend(&a.lift(big), big, &chain, 0) {
            let s = s.minimize();
            debug_assert!(&s * &s == *a);
            return Some(if s.leading_positive() { s } else { -s });
        }
    }
    None
}

/// Subgroups `H_0 = {1} < H_1 < ...` of the units mod `m`, each of index 2
/// in the next, up to the odd part of the group.
fn quadratic_chain(m: u64) -> Vec<Vec<u64>> {
    let units: Vec<u64> = (1..m.max(2)).filter(|k| k.gcd(&m) == 1).collect();
    let mut chain = vec![vec![1 % m.max(2)]];
    loop {
        let h = chain.last().unwrap();
        let next = units.iter().find(|&&g| !h.contains(&g) && h.contains(&(g * g % m)));
        let Some(&g) = next else { break };
        let mut bigger = h.clone();
        bigger.extend(h.iter().map(|x| x * g % m));
        bigger.sort_unstable();
        chain.push(bigger);
    }
    chain
}

/// Square root of `a`, an element of the fixed field of `chain[level]`.
fn descend(a: &CycNum, m: u64, chain: &[Vec<u64>], level: usize) -> Option<CycNum> {
    if a.is_zero() {
        return Some(CycNum::zero());
    }
    if level + 1 == chain.len() {
        // odd-degree top: rational values, or the monomial search
        return match a.as_rational() {
            Some(r) => rat_sqrt(r).map(CycNum::from_rat),
            None => monomial_sqrt(a),
        };
    }
    let (h, up) = (&chain[level], &chain[level + 1]);
    let tau = *up.iter().find(|g| !h.contains(g))?;
    let act = |v: &CycNum| v.lift(m).galois(tau);
    // theta: a Gaussian period moved by tau
    let theta = (1..m as i64).find_map(|j| {
        let t = h.iter().fold(CycNum::zero(), |acc, &g| &acc + &root_of_unity(m, j * g as i64));
        let d = &t - &act(&t);
        (!d.is_zero()).then_some(d)
    })?;
    let ta = act(a);
    let two = CycNum::from_int(2);
    let a0 = (a + &ta).checked_div(&two).ok()?;
    let a1 = (a - &ta).checked_div(&(&two * &theta)).ok()?;
    let n = descend(&(a * &ta), m, chain, level + 1)?;
    for sign in [n.clone(), -&n] {
        let u = (&a0 + &sign).checked_div(&two).ok()?;
        let s = if u.is_zero() {
            let y = descend(&a.checked_div(&(&theta * &theta)).ok()?, m, chain, level + 1);
            y.map(|y| &y * &theta)
        } else {
            descend(&u, m, chain, level + 1)
                .and_then(|x| Some(&x + &(&a1.checked_div(&(&two * &x)).ok()? * &theta)))
        };
        if let Some(s) = s.filter(|s| &(s * s) == a) {
            return Some(s);
        }
    }
    None
}
