use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, if it is a square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Writes `|n|` as `t^2 * s` with `s` squarefree, by trial division.
///
/// Returns `None` when a cofactor above the trial bound survives and is not a
/// perfect square: such kernels need conductors far beyond any useful cap.
pub fn square_free_decomposition(n: &BigInt) -> Option<(BigInt, Vec<u64>)> {
    const TRIAL_BOUND: u64 = 20_000;
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut kernel = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                kernel.push(p);
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        if let Some(s) = int_sqrt(&rest) {
            square *= s;
        } else if let Some(q) = rest.to_u64().filter(|&q| q <= TRIAL_BOUND * TRIAL_BOUND) {
            kernel.push(q);
        } else {
            return None;
        }
    }
    kernel.sort_unstable();
    Some((square, kernel))
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` (integers of any size).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{n}`")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{d}`")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn kernels() {
        let (t, k) = square_free_decomposition(&BigInt::from(72)).unwrap();
        assert_eq!(t, BigInt::from(6));
        assert_eq!(k, vec![2]);
        let (t, k) = square_free_decomposition(&BigInt::from(-45)).unwrap();
        assert_eq!(t, BigInt::from(3));
        assert_eq!(k, vec![5]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(fmt_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rat(&rat(8, 2)), "4");
        assert!(parse_rat("1/0").is_err());
    }
}
