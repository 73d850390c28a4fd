use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{common_conductor, CycNum};

/// A point `[a:b]` of P^1, stored canonically: `b = 1`, or `[1:0]`.
#[derive(Clone, PartialEq, Eq)]
pub struct P1Point {
    a: CycNum,
    b: CycNum,
}

impl P1Point {
    pub fn new(a: CycNum, b: CycNum) -> Result<Self> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::DegeneratePoints("[0:0] is not a point of P^1".into()));
            }
            return Ok(Self::infinity());
        }
        let a = &a * &b.inv()?;
        Ok(P1Point { a, b: CycNum::one() })
    }

    /// `[c:1]`.
    pub fn affine(c: CycNum) -> Self {
        P1Point { a: c, b: CycNum::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::affine(CycNum::from_int(n))
    }

    /// `[1:0]`.
    pub fn infinity() -> Self {
        P1Point { a: CycNum::one(), b: CycNum::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    pub fn a(&self) -> &CycNum {
        &self.a
    }

    pub fn b(&self) -> &CycNum {
        &self.b
    }

    /// The affine coordinate `a/b`, or `None` at infinity.
    pub fn coord(&self) -> Option<&CycNum> {
        (!self.is_infinity()).then_some(&self.a)
    }

    /// `b x - a y`, the linear form vanishing exactly at this point.
    pub fn linear_form(&self) -> crate::polyring::HPoly2 {
        crate::polyring::HPoly2::from_terms(1, [(1, self.b.clone()), (0, -&self.a)])
    }

    /// Parses `[expr : expr]`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("point `{s}` must look like [a:b]")))?;
        let parts = super::split_top(body, ':');
        let [a, b] = parts.as_slice() else {
            return Err(Error::Parse(format!("point `{s}` must have two coordinates")));
        };
        let a = crate::polyring::parse_constant(a)?;
        let b = crate::polyring::parse_constant(b)?;
        P1Point::new(a, b).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses a comma separated list `[a:b],[c:d],...`.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        super::split_top(s, ',')
            .iter()
            .filter(|t| !t.trim().is_empty())
            .map(|t| P1Point::parse(t))
            .collect()
    }
}

/// Sorts points canonically: lexicographic on the coefficient vectors of
/// `(a, b)`, all read in one common cyclotomic field.
pub fn sort_points(pts: &mut [P1Point]) {
    let m = common_conductor(pts.iter().flat_map(|p| [&p.a, &p.b]));
    pts.sort_by_cached_key(|p| (p.a.key(m), p.b.key(m)));
}

/// Canonical comparison of two points (in their common field).
pub fn cmp_points(p: &P1Point, q: &P1Point) -> Ordering {
    p.a.cmp_canonical(&q.a).then_with(|| p.b.cmp_canonical(&q.b))
}

/// Checks that points are pairwise distinct.
pub fn check_distinct(pts: &[P1Point]) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if pts[..i].contains(p) {
            return Err(Error::DuplicatePoint(p.to_string()));
        }
    }
    Ok(())
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.a, self.b)
    }
}

impl fmt::Debug for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
