use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{compose_triple, identity_triple, parse_poly3, Poly3, Triple, URatFun};

/// A polynomial automorphism of `A^3` with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aut3 {
    forward: Triple,
    inverse: Triple,
}

impl Aut3 {
    /// Checks both composites are the identity.
    pub fn new(forward: Triple, inverse: Triple) -> Result<Self> {
        let id = identity_triple();
        if compose_triple(&forward, &inverse) != id || compose_triple(&inverse, &forward) != id {
            return Err(Error::NotAnAutomorphism(fmt_triple(&forward)));
        }
        Ok(Aut3 { forward, inverse })
    }

    pub fn identity() -> Self {
        Aut3 { forward: identity_triple(), inverse: identity_triple() }
    }

    pub fn forward(&self) -> &Triple {
        &self.forward
    }

    pub fn inverse(&self) -> &Triple {
        &self.inverse
    }

    pub fn inverted(&self) -> Aut3 {
        Aut3 { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }

    /// `self o other`.
    pub fn compose(&self, other: &Aut3) -> Aut3 {
        Aut3 {
            forward: compose_triple(&self.forward, &other.forward),
            inverse: compose_triple(&other.inverse, &self.inverse),
        }
    }

    /// Image of a parametrised curve.
    pub fn apply(&self, tau: &[URatFun; 3]) -> [URatFun; 3] {
        apply_triple(&self.forward, tau)
    }
}

/// `f o tau` for a polynomial map `f` and a rational curve `tau`.
pub fn apply_triple(f: &Triple, tau: &[URatFun; 3]) -> [URatFun; 3] {
    std::array::from_fn(|k| f[k].eval_ratfun(tau))
}

/// `(X, Y, Z)`-style text.
pub fn fmt_triple(t: &Triple) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

/// Parses `(p1, p2, p3)` in the variables `X, Y, Z`.
pub fn parse_triple(s: &str) -> Result<Triple> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (p1, p2, p3), got `{s}`")))?;
    let parts = crate::projline::split_top(inner, ',');
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three components, got {}", parts.len())));
    }
    let v: Vec<Poly3> = parts.iter().map(|p| parse_poly3(p)).collect::<Result<_>>()?;
    Ok([v[0].clone(), v[1].clone(), v[2].clone()])
}

impl fmt::Display for Aut3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_triple(&self.forward))
    }
}
