use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::HPoly2;
use crate::projline::{mat2_adj, FinSubgroupG, SL2Elem};

/// A homogeneous endomorphism `(x, y) -> (f1, f2)` of the plane.
#[derive(Clone, PartialEq, Eq)]
pub struct EndoPair {
    pub f1: HPoly2,
    pub f2: HPoly2,
}

impl EndoPair {
    /// Components must share a degree unless one of them is zero.
    pub fn new(f1: HPoly2, f2: HPoly2) -> Result<Self> {
        if !f1.is_zero() && !f2.is_zero() && f1.degree() != f2.degree() {
            return Err(Error::DegreeMismatch(f1.degree(), f2.degree()));
        }
        let d = if f1.is_zero() { f2.degree() } else { f1.degree() };
        let f1 = if f1.is_zero() { HPoly2::zero(d) } else { f1 };
        let f2 = if f2.is_zero() { HPoly2::zero(d) } else { f2 };
        Ok(EndoPair { f1, f2 })
    }

    pub fn degree(&self) -> u32 {
        self.f1.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    pub fn scale(&self, s: &CycNum) -> EndoPair {
        EndoPair { f1: self.f1.scale(s), f2: self.f2.scale(s) }
    }

    pub fn checked_add(&self, o: &EndoPair) -> Result<EndoPair> {
        EndoPair::new(self.f1.checked_add(&o.f1)?, self.f2.checked_add(&o.f2)?)
    }

    /// The contraction `f1 y - f2 x`.
    pub fn rho(&self) -> HPoly2 {
        rho_contract(self)
    }

    /// `g . F = g o F o g^{-1}`.
    pub fn act(&self, g: &SL2Elem) -> EndoPair {
        let m = g.matrix();
        let inv = mat2_adj(m);
        let h1 = self.f1.compose_matrix(&inv);
        let h2 = self.f2.compose_matrix(&inv);
        let lin = |a: &CycNum, b: &CycNum| {
            h1.scale(a).checked_add(&h2.scale(b)).expect("same degree")
        };
        EndoPair { f1: lin(&m[0][0], &m[0][1]), f2: lin(&m[1][0], &m[1][1]) }
    }
}

impl fmt::Display for EndoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

impl fmt::Debug for EndoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn rho_contract(f: &EndoPair) -> HPoly2 {
    (&f.f1 * &HPoly2::y()).checked_sub(&(&f.f2 * &HPoly2::x())).expect("same degree")
}

/// One preimage of `p` under the contraction: monomials containing `y` go
/// to `f1` (divided by `y`), pure powers of `x` to `-f2` (divided by `x`).
pub fn split_endomorphism(p: &HPoly2) -> Result<EndoPair> {
    let d = p.degree();
    if d == 0 {
        return if p.is_zero() { Ok(EndoPair::new(HPoly2::zero(0), HPoly2::zero(0))?) } else { Err(Error::ConstantTerm) };
    }
    let f1 = HPoly2::from_terms(d - 1, p.terms().filter(|(i, _)| *i < d).map(|(i, c)| (i, c.clone())));
    let f2 = HPoly2::from_terms(d - 1, p.terms().filter(|(i, _)| *i == d).map(|(i, c)| (i - 1, -c)));
    EndoPair::new(f1, f2)
}

/// First element of `g` (if any) moving `f`, with the moved value.
pub fn first_mover(f: &EndoPair, g: &FinSubgroupG) -> Option<(SL2Elem, EndoPair)> {
    g.elements().iter().find_map(|h| {
        let m = f.act(h);
        (m != *f).then(|| (h.clone(), m))
    })
}

/// `1/|G| sum_g g.F`, for `F` whose contraction is `G`-invariant.
pub fn reynolds_average(f: &EndoPair, g: &FinSubgroupG) -> Result<EndoPair> {
    let p = f.rho();
    for h in g.generators() {
        if h.act_on_poly(&p) != p {
            return Err(Error::PNotInvariant(h.to_string()));
        }
    }
    let mut acc = EndoPair::new(HPoly2::zero(f.degree()), HPoly2::zero(f.degree()))?;
    for h in g.elements() {
        acc = acc.checked_add(&f.act(h))?;
    }
    Ok(acc.scale(&CycNum::rational(1, g.order() as i64)))
}
