use num_integer::Integer;

use super::{rho_contract, EndoPair};
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::HPoly2;
use crate::projline::{check_distinct, sort_points, FinSubgroupG, P1Point};

/// A finite subset of P^1, given by its squarefree form and, when they lie
/// in a cyclotomic field, its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locus {
    poly: HPoly2,
    points: Option<Vec<P1Point>>,
}

impl Locus {
    pub fn from_points(pts: &[P1Point]) -> Result<Self> {
        let mut pts = pts.to_vec();
        sort_points(&mut pts);
        Ok(Locus { poly: orbit_polynomial(&pts)?, points: Some(pts) })
    }

    /// The zero set of a squarefree nonzero form of positive degree.
    pub fn from_poly(p: &HPoly2) -> Result<Self> {
        let (sqf, _) = p.squarefree()?;
        if sqf.degree() != p.degree() {
            return Err(Error::NotSquarefree(p.to_string()));
        }
        if p.degree() == 0 {
            return Err(Error::DegenerateParams("empty locus".into()));
        }
        Ok(Locus { poly: sqf, points: None })
    }

    /// Normalised squarefree form vanishing exactly on the locus.
    pub fn poly(&self) -> &HPoly2 {
        &self.poly
    }

    pub fn points(&self) -> Option<&[P1Point]> {
        self.points.as_deref()
    }

    pub fn len(&self) -> usize {
        self.poly.degree() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Union of disjoint loci.
    pub fn union(parts: &[Locus]) -> Result<Locus> {
        let mut poly = HPoly2::one();
        for l in parts {
            if poly.gcd(&l.poly).degree() > 0 {
                return Err(Error::DuplicatePoint(format!("loci overlap at a root of {}", l.poly)));
            }
            poly = &poly * &l.poly;
        }
        let points = parts.iter().map(|l| l.points.clone()).collect::<Option<Vec<_>>>().map(|v| {
            let mut all: Vec<P1Point> = v.into_iter().flatten().collect();
            sort_points(&mut all);
            all
        });
        Ok(Locus { poly: poly.normalized(), points })
    }

    pub fn contains(&self, q: &P1Point) -> bool {
        self.poly.eval(q.a(), q.b()).is_zero()
    }
}

/// `prod (b_k x - a_k y)` over the points, normalised.
pub fn orbit_polynomial(orbit: &[P1Point]) -> Result<HPoly2> {
    check_distinct(orbit)?;
    let p = orbit.iter().fold(HPoly2::one(), |acc, q| &acc * &q.linear_form());
    Ok(p.normalized())
}

/// Character values `chi(g)` with `p o g = chi(g) p` on the generators of
/// `G`, and the least `d` making `p^d` invariant.
pub fn invariant_power(p: &HPoly2, g: &FinSubgroupG) -> Result<(u32, Vec<CycNum>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut d = 1u64;
    let mut chis = Vec::new();
    for h in g.generators() {
        let q = p.compose_matrix(h.matrix());
        let chi = q.scalar_ratio(p).ok_or_else(|| Error::NotSemiInvariant(h.to_string()))?;
        let ord = chi.root_of_unity_order().ok_or_else(|| Error::NotRootOfUnity(chi.to_string()))?;
        d = d.lcm(&ord);
        chis.push(chi);
    }
    let d = d as u32;
    let pd = p.pow(d);
    for h in g.generators() {
        if pd.compose_matrix(h.matrix()) != pd {
            return Err(Error::NotSemiInvariant(h.to_string()));
        }
    }
    Ok((d, chis))
}

/// Per-orbit data: the locus, an invariant `P` proportional to `p^d`, and a
/// `G`-fixed pair contracting to `P`.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub locus: Locus,
    pub d: u32,
    pub power: HPoly2,
    pub pair: EndoPair,
}

impl OrbitData {
    /// Assembles and checks: `pair` contracts to `power`, `power` is a
    /// multiple of `p^d`, and `pair` is fixed by all of `G`.
    pub fn from_pair(locus: Locus, d: u32, pair: EndoPair, g: &FinSubgroupG) -> Result<Self> {
        let power = rho_contract(&pair);
        if power.scalar_ratio(&locus.poly().pow(d)).is_none() {
            return Err(Error::DegreeAlignment(format!(
                "contraction {power} is not a multiple of ({})^{d}",
                locus.poly()
            )));
        }
        if let Some((h, _)) = super::first_mover(&pair, g) {
            return Err(Error::PNotInvariant(format!("pair moved by {h}")));
        }
        Ok(OrbitData { locus, d, power, pair })
    }

    pub fn p(&self) -> &HPoly2 {
        self.locus.poly()
    }
}

/// Generic construction for one orbit: orbit polynomial, invariant power,
/// deterministic split, Reynolds average.
pub fn orbit_data(orbit: &[P1Point], g: &FinSubgroupG) -> Result<OrbitData> {
    let locus = Locus::from_points(orbit)?;
    let (d, _) = invariant_power(locus.poly(), g)?;
    let power = locus.poly().pow(d);
    let split = super::split_endomorphism(&power)?;
    let pair = super::reynolds_average(&split, g)?;
    OrbitData::from_pair(locus, d, pair, g)
}
