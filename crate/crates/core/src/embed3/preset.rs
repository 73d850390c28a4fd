use std::fmt;

use super::EmbeddingA3;
use crate::equivariant::{EndoPair, Locus, OrbitData};
use crate::error::{Error, Result};
use crate::exactfield::CycNum;
use crate::polyring::HPoly2;
use crate::projline::{sl2_pullback, FinSubgroupH, P1Point};

/// The groups with closed-form orbit data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetKind {
    Cyclic(u64),
    Dihedral(u64),
    Tetrahedral,
}

impl PresetKind {
    pub fn group(&self) -> Result<FinSubgroupH> {
        match *self {
            PresetKind::Cyclic(n) => FinSubgroupH::cyclic(n),
            PresetKind::Dihedral(n) => FinSubgroupH::dihedral(n),
            PresetKind::Tetrahedral => FinSubgroupH::tetrahedral(),
        }
    }
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetKind::Cyclic(n) => write!(f, "cyclic({n})"),
            PresetKind::Dihedral(n) => write!(f, "dihedral({n})"),
            PresetKind::Tetrahedral => f.write_str("tetrahedral"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub kind: PresetKind,
    pub lambda: Locus,
    pub h: FinSubgroupH,
    pub embedding: EmbeddingA3,
    pub orbits: Vec<OrbitData>,
}

fn mono(c: &CycNum, i: u32, j: u32) -> HPoly2 {
    HPoly2::monomial(c.clone(), i, j)
}

fn add(a: &HPoly2, b: &HPoly2) -> HPoly2 {
    a.checked_add(b).expect("same degree")
}

/// `6 (x^5 y - x y^5)^2`, vanishing on the six vertices.
pub fn tetra_a() -> HPoly2 {
    HPoly2::from_int_terms(&[(5, 1, 1), (1, 5, -1)]).pow(2).scale(&6.into())
}

/// `(x^4 + y^4)(x^8 + y^8 - 34 x^4 y^4)`.
pub fn tetra_b() -> HPoly2 {
    &HPoly2::from_int_terms(&[(4, 0, 1), (0, 4, 1)]) * &HPoly2::from_int_terms(&[(8, 0, 1), (4, 4, -34), (0, 8, 1)])
}

/// `(p, P = p^e, f1, f2)` for one orbit.
fn closed_form(kind: PresetKind, a: &CycNum, b: &CycNum) -> (HPoly2, u32, HPoly2, HPoly2) {
    match kind {
        PresetKind::Cyclic(n) => {
            let n = n as u32;
            let p = add(&mono(a, n, 0), &mono(b, 0, n));
            let f1 = &mono(b, 0, n - 1) * &p;
            let f2 = &mono(&-a, n - 1, 0) * &p;
            (p, 2, f1, f2)
        }
        PresetKind::Dihedral(n) => {
            let n = n as u32;
            let two_b = b * &CycNum::from_int(2);
            let p = add(&add(&mono(a, 2 * n, 0), &mono(a, 0, 2 * n)), &mono(&two_b, n, n));
            let f1 = &(&HPoly2::y().pow(n - 1) * &add(&mono(b, n, 0), &mono(a, 0, n))) * &p;
            let f2 = &(&HPoly2::x().pow(n - 1) * &add(&mono(a, n, 0), &mono(b, 0, n))) * &p;
            (p, 2, f1, -&f2)
        }
        PresetKind::Tetrahedral => {
            let p = add(&tetra_a().scale(a), &tetra_b().scale(b));
            let fa1 = HPoly2::from_int_terms(&[(10, 1, 1), (6, 5, -6), (2, 9, 5)]);
            let fb1 = HPoly2::from_int_terms(&[(8, 3, -11), (4, 7, -22), (0, 11, 1)]);
            let fa2 = HPoly2::from_int_terms(&[(9, 2, 5), (5, 6, -6), (1, 10, 1)]);
            let fb2 = HPoly2::from_int_terms(&[(11, 0, 1), (7, 4, -22), (3, 8, -11)]);
            let f1 = add(&fa1.scale(a), &fb1.scale(b));
            let f2 = -&add(&fa2.scale(a), &fb2.scale(b));
            (p, 1, f1, f2)
        }
    }
}

/// Closed-form orbit data and embedding, one orbit per `(a_i, b_i)`.
///
/// An orbit polynomial may have repeated roots (e.g. cyclic with `b = 0`,
/// tetrahedral with `b = 0`) as long as every root has the same
/// multiplicity; the removed set is its zero set.
pub fn preset_family(kind: PresetKind, params: &[(CycNum, CycNum)]) -> Result<Preset> {
    match kind {
        PresetKind::Cyclic(0) | PresetKind::Dihedral(0) => {
            return Err(Error::DegenerateParams("order must be positive".into()))
        }
        _ => {}
    }
    if params.is_empty() {
        return Err(Error::DegenerateParams("no orbits".into()));
    }
    let h = kind.group()?;
    let g = sl2_pullback(&h)?;
    let mut orbits = Vec::new();
    for (a, b) in params {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateParams("(a, b) = (0, 0)".into()));
        }
        let (p, e, f1, f2) = closed_form(kind, a, b);
        let (sqf, _) = p.squarefree()?;
        let mult = p.degree() / sqf.degree().max(1);
        if sqf.degree() == 0 || sqf.pow(mult).scalar_ratio(&p).is_none() {
            return Err(Error::NotSquarefree(format!("{p} has roots of unequal multiplicity")));
        }
        let locus = Locus::from_poly(&sqf)?;
        for o in &orbits {
            let o: &OrbitData = o;
            if o.p().gcd(locus.poly()).degree() > 0 {
                return Err(Error::DegenerateParams(format!("orbits {} and {} share a root", o.p(), locus.poly())));
            }
        }
        orbits.push(OrbitData::from_pair(locus, e * mult, EndoPair::new(f1, f2)?, &g)?);
    }
    let embedding = EmbeddingA3::from_orbits(&h, &orbits)?;
    Ok(Preset { kind, lambda: embedding.lambda.clone(), h, embedding, orbits })
}

/// Parameters `(a, b)` whose orbit polynomial vanishes at `c`.
pub fn preset_params_through(kind: PresetKind, c: &P1Point) -> (CycNum, CycNum) {
    let (u, v) = (c.a(), c.b());
    match kind {
        // a u^n + b v^n = 0
        PresetKind::Cyclic(n) => (v.pow(n as i64), -&u.pow(n as i64)),
        // a (u^2n + v^2n) + 2b u^n v^n = 0
        PresetKind::Dihedral(n) => {
            let (un, vn) = (u.pow(n as i64), v.pow(n as i64));
            (&(&un * &vn) * &CycNum::from_int(2), -&(&(&un * &un) + &(&vn * &vn)))
        }
        PresetKind::Tetrahedral => (tetra_b().eval(u, v), -&tetra_a().eval(u, v)),
    }
}
