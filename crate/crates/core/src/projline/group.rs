use std::collections::VecDeque;
use std::fmt;

use super::{sort_points, Moebius, P1Point, SL2Elem};
use crate::error::{Error, Result};
use crate::exactfield::{root_of_unity, CycNum};

/// Default bound on the order of generated groups.
pub const DEFAULT_GROUP_CAP: usize = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match *self {
            GroupKind::Cyclic(n) => n,
            GroupKind::Dihedral(n) => 2 * n,
            GroupKind::Tetrahedral => 12,
            GroupKind::Octahedral => 24,
            GroupKind::Icosahedral => 60,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "Cyclic({n})"),
            GroupKind::Dihedral(n) => write!(f, "Dihedral({n})"),
            GroupKind::Tetrahedral => f.write_str("Tetrahedral"),
            GroupKind::Octahedral => f.write_str("Octahedral"),
            GroupKind::Icosahedral => f.write_str("Icosahedral"),
        }
    }
}

/// A finite subgroup of PGL(2).
#[derive(Clone, Debug)]
pub struct FinSubgroupH {
    elements: Vec<Moebius>,
    generators: Vec<Moebius>,
    kind: GroupKind,
}

impl FinSubgroupH {
    pub fn elements(&self) -> &[Moebius] {
        &self.elements
    }

    pub fn generators(&self) -> &[Moebius] {
        &self.generators
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Moebius) -> bool {
        self.elements.contains(g)
    }

    pub fn trivial() -> Self {
        FinSubgroupH {
            elements: vec![Moebius::identity()],
            generators: vec![],
            kind: GroupKind::Cyclic(1),
        }
    }

    /// `<[x:y] -> [zeta_n x : y]>`.
    pub fn cyclic(n: u64) -> Result<Self> {
        group_closure(&[cyclic_generator(n)?], DEFAULT_GROUP_CAP)
    }

    /// Cyclic generator plus `[x:y] -> [y:x]`.
    pub fn dihedral(n: u64) -> Result<Self> {
        let swap = Moebius::from_ints(0, 1, 1, 0)?;
        group_closure(&[cyclic_generator(n)?, swap], DEFAULT_GROUP_CAP)
    }

    /// Generated by `[x:y] -> [i(x+y) : x-y]` and `[x:y] -> [x:-y]`.
    pub fn tetrahedral() -> Result<Self> {
        let i = root_of_unity(4, 1);
        let g1 = Moebius::new([[i.clone(), i], [1.into(), (-1).into()]])?;
        let g2 = Moebius::from_ints(1, 0, 0, -1)?;
        group_closure(&[g1, g2], DEFAULT_GROUP_CAP)
    }

    /// True when every element maps `pts` into itself.
    pub fn preserves(&self, pts: &[P1Point]) -> bool {
        self.generators.iter().all(|g| pts.iter().all(|p| pts.contains(&g.apply(p))))
    }
}

fn cyclic_generator(n: u64) -> Result<Moebius> {
    if n == 0 {
        return Err(Error::DegenerateParams("cyclic order must be positive".into()));
    }
    Moebius::new([[crate::exactfield::try_root_of_unity(n, 1)?, 0.into()], [0.into(), 1.into()]])
}

/// Breadth-first closure of `gens` under composition.
pub fn group_closure(gens: &[Moebius], cap: usize) -> Result<FinSubgroupH> {
    let mut elements = vec![Moebius::identity()];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let h = elements[i].compose(g);
            if !elements.contains(&h) {
                if elements.len() >= cap {
                    return Err(Error::NotFiniteWithinCap(cap));
                }
                elements.push(h);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    let kind = classify(&elements)?;
    let generators = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    Ok(FinSubgroupH { elements, generators, kind })
}

/// Classifies a finite group of Moebius maps by its order and element orders.
fn classify(elements: &[Moebius]) -> Result<GroupKind> {
    let n = elements.len();
    let max_order = elements.iter().map(|g| g.order(n).expect("finite group")).max().unwrap_or(1);
    if max_order == n {
        return Ok(GroupKind::Cyclic(n));
    }
    if n >= 4 && n % 2 == 0 && max_order == n / 2 {
        return Ok(GroupKind::Dihedral(n / 2));
    }
    match (n, max_order) {
        (12, 3) => Ok(GroupKind::Tetrahedral),
        (24, 4) => Ok(GroupKind::Octahedral),
        (60, 5) => Ok(GroupKind::Icosahedral),
        _ => Err(Error::UnknownGroup(n)),
    }
}

/// The full group of Moebius maps preserving `lambda` setwise.
///
/// One base triple (the first three points in canonical order) is sent to
/// every ordered triple of distinct points of `lambda`; the resulting maps
/// that preserve `lambda` are exactly the stabiliser.
pub fn aut_of_lambda(lambda: &[P1Point], cap: usize) -> Result<FinSubgroupH> {
    if lambda.len() < 3 {
        return Err(Error::TooFewPoints(lambda.len()));
    }
    super::check_distinct(lambda)?;
    let mut pts = lambda.to_vec();
    sort_points(&mut pts);
    let base = [pts[0].clone(), pts[1].clone(), pts[2].clone()];
    let r = pts.len();
    let mut elements: Vec<Moebius> = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if i == j || j == k || i == k {
                    continue;
                }
                let target = [pts[i].clone(), pts[j].clone(), pts[k].clone()];
                let g = Moebius::through_three(&base, &target)?;
                if pts.iter().all(|p| pts.contains(&g.apply(p))) {
                    if elements.len() >= cap {
                        return Err(Error::NotFiniteWithinCap(cap));
                    }
                    elements.push(g);
                }
            }
        }
    }
    // greedy generating set, in enumeration order
    let mut generators: Vec<Moebius> = Vec::new();
    let mut span = FinSubgroupH::trivial();
    for g in &elements {
        if !span.contains(g) {
            generators.push(g.clone());
            span = group_closure(&generators, cap)?;
        }
    }
    debug_assert_eq!(span.order(), elements.len());
    Ok(FinSubgroupH { kind: span.kind, generators, elements: span.elements })
}

/// The preimage of `H` in SL(2): order `2|H|`.
#[derive(Clone, Debug)]
pub struct FinSubgroupG {
    elements: Vec<SL2Elem>,
    generators: Vec<SL2Elem>,
    /// `projection[k]` is the index in `H.elements()` of the image of `elements[k]`.
    projection: Vec<usize>,
}

impl FinSubgroupG {
    pub fn elements(&self) -> &[SL2Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[SL2Elem] {
        &self.generators
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Lifts every element of `h` to SL(2) with both signs. Elements whose
/// determinant has no square root within reach are lifted as products of
/// lifted elements.
pub fn sl2_pullback(h: &FinSubgroupH) -> Result<FinSubgroupG> {
    let els = h.elements();
    let mut lifts: Vec<Option<SL2Elem>> = els.iter().map(|m| m.sl2_lift().ok()).collect();
    loop {
        let missing: Vec<usize> = (0..els.len()).filter(|&k| lifts[k].is_none()).collect();
        if missing.is_empty() {
            break;
        }
        let mut progress = false;
        for k in missing {
            let found = (0..els.len()).find_map(|i| {
                let a = lifts[i].as_ref()?;
                let rest = els[i].inverse().compose(&els[k]);
                let j = els.iter().position(|e| *e == rest)?;
                Some(a.compose(lifts[j].as_ref()?))
            });
            if found.is_some() {
                lifts[k] = found;
                progress = true;
            }
        }
        if !progress {
            let k = lifts.iter().position(Option::is_none).expect("missing lift");
            return Err(Error::SqrtNotFound { element: els[k].to_string(), det: els[k].det().to_string() });
        }
    }
    let lifts: Vec<SL2Elem> = lifts.into_iter().map(|g| g.expect("lifted")).collect();
    let mut elements = Vec::with_capacity(2 * h.order());
    let mut projection = Vec::with_capacity(2 * h.order());
    for (k, g) in lifts.iter().enumerate() {
        elements.push(g.clone());
        elements.push(g.neg());
        projection.extend([k, k]);
    }
    let mut generators: Vec<SL2Elem> = h
        .generators()
        .iter()
        .map(|m| lifts[els.iter().position(|e| e == m).expect("generator is an element")].clone())
        .collect();
    generators.push(SL2Elem::minus_identity());
    Ok(FinSubgroupG { elements, generators, projection })
}

/// Splits `lambda` into `H`-orbits; each orbit and the list are sorted
/// canonically.
pub fn orbit_decompose(h: &FinSubgroupH, lambda: &[P1Point]) -> Result<Vec<Vec<P1Point>>> {
    let mut pts = lambda.to_vec();
    super::check_distinct(&pts)?;
    sort_points(&mut pts);
    for g in h.generators() {
        for p in &pts {
            let q = g.apply(p);
            if !pts.contains(&q) {
                return Err(Error::NotInvariant(format!("{p} -> {q} under {g}")));
            }
        }
    }
    let mut seen = vec![false; pts.len()];
    let mut orbits = Vec::new();
    for start in 0..pts.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < orbit.len() {
            let p = pts[orbit[k]].clone();
            for g in h.generators() {
                let q = g.apply(&p);
                let idx = pts.iter().position(|x| *x == q).expect("invariant");
                if !seen[idx] {
                    seen[idx] = true;
                    orbit.push(idx);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|i| pts[i].clone()).collect());
    }
    Ok(orbits)
}

/// Cross-ratio normalised so that `([0:1], [1:0], [1:1], [x:1]) -> x`.
///
/// For pairwise distinct points the value is finite and never 0 or 1.
pub fn cross_ratio(p: &[P1Point; 4]) -> Result<CycNum> {
    for i in 0..4 {
        for j in 0..i {
            if p[i] == p[j] {
                return Err(Error::DegeneratePoints(format!("{} repeated", p[i])));
            }
        }
    }
    let d = |i: usize, j: usize| &(p[i].a() * p[j].b()) - &(p[j].a() * p[i].b());
    let num = &d(3, 0) * &d(2, 1);
    let den = &d(3, 1) * &d(2, 0);
    num.checked_div(&den)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPoints {
    AllOfP1,
    Points(Vec<P1Point>),
}

/// Fixed points of `g`: the zeros of `c x^2 + (d-a) x y - b y^2`.
pub fn fixed_points(g: &Moebius) -> Result<FixedPoints> {
    if g.is_identity() {
        return Ok(FixedPoints::AllOfP1);
    }
    let [[a, b], [c, d]] = g.matrix().clone();
    let dma = &d - &a;
    let mut pts = Vec::new();
    if c.is_zero() {
        pts.push(P1Point::infinity());
        if !dma.is_zero() {
            pts.push(P1Point::affine(b.checked_div(&dma)?));
        }
    } else {
        let disc = &(&dma * &dma) + &(&CycNum::from_int(4) * &(&b * &c));
        let two_c = &c * &CycNum::from_int(2);
        if disc.is_zero() {
            pts.push(P1Point::affine((-&dma).checked_div(&two_c)?));
        } else {
            let s = disc_sqrt(g, &disc).ok_or_else(|| Error::RootFieldUnsupported(disc.to_string()))?;
            for t in [&s, &-&s] {
                pts.push(P1Point::affine((&(-&dma) + t).checked_div(&two_c)?));
            }
        }
    }
    sort_points(&mut pts);
    Ok(FixedPoints::Points(pts))
}

/// Square root of the fixed-point discriminant `(d-a)^2 + 4bc = tr^2 - 4 det`.
fn disc_sqrt(g: &Moebius, disc: &CycNum) -> Option<CycNum> {
    if let Some(s) = crate::exactfield::try_sqrt(disc) {
        return Some(s);
    }
    // (mu1 - mu2)^2 = tr^2 - 4 det
    g.finite_eigenvalues().map(|ev| &ev.mu1 - &ev.mu2)
}
