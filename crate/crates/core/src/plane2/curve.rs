use std::fmt;

use crate::equivariant::Locus;
use crate::error::{Error, Result};
use crate::polyring::HPoly2;
use crate::projline::{check_distinct, fixed_points, sort_points, FixedPoints, Moebius, P1Point};

pub const DEFAULT_ORDER_CAP: usize = 720;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    /// No power up to the cap is the identity.
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// An automorphism of `Gamma = P^1 \ Lambda`, given by its extension to `P^1`.
#[derive(Clone, Debug)]
pub struct CurveAut {
    lambda: Vec<P1Point>,
    g: Moebius,
    order: Order,
    /// `(a x + b y) y - (c x + d y) x`, vanishing at the fixed points.
    fixed_form: HPoly2,
    fixed_in_gamma: usize,
}

impl CurveAut {
    pub fn new(lambda: &[P1Point], g: Moebius, order_cap: usize) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::DegeneratePoints("the removed set is empty".into()));
        }
        if g.is_identity() {
            return Err(Error::TrivialAutomorphism);
        }
        check_distinct(lambda)?;
        let mut lambda = lambda.to_vec();
        sort_points(&mut lambda);
        if let Some(q) = lambda.iter().find(|q| !lambda.contains(&g.apply(q))) {
            return Err(Error::NotInvariant(q.to_string()));
        }
        let order = g.order(order_cap).map_or(Order::Infinite, Order::Finite);
        let [[a, b], [c, d]] = g.matrix();
        let fixed_form = HPoly2::from_terms(2, [(2, -c), (1, a - d), (0, b.clone())]);
        let (sqf, _) = fixed_form.squarefree()?;
        let lam = Locus::from_points(&lambda)?;
        let fixed_in_gamma = (sqf.degree() - sqf.gcd(lam.poly()).degree()) as usize;
        Ok(CurveAut { lambda, g, order, fixed_form, fixed_in_gamma })
    }

    pub fn lambda(&self) -> &[P1Point] {
        &self.lambda
    }

    pub fn g(&self) -> &Moebius {
        &self.g
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn fixed_form(&self) -> &HPoly2 {
        &self.fixed_form
    }

    /// Number of fixed points of `g` on `Gamma`.
    pub fn fixed_in_gamma(&self) -> usize {
        self.fixed_in_gamma
    }

    /// The fixed points on `Gamma`, when they lie in a reachable field.
    pub fn fixed_points_in_gamma(&self) -> Result<Vec<P1Point>> {
        match fixed_points(&self.g)? {
            FixedPoints::AllOfP1 => Err(Error::TrivialAutomorphism),
            FixedPoints::Points(v) => Ok(v.into_iter().filter(|q| !self.lambda.contains(q)).collect()),
        }
    }

    /// Points of `Lambda` fixed by `g`.
    pub fn fixed_in_lambda(&self) -> Vec<P1Point> {
        self.lambda.iter().filter(|q| self.g.apply(q) == **q).cloned().collect()
    }
}
