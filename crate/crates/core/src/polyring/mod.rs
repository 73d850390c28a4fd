//! Polynomial arithmetic over [`CycNum`]: homogeneous bivariate forms,
//! dense univariate polynomials, rational functions and sparse trivariate
//! polynomials, plus a small textual grammar shared by all of them.

mod hpoly;
mod parse;
mod poly3;
mod ratfun;
mod upoly;

#[cfg(test)]
mod props;

pub use hpoly::HPoly2;
pub use parse::{parse_constant, parse_expr, parse_hpoly, parse_poly3, parse_ratfun, parse_upoly, Expr};
pub use poly3::{compose_triple, identity_triple, Poly3, Triple};
pub use ratfun::URatFun;
pub use upoly::UPoly;

use crate::exactfield::CycNum;
use num_traits::Signed;

/// Renders `c * v1^e1 * v2^e2 ...` terms in the parseable grammar, e.g.
/// `3/2*x^2*y - cyc(4; 0, 1)*y^3`. Zero exponents are dropped.
pub(crate) fn format_terms(terms: &[(CycNum, Vec<(&str, u32)>)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, vars)) in terms.iter().enumerate() {
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let (neg, body) = match c.as_rational() {
            Some(r) => {
                let a = r.abs();
                let s = if a == crate::exactfield::rat_int(1) && !mono.is_empty() {
                    String::new()
                } else {
                    crate::exactfield::fmt_rat(&a)
                };
                (r.is_negative(), s)
            }
            None => (false, c.to_string()),
        };
        let mut term = body;
        for m in mono {
            if !term.is_empty() {
                term.push('*');
            }
            term.push_str(&m);
        }
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&term);
    }
    out
}
