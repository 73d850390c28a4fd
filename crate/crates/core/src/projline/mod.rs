//! The projective line: points, Moebius maps and finite subgroups of PGL(2).

mod group;
mod moebius;
mod point;

pub use group::{
    aut_of_lambda, cross_ratio, fixed_points, group_closure, orbit_decompose, sl2_pullback,
    FinSubgroupG, FinSubgroupH, FixedPoints, GroupKind, DEFAULT_GROUP_CAP,
};
pub use moebius::{
    mat2, mat2_adj, mat2_det, mat2_identity, mat2_int, mat2_mul, mat2_scale, Eigenvalues, Mat2, Moebius,
    SL2Elem,
};
pub use point::{check_distinct, cmp_points, sort_points, P1Point};

/// Splits at `sep` outside of any brackets or parentheses.
pub(crate) fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests;

#[cfg(test)]
mod props;
