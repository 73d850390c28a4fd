//! Exact arithmetic in Q and in cyclotomic fields Q(zeta_m).

mod cyclotomic;
mod rational;
mod sqrt;

#[cfg(test)]
mod props;

pub use cyclotomic::{
    canonical_conductor, check_conductor, conductor_cap, euler_phi, root_of_unity,
    set_conductor_cap, try_root_of_unity, CycNum,
};
pub use rational::{fmt_rat, parse_rat, rat, rat_int, rat_sqrt, Rat};
pub use sqrt::{sqrt_rational, try_sqrt};

/// Common conductor of a family of values (lcm, canonicalised).
pub fn common_conductor<'a>(vals: impl IntoIterator<Item = &'a CycNum>) -> u64 {
    use num_integer::Integer;
    let m = vals.into_iter().fold(1u64, |acc, v| acc.lcm(&v.conductor()));
    canonical_conductor(m)
}
