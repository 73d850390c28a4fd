//! Extending a single automorphism of `P^1 \ Lambda` to the plane.

mod construct;
mod cor25;
mod curve;

pub use construct::{
    construct_prop26, construct_thm23_1, decide_extendability, ExtendabilityVerdict, PlaneExtension, VerdictView,
};
pub use cor25::{cor25_family, cor25_h};
pub use curve::{CurveAut, Order, DEFAULT_ORDER_CAP};

#[cfg(test)]
mod props;
