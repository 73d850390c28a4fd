//! Equivariant endomorphisms of P^1 with a prescribed fixed locus.
//!
//! The plane endomorphisms `F = (f1, f2)` carry the action
//! `g . F = g o F o g^{-1}` of SL(2); the contraction `F -> f1 y - f2 x` is
//! equivariant, and averaging over a finite `G` produces fixed pairs.

mod delta;
mod endo;
mod orbit;

pub use delta::{build_delta, combine_orbits, verify_delta_equivariance, verify_fixed_locus, DeltaMap};
pub use endo::{first_mover, reynolds_average, rho_contract, split_endomorphism, EndoPair};
pub use orbit::{invariant_power, orbit_data, orbit_polynomial, Locus, OrbitData};

#[cfg(test)]
mod props;
