//! Equivariant closed embeddings of `P^1 \ Lambda` into `A^3`.
//!
//! `iota` identifies `(P^1 x P^1) \ diagonal` with the quadric
//! `yz = x^2 - 1`; composing with `q -> (q, delta(q))` gives `tau`.

mod iota;
mod preset;
mod special;
mod tau;

pub use iota::{iota, iota_inverse, rep3, rep3_of, verify_iota_equivariance, PointA3, Rep3};
pub use preset::{preset_family, preset_params_through, tetra_a, tetra_b, Preset, PresetKind};
pub use special::{special_case_embedding, verify_special, SpecialAction, SpecialEmbedding, SpecialKind};
pub use tau::{build_tau, verify_tau, EmbeddingA3, EmbeddingView, Ratio};

#[cfg(test)]
mod props;
#[cfg(test)]
mod tests;
