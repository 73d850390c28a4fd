//! Planar embeddings of punctured lines in `A^3`: normalisation by an
//! explicit chain of automorphisms, and extension checks.

mod aut3;
mod example;
mod normalize;
mod witness;

pub use aut3::{apply_triple, fmt_triple, parse_triple, Aut3};
pub use example::{extension_example, moebius_ratfun, verify_extension, ExtensionExample};
pub use normalize::{ab_samples, equivalence, normal_form, normalize_planar, Normalization, PlanarEmbedding};
pub use witness::{witness_search, DEFAULT_DEGREE_CAP};

#[cfg(test)]
mod props;
#[cfg(test)]
mod tests;
