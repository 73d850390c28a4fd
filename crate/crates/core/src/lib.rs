pub mod certificate;
pub mod cli;
pub mod embed3;
pub mod equivariant;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod planar3;
pub mod plane2;
pub mod polyring;
pub mod projline;

#[cfg(test)]
pub(crate) mod testkit;

pub use error::{Error, Result};
