//! Minimal dense linear algebra sized for graphs of a few thousand nodes.
//!
//! The pipeline needs three primitives: dense products, a singular value
//! decomposition for correspondence analysis, and the matrix exponential for
//! diffusion propagators. All three are implemented here on a plain
//! row-major [`Mat`] so the crate stays `no_std`.

mod dense;
mod expm;
mod svd;

pub use dense::Mat;
pub use expm::expm;
pub use svd::{svd, Svd};
