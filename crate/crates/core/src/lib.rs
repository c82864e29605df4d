//! Enumeration and verification tools for minimal Horrocks monads of stable
//! rank 2 bundles with odd determinant on projective 3-space.

pub mod candidates;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod moduli;
pub mod spectra;
pub mod spectrum;
pub mod symbolic;

pub use error::{Error, Result};
pub use spectrum::Spectrum;
