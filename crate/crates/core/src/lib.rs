//! Exact linear algebra for braided structures built from finite-dimensional
//! Hopf algebras.

pub mod bmod;
pub mod braid;
pub mod btp;
pub mod error;
pub mod exactnum;
pub mod format;
pub mod homology;
pub mod hopf;
pub mod perm;
pub mod report;
pub mod shuffle;
pub mod tensorspace;

pub use error::{Error, Result};
pub use exactnum::{Field, LinMap, Scalar};
