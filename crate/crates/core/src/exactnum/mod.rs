//! Exact field arithmetic and sparse linear maps.
//!
//! Every morphism in the crate is a [`LinMap`]: a sparse matrix over a single
//! [`Field`], stored column-major with rows sorted inside each column and no
//! explicit zeros. Equality of maps is therefore structural equality.

mod elim;
mod linmap;
mod scalar;

pub use linmap::LinMap;
pub use scalar::{parse_rational, Field, Rational, Scalar, MAX_PRIME};
