//! Independent reference computations used only by tests.
//!
//! Nothing here depends on `braidkit`: matrices are plain dense
//! `Vec<Vec<BigRational>>` and algebra structure maps are written out from
//! explicit formulas on group elements.

pub mod dense;
pub mod group;
pub mod gs;
