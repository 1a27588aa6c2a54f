//! Exact computations for floating algebra bundles: matrix-algebra frames and
//! centralizers, homotopy groups of matrix Grassmannians, and the
//! characteristic-class calculus of tensor products of bundles.

pub mod algebra;
pub mod classes;
pub mod cli;
pub mod homotopy;
pub mod linalg;
