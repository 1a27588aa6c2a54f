//! Characteristic classes of FABs: Newton and Chern classes, their tensor
//! product formulas, inverses, and the correspondence with SU-bundles.
//!
//! Numeric vectors use exact rationals; symbolic vectors use
//! [`GradedPolynomial`] with one label per factor, so the same routines
//! print closed formulas.

mod ops;
mod poly;
mod vector;

use thiserror::Error;

pub use ops::{
    bezout_coefficients, chern_from_newton, fab_chern_product, fab_from_su_bundle, fab_inverse, fab_newton_product,
    newton_from_chern, phi_pair, psi_bezout, tensor_newton,
};
pub use poly::{Family, GradedPolynomial, GradedVariable, Monomial};
pub use vector::{ClassKind, ClassRing, ClassVector, VirtualBundleClass};

/// Default truncation degree.
pub const DEFAULT_TRUNCATION: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("expected a {expected} vector, found {found}")]
    Kind { expected: ClassKind, found: ClassKind },
    #[error("truncation: {0}")]
    Truncation(String),
    #[error("malformed FAB vector: {0}")]
    NotFab(String),
    #[error("not an SU class: s1 is nonzero")]
    NotSu,
    #[error("dimension: {0}")]
    Dimension(String),
    #[error("gcd({k}, {m}) != 1")]
    NotCoprime { k: i64, m: i64 },
    #[error("compatibility violated in degree {index}: m*s_i(xk) != k*s_i(xm)")]
    Compatibility { index: usize },
}
