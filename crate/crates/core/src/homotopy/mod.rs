//! Stable homotopy groups of matrix Grassmannians `Gr_{k,l}` and frame spaces
//! `Fr_{k,l}`, induced maps, and a Smith-normal-form exact-sequence oracle.
//!
//! The closed formulas cover degrees `1 ≤ r ≤ 2·min{k, l}` (boundary
//! included); anything above fails with [`HomotopyError::UnstableRange`].

mod group;
mod groups;
mod oracle;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use group::AbelianGroup;
pub use groups::{
    fab_inverse_map_order, frame_map_residue_order, induced_map, pi_frame_space, pi_grassmannian, stable_range,
    InducedMapKind, InducedMapReport, StablePair,
};
pub use oracle::{exact_sequence_oracle, kernel_cokernel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("unstable range: degree {r} exceeds {bound}")]
    UnstableRange { r: u64, bound: u64 },
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("divisibility violated: need {k} | {m} and {l} | {n}")]
    Divisibility { k: u64, l: u64, m: u64, n: u64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
