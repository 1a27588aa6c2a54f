//! Fiberwise matrix-algebra constructions: frames, unital embeddings
//! `M_k ↪ M_{kl}`, centralizers, Noether–Skolem conjugators, products of
//! floating algebra bundle fibers and the Segre map.

mod embedding;
mod fiber;
mod frame;
mod segre;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use embedding::{
    apply_embedding, centralizer, commutant_basis, embedding_from_frame, standard_image, AlgebraEmbedding,
};
pub use fiber::{fab_product, make_fab_fiber, trivial_fiber, FabFiber};
pub use frame::{
    frame_conjugate, noether_skolem_conjugator, standard_frame, verify_frame, Frame, FrameCheck, FrameDefect, FrameFile,
};
pub use segre::{segre, ProjectivePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(FrameDefect),
    #[error("not floating: gcd({k}, {l}) != 1")]
    NotFloating { k: usize, l: usize },
    #[error("commutant has dimension {found}, expected {expected}")]
    CommutantDimension { expected: usize, found: usize },
    #[error("fiber invariant violated: {0}")]
    Fiber(String),
    #[error("projective point must have a nonzero coordinate")]
    ZeroVector,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
