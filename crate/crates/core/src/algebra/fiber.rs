//! Single-fiber realization of floating algebra bundles.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::embedding::{centralizer, embedding_from_frame, AlgebraEmbedding};
use super::frame::{standard_frame, Frame};
use super::AlgebraError;
use crate::linalg::Matrix;

/// A pair of commuting complementary embeddings `M_k ↪ M_{kl}` and
/// `M_l ↪ M_{kl}` with `gcd(k, l) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FabFiber {
    k: usize,
    l: usize,
    core: AlgebraEmbedding,
    complement: AlgebraEmbedding,
}

impl FabFiber {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn core(&self) -> &AlgebraEmbedding {
        &self.core
    }

    pub fn complement(&self) -> &AlgebraEmbedding {
        &self.complement
    }

    /// Whether every core generator commutes with every complement generator.
    pub fn commutes(&self) -> bool {
        let a = self.core.frame().generators();
        let b = self.complement.frame().generators();
        a.iter().all(|x| b.iter().all(|y| x * y == y * x))
    }

    /// Rank of the `k²l²` products `α_ij·β_rs` as vectors in `M_{kl}`.
    pub fn span_rank(&self) -> usize {
        let products: Vec<Matrix> = self
            .core
            .frame()
            .generators()
            .iter()
            .flat_map(|a| self.complement.frame().generators().iter().map(move |b| a * b))
            .collect();
        Matrix::coordinate_matrix(&products).expect("same shape").rank()
    }

    /// Checks commutation and that the products span all of `M_{kl}`.
    pub fn check_invariants(&self) -> Result<(), AlgebraError> {
        if !self.commutes() {
            return Err(AlgebraError::Fiber("core and complement do not commute".into()));
        }
        let n = self.k * self.l;
        let rank = self.span_rank();
        if rank != n * n {
            return Err(AlgebraError::Fiber(format!("products span dimension {rank}, expected {}", n * n)));
        }
        Ok(())
    }
}

/// Pairs `e : M_k ↪ M_{kl}` with its centralizer, requiring `gcd(k, l) = 1`.
pub fn make_fab_fiber(e: &AlgebraEmbedding) -> Result<FabFiber, AlgebraError> {
    let (k, n) = (e.k(), e.n());
    if n % k != 0 {
        return Err(AlgebraError::Size(format!("{k} does not divide {n}")));
    }
    let l = n / k;
    if k.gcd(&l) != 1 {
        return Err(AlgebraError::NotFloating { k, l });
    }
    let complement = centralizer(e)?;
    let fiber = FabFiber { k, l, core: e.clone(), complement };
    fiber.check_invariants()?;
    Ok(fiber)
}

/// The fiber of the trivial bundle: `T ↦ T ⊗ 1_l` with complement `1_k ⊗ M_l`.
pub fn trivial_fiber(k: usize, l: usize) -> Result<FabFiber, AlgebraError> {
    make_fab_fiber(&embedding_from_frame(standard_frame(k, l)?))
}

/// Kronecker product of fibers, `M_{k₁k₂} ↪ M_{k₁l₁k₂l₂}`.
///
/// Core generators are `α_{i₁j₁} ⊗ α'_{i₂j₂}` indexed by `((i₁,i₂),(j₁,j₂))`
/// lexicographically; the complement is built the same way.
pub fn fab_product(f1: &FabFiber, f2: &FabFiber) -> Result<FabFiber, AlgebraError> {
    let k = f1.k * f2.k;
    let l = f1.l * f2.l;
    if k.gcd(&l) != 1 {
        return Err(AlgebraError::NotFloating { k, l });
    }
    let core = kron_frames(f1.core.frame(), f2.core.frame());
    let complement = kron_frames(f1.complement.frame(), f2.complement.frame());
    Ok(FabFiber { k, l, core: embedding_from_frame(core), complement: embedding_from_frame(complement) })
}

fn kron_frames(a: &Frame, b: &Frame) -> Frame {
    let (ka, kb) = (a.k(), b.k());
    let k = ka * kb;
    let mut generators = Vec::with_capacity(k * k);
    for row in 0..k {
        for col in 0..k {
            let (i1, i2) = (row / kb, row % kb);
            let (j1, j2) = (col / kb, col % kb);
            generators.push(a.generator(i1, j1).kronecker(b.generator(i2, j2)));
        }
    }
    Frame::new_unchecked(generators, k, a.n() * b.n())
}

/// Wire form: `{"k": k, "l": l, "core": frame, "complement": frame}`.
#[derive(Serialize, Deserialize)]
struct FiberRepr {
    k: usize,
    l: usize,
    core: Frame,
    complement: Frame,
}

impl Serialize for FabFiber {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FiberRepr { k: self.k, l: self.l, core: self.core.frame().clone(), complement: self.complement.frame().clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FabFiber {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = FiberRepr::deserialize(deserializer)?;
        use serde::de::Error;
        if r.core.k() != r.k || r.complement.k() != r.l || r.core.n() != r.k * r.l || r.complement.n() != r.k * r.l {
            return Err(D::Error::custom("fiber shape does not match k and l"));
        }
        if r.k.gcd(&r.l) != 1 {
            return Err(D::Error::custom(AlgebraError::NotFloating { k: r.k, l: r.l }));
        }
        let fiber = FabFiber {
            k: r.k,
            l: r.l,
            core: embedding_from_frame(r.core),
            complement: embedding_from_frame(r.complement),
        };
        fiber.check_invariants().map_err(D::Error::custom)?;
        Ok(fiber)
    }
}
