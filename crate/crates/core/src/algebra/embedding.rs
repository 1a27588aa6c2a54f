use num_traits::Zero;

use super::frame::{noether_skolem_conjugator, Frame};
use super::AlgebraError;
use crate::linalg::{GaussianRational, Matrix};

/// Unital embedding `M_k ↪ M_n`, stored as the images `α_ij` of the matrix units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEmbedding {
    frame: Frame,
}

impl AlgebraEmbedding {
    pub fn k(&self) -> usize {
        self.frame.k()
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn into_frame(self) -> Frame {
        self.frame
    }

    /// `T ↦ Σ T_ij·α_ij`
    pub fn apply(&self, t: &Matrix) -> Result<Matrix, AlgebraError> {
        let k = self.k();
        if t.rows() != k || t.cols() != k {
            return Err(AlgebraError::Size(format!("expected a {k}x{k} matrix, got {}x{}", t.rows(), t.cols())));
        }
        let mut out = Matrix::zeros(self.n(), self.n());
        for i in 0..k {
            for j in 0..k {
                let c = t.get(i, j);
                if !c.is_zero() {
                    out = out.try_add(&self.frame.generator(i, j).scale(c))?;
                }
            }
        }
        Ok(out)
    }

    /// Coordinate matrix whose row space is the image subalgebra.
    pub fn image_coordinates(&self) -> Matrix {
        Matrix::coordinate_matrix(self.frame.generators()).expect("generators share a shape")
    }

    /// Whether both embeddings have the same image subspace of `M_n`.
    pub fn same_image(&self, other: &AlgebraEmbedding) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let a = self.image_coordinates();
        let b = other.image_coordinates();
        let ra = a.rank();
        ra == b.rank() && a.vstack(&b).expect("same width").rank() == ra
    }
}

pub fn embedding_from_frame(frame: Frame) -> AlgebraEmbedding {
    AlgebraEmbedding { frame }
}

pub fn apply_embedding(e: &AlgebraEmbedding, t: &Matrix) -> Result<Matrix, AlgebraError> {
    e.apply(t)
}

/// Basis of `{X ∈ M_n : X·α = α·X for all α in the image of e}`, as n×n matrices.
///
/// The shifts `Σ α_{i,i+1}` and `Σ α_{i+1,i}` have no common invariant
/// subspace in the image of `M_k`, so they generate it as an algebra and
/// only their two commutator maps are stacked.
pub fn commutant_basis(e: &AlgebraEmbedding) -> Vec<Matrix> {
    let (k, n) = (e.k(), e.n());
    let frame = e.frame();
    let shift = |up: bool| {
        Matrix::from_fn(n, n, |a, b| {
            let mut acc = GaussianRational::zero();
            for i in 0..k - 1 {
                let g = if up { frame.generator(i, i + 1) } else { frame.generator(i + 1, i) };
                acc += g.get(a, b);
            }
            acc
        })
    };
    let gens = if k > 1 { vec![shift(true), shift(false)] } else { Vec::new() };
    let width = n * n;
    let mut system = Matrix::zeros(gens.len() * width, width);
    for (g_idx, alpha) in gens.iter().enumerate() {
        // (Xα − αX)_ab = Σ_c X_ac α_cb − Σ_c α_ac X_cb
        for a in 0..n {
            for b in 0..n {
                let row = g_idx * width + a * n + b;
                for c in 0..n {
                    let x = alpha.get(c, b);
                    if !x.is_zero() {
                        let cur = system.get(row, a * n + c).clone();
                        system.set(row, a * n + c, &cur + x);
                    }
                    let y = alpha.get(a, c);
                    if !y.is_zero() {
                        let cur = system.get(row, c * n + b).clone();
                        system.set(row, c * n + b, &cur - y);
                    }
                }
            }
        }
    }
    system.nullspace().into_iter().map(|v| Matrix::new(n, n, v.into_entries()).expect("n² coordinates")).collect()
}

/// The complementary embedding `M_l ↪ M_{kl}` whose image is the commutant of `e`.
///
/// The commutant is computed as a nullspace and then framed by conjugating
/// `1_k ⊗ E_rs` with the Noether–Skolem conjugator of `e`.
pub fn centralizer(e: &AlgebraEmbedding) -> Result<AlgebraEmbedding, AlgebraError> {
    let (k, n) = (e.k(), e.n());
    if n % k != 0 {
        return Err(AlgebraError::Size(format!("{k} does not divide {n}")));
    }
    let l = n / k;
    let found = commutant_basis(e).len();
    if found != l * l {
        return Err(AlgebraError::CommutantDimension { expected: l * l, found });
    }
    let g = noether_skolem_conjugator(e.frame())?;
    let g_inv = g.invert()?;
    let id_k = Matrix::identity(k);
    let generators =
        (0..l * l).map(|idx| &(&g * &id_k.kronecker(&Matrix::unit(l, l, idx / l, idx % l))) * &g_inv).collect();
    Ok(AlgebraEmbedding { frame: Frame::new_unchecked(generators, l, n) })
}

/// `t ⊗ 1_l` for the standard embedding; handy as an oracle.
pub fn standard_image(t: &Matrix, l: usize) -> Matrix {
    t.kronecker(&Matrix::identity(l))
}
