//! k-frames in M_n: ordered systems of matrix units.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::linalg::Matrix;

/// An ordered family `α_ij` (row-major in `(i, j)`) of `k²` matrices in
/// `M_n` with `α_ij·α_rs = δ_jr·α_is`, `Σ α_ii = 1` and linearly independent
/// generators. Values of this type always satisfy all three conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    k: usize,
    n: usize,
    generators: Vec<Matrix>,
}

/// The first frame condition that a candidate fails. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameDefect {
    Relation { i: usize, j: usize, r: usize, s: usize },
    Unitality,
    LinearDependence { rank: usize },
}

impl fmt::Display for FrameDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameDefect::Relation { i, j, r, s } => {
                write!(f, "relation a({i},{j})*a({r},{s}) = delta({j},{r})*a({i},{s}) fails")
            }
            FrameDefect::Unitality => write!(f, "diagonal generators do not sum to the identity"),
            FrameDefect::LinearDependence { rank } => {
                write!(f, "generators are linearly dependent (rank {rank})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameCheck {
    Valid,
    Invalid(FrameDefect),
}

impl FrameCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, FrameCheck::Valid)
    }
}

impl fmt::Display for FrameCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameCheck::Valid => write!(f, "valid"),
            FrameCheck::Invalid(d) => write!(f, "invalid: {d}"),
        }
    }
}

/// Checks the frame conditions in order: relations, unitality, independence.
pub fn verify_frame(candidate: &[Matrix], k: usize, n: usize) -> Result<FrameCheck, AlgebraError> {
    if k == 0 || n == 0 || n % k != 0 {
        return Err(AlgebraError::Size(format!("frame order {k} must be positive and divide {n}")));
    }
    if candidate.len() != k * k {
        return Err(AlgebraError::Size(format!("expected {} generators, got {}", k * k, candidate.len())));
    }
    if let Some(bad) = candidate.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(AlgebraError::Size(format!("generator is {}x{}, expected {n}x{n}", bad.rows(), bad.cols())));
    }
    let at = |i: usize, j: usize| &candidate[i * k + j];

    if !relations_hold_reduced(candidate, k) {
        // Locate the first failing relation for the diagnostic.
        for i in 0..k {
            for j in 0..k {
                for r in 0..k {
                    for s in 0..k {
                        let lhs = at(i, j) * at(r, s);
                        let ok = if j == r { &lhs == at(i, s) } else { lhs.is_zero() };
                        if !ok {
                            return Ok(FrameCheck::Invalid(FrameDefect::Relation {
                                i: i + 1,
                                j: j + 1,
                                r: r + 1,
                                s: s + 1,
                            }));
                        }
                    }
                }
            }
        }
        unreachable!("reduced relation set failed but the full set holds");
    }

    let mut sum = Matrix::zeros(n, n);
    for i in 0..k {
        sum = sum.try_add(at(i, i))?;
    }
    if !sum.is_identity() {
        return Ok(FrameCheck::Invalid(FrameDefect::Unitality));
    }

    let rank = Matrix::coordinate_matrix(candidate)?.rank();
    if rank != k * k {
        return Ok(FrameCheck::Invalid(FrameDefect::LinearDependence { rank }));
    }
    Ok(FrameCheck::Valid)
}

/// The relations `α_ij = α_i1·α_1j` and `α_1j·α_r1 = δ_jr·α_11` imply the full
/// set `α_ij·α_rs = δ_jr·α_is`, and need only `2k²` products.
fn relations_hold_reduced(gens: &[Matrix], k: usize) -> bool {
    let at = |i: usize, j: usize| &gens[i * k + j];
    for i in 0..k {
        for j in 0..k {
            if &(at(i, 0) * at(0, j)) != at(i, j) {
                return false;
            }
            let p = at(0, j) * at(i, 0);
            let ok = if j == i { &p == at(0, 0) } else { p.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

impl Frame {
    /// Validates and wraps a candidate frame.
    pub fn new(generators: Vec<Matrix>, k: usize, n: usize) -> Result<Self, AlgebraError> {
        match verify_frame(&generators, k, n)? {
            FrameCheck::Valid => Ok(Self { k, n, generators }),
            FrameCheck::Invalid(d) => Err(AlgebraError::InvalidFrame(d)),
        }
    }

    /// Wraps generators already known to form a frame.
    pub(crate) fn new_unchecked(generators: Vec<Matrix>, k: usize, n: usize) -> Self {
        debug_assert_eq!(generators.len(), k * k);
        Self { k, n, generators }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n / k`
    pub fn l(&self) -> usize {
        self.n / self.k
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// `α_ij`, 0-based.
    pub fn generator(&self, i: usize, j: usize) -> &Matrix {
        &self.generators[i * self.k + j]
    }

    pub fn verify(&self) -> FrameCheck {
        verify_frame(&self.generators, self.k, self.n).expect("frame shapes are consistent")
    }
}

/// The standard frame `E_ij ⊗ 1_l` of order `k` in `M_{kl}`.
pub fn standard_frame(k: usize, l: usize) -> Result<Frame, AlgebraError> {
    if k == 0 || l == 0 {
        return Err(AlgebraError::Size("frame parameters must be positive".into()));
    }
    let id = Matrix::identity(l);
    let generators = (0..k * k).map(|idx| Matrix::unit(k, k, idx / k, idx % k).kronecker(&id)).collect();
    Ok(Frame::new_unchecked(generators, k, k * l))
}

/// `g·α_ij·g⁻¹` for every generator.
pub fn frame_conjugate(frame: &Frame, g: &Matrix) -> Result<Frame, AlgebraError> {
    if g.rows() != frame.n || g.cols() != frame.n {
        return Err(AlgebraError::Size(format!(
            "conjugator is {}x{}, expected {n}x{n}",
            g.rows(),
            g.cols(),
            n = frame.n
        )));
    }
    let g_inv = g.invert()?;
    let generators = frame.generators.iter().map(|a| &(g * a) * &g_inv).collect();
    Ok(Frame::new_unchecked(generators, frame.k, frame.n))
}

/// An invertible `g` with `frame = g·(E_ij ⊗ 1_l)·g⁻¹`.
///
/// Column `(i−1)l + j` of `g` is `α_i1·w_j`, where `w_1, …, w_l` is the reduced
/// column-echelon basis of `image(α_11)`. The standard frame yields the identity.
pub fn noether_skolem_conjugator(frame: &Frame) -> Result<Matrix, AlgebraError> {
    let (k, n) = (frame.k, frame.n);
    let l = n / k;
    let a11 = frame.generator(0, 0);
    let (echelon, pivots) = a11.transpose().rref();
    if pivots.len() != l {
        return Err(AlgebraError::InvalidFrame(FrameDefect::LinearDependence { rank: pivots.len() }));
    }
    let basis: Vec<Matrix> = (0..l).map(|t| echelon.row(t).to_vec()).map(column).collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..k {
        let ai1 = frame.generator(i, 0);
        for (t, w) in basis.iter().enumerate() {
            let col = ai1 * w;
            for row in 0..n {
                g.set(row, i * l + t, col.get(row, 0).clone());
            }
        }
    }
    Ok(g)
}

fn column(entries: Vec<crate::linalg::GaussianRational>) -> Matrix {
    Matrix::new(entries.len(), 1, entries).expect("column shape")
}

/// Wire form: `{"k": k, "n": n, "generators": [matrix, …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub k: usize,
    pub n: usize,
    pub generators: Vec<Matrix>,
}

impl From<&Frame> for FrameFile {
    fn from(f: &Frame) -> Self {
        FrameFile { k: f.k, n: f.n, generators: f.generators.clone() }
    }
}

impl TryFrom<FrameFile> for Frame {
    type Error = AlgebraError;
    fn try_from(f: FrameFile) -> Result<Self, AlgebraError> {
        Frame::new(f.generators, f.k, f.n)
    }
}

impl Serialize for Frame {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FrameFile::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Frame {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Frame::try_from(FrameFile::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GaussianRational;

    #[test]
    fn standard_frame_small_cases() {
        let f = standard_frame(1, 3).unwrap();
        assert_eq!(f.generators(), &[Matrix::identity(3)]);
        let f = standard_frame(2, 1).unwrap();
        let units: Vec<Matrix> = (0..4).map(|i| Matrix::unit(2, 2, i / 2, i % 2)).collect();
        assert_eq!(f.generators(), units.as_slice());
        let f = standard_frame(2, 2).unwrap();
        assert_eq!(f.generator(0, 1), &Matrix::unit(2, 2, 0, 1).kronecker(&Matrix::identity(2)));
        assert!(f.verify().is_valid());
        assert!(standard_frame(0, 2).is_err());
    }

    #[test]
    fn verify_standard_and_units() {
        let f = standard_frame(2, 3).unwrap();
        assert_eq!(verify_frame(f.generators(), 2, 6).unwrap(), FrameCheck::Valid);
        let units: Vec<Matrix> = (0..4).map(|i| Matrix::unit(2, 2, i / 2, i % 2)).collect();
        assert!(verify_frame(&units, 2, 2).unwrap().is_valid());
    }

    #[test]
    fn swapped_diagonal_fails_relations() {
        let mut gens = standard_frame(2, 3).unwrap().generators().to_vec();
        gens.swap(0, 3);
        let check = verify_frame(&gens, 2, 6).unwrap();
        // a(1,1) is now E22⊗1, so a(1,1)·a(1,2) = 0 instead of a(1,2).
        assert_eq!(check, FrameCheck::Invalid(FrameDefect::Relation { i: 1, j: 1, r: 1, s: 2 }));
    }

    #[test]
    fn unitality_failure() {
        // {E11} in M_2 is an idempotent but does not sum to the identity.
        let gens = vec![Matrix::unit(2, 2, 0, 0)];
        assert_eq!(verify_frame(&gens, 1, 2).unwrap(), FrameCheck::Invalid(FrameDefect::Unitality));
        assert!(Frame::new(gens, 1, 2).is_err());
    }

    #[test]
    fn size_mismatches_are_errors() {
        let f = standard_frame(2, 2).unwrap();
        assert!(verify_frame(&f.generators()[..3], 2, 4).is_err());
        assert!(verify_frame(f.generators(), 2, 6).is_err());
        assert!(verify_frame(f.generators(), 3, 4).is_err());
    }

    #[test]
    fn conjugation_by_identity_and_back() {
        let f = standard_frame(2, 2).unwrap();
        assert_eq!(frame_conjugate(&f, &Matrix::identity(4)).unwrap(), f);
        let g = Matrix::from_int_rows(&[&[1, 2, 0, 0], &[0, 1, 0, 3], &[1, 0, 1, 0], &[0, 0, 1, 1]]);
        let h = frame_conjugate(&f, &g).unwrap();
        assert!(h.verify().is_valid());
        assert_eq!(frame_conjugate(&h, &g.invert().unwrap()).unwrap(), f);
        assert!(frame_conjugate(&f, &Matrix::zeros(4, 4)).is_err());
    }

    #[test]
    fn conjugator_of_standard_is_identity() {
        for (k, l) in [(1, 1), (1, 4), (2, 1), (2, 3), (3, 2), (4, 1)] {
            let f = standard_frame(k, l).unwrap();
            assert!(noether_skolem_conjugator(&f).unwrap().is_identity(), "k={k} l={l}");
        }
    }

    #[test]
    fn conjugator_realizes_a_gaussian_frame() {
        let i = GaussianRational::i();
        let g = Matrix::new(2, 2, vec![GaussianRational::from_int(1), i.clone(), i, GaussianRational::from_int(0)])
            .unwrap();
        let target = frame_conjugate(&standard_frame(2, 1).unwrap(), &g).unwrap();
        let found = noether_skolem_conjugator(&target).unwrap();
        assert_eq!(frame_conjugate(&standard_frame(2, 1).unwrap(), &found).unwrap(), target);
    }

    #[test]
    fn frame_json_rejects_invalid_generators() {
        let mut file = FrameFile::from(&standard_frame(2, 1).unwrap());
        file.generators.swap(1, 2);
        let text = serde_json::to_string(&file).unwrap();
        assert!(serde_json::from_str::<Frame>(&text).is_err());
        let ok = serde_json::to_string(&standard_frame(2, 3).unwrap()).unwrap();
        assert_eq!(serde_json::from_str::<Frame>(&ok).unwrap(), standard_frame(2, 3).unwrap());
    }
}
