use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::linalg::GaussianRational;

/// A point of projective space in homogeneous coordinates. Equality is up to
/// a global nonzero scalar.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct ProjectivePoint {
    coords: Vec<GaussianRational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<GaussianRational>) -> Result<Self, AlgebraError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(AlgebraError::ZeroVector);
        }
        Ok(Self { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(coords.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    /// Representative whose first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let lead = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero point");
        let inv = lead.inv().expect("nonzero lead");
        Self { coords: self.coords.iter().map(|c| c * &inv).collect() }
    }

    pub fn scale(&self, lambda: &GaussianRational) -> Result<Self, AlgebraError> {
        Self::new(self.coords.iter().map(|c| c * lambda).collect())
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.normalized().coords == other.normalized().coords
    }
}

impl Eq for ProjectivePoint {}

/// `[x_0 : … : x_{k−1}] × [y_0 : … : y_{l−1}] ↦ [… : x_i·y_j : …]` with
/// `z_{il+j} = x_i·y_j`.
pub fn segre(p: &ProjectivePoint, q: &ProjectivePoint) -> ProjectivePoint {
    let coords = p.coords.iter().flat_map(|x| q.coords.iter().map(move |y| x * y)).collect();
    ProjectivePoint { coords }
}

/// Wire form: `{"coords": ["a/b+c/d*i", …]}`.
#[derive(Serialize, Deserialize)]
struct PointRepr {
    coords: Vec<String>,
}

impl TryFrom<PointRepr> for ProjectivePoint {
    type Error = AlgebraError;
    fn try_from(r: PointRepr) -> Result<Self, AlgebraError> {
        let coords = r.coords.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>()?;
        ProjectivePoint::new(coords)
    }
}

impl From<ProjectivePoint> for PointRepr {
    fn from(p: ProjectivePoint) -> Self {
        PointRepr { coords: p.coords.iter().map(ToString::to_string).collect() }
    }
}
