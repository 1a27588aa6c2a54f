use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::poly::{GradedPolynomial, GradedVariable};
use super::ClassError;
use crate::linalg::{parse_rational, Rational};

/// Coefficient ring for class vectors: exact rationals (numeric mode) or
/// graded polynomials (symbolic mode).
pub trait ClassRing: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: Rational) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// The value as an integer, when it is an integral constant.
    fn as_integer(&self) -> Option<BigInt>;
    fn is_integral(&self) -> bool;
}

impl ClassRing for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, q: &Rational) -> Self {
        self * q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn as_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl ClassRing for GradedPolynomial {
    fn zero() -> Self {
        <GradedPolynomial as Zero>::zero()
    }
    fn one() -> Self {
        GradedPolynomial::constant(<Rational as One>::one())
    }
    fn from_rational(q: Rational) -> Self {
        GradedPolynomial::constant(q)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, q: &Rational) -> Self {
        self.scale(q)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().and_then(|q| q.is_integer().then(|| q.to_integer()))
    }
    fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Chern,
    Newton,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Chern => "chern",
            ClassKind::Newton => "newton",
        })
    }
}

/// Classes of degrees `0..=N`: `dim0` in degree 0, `values[i-1]` in degree `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassVector<R> {
    kind: ClassKind,
    dim0: R,
    values: Vec<R>,
}

impl<R: ClassRing> ClassVector<R> {
    pub fn new(kind: ClassKind, dim0: R, values: Vec<R>) -> Result<Self, ClassError> {
        if values.is_empty() {
            return Err(ClassError::Truncation("truncation must be at least 1".into()));
        }
        Ok(Self { kind, dim0, values })
    }

    /// The all-zero FAB vector: `dim0 = 1`, every higher class zero.
    pub fn trivial_fab(kind: ClassKind, n: usize) -> Result<Self, ClassError> {
        Self::new(kind, R::one(), vec![R::zero(); n])
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn truncation(&self) -> usize {
        self.values.len()
    }

    pub fn dim0(&self) -> &R {
        &self.dim0
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Degree-`i` class, with `i = 0` giving `dim0`.
    ///
    /// # Panics
    /// If `i` exceeds the truncation.
    pub fn value(&self, i: usize) -> &R {
        if i == 0 {
            &self.dim0
        } else {
            &self.values[i - 1]
        }
    }

    /// The first `n` classes; fails if `n` exceeds the truncation.
    pub fn truncate(&self, n: usize) -> Result<Self, ClassError> {
        if n > self.values.len() {
            return Err(ClassError::Truncation(format!("cannot extend truncation {} to {n}", self.values.len())));
        }
        Self::new(self.kind, self.dim0.clone(), self.values[..n].to_vec())
    }

    pub fn is_fab(&self) -> bool {
        self.dim0 == R::one() && self.values[0].is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.dim0.is_integral() && self.values.iter().all(ClassRing::is_integral)
    }

    pub(crate) fn expect_kind(&self, kind: ClassKind) -> Result<(), ClassError> {
        if self.kind != kind {
            return Err(ClassError::Kind { expected: kind, found: self.kind });
        }
        Ok(())
    }

    pub(crate) fn expect_fab(&self, kind: ClassKind) -> Result<(), ClassError> {
        self.expect_kind(kind)?;
        if self.dim0 != R::one() {
            return Err(ClassError::NotFab(format!("degree-0 class is {}, expected 1", self.dim0)));
        }
        if !self.values[0].is_zero() {
            return Err(ClassError::NotFab(format!("degree-1 class is {}, expected 0", self.values[0])));
        }
        Ok(())
    }
}

impl ClassVector<GradedPolynomial> {
    /// Generic FAB vector `(1, 0, x2(label), …, xN(label))` with `x = c` or `s`.
    pub fn symbolic_fab(kind: ClassKind, label: &str, n: usize) -> Result<Self, ClassError> {
        let mut values = symbolic_values(kind, label, n);
        if let Some(first) = values.first_mut() {
            *first = GradedPolynomial::default();
        }
        Self::new(kind, ClassRing::one(), values)
    }

    /// Generic plain vector `(dim(label), x1(label), …, xN(label))`.
    pub fn symbolic_plain(kind: ClassKind, label: &str, n: usize) -> Result<Self, ClassError> {
        Self::new(kind, GradedPolynomial::var(GradedVariable::dim(label)), symbolic_values(kind, label, n))
    }

    /// Every emitted value is homogeneous of its degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, v)| ClassRing::is_zero(v) || v.homogeneous_degree() == Some(i as u32 + 1))
    }
}

fn symbolic_values(kind: ClassKind, label: &str, n: usize) -> Vec<GradedPolynomial> {
    (1..=n as u32)
        .map(|i| {
            GradedPolynomial::var(match kind {
                ClassKind::Chern => GradedVariable::chern(label, i),
                ClassKind::Newton => GradedVariable::newton(label, i),
            })
        })
        .collect()
}

impl<R: ClassRing> Serialize for ClassVector<R> {
    /// `{"kind", "dim0", "values"}` with every class rendered as text.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ClassVector", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("dim0", &self.dim0.to_string())?;
        let values: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorRepr {
    kind: ClassKind,
    dim0: String,
    values: Vec<String>,
}

impl<'de> Deserialize<'de> for ClassVector<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = VectorRepr::deserialize(deserializer)?;
        let parse = |s: &str| parse_rational(s).map_err(D::Error::custom);
        let dim0 = parse(&repr.dim0)?;
        let values = repr.values.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
        ClassVector::new(repr.kind, dim0, values).map_err(D::Error::custom)
    }
}

/// A virtual bundle seen through its Newton classes; `dim` is the degree-0 class.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent, bound(serialize = "R: ClassRing"))]
pub struct VirtualBundleClass<R> {
    newton: ClassVector<R>,
}

impl<R: ClassRing> VirtualBundleClass<R> {
    pub fn new(newton: ClassVector<R>) -> Result<Self, ClassError> {
        newton.expect_kind(ClassKind::Newton)?;
        Ok(Self { newton })
    }

    /// The trivial bundle `[t]`: dimension `t`, all higher classes zero.
    pub fn trivial(t: i64, n: usize) -> Result<Self, ClassError> {
        let dim = R::from_rational(Rational::from_integer(t.into()));
        Self::new(ClassVector::new(ClassKind::Newton, dim, vec![R::zero(); n])?)
    }

    pub fn dim(&self) -> &R {
        self.newton.dim0()
    }

    pub fn newton(&self) -> &ClassVector<R> {
        &self.newton
    }

    pub fn into_newton(self) -> ClassVector<R> {
        self.newton
    }

    pub fn truncation(&self) -> usize {
        self.newton.truncation()
    }

    /// `s_i(ξ ⊕ η) = s_i(ξ) + s_i(η)` in every degree, including dimension.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ClassError> {
        same_truncation(self.truncation(), other.truncation())?;
        let values = self.newton.values.iter().zip(&other.newton.values).map(|(a, b)| a.plus(b)).collect();
        Self::new(ClassVector::new(ClassKind::Newton, self.dim().plus(other.dim()), values)?)
    }

    /// Integer multiple `t·ξ = ξ ⊕ … ⊕ ξ` (also `ξ ⊗ [t]`); negative `t` gives virtual bundles.
    pub fn multiple(&self, t: i64) -> Self {
        let q = Rational::from_integer(t.into());
        let newton = ClassVector {
            kind: ClassKind::Newton,
            dim0: self.dim().scaled(&q),
            values: self.newton.values.iter().map(|v| v.scaled(&q)).collect(),
        };
        Self { newton }
    }
}

impl<'de> Deserialize<'de> for VirtualBundleClass<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let newton = ClassVector::<Rational>::deserialize(deserializer)?;
        VirtualBundleClass::new(newton).map_err(D::Error::custom)
    }
}

pub(crate) fn same_truncation(a: usize, b: usize) -> Result<(), ClassError> {
    if a != b {
        return Err(ClassError::Truncation(format!("truncations differ: {a} vs {b}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational_from_int;

    fn q(n: i64) -> Rational {
        rational_from_int(n)
    }

    #[test]
    fn json_round_trip() {
        let v = ClassVector::new(ClassKind::Newton, q(1), vec![q(0), Rational::new(3.into(), 4.into())]).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"{"kind":"newton","dim0":"1","values":["0","3/4"]}"#);
        assert_eq!(serde_json::from_str::<ClassVector<Rational>>(&text).unwrap(), v);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(serde_json::from_str::<ClassVector<Rational>>(r#"{"kind":"chern","dim0":"1","values":[]}"#).is_err());
        assert!(serde_json::from_str::<ClassVector<Rational>>(r#"{"kind":"todd","dim0":"1","values":["0"]}"#).is_err());
        assert!(serde_json::from_str::<ClassVector<Rational>>(r#"{"kind":"chern","dim0":"x","values":["0"]}"#).is_err());
        assert!(serde_json::from_str::<VirtualBundleClass<Rational>>(r#"{"kind":"chern","dim0":"2","values":["0"]}"#)
            .is_err());
    }

    #[test]
    fn fab_predicates() {
        let v = ClassVector::new(ClassKind::Chern, q(1), vec![q(0), q(2)]).unwrap();
        assert!(v.is_fab());
        assert!(v.expect_fab(ClassKind::Chern).is_ok());
        assert!(matches!(v.expect_fab(ClassKind::Newton), Err(ClassError::Kind { .. })));
        let w = ClassVector::new(ClassKind::Chern, q(1), vec![q(1), q(2)]).unwrap();
        assert!(matches!(w.expect_fab(ClassKind::Chern), Err(ClassError::NotFab(_))));
        let half = ClassVector::new(ClassKind::Chern, q(1), vec![q(0), Rational::new(1.into(), 2.into())]).unwrap();
        assert!(!half.is_integral());
        assert!(v.is_integral());
    }

    #[test]
    fn symbolic_constructors() {
        let v = ClassVector::symbolic_fab(ClassKind::Chern, "A", 3).unwrap();
        let shown: Vec<String> = v.values().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["0", "c2(A)", "c3(A)"]);
        assert!(v.is_homogeneous());
        let p = ClassVector::symbolic_plain(ClassKind::Newton, "B", 2).unwrap();
        assert_eq!(p.dim0().to_string(), "dim(B)");
    }

    #[test]
    fn virtual_linearity() {
        let x = VirtualBundleClass::new(ClassVector::new(ClassKind::Newton, q(2), vec![q(0), q(5)]).unwrap()).unwrap();
        let y = x.multiple(-3);
        assert_eq!(y.dim(), &q(-6));
        assert_eq!(y.newton().value(2), &q(-15));
        let z = x.direct_sum(&y).unwrap();
        assert_eq!(z, x.multiple(-2));
        let short = VirtualBundleClass::<Rational>::trivial(1, 1).unwrap();
        assert!(x.direct_sum(&short).is_err());
    }
}
