use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Chern class `c_i`.
    C,
    /// Newton class `s_i`.
    S,
    /// Degree-zero dimension symbol.
    Dim,
}

/// A generator `c_i(label)`, `s_i(label)` or `dim(label)`; `c_i` and `s_i`
/// have grading weight `i ≥ 1`, `dim` has weight 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedVariable {
    label: String,
    family: Family,
    index: u32,
}

impl GradedVariable {
    /// # Panics
    /// If `index == 0`.
    pub fn chern(label: &str, index: u32) -> Self {
        assert!(index >= 1, "class index must be positive");
        Self { label: label.to_string(), family: Family::C, index }
    }

    /// # Panics
    /// If `index == 0`.
    pub fn newton(label: &str, index: u32) -> Self {
        assert!(index >= 1, "class index must be positive");
        Self { label: label.to_string(), family: Family::S, index }
    }

    pub fn dim(label: &str) -> Self {
        Self { label: label.to_string(), family: Family::Dim, index: 0 }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn degree(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for GradedVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::C => write!(f, "c{}", self.index)?,
            Family::S => write!(f, "s{}", self.index)?,
            Family::Dim => write!(f, "dim")?,
        }
        if !self.label.is_empty() {
            write!(f, "({})", self.label)?;
        }
        Ok(())
    }
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(GradedVariable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: GradedVariable) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(GradedVariable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.degree() * e).sum()
    }

    fn degree_in(&self, label: &str) -> u32 {
        self.0.iter().filter(|(v, _)| v.label == label).map(|(v, e)| v.degree() * e).sum()
    }

    fn exponent(&self, var: &GradedVariable) -> u32 {
        self.0.iter().find(|(v, _)| v == var).map_or(0, |(_, e)| *e)
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<GradedVariable, u32> = self.0.iter().cloned().collect();
        for (v, e) in &other.0 {
            *map.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn constant(q: Rational) -> Self {
        Self::term(Monomial::one(), q)
    }

    pub fn var(v: GradedVariable) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Common graded degree of all terms; `None` for inhomogeneous or zero polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    fn accumulate(&mut self, m: Monomial, q: Rational) {
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !q.is_zero() {
                    e.insert(q);
                }
            }
        }
    }

    /// Terms in display order: ascending total degree, then descending degree
    /// in each label (labels sorted), then descending exponent vectors.
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let labels: BTreeSet<&str> =
            self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v.label.as_str())).collect();
        let vars: BTreeSet<&GradedVariable> = self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v)).collect();
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| {
                    labels
                        .iter()
                        .map(|l| b.degree_in(l).cmp(&a.degree_in(l)))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
                .then_with(|| {
                    vars.iter()
                        .map(|v| b.exponent(v).cmp(&a.exponent(v)))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
        });
        out
    }
}

impl fmt::Display for GradedPolynomial {
    /// Canonical text such as `c4(A) - 5*c2(A)*c2(B) + c4(B)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.display_order().into_iter().enumerate() {
            let magnitude = c.abs();
            match (pos, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.accumulate(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Zero for GradedPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self + &rhs
    }
}
