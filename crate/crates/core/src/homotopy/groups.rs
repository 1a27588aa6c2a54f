//! Closed-form stable homotopy groups of `Gr_{k,l}` and `Fr_{k,l}` and the
//! maps induced by `Gr_{k,l} → Gr_{m,n}` for `k | m`, `l | n`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;
use super::HomotopyError;

/// Parameters `k, l > 1` of a matrix Grassmannian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StablePair {
    k: u64,
    l: u64,
}

impl StablePair {
    pub fn new(k: u64, l: u64) -> Result<Self, HomotopyError> {
        if k < 2 || l < 2 {
            return Err(HomotopyError::Parameter(format!("k and l must exceed 1 (got k={k}, l={l})")));
        }
        Ok(Self { k, l })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// Highest degree covered by the closed formulas, `2·min{k, l}` (inclusive).
    pub fn stable_range(&self) -> u64 {
        stable_range(self.k, self.l)
    }

    fn check_degree(&self, r: u64) -> Result<(), HomotopyError> {
        let bound = self.stable_range();
        if r == 0 || r > bound {
            return Err(HomotopyError::UnstableRange { r, bound });
        }
        Ok(())
    }
}

pub fn stable_range(k: u64, l: u64) -> u64 {
    2 * k.min(l)
}

/// `π_r(Gr_{k,l})` for `1 ≤ r ≤ 2·min{k, l}`.
pub fn pi_grassmannian(r: u64, k: u64, l: u64) -> Result<AbelianGroup, HomotopyError> {
    let pair = StablePair::new(k, l)?;
    pair.check_degree(r)?;
    let d = k.gcd(&l);
    Ok(if r % 2 == 1 || r == 2 { AbelianGroup::cyclic(d) } else { AbelianGroup::integers() })
}

/// `π_r(Fr_{k,l})` for `1 ≤ r ≤ 2l`: zero in even degrees, `Z/k` in odd ones.
pub fn pi_frame_space(r: u64, k: u64, l: u64) -> Result<AbelianGroup, HomotopyError> {
    StablePair::new(k, l)?;
    let bound = 2 * l;
    if r == 0 || r > bound {
        return Err(HomotopyError::UnstableRange { r, bound });
    }
    Ok(if r % 2 == 0 { AbelianGroup::trivial() } else { AbelianGroup::cyclic(k) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InducedMapKind {
    /// `γ ↦ factor·γ` on `Z`.
    Multiplication,
    /// A cyclic subgroup of the target, described by its order (and generator
    /// when known).
    CyclicImage,
    Zero,
}

/// The homomorphism `π_r(Gr_{k,l}) → π_r(Gr_{m,n})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMapReport {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub kind: InducedMapKind,
    /// Multiplier `(m,n)/(k,l)` in even degrees `r ≥ 4`.
    pub factor: Option<u64>,
    /// Residue `(mn/kl) mod (m,n)` generating the image in odd degrees.
    pub image_generator: Option<u64>,
    /// Order of the image; `None` when it is infinite.
    pub image_order: Option<u64>,
    pub injective: bool,
}

impl InducedMapReport {
    pub fn is_isomorphism(&self) -> bool {
        if !self.injective {
            return false;
        }
        match self.kind {
            InducedMapKind::Multiplication => self.factor == Some(1),
            InducedMapKind::CyclicImage | InducedMapKind::Zero => {
                self.target.order().is_some() && self.image_order == self.target.order()
            }
        }
    }
}

fn check_map_parameters(r: u64, k: u64, l: u64, m: u64, n: u64) -> Result<StablePair, HomotopyError> {
    let pair = StablePair::new(k, l)?;
    StablePair::new(m, n)?;
    if m % k != 0 || n % l != 0 {
        return Err(HomotopyError::Divisibility { k, l, m, n });
    }
    pair.check_degree(r)?;
    Ok(pair)
}

/// Order of `x` in `Z/modulus`.
fn residue_order(x: u64, modulus: u64) -> u64 {
    modulus / x.gcd(&modulus)
}

pub fn induced_map(r: u64, k: u64, l: u64, m: u64, n: u64) -> Result<InducedMapReport, HomotopyError> {
    check_map_parameters(r, k, l, m, n)?;
    let source = pi_grassmannian(r, k, l)?;
    let target = pi_grassmannian(r, m, n)?;
    let d_src = k.gcd(&l);
    let d_tgt = m.gcd(&n);

    if r % 2 == 0 && r >= 4 {
        let factor = d_tgt / d_src;
        return Ok(InducedMapReport {
            source,
            target,
            kind: InducedMapKind::Multiplication,
            factor: Some(factor),
            image_generator: None,
            image_order: None,
            injective: factor != 0,
        });
    }
    if r == 2 {
        // Only injectivity is known here; the image is a copy of the source.
        let kind = if d_src == 1 { InducedMapKind::Zero } else { InducedMapKind::CyclicImage };
        return Ok(InducedMapReport {
            source,
            target,
            kind,
            factor: None,
            image_generator: None,
            image_order: Some(d_src),
            injective: true,
        });
    }
    let generator = ((m / k) * (n / l)) % d_tgt;
    let image_order = residue_order(generator, d_tgt);
    Ok(InducedMapReport {
        source,
        target,
        kind: if image_order == 1 { InducedMapKind::Zero } else { InducedMapKind::CyclicImage },
        factor: None,
        image_generator: Some(generator),
        image_order: Some(image_order),
        injective: image_order == d_src,
    })
}

/// Order of the image of `π_r(Gr_{k,l})` in `π_r(Gr_{m,n})` for odd `r`.
pub fn fab_inverse_map_order(k: u64, l: u64, m: u64, n: u64, r: u64) -> Result<u64, HomotopyError> {
    if r % 2 == 0 {
        return Err(HomotopyError::Parameter(format!("degree {r} must be odd")));
    }
    let report = induced_map(r, k, l, m, n)?;
    Ok(report.image_order.expect("odd degrees have finite image"))
}

/// Order of `mn/kl` in `Z/m`; equals `k` whenever `gcd(m, n) = 1`.
pub fn frame_map_residue_order(k: u64, l: u64, m: u64, n: u64) -> u64 {
    residue_order(((m / k) * (n / l)) % m, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmannian_examples() {
        assert_eq!(pi_grassmannian(2, 2, 3).unwrap(), AbelianGroup::trivial());
        assert_eq!(pi_grassmannian(4, 2, 3).unwrap(), AbelianGroup::integers());
        assert_eq!(pi_grassmannian(3, 4, 6).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(pi_grassmannian(1, 4, 6).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(pi_grassmannian(2, 4, 6).unwrap(), AbelianGroup::cyclic(2));
    }

    #[test]
    fn boundary_degree_included_and_beyond_rejected() {
        assert_eq!(pi_grassmannian(4, 2, 5).unwrap(), AbelianGroup::integers());
        assert_eq!(pi_grassmannian(5, 2, 5).unwrap_err(), HomotopyError::UnstableRange { r: 5, bound: 4 });
        assert!(pi_grassmannian(0, 2, 5).is_err());
        assert!(matches!(pi_grassmannian(2, 1, 5), Err(HomotopyError::Parameter(_))));
    }

    #[test]
    fn frame_space_examples() {
        assert_eq!(pi_frame_space(1, 2, 3).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(pi_frame_space(2, 5, 3).unwrap(), AbelianGroup::trivial());
        assert_eq!(pi_frame_space(5, 3, 4).unwrap(), AbelianGroup::cyclic(3));
        assert!(pi_frame_space(7, 3, 3).is_err());
    }

    #[test]
    fn stable_range_examples() {
        assert_eq!(stable_range(2, 3), 4);
        assert_eq!(stable_range(7, 7), 14);
        assert_eq!(stable_range(2, 100), 4);
        assert_eq!(StablePair::new(3, 5).unwrap().stable_range(), 6);
    }

    #[test]
    fn induced_even_multiplication() {
        let rep = induced_map(4, 2, 3, 4, 9).unwrap();
        assert_eq!(rep.kind, InducedMapKind::Multiplication);
        assert_eq!(rep.factor, Some(1));
        assert!(rep.is_isomorphism());
        let rep = induced_map(4, 2, 2, 4, 4).unwrap();
        assert_eq!(rep.factor, Some(2));
        assert!(rep.injective && !rep.is_isomorphism());
    }

    #[test]
    fn induced_odd_image() {
        let rep = induced_map(3, 2, 2, 4, 4).unwrap();
        assert_eq!(rep.image_generator, Some(0));
        assert_eq!(rep.image_order, Some(1));
        assert_eq!(rep.kind, InducedMapKind::Zero);
        assert!(!rep.injective);
        let rep = induced_map(1, 2, 2, 2, 6).unwrap();
        assert_eq!(rep.image_generator, Some(1));
        assert_eq!(rep.image_order, Some(2));
        assert!(rep.is_isomorphism());
    }

    #[test]
    fn induced_pi2_is_mono() {
        let rep = induced_map(2, 2, 2, 4, 4).unwrap();
        assert_eq!(rep.source, AbelianGroup::cyclic(2));
        assert_eq!(rep.target, AbelianGroup::cyclic(4));
        assert!(rep.injective);
        assert_eq!(rep.factor, None);
        assert!(!rep.is_isomorphism());
    }

    #[test]
    fn induced_errors() {
        assert!(matches!(induced_map(2, 2, 3, 5, 9), Err(HomotopyError::Divisibility { .. })));
        assert!(matches!(induced_map(5, 2, 3, 4, 9), Err(HomotopyError::UnstableRange { .. })));
    }

    #[test]
    fn inverse_map_order_examples() {
        assert_eq!(fab_inverse_map_order(2, 3, 4, 9, 3).unwrap(), 1);
        assert_eq!(fab_inverse_map_order(2, 2, 4, 4, 3).unwrap(), 1);
        assert_eq!(fab_inverse_map_order(2, 2, 8, 4, 3).unwrap(), 1);
        assert_eq!(fab_inverse_map_order(2, 2, 4, 8, 3).unwrap(), 1);
        assert!(fab_inverse_map_order(2, 2, 4, 8, 2).is_err());
    }

    #[test]
    fn frame_residue_order_small() {
        assert_eq!(frame_map_residue_order(2, 3, 4, 9), 2);
        assert_eq!(frame_map_residue_order(3, 2, 6, 5), 3);
    }

    #[test]
    fn json_report() {
        let rep = induced_map(3, 2, 2, 4, 4).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.contains(r#""kind":"zero""#), "{text}");
        assert_eq!(serde_json::from_str::<InducedMapReport>(&text).unwrap(), rep);
    }
}
