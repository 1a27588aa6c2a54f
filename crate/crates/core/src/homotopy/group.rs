use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{smith_normal_form, IntMatrix};

/// Finitely generated abelian group `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_m` in invariant
/// factor form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr")]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<u64>,
}

#[derive(Deserialize)]
struct GroupRepr {
    rank: usize,
    torsion: Vec<u64>,
}

impl TryFrom<GroupRepr> for AbelianGroup {
    type Error = String;
    fn try_from(r: GroupRepr) -> Result<Self, String> {
        let g = AbelianGroup::from_cyclic_factors(r.rank, &r.torsion);
        if g.torsion != r.torsion {
            return Err(format!("torsion {:?} is not in invariant-factor form", r.torsion));
        }
        Ok(g)
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self { rank: 0, torsion: Vec::new() }
    }

    pub fn integers() -> Self {
        Self { rank: 1, torsion: Vec::new() }
    }

    /// `Z/d`; `d = 1` gives the trivial group and `d = 0` gives `Z`.
    pub fn cyclic(d: u64) -> Self {
        Self::from_cyclic_factors(0, &[d])
    }

    /// Normalizes `Z^rank ⊕ ⨁ Z/dᵢ` for arbitrary `dᵢ` (zeros count as free
    /// summands, ones vanish) into invariant-factor form.
    pub fn from_cyclic_factors(rank: usize, factors: &[u64]) -> Self {
        let n = factors.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, &d) in factors.iter().enumerate() {
            diag.set(i, i, BigInt::from(d));
        }
        let mut g = Self::from_diagonal(&smith_normal_form(&diag).diagonal(), n);
        g.rank += rank;
        g
    }

    /// The cokernel of a map `Z^m → Z^generators` whose Smith diagonal is `diag`.
    pub(crate) fn from_diagonal(diag: &[BigInt], generators: usize) -> Self {
        let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
        let rank = generators - nonzero.len();
        let torsion = nonzero
            .into_iter()
            .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
            .filter(|&d| d != 1)
            .collect();
        Self { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    /// `Z^r x Z/d1 x …`, with `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        assert_eq!(AbelianGroup::from_cyclic_factors(0, &[2, 3]), AbelianGroup::cyclic(6));
        assert_eq!(AbelianGroup::from_cyclic_factors(1, &[4, 6]).torsion(), &[2, 12]);
        assert_eq!(AbelianGroup::from_cyclic_factors(0, &[1, 1]), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::cyclic(0), AbelianGroup::integers());
        assert_eq!(AbelianGroup::from_cyclic_factors(0, &[2, 0]).to_string(), "Z x Z/2");
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::integers().to_string(), "Z");
        assert_eq!(AbelianGroup::from_cyclic_factors(2, &[3, 9]).to_string(), "Z^2 x Z/3 x Z/9");
    }

    #[test]
    fn json_shape() {
        let g = AbelianGroup::from_cyclic_factors(1, &[2]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"rank":1,"torsion":[2]}"#);
        assert_eq!(serde_json::from_str::<AbelianGroup>(&text).unwrap(), g);
        assert!(serde_json::from_str::<AbelianGroup>(r#"{"rank":0,"torsion":[2,3]}"#).is_err());
        assert!(serde_json::from_str::<AbelianGroup>(r#"{"rank":0,"torsion":[1]}"#).is_err());
    }

    proptest::proptest! {
        #[test]
        fn always_a_divisibility_chain(factors in proptest::collection::vec(0u64..40, 0..5)) {
            let g = AbelianGroup::from_cyclic_factors(0, &factors);
            for w in g.torsion().windows(2) {
                proptest::prop_assert_eq!(w[1] % w[0], 0);
            }
            proptest::prop_assert!(g.torsion().iter().all(|&d| d >= 2));
            let finite: u64 = factors.iter().filter(|&&d| d != 0).product();
            let zeros = factors.iter().filter(|&&d| d == 0).count();
            proptest::prop_assert_eq!(g.rank(), zeros);
            proptest::prop_assert_eq!(g.torsion().iter().product::<u64>(), finite);
        }
    }
}
