//! Recomputes the Grassmannian homotopy groups from the exact sequence of the
//! fibration `PU(k) ⊗ PU(l) → PU(kl) → Gr_{k,l}` using only Smith normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::AbelianGroup;
use super::HomotopyError;
use crate::linalg::{smith_normal_form, IntMatrix};

/// Kernel and cokernel of the homomorphism
/// `Z^a / ⟨source_rel⟩ → Z^b / ⟨target_rel⟩` induced by the `b × a` matrix `f`.
///
/// Relations are given as columns. `f` must map source relations into the
/// span of the target relations.
pub fn kernel_cokernel(
    f: &IntMatrix,
    source_rel: &IntMatrix,
    target_rel: &IntMatrix,
) -> Result<(AbelianGroup, AbelianGroup), HomotopyError> {
    let (b, a) = (f.rows(), f.cols());
    if source_rel.rows() != a || target_rel.rows() != b {
        return Err(HomotopyError::Parameter("relation matrices do not match the map".into()));
    }
    let h = f.hstack(target_rel)?;
    let snf_h = smith_normal_form(&h);
    let cokernel = AbelianGroup::from_diagonal(&snf_h.diagonal(), b);

    // Preimage lattice: project ker(h) onto the first a coordinates.
    let rho = snf_h.rank();
    let preimage = snf_h.v.submatrix(0..a, rho..h.cols());

    // Basis of the preimage lattice: columns of U⁻¹ scaled by the Smith diagonal.
    let snf_p = smith_normal_form(&preimage);
    let dims = snf_p.diagonal();
    let rank_p = snf_p.rank();
    let moved = snf_p.u.mul(source_rel)?;
    let mut coords = IntMatrix::zeros(rank_p, source_rel.cols());
    for i in 0..moved.rows() {
        for j in 0..moved.cols() {
            let x = moved.get(i, j);
            if i < rank_p {
                let (q, rem) = x.div_rem(&dims[i]);
                if !rem.is_zero() {
                    return Err(HomotopyError::Parameter("source relations leave the preimage lattice".into()));
                }
                coords.set(i, j, q);
            } else if !x.is_zero() {
                return Err(HomotopyError::Parameter("source relations leave the preimage lattice".into()));
            }
        }
    }
    let kernel = AbelianGroup::from_diagonal(&smith_normal_form(&coords).diagonal(), rank_p);
    Ok((kernel, cokernel))
}

/// `(π_{2r}, π_{2r−1})` of `Gr_{k,l}` as kernel and cokernel of
/// `(α, β) ↦ lα + kβ`.
///
/// For `2 ≤ r ≤ min{k, l}` the map is `Z ⊕ Z → Z`; for `r = 1` it is
/// `Z/k ⊕ Z/l → Z/kl`, presented with relation columns.
pub fn exact_sequence_oracle(k: u64, l: u64, r: u64) -> Result<(AbelianGroup, AbelianGroup), HomotopyError> {
    if k < 2 || l < 2 {
        return Err(HomotopyError::Parameter(format!("k and l must exceed 1 (got k={k}, l={l})")));
    }
    let top = k.min(l);
    if r == 0 || r > top {
        return Err(HomotopyError::UnstableRange { r: 2 * r, bound: 2 * top });
    }
    let f = int_rows(&[&[l, k]]);
    if r >= 2 {
        return kernel_cokernel(&f, &IntMatrix::zeros(2, 0), &IntMatrix::zeros(1, 0));
    }
    let source_rel = int_rows(&[&[k, 0], &[0, l]]);
    let target_rel = int_rows(&[&[k * l]]);
    kernel_cokernel(&f, &source_rel, &target_rel)
}

fn int_rows(rows: &[&[u64]]) -> IntMatrix {
    let cols = rows[0].len();
    let data = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
    IntMatrix::new(rows.len(), cols, data).expect("rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(exact_sequence_oracle(2, 3, 2).unwrap(), (AbelianGroup::integers(), AbelianGroup::trivial()));
        assert_eq!(exact_sequence_oracle(4, 6, 2).unwrap(), (AbelianGroup::integers(), AbelianGroup::cyclic(2)));
        assert_eq!(exact_sequence_oracle(5, 5, 3).unwrap(), (AbelianGroup::integers(), AbelianGroup::cyclic(5)));
    }

    #[test]
    fn finite_presentation_degree_one() {
        assert_eq!(exact_sequence_oracle(4, 6, 1).unwrap(), (AbelianGroup::cyclic(2), AbelianGroup::cyclic(2)));
        assert_eq!(exact_sequence_oracle(2, 3, 1).unwrap(), (AbelianGroup::trivial(), AbelianGroup::trivial()));
        assert_eq!(exact_sequence_oracle(6, 9, 1).unwrap(), (AbelianGroup::cyclic(3), AbelianGroup::cyclic(3)));
    }

    #[test]
    fn out_of_range() {
        assert!(exact_sequence_oracle(2, 3, 3).is_err());
        assert!(exact_sequence_oracle(2, 3, 0).is_err());
        assert!(exact_sequence_oracle(1, 3, 1).is_err());
    }

    #[test]
    fn kernel_cokernel_of_multiplication() {
        // Z --2--> Z: kernel 0, cokernel Z/2.
        let f = IntMatrix::from_rows(&[&[2]]);
        let (ker, coker) = kernel_cokernel(&f, &IntMatrix::zeros(1, 0), &IntMatrix::zeros(1, 0)).unwrap();
        assert!(ker.is_trivial());
        assert_eq!(coker, AbelianGroup::cyclic(2));
        // Z/4 --2--> Z/4: kernel Z/2, cokernel Z/2.
        let (ker, coker) = kernel_cokernel(&f, &IntMatrix::from_rows(&[&[4]]), &IntMatrix::from_rows(&[&[4]])).unwrap();
        assert_eq!(ker, AbelianGroup::cyclic(2));
        assert_eq!(coker, AbelianGroup::cyclic(2));
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        // Z/2 --1--> Z/3 is not a homomorphism.
        let f = IntMatrix::from_rows(&[&[1]]);
        assert!(kernel_cokernel(&f, &IntMatrix::from_rows(&[&[2]]), &IntMatrix::from_rows(&[&[3]])).is_err());
    }
}
