//! Kernel of a full-row-rank system over `Z[i]` by Chinese remaindering and
//! rational reconstruction.
//!
//! If the rows are independent over `Q(i)` and stay independent mod `p`, the
//! pivot columns mod `p` are the true pivot columns (a column dependent on
//! earlier ones stays dependent mod `p`), so the modular reduced form is the
//! reduction of the exact one. Residues are combined until every entry
//! reconstructs and the caller's exact check accepts the candidate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elim::GaussInt;
use super::modp::{primes, Field, Fp2};
use super::scalar::{GaussianRational, Rational};

/// Smallest `a/b` with `a ≡ b·u (mod m)` and `|a|, b ≤ bound`.
fn reconstruct(u: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// `log2` of the Hadamard bound on maximal minors, rounded up.
fn hadamard_bits(rows: &[Vec<GaussInt>]) -> u64 {
    rows.iter()
        .map(|row| {
            let sq = row.iter().fold(BigInt::zero(), |acc, x| acc + &x.re * &x.re + &x.im * &x.im);
            sq.bits() / 2 + 1
        })
        .sum()
}

/// Kernel vectors (one per free column, 1 there and 0 at the other free
/// columns) and pivot columns of `rows`, which must have rank `rank`.
///
/// Returns `None` when the modulus passes the a priori reconstruction bound
/// without an accepted candidate.
pub(crate) fn kernel(
    rows: &[Vec<GaussInt>],
    rank: usize,
    cols: usize,
    accept: impl Fn(&[Vec<GaussianRational>]) -> bool,
) -> Option<(Vec<usize>, Vec<Vec<GaussianRational>>)> {
    // Entries are quotients of minors; real and imaginary parts of such a
    // quotient have numerator and denominator at most H^2 in absolute value.
    let cap = 4 * hadamard_bits(rows) + 4;
    let mut modulus = BigInt::one();
    let mut residues: Vec<Vec<(BigInt, BigInt)>> = Vec::new();
    let mut pivots = Vec::new();
    let mut used = 0usize;
    let mut next_attempt = 1usize;
    for &p in primes() {
        let field = Field::new(p);
        let mut reduced: Vec<Vec<Fp2>> = rows
            .iter()
            .map(|row| row.iter().map(|x| (field.reduce_int(&x.re), field.reduce_int(&x.im))).collect())
            .collect();
        let piv = field.reduce_rows(&mut reduced, cols);
        if piv.len() != rank {
            continue;
        }
        let ker = field.kernel(&reduced, &piv, cols);
        if used == 0 {
            pivots = piv;
            residues =
                ker.iter().map(|v| v.iter().map(|&(a, b)| (BigInt::from(a), BigInt::from(b))).collect()).collect();
        } else {
            debug_assert_eq!(piv, pivots);
            let m_inv = field.inv_p(field.reduce_int(&modulus));
            let lift = |x: &mut BigInt, r: u64| {
                let x_mod = field.reduce_int(x);
                let t = ((u128::from((r + p - x_mod) % p) * u128::from(m_inv)) % u128::from(p)) as u64;
                *x += &modulus * BigInt::from(t);
            };
            for (acc, v) in residues.iter_mut().zip(&ker) {
                for ((re, im), &(a, b)) in acc.iter_mut().zip(v) {
                    lift(re, a);
                    lift(im, b);
                }
            }
        }
        modulus *= BigInt::from(p);
        used += 1;
        let exhausted = modulus.bits() > cap;
        if used == next_attempt || exhausted {
            next_attempt = (used * 3 / 2).max(used + 1);
            let bound = (&modulus / 2u32).sqrt();
            let candidate: Option<Vec<Vec<GaussianRational>>> = residues
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|(re, im)| {
                            Some(GaussianRational::new(
                                reconstruct(re, &modulus, &bound)?,
                                reconstruct(im, &modulus, &bound)?,
                            ))
                        })
                        .collect()
                })
                .collect();
            if let Some(candidate) = candidate {
                if accept(&candidate) {
                    return Some((pivots, candidate));
                }
            }
            if exhausted {
                return None;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(1_000_003i64);
        let bound = (&m / 2u32).sqrt();
        // -3/7 mod m
        let inv7 = BigInt::from(7).modpow(&(&m - 2u32), &m);
        let u = (BigInt::from(-3) * inv7).mod_floor(&m);
        assert_eq!(reconstruct(&u, &m, &bound), Some(Rational::new((-3).into(), 7.into())));
    }
}
