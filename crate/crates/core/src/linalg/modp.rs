//! Linear algebra over `F_{p²} = Z[i]/p` for primes `p ≡ 3 (mod 4)` below `2^61`.
//!
//! Reduction mod `p` sends `Q(i)` to `F_{p²}` componentwise whenever the
//! denominators are prime to `p`. Rows independent mod `p` are independent
//! over `Q(i)`, so modular ranks are certified lower bounds.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::scalar::{GaussianRational, Rational};

/// Residue `re + im·i` in `F_{p²}`.
pub(crate) type Fp2 = (u64, u64);

const ZERO: Fp2 = (0, 0);

/// Primes `p ≡ 3 (mod 4)` in decreasing order from `2^61 - 1`.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        (0..).map(|t| (1u64 << 61) - 1 - 4 * t).filter(|&p| primal_check::miller_rabin(p)).take(512).collect()
    })
}

#[derive(Clone, Copy)]
pub(crate) struct Field {
    p: u64,
}

impl Field {
    pub(crate) fn new(p: u64) -> Self {
        debug_assert!(p % 4 == 3);
        Self { p }
    }

    fn mul_p(self, a: u64, b: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(self.p)) as u64
    }

    fn add_p(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub_p(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub(crate) fn inv_p(self, a: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a, self.p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_p(acc, base);
            }
            base = self.mul_p(base, base);
            e >>= 1;
        }
        acc
    }

    fn mul(self, x: Fp2, y: Fp2) -> Fp2 {
        if x.1 == 0 && y.1 == 0 {
            return (self.mul_p(x.0, y.0), 0);
        }
        (self.sub_p(self.mul_p(x.0, y.0), self.mul_p(x.1, y.1)), self.add_p(self.mul_p(x.0, y.1), self.mul_p(x.1, y.0)))
    }

    fn sub(self, x: Fp2, y: Fp2) -> Fp2 {
        (self.sub_p(x.0, y.0), self.sub_p(x.1, y.1))
    }

    fn neg(self, x: Fp2) -> Fp2 {
        self.sub(ZERO, x)
    }

    /// Nonzero input only; `a² + b² ≠ 0` because `-1` is not a square mod `p`.
    fn inv(self, x: Fp2) -> Fp2 {
        let t = self.inv_p(self.add_p(self.mul_p(x.0, x.0), self.mul_p(x.1, x.1)));
        (self.mul_p(x.0, t), self.mul_p(self.sub_p(0, x.1), t))
    }

    pub(crate) fn reduce_int(self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue below p")
    }

    fn reduce_rational(self, x: &Rational) -> Option<u64> {
        let den = self.reduce_int(x.denom());
        (den != 0).then(|| self.mul_p(self.reduce_int(x.numer()), self.inv_p(den)))
    }

    fn reduce(self, x: &GaussianRational) -> Option<Fp2> {
        Some((self.reduce_rational(&x.re)?, self.reduce_rational(&x.im)?))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub(crate) fn reduce_rows(self, rows: &mut [Vec<Fp2>], cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| rows[r][c] != ZERO) else {
                continue;
            };
            rows.swap(p, next);
            let inv = self.inv(rows[next][c]);
            for x in rows[next].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[next].clone();
            let nz: Vec<usize> = (c..cols).filter(|&j| pivot_row[j] != ZERO).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                let f = row[c];
                if r == next || f == ZERO {
                    continue;
                }
                for &j in &nz {
                    row[j] = self.sub(row[j], self.mul(f, pivot_row[j]));
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Kernel basis of a reduced form, one vector per free column, in the
    /// same normalization as the exact routine.
    pub(crate) fn kernel(self, rref: &[Vec<Fp2>], pivots: &[usize], cols: usize) -> Vec<Vec<Fp2>> {
        let mut is_pivot = vec![false; cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![ZERO; cols];
                v[free] = (1, 0);
                for (row, &p) in rref.iter().zip(pivots) {
                    v[p] = self.neg(row[free]);
                }
                v
            })
            .collect()
    }
}

/// Indices of a maximal set of rows independent mod the first prime, in input
/// order. `None` if some denominator vanishes mod that prime.
pub(crate) fn independent_rows(rows: &[Vec<GaussianRational>]) -> Option<Vec<usize>> {
    let field = Field::new(primes()[0]);
    // Each basis row is zero at the pivots of all earlier basis rows and 1 at its own.
    let mut basis: Vec<(usize, Vec<Fp2>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.iter().map(|x| field.reduce(x)).collect::<Option<Vec<Fp2>>>()?;
        for (pc, b) in &basis {
            let f = v[*pc];
            if f == ZERO {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if *y != ZERO {
                    *x = field.sub(*x, field.mul(f, *y));
                }
            }
        }
        let Some(pc) = v.iter().position(|x| *x != ZERO) else {
            continue;
        };
        let inv = field.inv(v[pc]);
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
        basis.push((pc, v));
        chosen.push(idx);
    }
    Some(chosen)
}
