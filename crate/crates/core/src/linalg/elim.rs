//! Fraction-free Gauss–Jordan elimination over the Gaussian integers.
//!
//! Rows are scaled to `Z[i]` once; every later division is exact, so no
//! gcd reductions happen inside the elimination loop. After step `t` every
//! entry is a `t × t` (or `(t+1) × (t+1)`) minor of the scaled matrix and all
//! pivot entries equal the last pivot `d`, hence `RREF = M / d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::independent_rows;
use super::multimod;
use super::scalar::{GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub(crate) re: BigInt,
    pub(crate) im: BigInt,
}

impl GaussInt {
    pub(crate) fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        Self { re: BigInt::one(), im: BigInt::zero() }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self { re: &self.re * &o.re, im: BigInt::zero() };
        }
        Self { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        Self { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// `self / d`, where the quotient is known to lie in `Z[i]`.
    fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            return Self { re: &self.re / &d.re, im: &self.im / &d.re };
        }
        let conj = Self { re: d.re.clone(), im: -&d.im };
        let norm = &d.re * &d.re + &d.im * &d.im;
        let num = self.mul(&conj);
        Self { re: num.re / &norm, im: num.im / &norm }
    }

    fn over(&self, d: &Self) -> GaussianRational {
        let as_rational = |x: &BigInt| Rational::from_integer(x.clone());
        let num = GaussianRational::new(as_rational(&self.re), as_rational(&self.im));
        let den = GaussianRational::new(as_rational(&d.re), as_rational(&d.im));
        &num / &den
    }
}

/// Multiplies a row by the lcm of its denominators.
fn integral_row(row: &[GaussianRational]) -> Vec<GaussInt> {
    clear_denominators(row.iter()).1
}

/// The lcm `d` of the denominators and the entries multiplied by `d`.
pub(crate) fn clear_denominators<'a>(
    entries: impl Iterator<Item = &'a GaussianRational> + Clone,
) -> (BigInt, Vec<GaussInt>) {
    let lcm = entries.clone().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
    let scaled = entries
        .map(|x| GaussInt { re: x.re.numer() * (&lcm / x.re.denom()), im: x.im.numer() * (&lcm / x.im.denom()) })
        .collect();
    (lcm, scaled)
}

/// In-place reduced row echelon form over the first `cols` columns; the
/// remaining columns are carried along. Returns the pivot columns.
///
/// Pivots are taken from the first row with a nonzero entry in each column.
pub(crate) fn reduce_rows(rows: &mut [Vec<GaussianRational>], cols: usize) -> Vec<usize> {
    let mut m: Vec<Vec<GaussInt>> = rows.iter().map(|r| integral_row(r)).collect();
    let mut pivots = Vec::new();
    let mut prev = GaussInt::one();
    let mut next = 0;
    for c in 0..cols {
        if next == m.len() {
            break;
        }
        let Some(p) = (next..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(p, next);
        let (before, rest) = m.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        let piv = pivot_row[c].clone();
        for row in before.iter_mut().chain(after.iter_mut()) {
            let f = row[c].clone();
            for j in 0..row.len() {
                let (x, y) = (&row[j], &pivot_row[j]);
                if x.is_zero() && (f.is_zero() || y.is_zero()) {
                    continue;
                }
                let mut v = piv.mul(x);
                if !f.is_zero() && !y.is_zero() {
                    v = v.sub(&f.mul(y));
                }
                row[j] = v.div_exact(&prev);
            }
        }
        prev = piv;
        pivots.push(c);
        next += 1;
    }
    for (dst, src) in rows.iter_mut().zip(&m) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = if s.is_zero() { GaussianRational::zero() } else { s.over(&prev) };
        }
    }
    pivots
}

/// Nonzero rows of the reduced row echelon form, with their pivot columns.
///
/// A row subset independent mod `p` is solved, first by Chinese remaindering
/// and then, failing that, by exact elimination. A candidate kernel is kept
/// only if every row of the input is orthogonal to it, which makes it the
/// kernel of the whole matrix. Otherwise the whole matrix is reduced. Either
/// way the output is the canonical reduced form of the full row space.
pub(crate) fn row_space(rows: &[Vec<GaussianRational>], cols: usize) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
    let full = || {
        let mut all = rows.to_vec();
        let pivots = reduce_rows(&mut all, cols);
        all.truncate(pivots.len());
        (all, pivots)
    };
    let Some(chosen) = independent_rows(rows) else {
        return full();
    };
    if chosen.len() == cols {
        // Full column rank: the reduced form is the identity.
        let identity =
            (0..cols).map(|i| (0..cols).map(|j| GaussianRational::from_int(i64::from(i == j))).collect()).collect();
        return (identity, (0..cols).collect());
    }
    let integral: Vec<Vec<GaussInt>> = rows.iter().map(|r| integral_row(r)).collect();
    let supports: Vec<Vec<usize>> = integral.iter().map(|r| (0..cols).filter(|&j| !r[j].is_zero()).collect()).collect();
    let annihilates = |kernel: &[Vec<GaussianRational>]| {
        kernel.iter().all(|v| {
            let v = integral_row(v);
            integral.iter().zip(&supports).all(|(row, support)| {
                support.iter().fold(GaussInt::zero(), |acc, &j| acc.add(&row[j].mul(&v[j]))).is_zero()
            })
        })
    };
    let sub: Vec<Vec<GaussInt>> = chosen.iter().map(|&i| integral[i].clone()).collect();
    if let Some((pivots, kernel)) = multimod::kernel(&sub, chosen.len(), cols, annihilates) {
        return (rref_from_kernel(&kernel, &pivots, cols), pivots);
    }
    let mut sub: Vec<Vec<GaussianRational>> = chosen.iter().map(|&i| rows[i].clone()).collect();
    let pivots = reduce_rows(&mut sub, cols);
    if annihilates(&kernel_vectors(&sub, &pivots, cols)) {
        return (sub, pivots);
    }
    full()
}

/// Inverse of [`kernel_vectors`]: the reduced rows whose kernel is `kernel`.
fn rref_from_kernel(kernel: &[Vec<GaussianRational>], pivots: &[usize], cols: usize) -> Vec<Vec<GaussianRational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    pivots
        .iter()
        .map(|&p| {
            let mut row = vec![GaussianRational::zero(); cols];
            row[p] = GaussianRational::one();
            for (&f, v) in free.iter().zip(kernel) {
                if !v[p].is_zero() {
                    row[f] = -v[p].clone();
                }
            }
            row
        })
        .collect()
}

/// Kernel basis read off a reduced row echelon form: one vector per free
/// column, equal to 1 there and 0 at the other free columns.
pub(crate) fn kernel_vectors(
    rref: &[Vec<GaussianRational>],
    pivots: &[usize],
    cols: usize,
) -> Vec<Vec<GaussianRational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![GaussianRational::zero(); cols];
            v[free] = GaussianRational::one();
            for (row, &p) in rref.iter().zip(pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    #[test]
    fn exact_gaussian_division() {
        let a = GaussInt { re: 5.into(), im: 5.into() };
        let b = GaussInt { re: 1.into(), im: 2.into() };
        // (5 + 5i) / (1 + 2i) = 3 - i
        assert_eq!(a.div_exact(&b), GaussInt { re: 3.into(), im: (-1).into() });
    }

    #[test]
    fn complex_rows_reduce() {
        let mut rows = vec![vec![g(0, 1), g(1, 0), g(2, 0)], vec![g(1, 0), g(0, -1), g(0, -2)]];
        let piv = reduce_rows(&mut rows, 3);
        assert_eq!(piv, vec![0]);
        assert_eq!(rows[0], vec![g(1, 0), g(0, -1), g(0, -2)]);
        assert!(rows[1].iter().all(|x| *x == g(0, 0)));
    }

    #[test]
    fn verified_row_space_matches_full_reduction() {
        // Tall, rank 3, with complex entries and repeated combinations.
        let base = [
            vec![g(1, 0), g(2, 1), g(0, 0), g(3, 0), g(-1, 2)],
            vec![g(0, 0), g(0, 3), g(5, 0), g(1, 1), g(2, 0)],
            vec![g(7, -1), g(0, 0), g(1, 0), g(0, 0), g(4, 4)],
        ];
        let mut rows = base.to_vec();
        for (x, y) in [(0, 1), (1, 2), (2, 0), (0, 2)] {
            let f = g(x as i64 + 2, -(y as i64));
            rows.push(base[x].iter().zip(&base[y]).map(|(a, b)| &(a * &f) + b).collect());
        }
        let (fast, fast_pivots) = row_space(&rows, 5);
        let mut all = rows.clone();
        let pivots = reduce_rows(&mut all, 5);
        all.truncate(pivots.len());
        assert_eq!((fast, fast_pivots), (all, pivots));
    }
}
