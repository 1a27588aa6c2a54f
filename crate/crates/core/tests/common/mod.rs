//! Test-side oracles. Nothing here calls the library routine it is used to check.
#![allow(dead_code)]

use fab_calc::classes::{ClassKind, ClassVector};
use fab_calc::linalg::{GaussianRational, Matrix, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Schoolbook product through `get`, independent of the library's elimination
/// and multiplication code. Rows of `a` and columns of `b` are put over a
/// common denominator so the inner sums stay in `Z[i]`.
pub fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.cols(), b.rows());
    let over_lcm = |xs: Vec<&GaussianRational>| {
        let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
        let ints: Vec<(BigInt, BigInt)> =
            xs.iter().map(|x| (x.re.numer() * (&den / x.re.denom()), x.im.numer() * (&den / x.im.denom()))).collect();
        (den, ints)
    };
    let rows: Vec<_> = (0..a.rows()).map(|i| over_lcm((0..a.cols()).map(|t| a.get(i, t)).collect())).collect();
    let cols: Vec<_> = (0..b.cols()).map(|j| over_lcm((0..b.rows()).map(|t| b.get(t, j)).collect())).collect();
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        let ((d, x), (e, y)) = (&rows[i], &cols[j]);
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for t in 0..a.cols() {
            re += &x[t].0 * &y[t].0 - &x[t].1 * &y[t].1;
            im += &x[t].0 * &y[t].1 + &x[t].1 * &y[t].0;
        }
        let den = Rational::from_integer(d * e);
        GaussianRational::new(Rational::from_integer(re) / &den, Rational::from_integer(im) / &den)
    })
}

/// `E_ij ⊗ 1_l` written out entry by entry (0-based `i`, `j`).
pub fn standard_unit(k: usize, l: usize, i: usize, j: usize) -> Matrix {
    Matrix::from_fn(k * l, k * l, |a, b| {
        let hit = a / l == i && b / l == j && a % l == b % l;
        GaussianRational::from_int(i64::from(hit))
    })
}

/// Integer matrix with entries in `[-3, 3]` and nonzero determinant (checked by
/// fraction-free Bareiss elimination).
pub fn random_invertible(n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if bareiss_nonzero(&rows) {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            return Matrix::from_int_rows(&refs);
        }
    }
}

fn bareiss_nonzero(rows: &[Vec<i64>]) -> bool {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::one();
    for p in 0..n {
        if m[p][p].is_zero() {
            match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                Some(r) => m.swap(p, r),
                None => return false,
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                m[i][j] = (&m[i][j] * &m[p][p] - &m[i][p] * &m[p][j]) / &prev;
            }
        }
        prev = m[p][p].clone();
    }
    true
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=5).into())
}

/// FAB Newton vector `(1, 0, x2, …, xN)` with random rational entries.
pub fn random_fab(n: usize, rng: &mut impl Rng) -> ClassVector<Rational> {
    let mut values: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
    values[0] = Rational::zero();
    ClassVector::new(ClassKind::Newton, Rational::one(), values).unwrap()
}

/// Exponential generating function product: `Σ s_r t^r/r!` multiplies, so
/// `s_r(out) = r!·Σ_{i+j=r} (a_i/i!)(b_j/j!)`.
pub fn egf_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len() - 1;
    let fact: Vec<Rational> = (0..=n)
        .scan(Rational::one(), |f, i| {
            if i > 0 {
                *f *= q(i as i64);
            }
            Some(f.clone())
        })
        .collect();
    (0..=n)
        .map(|r| {
            let sum = (0..=r).fold(Rational::zero(), |acc, i| acc + &a[i] / &fact[i] * (&b[r - i] / &fact[r - i]));
            sum * &fact[r]
        })
        .collect()
}

/// Degree-0 through degree-N entries of a class vector.
pub fn full(v: &ClassVector<Rational>) -> Vec<Rational> {
    std::iter::once(v.dim0().clone()).chain(v.values().iter().cloned()).collect()
}

/// Elementary symmetric polynomials `e_1..e_n` and power sums `p_1..p_n` of integer roots.
pub fn symmetric_functions(roots: &[i64], n: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut e = vec![q(0); n + 1];
    e[0] = q(1);
    for &x in roots {
        for d in (1..=n).rev() {
            let prev = e[d - 1].clone();
            e[d] += prev * q(x);
        }
    }
    let p = (1..=n).map(|d| roots.iter().map(|&x| q(x.pow(d as u32))).fold(q(0), |a, b| a + b)).collect();
    (e[1..].to_vec(), p)
}

/// Order of `x` in the additive group `Z/m`, by direct search.
pub fn additive_order(x: u64, m: u64) -> u64 {
    (1..=m).find(|t| (t * x) % m == 0).expect("t = m always works")
}
