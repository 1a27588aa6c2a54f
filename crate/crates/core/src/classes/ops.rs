use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::vector::{same_truncation, ClassKind, ClassRing, ClassVector, VirtualBundleClass};
use super::ClassError;
use crate::linalg::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn sign(j: usize) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Binomial coefficients `C(r, 0..=r)` for `r = 0..=n`.
fn binomials(n: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![BigInt::from(1); r + 1];
        for i in 1..r {
            row[i] = &prev[i - 1] + &prev[i];
        }
        rows.push(row);
    }
    rows.into_iter().map(|row| row.into_iter().map(Rational::from_integer).collect()).collect()
}

/// `s_r = Σ_{i+j=r} r!/(i!j!)·x_i·y_j` for `r = 1..=N`, with degree-0 entries taken from the vectors.
fn binomial_convolution<R: ClassRing>(x: &ClassVector<R>, y: &ClassVector<R>) -> Vec<R> {
    let n = x.truncation();
    let binom = binomials(n);
    (1..=n)
        .map(|r| (0..=r).fold(R::zero(), |acc, i| acc.plus(&x.value(i).times(y.value(r - i)).scaled(&binom[r][i]))))
        .collect()
}

/// Newton classes from Chern classes via `s_k − s_{k−1}c_1 + … + (−1)^k k c_k = 0`.
pub fn newton_from_chern<R: ClassRing>(c: &ClassVector<R>) -> Result<ClassVector<R>, ClassError> {
    c.expect_kind(ClassKind::Chern)?;
    let n = c.truncation();
    let mut s: Vec<R> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = c.value(k).scaled(&q(sign(k + 1) * k as i64));
        for j in 1..k {
            acc = acc.plus(&s[k - j - 1].times(c.value(j)).scaled(&q(sign(j + 1))));
        }
        s.push(acc);
    }
    ClassVector::new(ClassKind::Newton, c.dim0().clone(), s)
}

/// Inverse of [`newton_from_chern`]; step `k` divides by `k`.
pub fn chern_from_newton<R: ClassRing>(s: &ClassVector<R>) -> Result<ClassVector<R>, ClassError> {
    s.expect_kind(ClassKind::Newton)?;
    let n = s.truncation();
    let mut c: Vec<R> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = s.value(k).clone();
        for j in 1..k {
            acc = acc.plus(&s.value(k - j).times(&c[j - 1]).scaled(&q(sign(j))));
        }
        c.push(acc.scaled(&Rational::new(sign(k + 1).into(), (k as i64).into())));
    }
    ClassVector::new(ClassKind::Chern, s.dim0().clone(), c)
}

/// Newton classes of `ξ ⊗ η`, with `s_0 = dim`.
pub fn tensor_newton<R: ClassRing>(
    x: &VirtualBundleClass<R>,
    y: &VirtualBundleClass<R>,
) -> Result<VirtualBundleClass<R>, ClassError> {
    same_truncation(x.truncation(), y.truncation())?;
    let values = binomial_convolution(x.newton(), y.newton());
    VirtualBundleClass::new(ClassVector::new(ClassKind::Newton, x.dim().times(y.dim()), values)?)
}

/// Newton classes of the product of two FABs (`s̃_0 = 1`).
pub fn fab_newton_product<R: ClassRing>(a: &ClassVector<R>, b: &ClassVector<R>) -> Result<ClassVector<R>, ClassError> {
    a.expect_fab(ClassKind::Newton)?;
    b.expect_fab(ClassKind::Newton)?;
    same_truncation(a.truncation(), b.truncation())?;
    ClassVector::new(ClassKind::Newton, R::one(), binomial_convolution(a, b))
}

/// Chern classes of the product of two FABs in degrees `1..=n`.
pub fn fab_chern_product<R: ClassRing>(
    a: &ClassVector<R>,
    b: &ClassVector<R>,
    n: usize,
) -> Result<ClassVector<R>, ClassError> {
    a.expect_fab(ClassKind::Chern)?;
    b.expect_fab(ClassKind::Chern)?;
    let sa = newton_from_chern(&a.truncate(n)?)?;
    let sb = newton_from_chern(&b.truncate(n)?)?;
    chern_from_newton(&fab_newton_product(&sa, &sb)?)
}

/// The inverse FAB class: the unique `b` with `fab_newton_product(a, b)` trivial.
pub fn fab_inverse<R: ClassRing>(a: &ClassVector<R>) -> Result<ClassVector<R>, ClassError> {
    a.expect_fab(ClassKind::Newton)?;
    let n = a.truncation();
    let binom = binomials(n);
    let mut b: Vec<R> = Vec::with_capacity(n);
    for r in 1..=n {
        let mut acc = a.value(r).clone();
        for i in 1..r {
            acc = acc.plus(&a.value(i).times(&b[r - i - 1]).scaled(&binom[r][i]));
        }
        b.push(acc.scaled(&q(-1)));
    }
    ClassVector::new(ClassKind::Newton, R::one(), b)
}

fn integer_dim<R: ClassRing>(x: &VirtualBundleClass<R>) -> Result<i64, ClassError> {
    x.dim()
        .as_integer()
        .and_then(|d| d.to_i64())
        .ok_or_else(|| ClassError::Dimension(format!("dimension {} is not an integer", x.dim())))
}

/// FAB Newton classes `s̃_i = s_i(ξ)/k` of `End ξ` for an SU-bundle `ξ` of dimension `k`.
///
/// Results may be non-integral for arbitrary input; see [`ClassVector::is_integral`].
pub fn fab_from_su_bundle<R: ClassRing>(xi: &VirtualBundleClass<R>, k: i64) -> Result<ClassVector<R>, ClassError> {
    if k < 1 {
        return Err(ClassError::Dimension(format!("k = {k} must be positive")));
    }
    let dim = integer_dim(xi)?;
    if dim != k {
        return Err(ClassError::Dimension(format!("bundle has dimension {dim}, expected {k}")));
    }
    if !xi.newton().value(1).is_zero() {
        return Err(ClassError::NotSu);
    }
    let inv = Rational::new(1.into(), k.into());
    let values = xi.newton().values().iter().map(|v| v.scaled(&inv)).collect();
    ClassVector::new(ClassKind::Newton, R::one(), values)
}

/// Recovers `η` of virtual dimension 1 from a pair with `ξ_k ⊗ [m] = ξ_m ⊗ [k]`,
/// as `η = l·ξ_k + n·ξ_m` where `kl + mn = 1`.
pub fn psi_bezout<R: ClassRing>(
    xk: &VirtualBundleClass<R>,
    xm: &VirtualBundleClass<R>,
) -> Result<VirtualBundleClass<R>, ClassError> {
    same_truncation(xk.truncation(), xm.truncation())?;
    let k = integer_dim(xk)?;
    let m = integer_dim(xm)?;
    let (l, n) = bezout_coefficients(k, m)?;
    for i in 1..=xk.truncation() {
        let lhs = xk.newton().value(i).scaled(&q(m));
        let rhs = xm.newton().value(i).scaled(&q(k));
        if lhs != rhs {
            return Err(ClassError::Compatibility { index: i });
        }
    }
    xk.multiple(l).direct_sum(&xm.multiple(n))
}

/// `(l, n)` with `k·l + m·n = 1`, from the extended Euclidean algorithm.
pub fn bezout_coefficients(k: i64, m: i64) -> Result<(i64, i64), ClassError> {
    let e = k.extended_gcd(&m);
    if e.gcd != 1 {
        return Err(ClassError::NotCoprime { k, m });
    }
    Ok((e.x, e.y))
}

/// The pair `(k·η, m·η)` attached to a class `η` of virtual dimension 1.
pub fn phi_pair<R: ClassRing>(
    eta: &VirtualBundleClass<R>,
    k: i64,
    m: i64,
) -> (VirtualBundleClass<R>, VirtualBundleClass<R>) {
    (eta.multiple(k), eta.multiple(m))
}
