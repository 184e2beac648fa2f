//! Exact dense linear algebra over `Z` and `Q` for small symmetric matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lattice::{rat_int, Rational};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<Rational>>;

/// Leading principal minors `d_1, ..., d_n` by fraction-free elimination.
/// Stops early (returning the prefix) when a minor vanishes.
pub fn leading_minors(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.len();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &pivot - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Sylvester's criterion applied to `-m`.
pub fn is_negative_definite(m: &IntMatrix) -> bool {
    let neg: IntMatrix = m.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let minors = leading_minors(&neg);
    minors.len() == m.len() && minors.iter().all(Signed::is_positive)
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse by Gauss-Jordan elimination; `None` for a singular matrix.
pub fn inverse(m: &IntMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m.iter().map(|r| r.iter().map(rat_int).collect()).collect();
    let mut inv: RatMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        inv.swap(p, k);
        let piv = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &piv;
            inv[k][j] = &inv[k][j] / &piv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
                let t = &f * &inv[k][j];
                inv[i][j] -= t;
            }
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn int_mat_vec(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
