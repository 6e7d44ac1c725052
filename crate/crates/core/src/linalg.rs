//! Dense exact linear algebra over `ℚ`.
//!
//! Matrices are row-major `Vec<Vec<BigRational>>`. Everything here is small
//! (at most a few dozen rows), so plain Gauss–Jordan elimination is used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Matrix = Vec<Vec<BigRational>>;

pub fn from_integers(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix, or [`Error::SingularSystem`].
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(inv)
}

pub fn mat_vec(m: &Matrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

/// Solves `m · x = rhs` exactly.
pub fn solve(m: &Matrix, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
    Ok(mat_vec(&inverse(m)?, rhs))
}

/// Determinant of an integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Matrix = from_integers(m);
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_2x2() {
        let m = from_integers(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, from_integers(&[vec![1, -1], vec![-1, 2]]));
    }

    #[test]
    fn singular_is_reported() {
        let m = from_integers(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(inverse(&m), Err(Error::SingularSystem));
    }

    #[test]
    fn solve_rational_system() {
        let m = from_integers(&[vec![2, 0], vec![0, 3]]);
        let x = solve(&m, &[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(x, vec![q(1, 2), q(1, 3)]);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }
}
