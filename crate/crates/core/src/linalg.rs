//! Dense exact linear algebra over Gaussian rationals.

use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

pub type Matrix = Vec<Vec<GaussianRational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = GaussianRational::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul(v: &[GaussianRational], m: &Matrix) -> Vec<GaussianRational> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![GaussianRational::zero(); cols];
    for (k, vk) in v.iter().enumerate() {
        if vk.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            if !m[k][j].is_zero() {
                *o += &(vk * &m[k][j]);
            }
        }
    }
    out
}

/// Gauss-Jordan inverse; `None` when the matrix is singular or not square.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv().ok()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let d = &f * &a[col][j];
                a[r][j] -= &d;
                let d = &f * &inv[col][j];
                inv[r][j] -= &d;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let i = GaussianRational::i();
        let m = vec![
            vec![g(1), i.clone(), g(0)],
            vec![g(2), g(1), g(3)],
            vec![g(0), -i, g(1)],
        ];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(3));
        assert_eq!(mat_mul(&inv, &m), identity(3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = vec![vec![g(1), g(2)], vec![g(2), g(4)]];
        assert!(inverse(&m).is_none());
        assert!(inverse(&vec![vec![g(1), g(2)]]).is_none());
    }
}
