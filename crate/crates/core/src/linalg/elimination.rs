use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::{IntMatrix, RatMatrix};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so over the integers
/// each division is exact.
pub fn det_bareiss<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.to_rows();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Rank by fraction-free row echelon reduction.
pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone();
                a[i][j] = num / prev.clone();
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Inverse over a field by Gauss–Jordan elimination.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    m.require_square()?;
    let n = m.rows();
    let mut a = m.to_rows();
    let mut inv = Matrix::<T>::identity(n).to_rows();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(c, p);
        inv.swap(c, p);
        let pivot = a[c][c].clone();
        for j in 0..n {
            a[c][j] = a[c][j].clone() / pivot.clone();
            inv[c][j] = inv[c][j].clone() / pivot.clone();
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..n {
                a[i][j] = a[i][j].clone() - factor.clone() * a[c][j].clone();
                inv[i][j] = inv[i][j].clone() - factor.clone() * inv[c][j].clone();
            }
        }
    }
    Matrix::from_rows(inv)
}

/// Exact rational inverse of an integer matrix.
pub fn inverse_exact(m: &IntMatrix) -> Result<RatMatrix> {
    inverse(&m.to_rational())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::scalar::rational;
    use crate::BigInt;
    use proptest::prelude::*;

    fn complete_adjacency(k: usize) -> IntMatrix {
        Matrix::from_fn(k, k, |i, j| BigInt::from(i64::from(i != j)))
    }

    #[test]
    fn det_complete_graphs() {
        // det A(K_k) = (-1)^(k-1) (k-1)
        for k in 1..10i64 {
            let expected = if (k - 1) % 2 == 0 { k - 1 } else { -(k - 1) };
            assert_eq!(det_bareiss(&complete_adjacency(k as usize)).unwrap(), expected.into());
        }
        assert_eq!(det_bareiss(&complete_adjacency(5)).unwrap(), 4.into());
    }

    #[test]
    fn det_identity_and_empty() {
        assert_eq!(det_bareiss(&IntMatrix::identity(6)).unwrap(), 1.into());
        assert_eq!(det_bareiss(&IntMatrix::zeros(0, 0)).unwrap(), 1.into());
        assert!(matches!(det_bareiss(&IntMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), (-5).into());
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&IntMatrix::zeros(4, 3)), 0);
        assert_eq!(rank(&IntMatrix::identity(5)), 5);
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).unwrap();
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn inverse_of_complete_graph() {
        // A(K_k)^{-1} = J/(k-1) - I
        let k = 5;
        let inv = inverse_exact(&complete_adjacency(k)).unwrap();
        let expected = Matrix::from_fn(k, k, |i, j| {
            rational(1, (k - 1) as i64) - if i == j { rational(1, 1) } else { rational(0, 1) }
        });
        assert_eq!(inv, expected);
    }

    #[test]
    fn inverse_identity_and_singular() {
        assert_eq!(inverse_exact(&IntMatrix::identity(3)).unwrap(), RatMatrix::identity(3));
        let singular = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert!(matches!(inverse_exact(&singular), Err(Error::Singular)));
    }

    fn small_int_matrix(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j]))
            })
        })
    }

    proptest! {
        // Bareiss over Z agrees with Bareiss over Q (plain Gaussian elimination
        // in a field), and rank over Z agrees with rank over Q.
        #[test]
        fn integer_and_rational_routes_agree(m in small_int_matrix(6)) {
            let q = m.to_rational();
            let det_q = det_bareiss(&q).unwrap();
            prop_assert_eq!(crate::scalar::to_rational(&det_bareiss(&m).unwrap()), det_q);
            prop_assert_eq!(rank(&m), rank(&q));
        }

        #[test]
        fn inverse_is_two_sided(m in small_int_matrix(5)) {
            match inverse_exact(&m) {
                Ok(inv) => {
                    let q = m.to_rational();
                    prop_assert_eq!(&q * &inv, RatMatrix::identity(m.rows()));
                    prop_assert_eq!(&inv * &q, RatMatrix::identity(m.rows()));
                }
                Err(Error::Singular) => prop_assert_eq!(det_bareiss(&m).unwrap(), 0.into()),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
