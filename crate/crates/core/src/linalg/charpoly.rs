use super::{Matrix, Polynomial};
use crate::error::Result;
use crate::scalar::Scalar;

/// `det(xI − M)` by the Berkowitz algorithm.
///
/// Division-free, so the result is exact over any commutative ring. The
/// leading principal submatrices are absorbed one row/column at a time: if
/// `M_r` has the block form `[[N, c], [r, a]]`, then
/// `χ(M_r) = T · χ(N)` where `T` is the lower-triangular Toeplitz matrix with
/// first column `(1, −a, −rc, −rNc, −rN²c, …)`.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> Result<Polynomial<T>> {
    m.require_square()?;
    let n = m.rows();
    // coefficients, highest degree first
    let mut chi: Vec<T> = vec![T::one()];
    for r in 0..n {
        let a = m[(r, r)].clone();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-a);
        // w = N^k c, starting from c = column r above the diagonal
        let mut w: Vec<T> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for k in 0..r {
            let rw = (0..r).fold(T::zero(), |acc, j| acc + m[(r, j)].clone() * w[j].clone());
            toeplitz.push(-rw);
            if k + 1 < r {
                w = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| acc + m[(i, j)].clone() * w[j].clone())
                    })
                    .collect();
            }
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| {
                    acc + toeplitz[i - j].clone() * chi[j].clone()
                })
            })
            .collect();
        chi = next;
    }
    chi.reverse();
    Ok(Polynomial::new(chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_bareiss;
    use crate::{BigInt, IntMatrix, IntPolynomial};
    use proptest::prelude::*;

    fn ints(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn k2_is_x_squared_minus_one() {
        let k2 = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(char_poly(&k2).unwrap(), ints(&[-1, 0, 1]));
    }

    #[test]
    fn empty_and_scalar() {
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), ints(&[1]));
        let m = IntMatrix::from_i64_rows(&[&[7]]).unwrap();
        assert_eq!(char_poly(&m).unwrap(), ints(&[-7, 1]));
    }

    #[test]
    fn non_symmetric_three_by_three() {
        // det(xI - M) for M = [[1,2,0],[0,1,3],[4,0,1]] = (x-1)^3 - 24
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]).unwrap();
        assert_eq!(char_poly(&m).unwrap(), ints(&[-25, 3, -3, 1]));
    }

    fn small_int_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                crate::linalg::Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j]))
            })
        })
    }

    proptest! {
        // χ(t) = det(tI − M) at integer points, via Bareiss.
        #[test]
        fn matches_pointwise_determinant(m in small_int_matrix(), t in -4i64..=4) {
            let chi = char_poly(&m).unwrap();
            let shifted = m.map(|x| -x.clone()).add_scalar_identity(&BigInt::from(t)).unwrap();
            prop_assert_eq!(chi.eval(&BigInt::from(t)), det_bareiss(&shifted).unwrap());
            prop_assert_eq!(chi.degree(), Some(m.rows()));
            prop_assert_eq!(chi.leading().cloned(), Some(BigInt::from(1)));
        }
    }
}
