//! Direct evaluators for the closed-form statements about the families.
//!
//! Nothing here consults a matrix: each function evaluates a formula in the
//! family parameters. The verify module compares these against the exact
//! linear algebra.

mod bounds;
mod spectrum;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{adjacency_matrix, reseminant_tilde, BridgeParams, Graph};
use crate::linalg::{char_poly, golden_quadratic, linear_factor, poly_divides, Factorization};
use crate::{BigInt, BigRational, IntPolynomial};

pub use bounds::{eigenvalue_bound_checks, BoundCheck, BoundFamily, BoundReport};
pub use spectrum::{
    oracle_spectrum, spectrum_bridge, spectrum_reseminant, EigenDescriptor, SpectrumEntry,
    SpectrumReport, Surd,
};

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

/// `det A(B(m, n)) = (−1)^{m+n−1} (3 − (m+n))`.
pub fn det_bridge_formula(m: usize, n: usize) -> Result<BigInt> {
    BridgeParams::new(m, n)?;
    let s = m + n;
    Ok(sign(s - 1) * (BigInt::from(3) - big(s)))
}

/// Value of `det A(complement(B(m, n)))` where the formula states one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComplementDet {
    Value { value: String },
    /// `(3, 1)`: the case split does not name it.
    NotApplicable { reason: String },
}

pub fn det_bridge_complement_formula(m: usize, n: usize) -> Result<ComplementDet> {
    BridgeParams::new(m, n)?;
    Ok(match (m, n) {
        (2, 2) => ComplementDet::Value { value: "1".into() },
        (3, 1) => ComplementDet::NotApplicable {
            reason: "m + n = 4 with (m, n) = (3, 1) is not covered by the formula".into(),
        },
        _ => ComplementDet::Value { value: "0".into() },
    })
}

/// `det A(S(m, n)) = (−1)^{m+n} (4mn − 5(m+n) + 6)`, valid for `m + n ≥ 4`.
pub fn det_suspension_formula(m: usize, n: usize) -> Result<BigInt> {
    BridgeParams::new(m, n)?;
    let s = m + n;
    if s < 4 {
        return Err(Error::InvalidParameters(format!(
            "suspension determinant formula needs m + n >= 4 (A(B({m}, {n})) must be invertible), got {s}"
        )));
    }
    Ok(sign(s) * (BigInt::from(4 * m * n + 6) - big(5 * s)))
}

/// Which of the three stated patterns an inverse entry falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseCase {
    Diagonal,
    WithinBlock,
    CrossBlock,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseEntry {
    Covered { case: InverseCase, value: BigRational },
    /// Row or column of a bridge vertex.
    Uncovered,
}

/// Entry `(i, j)` of `A(B(m, n))⁻¹`, 1-based, for the non-bridge index pairs.
pub fn bridge_inverse_entry(m: usize, n: usize, i: usize, j: usize) -> Result<InverseEntry> {
    let p = BridgeParams::new(m, n)?;
    if m + n == 3 {
        return Err(Error::InvalidParameters("A(B(2, 1)) is singular".into()));
    }
    for k in [i, j] {
        if k == 0 || k > p.order() {
            return Err(Error::InvalidParameters(format!(
                "index {k} outside 1..={} for B({m}, {n})",
                p.order()
            )));
        }
    }
    let block = |k: usize| {
        if k < m {
            Some(0)
        } else if k >= m + 2 {
            Some(1)
        } else {
            None
        }
    };
    let d = BigInt::from(m + n) - BigInt::from(3);
    let entry = |case, numer: BigInt| InverseEntry::Covered {
        case,
        value: BigRational::new(numer, d.clone()),
    };
    Ok(match (block(i), block(j)) {
        (Some(a), Some(b)) if a != b => entry(InverseCase::CrossBlock, -BigInt::one()),
        (Some(_), Some(_)) if i == j => entry(InverseCase::Diagonal, -(BigInt::from(m + n) - BigInt::from(4))),
        (Some(_), Some(_)) => entry(InverseCase::WithinBlock, BigInt::one()),
        _ => InverseEntry::Uncovered,
    })
}

/// `x³ + (3−m)x² + (2−2m)x − 2`.
pub fn bridge_cubic(m: usize) -> IntPolynomial {
    let m = BigInt::from(m);
    IntPolynomial::new(vec![
        BigInt::from(-2),
        BigInt::from(2) - &m * 2,
        BigInt::from(3) - m,
        BigInt::one(),
    ])
}

/// `x³ − (n+1)x² − (n+3)x + (3n+2)`.
pub fn reseminant_cubic(n: usize) -> IntPolynomial {
    let n = BigInt::from(n);
    IntPolynomial::new(vec![&n * 3 + 2, -(&n + 3u32), -(&n + 1u32), BigInt::one()])
}

/// Characteristic polynomial of `A(B(m, m−1))`:
/// `(bridge cubic)(x − (m−2))(x + 1)^{2m−5}`.
pub fn charpoly_bridge_formula(m: usize) -> Result<Factorization> {
    if m <= 2 {
        return Err(Error::InvalidParameters(format!("bridge char poly formula needs m > 2, got {m}")));
    }
    Ok(Factorization::new(vec![
        (bridge_cubic(m), 1),
        (linear_factor(&big(m - 2)), 1),
        (linear_factor(&BigInt::from(-1)), (2 * m - 5) as u32),
    ]))
}

/// Characteristic polynomial of `A(R̃_n)`:
/// `(reseminant cubic)(x + 1)^n (x² + x − 1)`.
pub fn charpoly_reseminant_formula(n: usize) -> Factorization {
    let mut factors = vec![(reseminant_cubic(n), 1)];
    if n > 0 {
        factors.push((linear_factor(&BigInt::from(-1)), n as u32));
    }
    factors.push((golden_quadratic(), 1));
    Factorization::new(factors)
}

/// Whether `x² + x − 1` divides the characteristic polynomial, i.e. both
/// `φ⁻¹` and `−φ` are eigenvalues.
pub fn has_golden_eigenvalues(g: &Graph) -> Result<bool> {
    let chi = char_poly(&adjacency_matrix(g))?;
    poly_divides(&golden_quadratic(), &chi)
}

pub fn golden_ratio_membership(n: usize) -> Result<bool> {
    has_golden_eigenvalues(&reseminant_tilde(n))
}
