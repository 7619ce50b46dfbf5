//! The theorem side of the suite, as swappable function pointers.
//!
//! The harness never calls the closed forms directly; it goes through a
//! [`Formulas`] value so a corrupted copy can be substituted to prove that
//! the suite actually catches mistakes.

use num_traits::One;

use crate::closed_forms::{self, ComplementDet, InverseEntry, SpectrumReport};
use crate::error::{Error, Result};
use crate::linalg::Factorization;
use crate::{BigInt, BigRational};

#[derive(Clone, Copy)]
pub struct Formulas {
    pub det_bridge: fn(usize, usize) -> Result<BigInt>,
    pub det_bridge_complement: fn(usize, usize) -> Result<ComplementDet>,
    pub det_suspension: fn(usize, usize) -> Result<BigInt>,
    pub bridge_inverse_entry: fn(usize, usize, usize, usize) -> Result<InverseEntry>,
    pub charpoly_bridge: fn(usize) -> Result<Factorization>,
    pub charpoly_reseminant: fn(usize) -> Factorization,
    pub spectrum_bridge: fn(usize, &BigRational) -> Result<SpectrumReport>,
    pub spectrum_reseminant: fn(usize, &BigRational) -> Result<SpectrumReport>,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            det_bridge: closed_forms::det_bridge_formula,
            det_bridge_complement: closed_forms::det_bridge_complement_formula,
            det_suspension: closed_forms::det_suspension_formula,
            bridge_inverse_entry: closed_forms::bridge_inverse_entry,
            charpoly_bridge: closed_forms::charpoly_bridge_formula,
            charpoly_reseminant: closed_forms::charpoly_reseminant_formula,
            spectrum_bridge: closed_forms::spectrum_bridge,
            spectrum_reseminant: closed_forms::spectrum_reseminant,
        }
    }
}

/// Names accepted by [`Formulas::with_fault`].
pub const FAULTS: &[&str] = &[
    "det-bridge",
    "det-bridge-complement",
    "det-suspension",
    "bridge-inverse",
    "charpoly-bridge",
    "charpoly-reseminant",
];

fn det_bridge_off_by_one(m: usize, n: usize) -> Result<BigInt> {
    let d = closed_forms::det_bridge_formula(m, n)?;
    Ok(if (m, n) == (5, 3) { d + BigInt::one() } else { d })
}

fn complement_always_zero(m: usize, n: usize) -> Result<ComplementDet> {
    closed_forms::det_bridge_complement_formula(m, n)?;
    Ok(ComplementDet::Value { value: "0".into() })
}

fn suspension_sign_flip(m: usize, n: usize) -> Result<BigInt> {
    let d = closed_forms::det_suspension_formula(m, n)?;
    Ok(if m + n == 7 { -d } else { d })
}

fn inverse_wrong_within_block(m: usize, n: usize, i: usize, j: usize) -> Result<InverseEntry> {
    Ok(match closed_forms::bridge_inverse_entry(m, n, i, j)? {
        InverseEntry::Covered { case: closed_forms::InverseCase::WithinBlock, value } if m + n == 8 => {
            InverseEntry::Covered { case: closed_forms::InverseCase::WithinBlock, value: -value }
        }
        other => other,
    })
}

fn charpoly_bridge_extra_factor(m: usize) -> Result<Factorization> {
    let mut f = closed_forms::charpoly_bridge_formula(m)?;
    if m == 6 {
        // trade one power of (x + 1) for a factor x; degree unchanged
        f.factors[2].1 -= 1;
        f.factors.push((crate::IntPolynomial::monomial(BigInt::one(), 1), 1));
    }
    Ok(f)
}

fn charpoly_reseminant_wrong_cubic(n: usize) -> Factorization {
    let mut f = closed_forms::charpoly_reseminant_formula(n);
    if n == 4 {
        let cubic = closed_forms::reseminant_cubic(n);
        let mut c = cubic.coeffs().to_vec();
        c[0] += 1;
        f.factors[0].0 = crate::IntPolynomial::new(c);
    }
    f
}

impl Formulas {
    /// The correct formulas except for one deliberately broken evaluator.
    pub fn with_fault(name: &str) -> Result<Self> {
        let mut f = Formulas::default();
        match name {
            "det-bridge" => f.det_bridge = det_bridge_off_by_one,
            "det-bridge-complement" => f.det_bridge_complement = complement_always_zero,
            "det-suspension" => f.det_suspension = suspension_sign_flip,
            "bridge-inverse" => f.bridge_inverse_entry = inverse_wrong_within_block,
            "charpoly-bridge" => f.charpoly_bridge = charpoly_bridge_extra_factor,
            "charpoly-reseminant" => f.charpoly_reseminant = charpoly_reseminant_wrong_cubic,
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "unknown fault {name:?}; known: {}",
                    FAULTS.join(", ")
                )))
            }
        }
        Ok(f)
    }
}
