//! Certified spectra: each eigenvalue is an exact rational, one of the two
//! roots of `x² + x − 1`, or an isolating interval of an integer polynomial.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::{bridge_cubic, charpoly_bridge_formula, charpoly_reseminant_formula, reseminant_cubic};
use crate::error::{Error, Result};
use crate::linalg::{
    char_poly, compare_root_to_rational, compare_roots, golden_quadratic, isolate_real_roots,
    linear_factor, RootInterval,
};
use crate::scalar::{decimal_string, fmt_rational, int};
use crate::{BigInt, BigRational, IntMatrix};

/// A root of `x² + x − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Surd {
    /// `φ⁻¹ = (√5 − 1)/2`
    PhiInverse,
    /// `−φ = −(√5 + 1)/2`
    NegPhi,
}

impl Surd {
    pub fn name(self) -> &'static str {
        match self {
            Surd::PhiInverse => "phi^-1",
            Surd::NegPhi => "-phi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenDescriptor {
    Rational(BigRational),
    Surd(Surd),
    /// Root of the cubic factor named by the closed form.
    CubicRoot(RootInterval),
    /// Root of some other irreducible-looking factor (oracle spectra).
    AlgebraicRoot(RootInterval),
}

impl EigenDescriptor {
    /// The eigenvalue as a root interval, isolated to at most `width`.
    pub fn to_root(&self, width: &BigRational) -> RootInterval {
        match self {
            EigenDescriptor::Rational(q) => RootInterval::exact(rational_factor(q), q.clone(), 1),
            EigenDescriptor::Surd(s) => {
                let roots = isolate_real_roots(&golden_quadratic(), width)
                    .expect("x^2 + x - 1 is nonzero");
                roots[usize::from(*s == Surd::NegPhi)].clone()
            }
            EigenDescriptor::CubicRoot(r) | EigenDescriptor::AlgebraicRoot(r) => r.clone(),
        }
    }

    /// Exact text: a fraction, a surd name, or `[lo, hi]`.
    pub fn exact_text(&self) -> String {
        match self {
            EigenDescriptor::Rational(q) => fmt_rational(q),
            EigenDescriptor::Surd(s) => s.name().into(),
            EigenDescriptor::CubicRoot(r) | EigenDescriptor::AlgebraicRoot(r) => {
                format!("[{}, {}]", fmt_rational(r.lo()), fmt_rational(r.hi()))
            }
        }
    }

    /// A decimal approximation (interval midpoint for irrational values).
    pub fn approx_text(&self, digits: usize, width: &BigRational) -> String {
        decimal_string(&self.to_root(width).midpoint(), digits)
    }

    pub fn to_json(&self, width: &BigRational) -> Value {
        match self {
            EigenDescriptor::Rational(q) => json!({"kind": "rational", "value": fmt_rational(q)}),
            EigenDescriptor::Surd(s) => {
                let r = self.to_root(width);
                json!({
                    "kind": "surd",
                    "name": s.name(),
                    "polynomial": golden_quadratic().to_json(),
                    "lo": fmt_rational(r.lo()),
                    "hi": fmt_rational(r.hi()),
                })
            }
            EigenDescriptor::CubicRoot(r) | EigenDescriptor::AlgebraicRoot(r) => {
                let kind = if matches!(self, EigenDescriptor::CubicRoot(_)) {
                    "cubic_root"
                } else {
                    "algebraic_root"
                };
                json!({
                    "kind": kind,
                    "polynomial": r.polynomial().to_json(),
                    "lo": fmt_rational(r.lo()),
                    "hi": fmt_rational(r.hi()),
                })
            }
        }
    }
}

/// Primitive integer polynomial with root `q`.
fn rational_factor(q: &BigRational) -> crate::IntPolynomial {
    crate::IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub descriptor: EigenDescriptor,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub entries: Vec<SpectrumEntry>,
    pub total: usize,
    /// Width the irrational entries were isolated to.
    pub width: BigRational,
}

impl SpectrumReport {
    fn new(entries: Vec<(EigenDescriptor, usize)>, width: &BigRational) -> Self {
        let entries: Vec<SpectrumEntry> = entries
            .into_iter()
            .map(|(descriptor, multiplicity)| SpectrumEntry { descriptor, multiplicity })
            .collect();
        let total = entries.iter().map(|e| e.multiplicity).sum();
        SpectrumReport { entries, total, width: width.clone() }
    }

    pub fn multiplicity_of(&self, q: &BigRational) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(&e.descriptor, EigenDescriptor::Rational(r) if r == q))
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Fails unless consecutive entries are strictly decreasing.
    pub fn check_descending(&self) -> Result<()> {
        for pair in self.entries.windows(2) {
            let mut a = pair[0].descriptor.to_root(&self.width);
            let mut b = pair[1].descriptor.to_root(&self.width);
            if compare_roots(&mut a, &mut b) != Ordering::Greater {
                return Err(Error::OrderingViolation(format!(
                    "{} is not greater than {}",
                    pair[0].descriptor.exact_text(),
                    pair[1].descriptor.exact_text()
                )));
            }
        }
        Ok(())
    }

    /// Interval enclosing `Σ multiplicity · value`; contains 0 for any
    /// adjacency spectrum.
    pub fn trace_interval(&self) -> (BigRational, BigRational) {
        self.entries.iter().fold((BigRational::zero(), BigRational::zero()), |(lo, hi), e| {
            let r = e.descriptor.to_root(&self.width);
            let k = BigRational::from_integer(BigInt::from(e.multiplicity));
            (lo + r.lo() * &k, hi + r.hi() * &k)
        })
    }

    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.trace_interval();
        json!({
            "total": self.total,
            "width": fmt_rational(&self.width),
            "entries": self.entries.iter().map(|e| {
                let mut v = e.descriptor.to_json(&self.width);
                v["multiplicity"] = json!(e.multiplicity);
                v
            }).collect::<Vec<_>>(),
            "trace_interval": [fmt_rational(&lo), fmt_rational(&hi)],
        })
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn three_simple_roots(cubic: &crate::IntPolynomial, width: &BigRational) -> Result<Vec<RootInterval>> {
    let roots = isolate_real_roots(cubic, width)?;
    if roots.len() != 3 || roots.iter().any(|r| r.multiplicity() != 1) {
        return Err(Error::OrderingViolation(format!(
            "{cubic} does not have three distinct real roots"
        )));
    }
    Ok(roots)
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OrderingViolation(what()))
    }
}

/// Spectrum of `B(m, m−1)`: `θ1 > m−2 > θ2 > −1 (×(2m−5)) > θ3`, with
/// `θ2 < 0` checked as well.
pub fn spectrum_bridge(m: usize, width: &BigRational) -> Result<SpectrumReport> {
    charpoly_bridge_formula(m)?;
    let cubic = bridge_cubic(m);
    let roots = three_simple_roots(&cubic, width)?;
    require(compare_root_to_rational(&roots[1], &BigRational::zero()) == Ordering::Less, || {
        format!("middle root of {cubic} is not negative")
    })?;
    let mut it = roots.into_iter().map(EigenDescriptor::CubicRoot);
    let (t1, t2, t3) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    let report = SpectrumReport::new(
        vec![
            (t1, 1),
            (EigenDescriptor::Rational(int(m as i64 - 2)), 1),
            (t2, 1),
            (EigenDescriptor::Rational(int(-1)), 2 * m - 5),
            (t3, 1),
        ],
        width,
    );
    report.check_descending()?;
    Ok(report)
}

/// Spectrum of `R̃_n`. For `n > 0`:
/// `θ1 > θ2 > φ⁻¹ > −1 (×n) > −φ > θ3`; `C_5` for `n = 0`.
pub fn spectrum_reseminant(n: usize, width: &BigRational) -> Result<SpectrumReport> {
    if n == 0 {
        let report = SpectrumReport::new(
            vec![
                (EigenDescriptor::Rational(int(2)), 1),
                (EigenDescriptor::Surd(Surd::PhiInverse), 2),
                (EigenDescriptor::Surd(Surd::NegPhi), 2),
            ],
            width,
        );
        // the cubic factor must really split as (x − 2)(x² + x − 1)
        let split = &linear_factor(&BigInt::from(2)) * &golden_quadratic();
        require(reseminant_cubic(0) == split, || "cubic at n = 0 does not split".into())?;
        report.check_descending()?;
        return Ok(report);
    }
    debug_assert_eq!(charpoly_reseminant_formula(n).degree(), n + 5);
    let roots = three_simple_roots(&reseminant_cubic(n), width)?;
    let mut it = roots.into_iter().map(EigenDescriptor::CubicRoot);
    let (t1, t2, t3) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    let report = SpectrumReport::new(
        vec![
            (t1, 1),
            (t2, 1),
            (EigenDescriptor::Surd(Surd::PhiInverse), 1),
            (EigenDescriptor::Rational(int(-1)), n),
            (EigenDescriptor::Surd(Surd::NegPhi), 1),
            (t3, 1),
        ],
        width,
    );
    report.check_descending()?;
    Ok(report)
}

/// Spectrum of a symmetric integer matrix computed from its characteristic
/// polynomial alone.
pub fn oracle_spectrum(m: &IntMatrix, width: &BigRational) -> Result<SpectrumReport> {
    if !m.is_symmetric() {
        return Err(Error::InvalidParameters("spectrum needs a symmetric matrix".into()));
    }
    let chi = char_poly(m)?;
    if m.rows() == 0 {
        return Ok(SpectrumReport::new(Vec::new(), width));
    }
    let golden = isolate_real_roots(&golden_quadratic(), width)?;
    let entries = isolate_real_roots(&chi, width)?
        .into_iter()
        .map(|mut r| {
            let k = r.multiplicity() as usize;
            if r.is_exact() {
                return (EigenDescriptor::Rational(r.lo().clone()), k);
            }
            // monic integer polynomial: rational roots are integers
            let c = r.hi().floor();
            if &c > r.lo() && compare_root_to_rational(&r, &c) == Ordering::Equal {
                return (EigenDescriptor::Rational(c), k);
            }
            for (g, surd) in golden.iter().zip([Surd::PhiInverse, Surd::NegPhi]) {
                if compare_roots(&mut r, &mut g.clone()) == Ordering::Equal {
                    return (EigenDescriptor::Surd(surd), k);
                }
            }
            (EigenDescriptor::AlgebraicRoot(r), k)
        })
        .collect::<Vec<_>>();
    let report = SpectrumReport::new(entries, width);
    require(report.total == m.rows(), || {
        format!("found {} real eigenvalues for a {}x{} matrix", report.total, m.rows(), m.rows())
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency_matrix, bridge_graph, cycle5, reseminant_tilde, BridgeParams};
    use crate::linalg::default_width;
    use crate::scalar::rational;

    fn rational_of(e: &SpectrumEntry) -> Option<&BigRational> {
        match &e.descriptor {
            EigenDescriptor::Rational(q) => Some(q),
            _ => None,
        }
    }

    fn trace_contains_zero(r: &SpectrumReport) -> bool {
        let (lo, hi) = r.trace_interval();
        lo <= BigRational::zero() && BigRational::zero() <= hi
    }

    #[test]
    fn bridge_m3() {
        let r = spectrum_bridge(3, &default_width()).unwrap();
        assert_eq!(r.total, 5);
        assert_eq!(r.multiplicity_of(&int(-1)), 1);
        let t1 = r.entries[0].descriptor.to_root(&r.width);
        assert_eq!(compare_root_to_rational(&t1, &int(2)), Ordering::Greater);
        assert_eq!(compare_root_to_rational(&t1, &int(3)), Ordering::Less);
        assert!(trace_contains_zero(&r));
    }

    #[test]
    fn bridge_m4_shape() {
        let r = spectrum_bridge(4, &default_width()).unwrap();
        assert_eq!(r.multiplicity_of(&int(-1)), 3);
        assert_eq!(rational_of(&r.entries[1]), Some(&int(2)));
        assert_eq!(r.total, 7);
        assert!(spectrum_bridge(2, &default_width()).is_err());
    }

    #[test]
    fn c5_spectrum() {
        let r = spectrum_reseminant(0, &default_width()).unwrap();
        let json = r.to_json();
        assert_eq!(json["entries"][0]["value"], "2");
        assert_eq!(json["entries"][1]["kind"], "surd");
        assert_eq!(json["entries"][1]["multiplicity"], 2);
        assert_eq!(json["entries"][2]["name"], "-phi");
        let oracle = oracle_spectrum(&adjacency_matrix(&cycle5()), &default_width()).unwrap();
        assert_eq!(oracle, r);
    }

    #[test]
    fn reseminant_spectra() {
        let r1 = spectrum_reseminant(1, &default_width()).unwrap();
        assert_eq!(r1.entries.len(), 6);
        assert_eq!(r1.multiplicity_of(&int(-1)), 1);
        let r3 = spectrum_reseminant(3, &default_width()).unwrap();
        let t1 = r3.entries[0].descriptor.to_root(&r3.width);
        assert_ne!(compare_root_to_rational(&t1, &rational(14, 3)), Ordering::Less);
        assert_ne!(compare_root_to_rational(&t1, &int(5)), Ordering::Greater);
        assert!(trace_contains_zero(&r3));
        assert_eq!(r3.to_json()["entries"][0]["kind"], "cubic_root");
    }

    #[test]
    fn oracle_matches_closed_form_descriptors() {
        let w = default_width();
        let r2 = oracle_spectrum(&adjacency_matrix(&reseminant_tilde(2)), &w).unwrap();
        let kinds: Vec<&str> = r2
            .entries
            .iter()
            .map(|e| match e.descriptor {
                EigenDescriptor::Rational(_) => "q",
                EigenDescriptor::Surd(_) => "s",
                EigenDescriptor::CubicRoot(_) | EigenDescriptor::AlgebraicRoot(_) => "r",
            })
            .collect();
        assert_eq!(kinds, ["r", "r", "s", "q", "s", "r"]);
        let b43 = bridge_graph(BridgeParams::new(4, 3).unwrap()).unwrap();
        let ob = oracle_spectrum(&adjacency_matrix(&b43), &w).unwrap();
        assert_eq!(ob.multiplicity_of(&int(-1)), 3);
        assert_eq!(ob.total, 7);
        ob.check_descending().unwrap();
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]).unwrap();
        assert!(oracle_spectrum(&m, &default_width()).is_err());
    }
}
