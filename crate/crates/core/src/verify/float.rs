//! Floating-point cross-check against the exact spectrum. Advisory only.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::closed_forms::oracle_spectrum;
use crate::error::Result;
use crate::graph::{adjacency_matrix, Graph};
use crate::scalar::to_f64;
use crate::BigRational;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FloatCrosscheck {
    pub total: usize,
    pub matched: usize,
    /// Largest distance from a float eigenvalue to its exact interval.
    pub max_deviation: f64,
    pub float_eigenvalues: Vec<f64>,
}

impl FloatCrosscheck {
    pub fn agrees(&self) -> bool {
        self.matched == self.total
    }
}

/// Pairs the sorted float eigenvalues of `A(g)` with the exact eigenvalues
/// (repeated by multiplicity) and counts those lying within `tol` of their
/// certified interval.
pub fn crosscheck_float(g: &Graph, tol: f64, width: &BigRational) -> Result<FloatCrosscheck> {
    let a = adjacency_matrix(g);
    let exact = oracle_spectrum(&a, width)?;
    let n = g.n();
    let dm = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut floats: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
    floats.sort_by(|x, y| y.total_cmp(x));
    let mut intervals = Vec::with_capacity(n);
    for e in &exact.entries {
        let r = e.descriptor.to_root(width);
        let iv = (to_f64(r.lo()), to_f64(r.hi()));
        intervals.extend(std::iter::repeat_n(iv, e.multiplicity));
    }
    let mut matched = 0;
    let mut max_deviation: f64 = 0.0;
    for (&x, &(lo, hi)) in floats.iter().zip(&intervals) {
        let dev = if x < lo { lo - x } else if x > hi { x - hi } else { 0.0 };
        max_deviation = max_deviation.max(dev);
        if dev <= tol {
            matched += 1;
        }
    }
    Ok(FloatCrosscheck { total: n, matched, max_deviation, float_eigenvalues: floats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridge_graph, cycle5, reseminant_tilde, BridgeParams};
    use crate::linalg::default_width;

    #[test]
    fn family_instances_agree() {
        let b54 = bridge_graph(BridgeParams::new(5, 4).unwrap()).unwrap();
        let r = crosscheck_float(&b54, 1e-9, &default_width()).unwrap();
        assert_eq!((r.matched, r.total), (9, 9));
        let r = crosscheck_float(&reseminant_tilde(2), 1e-9, &default_width()).unwrap();
        assert_eq!((r.matched, r.total), (7, 7));
    }

    #[test]
    fn c5_tight() {
        let r = crosscheck_float(&cycle5(), 1e-12, &default_width()).unwrap();
        assert!(r.agrees());
        let f = &r.float_eigenvalues;
        assert!((f[0] - 2.0).abs() < 1e-12);
        assert!((f[1] - 0.618_033_988_749_895).abs() < 1e-12 && (f[2] - f[1]).abs() < 1e-12);
        assert!((f[3] + 1.618_033_988_749_895).abs() < 1e-12 && (f[4] - f[3]).abs() < 1e-12);
    }
}
