//! Exact spectral toolkit for minimally connected prime graphs.
//!
//! The crate builds the complete bridge graphs `B(m, n)`, the suspension
//! graphs `S(m, n)` and the reseminant family `R̃_n` (repeated duplication of
//! one vertex of `C_5`), decides the prime-graph predicates used to classify
//! them, and computes determinants, inverses, characteristic polynomials and
//! certified spectra of their adjacency matrices without any floating point.
//!
//! The linear algebra is generic over the scalar type; the aliases below pick
//! the exact instantiations used throughout.
//!
//! ```
//! use prime_spectra::{graph, linalg};
//!
//! let s43 = graph::suspension_graph(graph::BridgeParams::new(4, 3).unwrap()).unwrap();
//! let det = linalg::det_bareiss(&graph::adjacency_matrix(&s43)).unwrap();
//! assert_eq!(det, (-19).into());
//! ```

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod recognition;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Dense matrix of arbitrary-precision integers.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Dense matrix of exact rationals.
pub type RatMatrix = linalg::Matrix<BigRational>;
/// Dense `f64` matrix; only the float cross-check uses it.
pub type FloatMatrix = linalg::Matrix<f64>;
/// Integer-coefficient univariate polynomial, lowest degree first.
pub type IntPolynomial = linalg::Polynomial<BigInt>;
/// Rational-coefficient univariate polynomial, lowest degree first.
pub type RatPolynomial = linalg::Polynomial<BigRational>;
