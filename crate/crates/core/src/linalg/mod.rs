//! Exact dense linear algebra: determinants, rank, inverses, characteristic
//! polynomials and real-root isolation.
//!
//! Everything here is generic over [`Scalar`](crate::scalar::Scalar) except
//! root isolation, which works over the integers and rationals only.

mod charpoly;
mod elimination;
mod matrix;
mod poly;
mod roots;

pub use charpoly::char_poly;
pub use elimination::{det_bareiss, inverse, inverse_exact, rank};
pub use matrix::Matrix;
pub use poly::{
    golden_quadratic, linear_factor, poly_divides, squarefree_decomposition, Factorization,
    Polynomial,
};
pub use roots::{
    compare_root_to_rational, compare_roots, default_width, isolate_real_roots, RootInterval,
    SturmChain,
};
