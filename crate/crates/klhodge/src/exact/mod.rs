//! Exact arithmetic: rationals, dense polynomials, truncated bivariate
//! series and integer elimination.

mod echelon;
mod matrix;
mod poly;
mod series;

pub use echelon::{Echelon, Relation, SparseVec};
pub use matrix::QMatrix;
pub use num_bigint::BigInt;
pub use poly::{poly_div_exact, poly_mul, DensePoly};
pub use series::{expand_rational, BiSeries};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;
