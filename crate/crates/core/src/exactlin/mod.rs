//! Exact arithmetic: scalars, vectors and covectors, elimination, quotient spaces.

mod matrix;
mod scalar;
mod space;
mod vector;

pub use matrix::{in_span, nullspace, rank, rref, solve};
pub use scalar::{denominator_lcm, is_square_free, parse_rational, rational_to_string, QuadSurd, Scalar};
pub use space::AmbientSpace;
pub use vector::{Covector, Vector};
