//! Exact dense linear algebra over the rationals or a prime field.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Scalar};
pub use matrix::{canonical_columns, homology_dim, Matrix};
pub use subspace::{Quotient, Subspace};
