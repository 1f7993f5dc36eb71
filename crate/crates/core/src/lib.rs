//! Nakayama functors, their derived functors and Gorenstein invariants for
//! finite-dimensional algebras over exact fields.
//!
//! Everything is computed with exact arithmetic on explicit coordinate
//! spaces, so commutative diagrams and exactness claims are checked as
//! literal matrix equalities.

pub mod algebra;
pub mod error;
pub mod functors;
pub mod gorenstein;
pub mod io;
pub mod linalg;
pub mod module;
pub mod par;
pub mod resolution;

pub use error::{Error, Result};
