//! Exact sparse polynomials and polynomial-coefficient exterior calculus on ℂⁿ.

pub mod form;
pub mod linalg;
pub mod polynomial;
pub mod univariate;

pub use form::{DifferentialForm, VectorField};
pub use polynomial::{Monomial, Polynomial};
