//! Exact symbolic toolkit for holomorphic foliations and distributions on
//! diagonal Hopf manifolds `X = (ℂⁿ∖{0})/⟨f⟩`, `f(z) = (μ₁z₁, …, μₙzₙ)`.
//!
//! * [`multiplier`] models the relation pattern among the multipliers.
//! * [`sections`] computes monomial bases of twisted section spaces.
//! * [`algebra`] provides exact polynomials, forms and vector fields.
//! * [`classify`] lists admissible bundles with normal-form representatives.
//! * [`invariants`] checks integrability, radial identities, leaf counts and
//!   Chern/Hodge arithmetic.
//! * [`report`] is the JSON-driven front end used by the `hopfkit` binary.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod invariants;
pub mod multiplier;
pub mod report;
pub mod scalar;
pub mod sections;

pub use error::{HopfError, Result};
pub use multiplier::{BundleParam, EquivalenceKey, ExponentVector, MultiplierStructure, StructureKind};
