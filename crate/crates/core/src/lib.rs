//! Good subsemigroups of ℕ²: canonical finite representation, Apéry set
//! level partition, saturated-chain distances, symmetry and level duality.
//!
//! A *good semigroup* is a submonoid S ⊆ ℕ² that is closed under
//! componentwise minimum (G1), satisfies the completion axiom for pairs
//! sharing a coordinate (G2), and has a conductor c with c + ℕ² ⊆ S (G3).
//! Such a set is determined by its finitely many elements below c, which is
//! what [`semigroup::GoodSemigroup`] stores; every other query — Δ-sets,
//! the Apéry set `Ap(S) = S ∖ (e + S)`, its partition into e₁+e₂ levels,
//! chain distances, the symmetry test and the dual level sequence — is
//! derived from that representation on an explicit finite window.

pub mod chains;
pub mod fixtures;
pub mod io;
pub mod levels;
pub mod numerical;
pub mod oracle;
pub mod point;
pub mod render;
pub mod semigroup;
pub mod symmetry;
pub mod truncated;

pub use point::{Axis, Box2, Point, PointZ};
pub use semigroup::{GoodSemigroup, VerifyReport, Violation};
