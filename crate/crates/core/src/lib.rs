//! Twisted products of groups and of Lie algebras.
//!
//! The crate is organised around a handful of pure, immutable value types:
//!
//! * [`lie_core`] holds real Lie algebras given by structure constants in a
//!   basis that is declared orthonormal, with Jacobi and nilpotency checks.
//! * [`twisted_lie`] assembles the algebra of a twisted product from two
//!   algebras and a pair of infinitesimal actions.
//! * [`curvature`] evaluates left-invariant sectional and scalar curvature
//!   from structure constants.
//! * [`finite_groups`] works with finite groups as Cayley tables and checks
//!   when a twisted product of two of them is again a group.
//! * [`corpus`] contains the coordinate-form continuous groups used in the
//!   worked examples, finite-difference derivation of infinitesimal actions
//!   and the embedded golden data.

pub mod corpus;
pub mod curvature;
pub mod error;
pub mod finite_groups;
pub mod io;
pub mod lie_core;
pub mod report;
pub mod twisted_lie;

pub use error::{Error, Result};
pub use lie_core::{LieAlgebra, StructureTensor, Vector};
pub use report::{ValidationReport, Violation};

/// Absolute tolerance used by every check unless the caller overrides it.
pub const DEFAULT_TOL: f64 = 1e-9;
