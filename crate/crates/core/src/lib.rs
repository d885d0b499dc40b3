//! Algebraic-geometry codes on the Suzuki-cover maximal curve and its relatives.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`]: GF(p^k) arithmetic with log tables, additive-polynomial solving and root extraction.
//! - [`semigroup`]: numerical semigroups, Feng-Rao function, order bound.
//! - [`curve`]: closed-form constants for the Suzuki/Ree curves and their covers.
//! - [`points`]: rational point enumeration for the q = 8 Suzuki cover.
//! - [`basis`]: monomial bases of Riemann-Roch spaces L(rP) and their evaluation.
//! - [`codes`]: one-point codes, dual codes and the d_ORD table, duality checks.
//! - [`derived`]: CSS quantum and unit-memory convolutional code parameters.

pub mod basis;
pub mod codes;
pub mod curve;
pub mod derived;
pub mod field;
pub mod points;
pub mod report;
pub mod semigroup;

pub use curve::{CurveSpec, Family};
pub use field::{Fe, FieldContext, FieldError, Sign};
pub use semigroup::{NumericalSemigroup, SemigroupError};
