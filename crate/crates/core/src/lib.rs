//! Elliptic divisibility sequences over rational function fields `F_q(t)`.
//!
//! The crate provides exact arithmetic in `F_q[t]` and `F_q(t)`, Weierstrass
//! curves with their group law and division polynomials, elliptic
//! divisibility sequences with perfect-power detection, checkers for the
//! algebraic identities behind exponent bounds (binary cubic syzygy,
//! Siegel identities, Mason's inequality) and the explicit bound calculators.

pub mod algebra;
pub mod bounds;
pub mod curve;
pub mod eds;
pub mod error;
pub mod harness;
pub mod identities;
pub mod parser;

pub use error::{Error, Result};
