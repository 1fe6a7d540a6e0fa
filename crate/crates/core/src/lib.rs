//! Signed Verlinde algebras, the two-bridge knots `K(r, s)` and their Riley
//! polynomials, computed in exact arithmetic.

pub mod arith;
pub mod check;
pub mod error;
pub mod frobenius;
pub mod grid;
pub mod numberfield;
pub mod report;
pub mod riley;
pub mod tqft;
pub mod twobridge;

pub use error::{Error, Result};
pub use twobridge::Params;
