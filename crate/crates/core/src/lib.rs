//! Exact arithmetic engine for linear switches and the ideal polynomial
//! invariants of virtual knots and links.

pub mod diagram;
pub mod error;
pub mod invariant;
pub mod laurent;
pub mod laurent2;
pub mod matrix;
pub mod poly;
pub mod quaternion;
pub mod ring;
pub mod search;
pub mod switch;
pub mod tables;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use laurent2::Laurent2;
pub use matrix::Matrix;
pub use quaternion::Quaternion;
pub use ring::{ComplexRational, Rational, Ring};

/// Quaternion with exact rational coefficients.
pub type Quat = Quaternion<Rational>;
/// Laurent polynomial in a central variable `t` with quaternion coefficients.
pub type QuatPoly = Laurent<Quat>;
/// Rational Laurent polynomial in `t`.
pub type RatPoly = Laurent<Rational>;
/// Complex-rational Laurent polynomial in `t`.
pub type ComplexPoly = Laurent<ComplexRational>;
/// Element of the Alexander ring `ℚ[λ±, μ±]`.
pub type AlexPoly = Laurent2<Rational>;
