//! Scalar ring abstractions shared by every algebraic type in the crate.
//!
//! The engine is written against [`Ring`] rather than a concrete number type so
//! that quaternions, Laurent polynomials and matrices compose freely: a
//! `Laurent<Quaternion<Rational>>` is itself a `Ring`, and so is a matrix entry
//! built from it. Exactness comes from instantiating with [`Rational`].

use std::fmt::Debug;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number; the exact scalar of the crate.
pub type Rational = BigRational;

/// Associative ring with identity. Multiplication need not commute.
pub trait Ring:
    Clone + Debug + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    /// Two-sided inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Whether multiplication is known to commute for every pair of elements.
    fn is_commutative() -> bool {
        true
    }
}

/// Integral domain in which divisibility can be decided and the exact
/// quotient recovered.
pub trait ExactDiv: Ring {
    /// `Some(q)` with `q * divisor == self`, or `None` when the division is not exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// Commutative ring in which every nonzero element is a unit.
pub trait Field: ExactDiv {}

impl Ring for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl Field for BigRational {}

impl Ring for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl Ring for f64 {
    fn unit_inverse(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl Ring for f32 {
    fn unit_inverse(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

/// Complex numbers over a commutative scalar ring. Units are the elements whose
/// norm is a unit of the scalar ring.
impl<T> Ring for Complex<T>
where
    T: Ring + num_traits::Num,
{
    fn unit_inverse(&self) -> Option<Self> {
        let norm = self.norm_sqr();
        let inv = norm.unit_inverse()?;
        Some(Complex::new(
            self.re.clone() * inv.clone(),
            -(self.im.clone() * inv),
        ))
    }
}

impl<T> ExactDiv for Complex<T>
where
    T: ExactDiv + num_traits::Num,
{
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let norm = divisor.norm_sqr();
        if norm.is_zero() {
            return None;
        }
        let num = self.clone() * divisor.conj();
        Some(Complex::new(
            num.re.div_exact(&norm)?,
            num.im.div_exact(&norm)?,
        ))
    }
}

impl Field for Complex<BigRational> {}

/// Complex rational number `re + im·i`.
pub type ComplexRational = Complex<Rational>;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Greatest common divisor of two nonnegative rationals in the sense of
/// fractional ideals: `gcd(a/b, c/d) = gcd(a, c) / lcm(b, d)`.
pub fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integer_division() {
        let a = Complex::new(BigInt::from(3), BigInt::from(4));
        let b = Complex::new(BigInt::from(1), BigInt::from(2));
        let q = (a.clone() * b.clone()).div_exact(&b).unwrap();
        assert_eq!(q, a);
        assert!(a.div_exact(&b).is_none());
        assert!(a.div_exact(&Complex::zero()).is_none());
    }

    #[test]
    fn gaussian_units() {
        let i = Complex::new(BigInt::zero(), BigInt::one());
        assert_eq!(i.unit_inverse().unwrap(), -i.clone());
        assert!(Complex::new(BigInt::from(1), BigInt::from(1)).unit_inverse().is_none());
    }

    #[test]
    fn fractional_gcd() {
        assert_eq!(rational_gcd(&ratio(3, 4), &ratio(9, 2)), ratio(3, 4));
        assert_eq!(rational_gcd(&rat(0), &ratio(-5, 2)), ratio(5, 2));
        assert_eq!(rational_gcd(&rat(6), &rat(4)), rat(2));
    }
}
