//! Hamilton quaternions over a generic scalar ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// `w + x·i + y·j + z·k` with `i² = j² = k² = ijk = −1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Quaternion<T> {
    pub const fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }
}

impl<T: Ring> Quaternion<T> {
    pub fn real(w: T) -> Self {
        Self::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// `|q|² = w² + x² + y² + z²`.
    pub fn norm_sqr(&self) -> T {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    /// The real part ℛ(q).
    pub fn re(&self) -> &T {
        &self.w
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    /// `q⁻¹ = conj(q) / |q|²`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.norm_sqr().unit_inverse().ok_or(Error::NonUnit)?;
        Ok(self.conj().scale(&inv))
    }

    pub fn components(&self) -> [&T; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// Splits `q = a + b·j` into the complex pair `(a, b)`.
    pub fn complex_pair(&self) -> (Complex<T>, Complex<T>) {
        (
            Complex::new(self.w.clone(), self.x.clone()),
            Complex::new(self.y.clone(), self.z.clone()),
        )
    }

    /// Inverse of [`complex_pair`](Self::complex_pair).
    pub fn from_complex_pair(a: Complex<T>, b: Complex<T>) -> Self {
        Self::new(a.re, a.im, b.re, b.im)
    }

    /// The complex embedding `ψ(a + b·j) = [[a, b], [−b̄, ā]]`.
    pub fn psi(&self) -> [[Complex<T>; 2]; 2]
    where
        T: num_traits::Num,
    {
        let (a, b) = self.complex_pair();
        [[a.clone(), b.clone()], [-b.conj(), a.conj()]]
    }
}

impl<T: Ring> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Ring> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Ring> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<'a, T: Ring> Mul<&'a Quaternion<T>> for &'a Quaternion<T> {
    type Output = Quaternion<T>;
    fn mul(self, q: &'a Quaternion<T>) -> Quaternion<T> {
        let p = self;
        let m = |a: &T, b: &T| a.clone() * b.clone();
        Quaternion::new(
            m(&p.w, &q.w) - m(&p.x, &q.x) - m(&p.y, &q.y) - m(&p.z, &q.z),
            m(&p.w, &q.x) + m(&p.x, &q.w) + m(&p.y, &q.z) - m(&p.z, &q.y),
            m(&p.w, &q.y) - m(&p.x, &q.z) + m(&p.y, &q.w) + m(&p.z, &q.x),
            m(&p.w, &q.z) + m(&p.x, &q.y) - m(&p.y, &q.x) + m(&p.z, &q.w),
        )
    }
}

impl<T: Ring> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Ring> Zero for Quaternion<T> {
    fn zero() -> Self {
        Self::real(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_real()
    }
}

impl<T: Ring> One for Quaternion<T> {
    fn one() -> Self {
        Self::real(T::one())
    }
}

impl<T: Ring> Ring for Quaternion<T> {
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn is_commutative() -> bool {
        false
    }
}

impl<T> fmt::Display for Quaternion<T>
where
    T: Ring + PartialOrd + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, basis) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if basis.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(basis)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parses literals such as `1+i`, `-1/2+1/2i+1/2j-1/2k`, `i/3` and `2j/3`.
impl<T> FromStr for Quaternion<T>
where
    T: Ring + FromStr,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid quaternion literal `{s}`"));
        if text.is_empty() {
            return Err(bad());
        }
        let mut q = Self::zero();
        let bytes = text.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let term = &text[start..end];
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let basis_at = body.find(['i', 'j', 'k']);
            let (num, basis, tail) = match basis_at {
                Some(p) => (&body[..p], Some(body.as_bytes()[p]), &body[p + 1..]),
                None => (body, None, ""),
            };
            if num.is_empty() && basis.is_none() {
                return Err(bad());
            }
            let mut coeff = if num.is_empty() {
                T::one()
            } else {
                num.parse::<T>().map_err(|_| bad())?
            };
            if let Some(den) = tail.strip_prefix('/') {
                let den = den.parse::<T>().map_err(|_| bad())?;
                coeff = coeff * den.unit_inverse().ok_or_else(bad)?;
            } else if !tail.is_empty() {
                // trailing coefficient, as in `j2/3`
                if !num.is_empty() {
                    return Err(bad());
                }
                coeff = tail.parse::<T>().map_err(|_| bad())?;
            }
            if negative {
                coeff = -coeff;
            }
            let slot = match basis {
                None => &mut q.w,
                Some(b'i') => &mut q.x,
                Some(b'j') => &mut q.y,
                Some(_) => &mut q.z,
            };
            *slot = slot.clone() + coeff;
            start = end;
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ratio, Rational};

    type Q = Quaternion<Rational>;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    #[test]
    fn defining_relations() {
        assert_eq!(Q::i() * Q::j(), Q::k());
        assert_eq!(Q::j() * Q::k(), Q::i());
        assert_eq!(Q::k() * Q::i(), Q::j());
        assert_eq!(Q::i() * Q::j() * Q::k(), -Q::one());
        assert_eq!(Q::j() * Q::i(), -Q::k());
    }

    #[test]
    fn hamilton_examples() {
        assert_eq!(q("j") * q("1+i"), q("j-k"));
        let p = q("1+i") * q("-j");
        assert_eq!(p.clone() * q("-j").inverse().unwrap(), q("1+i"));
    }

    #[test]
    fn inverses() {
        assert_eq!(q("1+i").inverse().unwrap(), q("1/2-1/2i"));
        assert_eq!(q("-j").inverse().unwrap(), q("j"));
        assert!(matches!(Q::zero().inverse(), Err(Error::NonUnit)));
    }

    #[test]
    fn literal_forms() {
        assert_eq!(q("1/3+i/3+2j/3"), Q::new(ratio(1, 3), ratio(1, 3), ratio(2, 3), ratio(0, 1)));
        assert_eq!(q("1/3+i/3+j2/3"), q("1/3+i/3+2j/3"));
        assert_eq!(q(" -1/2 + 1/2i "), Q::new(ratio(-1, 2), ratio(1, 2), ratio(0, 1), ratio(0, 1)));
        assert!("".parse::<Q>().is_err());
        assert!("1+x".parse::<Q>().is_err());
        assert!("1+".parse::<Q>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["1+i", "-1/2+1/2i+1/2j-1/2k", "-j", "0", "1/3+1/3i+2/3j", "k"] {
            assert_eq!(q(s).to_string(), s);
        }
    }

    #[test]
    fn psi_values() {
        let z = Complex::new(ratio(0, 1), ratio(0, 1));
        let one = Complex::new(ratio(1, 1), ratio(0, 1));
        let iu = Complex::new(ratio(0, 1), ratio(1, 1));
        assert_eq!(Q::one().psi(), [[one.clone(), z.clone()], [z.clone(), one.clone()]]);
        assert_eq!(Q::j().psi(), [[z.clone(), one.clone()], [-one.clone(), z.clone()]]);
        assert_eq!(Q::i().psi(), [[iu.clone(), z.clone()], [z, -iu]]);
    }

    #[test]
    fn float_instantiation() {
        let p = Quaternion::<f64>::new(1.0, 2.0, 0.5, -1.0);
        let prod = &p * &p.inverse().unwrap();
        assert!((prod.w - 1.0).abs() < 1e-12);
        assert!(prod.x.abs() < 1e-12 && prod.y.abs() < 1e-12 && prod.z.abs() < 1e-12);
    }
}
