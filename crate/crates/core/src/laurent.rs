//! Sparse Laurent polynomials in one central variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{rational_gcd, ExactDiv, Field, Rational, Ring};

/// `Σ c_e t^e` over integer exponents `e`; zero coefficients are never stored.
///
/// The variable commutes with every coefficient, so quaternion coefficients are
/// fine: products multiply coefficients in operand order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Ring> Laurent<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn monomial(c: C, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `t` itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the only exponent present is zero (or the polynomial is zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + n, c.clone())).collect() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_var(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Splits into `t^shift · p(t)` with `p(0) ≠ 0` (zero gives shift 0).
    pub fn to_poly(&self) -> (i64, Poly<C>) {
        let shift = self.min_exp().unwrap_or(0);
        let len = self.max_exp().map_or(0, |m| (m - shift + 1) as usize);
        let mut coeffs = vec![C::zero(); len];
        for (e, c) in &self.terms {
            coeffs[(e - shift) as usize] = c.clone();
        }
        (shift, Poly::new(coeffs))
    }

    pub fn from_poly(shift: i64, p: &Poly<C>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())))
    }

    /// Evaluates at a central element `t` (which must be a unit when negative
    /// powers are present).
    pub fn substitute(&self, t: &C) -> Option<C> {
        let inv = t.unit_inverse();
        let mut acc = C::zero();
        for (&e, c) in &self.terms {
            let base = if e < 0 { inv.clone()? } else { t.clone() };
            let mut p = C::one();
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc + c.clone() * p;
        }
        Some(acc)
    }
}

impl<C: Ring> Add for Laurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Sub for Laurent<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a, C: Ring> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term(ea + eb, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for Laurent<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Ring for Laurent<C> {
    /// Units are the monomials `c·t^e` with `c` a unit.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(c.unit_inverse()?, -e))
    }

    fn is_commutative() -> bool {
        C::is_commutative()
    }
}

impl<C: ExactDiv> ExactDiv for Laurent<C> {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (sa, pa) = self.to_poly();
        let (sb, pb) = divisor.to_poly();
        let q = pa.div_exact(&pb)?;
        Some(Self::from_poly(sa - sb, &q))
    }
}

/// The monomial unit `sign · scale · t^shift` applied by a canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFactor {
    pub sign: i8,
    pub shift: i64,
    /// Positive rational scalar.
    pub scale: Rational,
}

impl UnitFactor {
    pub fn identity() -> Self {
        Self { sign: 1, shift: 0, scale: Rational::one() }
    }
}

/// A polynomial in canonical form together with the unit that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical<P, U = UnitFactor> {
    pub poly: P,
    pub unit: U,
}

impl Laurent<Rational> {
    /// Fractional content: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |g, c| rational_gcd(&g, c))
    }

    /// Normal form up to units `±q·t^n` (q a positive rational): lowest
    /// exponent zero, coprime integer coefficients, positive constant term.
    pub fn canonical_form(&self) -> Canonical<Self> {
        let Some(low) = self.min_exp() else {
            return Canonical { poly: Self::zero(), unit: UnitFactor::identity() };
        };
        let scale = self.content().recip();
        let sign: i8 = if self.terms[&low].is_negative() { -1 } else { 1 };
        let factor = if sign < 0 { -scale.clone() } else { scale.clone() };
        Canonical {
            poly: self.scale(&factor).shift(-low),
            unit: UnitFactor { sign, shift: -low, scale },
        }
    }

    pub fn canonical(&self) -> Self {
        self.canonical_form().poly
    }

    /// Equality up to a unit `±q·t^n` with `q` a nonzero rational.
    pub fn associate_of(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        self.substitute(t)
    }

    pub fn degree_span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }
}

/// Gcd over `ℚ[t, t⁻¹]` in canonical form. The gcd of `{0}` is `0`.
///
/// # Panics
/// Panics on an empty input set.
pub fn laurent_gcd(polys: &[Laurent<Rational>]) -> Laurent<Rational> {
    raw_gcd(polys).canonical()
}

/// Gcd in which the rational scalar is fixed by fractional contents:
/// `gcd(contents) · primitive gcd`, lowest exponent zero and positive constant term.
pub fn raw_gcd(polys: &[Laurent<Rational>]) -> Laurent<Rational> {
    assert!(!polys.is_empty(), "gcd of an empty set");
    let mut content = Rational::zero();
    let mut g: Poly<Rational> = Poly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        content = rational_gcd(&content, &p.content());
        g = g.gcd(&p.to_poly().1);
    }
    if g.is_zero() {
        return Laurent::zero();
    }
    Laurent::from_poly(0, &g).canonical().scale(&content)
}

/// Gcd of polynomials over any field, monic (used for sanity checks on
/// complex-coefficient determinants).
pub fn field_gcd<F: Field>(polys: &[Laurent<F>]) -> Laurent<F> {
    let g = polys
        .iter()
        .fold(Poly::zero(), |g: Poly<F>, p| g.gcd(&p.to_poly().1));
    Laurent::from_poly(0, &g)
}

/// Wraps a coefficient's display in parentheses when it is a sum.
pub(crate) fn fmt_coeff(s: &str) -> String {
    if s.chars().skip(1).any(|c| c == '+' || c == '-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

impl<C> Laurent<C>
where
    C: Ring + fmt::Display,
{
    /// Renders with descending exponents, e.g. `2t^4+5t^2+2`.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let one = C::one();
        let minus_one = -C::one();
        let mut out = String::new();
        for (&e, c) in self.terms.iter().rev() {
            let raw = c.to_string();
            let (neg, body) = if c == &minus_one && e != 0 {
                (true, String::new())
            } else if c == &one && e != 0 {
                (false, String::new())
            } else {
                let body = if e == 0 { raw } else { fmt_coeff(&raw) };
                match body.strip_prefix('-') {
                    Some(rest) if !body.starts_with('(') => (true, rest.to_string()),
                    _ => (false, body),
                }
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("t"))
    }
}

impl Laurent<Rational> {
    /// Parses sums of terms `c`, `c·var`, `c·var^e`, e.g. `3/4t^4-3/2t^3+1`
    /// or `t^-1`; the coefficient may be omitted.
    pub fn parse_var(text: &str, var: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad polynomial `{text}`"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            let split = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if split {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        let mut out = Self::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-Rational::one(), &term[1..]),
                b'+' => (Rational::one(), &term[1..]),
                _ => (Rational::one(), term),
            };
            let (coeff, exp) = match body.find(var) {
                Some(at) => {
                    let c = &body[..at];
                    let rest = &body[at + var.len()..];
                    let e = match rest.strip_prefix('^') {
                        Some(e) => e.parse::<i64>().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    let c = if c.is_empty() { Rational::one() } else { c.parse::<Rational>().map_err(|_| bad())? };
                    (c, e)
                }
                None => (body.parse::<Rational>().map_err(|_| bad())?, 0),
            };
            out = out + Self::monomial(sign * coeff, exp);
        }
        Ok(out)
    }
}

impl std::str::FromStr for Laurent<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_var(s, "t")
    }
}
