//! Sparse Laurent polynomials in the two commuting variables λ, μ of the
//! Alexander ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::laurent::{fmt_coeff, Canonical};
use crate::poly::Poly;
use crate::ring::{rational_gcd, ExactDiv, Rational, Ring};

/// Exponent pair `(a, b)` of the monomial `λ^a μ^b`. The derived ordering is
/// lexicographic with λ > μ.
pub type Exp2 = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent2<C> {
    terms: BTreeMap<Exp2, C>,
}

/// The unit applied by [`Laurent2::canonical_form`]: `sign · scale · λ^a μ^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitFactor2 {
    pub sign: i8,
    pub shift: Exp2,
    pub scale: Rational,
}

impl<C: Ring> Laurent2<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (Exp2, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn monomial(c: C, e: Exp2) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn lambda() -> Self {
        Self::monomial(C::one(), (1, 0))
    }

    pub fn mu() -> Self {
        Self::monomial(C::one(), (0, 1))
    }

    fn add_term(&mut self, e: Exp2, c: C) {
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exp2, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: Exp2) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Laurent2<D> {
        Laurent2::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn shift(&self, by: Exp2) -> Self {
        Laurent2 {
            terms: self.terms.iter().map(|((a, b), c)| ((a + by.0, b + by.1), c.clone())).collect(),
        }
    }

    /// Smallest λ-exponent and smallest μ-exponent (taken independently).
    pub fn min_exps(&self) -> Option<Exp2> {
        let a = self.terms.keys().map(|e| e.0).min()?;
        let b = self.terms.keys().map(|e| e.1).min()?;
        Some((a, b))
    }

    /// `λ^a μ^b · P(λ, μ)` with `P` a polynomial in λ over `C[μ]`.
    pub fn to_nested(&self) -> (Exp2, Poly<Poly<C>>) {
        let Some((ma, mb)) = self.min_exps() else {
            return ((0, 0), Poly::zero());
        };
        let deg_a = self.terms.keys().map(|e| e.0 - ma).max().unwrap() as usize;
        let mut rows: Vec<Vec<C>> = vec![Vec::new(); deg_a + 1];
        for (&(a, b), c) in &self.terms {
            let row = &mut rows[(a - ma) as usize];
            let j = (b - mb) as usize;
            if row.len() <= j {
                row.resize(j + 1, C::zero());
            }
            row[j] = c.clone();
        }
        ((ma, mb), Poly::new(rows.into_iter().map(Poly::new).collect()))
    }

    pub fn from_nested(shift: Exp2, p: &Poly<Poly<C>>) -> Self {
        let mut terms = Vec::new();
        for (i, inner) in p.coeffs().iter().enumerate() {
            for (j, c) in inner.coeffs().iter().enumerate() {
                terms.push(((shift.0 + i as i64, shift.1 + j as i64), c.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Evaluates at unit values of λ and μ in the coefficient ring.
    pub fn substitute(&self, lambda: &C, mu: &C) -> Option<C> {
        let pow = |x: &C, e: i64| -> Option<C> {
            let base = if e < 0 { x.unit_inverse()? } else { x.clone() };
            Some((0..e.unsigned_abs()).fold(C::one(), |acc, _| acc * base.clone()))
        };
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            acc = acc + c.clone() * pow(lambda, a)? * pow(mu, b)?;
        }
        Some(acc)
    }
}

impl<C: Ring> Add for Laurent2<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Sub for Laurent2<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for Laurent2<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent2 { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a, C: Ring> Mul<&'a Laurent2<C>> for &'a Laurent2<C> {
    type Output = Laurent2<C>;
    fn mul(self, rhs: &'a Laurent2<C>) -> Laurent2<C> {
        let mut out = Laurent2::zero();
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for Laurent2<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Ring> Zero for Laurent2<C> {
    fn zero() -> Self {
        Laurent2 { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for Laurent2<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Ring for Laurent2<C> {
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(c.unit_inverse()?, (-a, -b)))
    }

    fn is_commutative() -> bool {
        C::is_commutative()
    }
}

impl<C: ExactDiv> ExactDiv for Laurent2<C> {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (sa, pa) = self.to_nested();
        let (sb, pb) = divisor.to_nested();
        let q = pa.div_exact(&pb)?;
        Some(Self::from_nested((sa.0 - sb.0, sa.1 - sb.1), &q))
    }
}

impl Laurent2<Rational> {
    pub fn content(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |g, c| rational_gcd(&g, c))
    }

    /// Lowest λ and μ exponents shifted to zero, coprime integer coefficients
    /// and a positive coefficient on the lexicographically largest monomial
    /// (λ > μ).
    pub fn canonical_form(&self) -> Canonical2 {
        let Some((ma, mb)) = self.min_exps() else {
            return Canonical2 {
                poly: Self::zero(),
                unit: UnitFactor2 { sign: 1, shift: (0, 0), scale: Rational::one() },
            };
        };
        let scale = self.content().recip();
        let lead = self.terms.values().next_back().unwrap();
        let sign: i8 = if lead.is_negative() { -1 } else { 1 };
        let factor = if sign < 0 { -scale.clone() } else { scale.clone() };
        Canonical2 {
            poly: self.scale(&factor).shift((-ma, -mb)),
            unit: UnitFactor2 { sign, shift: (-ma, -mb), scale },
        }
    }

    pub fn canonical(&self) -> Self {
        self.canonical_form().poly
    }

    pub fn associate_of(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// True iff every monomial `λ^a μ^b` has `a = b`, i.e. the polynomial is a
    /// function of the product λμ.
    pub fn is_function_of_product(&self) -> bool {
        self.terms.keys().all(|(a, b)| a == b)
    }
}

pub type Canonical2 = Canonical<Laurent2<Rational>, UnitFactor2>;

fn primitive_part(p: &Poly<Poly<Rational>>) -> (Poly<Rational>, Poly<Poly<Rational>>) {
    let content = p.coeffs().iter().fold(Poly::zero(), |g: Poly<Rational>, c| g.gcd(c));
    if content.is_zero() {
        return (content, p.clone());
    }
    let pp = p.map(|c| c.div_exact(&content).expect("content divides every coefficient"));
    (content, pp)
}

fn nested_gcd(a: &Poly<Poly<Rational>>, b: &Poly<Poly<Rational>>) -> Poly<Poly<Rational>> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (ca, pa) = primitive_part(a);
    let (cb, pb) = primitive_part(b);
    let content = ca.gcd(&cb);
    let (mut p, mut q) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
    while !q.is_zero() {
        let r = p.pseudo_rem(&q);
        p = q;
        q = if r.is_zero() { r } else { primitive_part(&r).1 };
    }
    let g = if p.degree() == Some(0) { Poly::one() } else { primitive_part(&p).1 };
    g.scale(&content)
}

/// Gcd over `ℚ[λ±, μ±]` by content/primitive-part recursion on λ, in canonical form.
///
/// # Panics
/// Panics on an empty input set.
pub fn laurent2_gcd(polys: &[Laurent2<Rational>]) -> Laurent2<Rational> {
    raw_gcd2(polys).canonical()
}

/// Gcd with the scalar fixed by fractional contents, as in [`crate::laurent::raw_gcd`].
pub fn raw_gcd2(polys: &[Laurent2<Rational>]) -> Laurent2<Rational> {
    assert!(!polys.is_empty(), "gcd of an empty set");
    let mut content = Rational::zero();
    let mut g = Poly::zero();
    for p in polys.iter().filter(|p| !p.is_zero()) {
        content = rational_gcd(&content, &p.content());
        g = nested_gcd(&g, &p.to_nested().1);
    }
    if g.is_zero() {
        return Laurent2::zero();
    }
    Laurent2::from_nested((0, 0), &g).canonical().scale(&content)
}

impl<C: Ring + fmt::Display> Laurent2<C> {
    /// Ascending graded rendering with `λ → l`, `μ → m`, e.g. `1+m-l*m`.
    pub fn display_vars(&self, l: &str, m: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (a + b, a));
        let one = C::one();
        let minus_one = -C::one();
        let mut out = String::new();
        for e in keys {
            let c = &self.terms[&e];
            let mono = [(l, e.0), (m, e.1)]
                .iter()
                .filter(|(_, p)| *p != 0)
                .map(|(v, p)| if *p == 1 { v.to_string() } else { format!("{v}^{p}") })
                .collect::<Vec<_>>()
                .join("*");
            let (neg, body) = if mono.is_empty() {
                let s = fmt_coeff(&c.to_string());
                match s.strip_prefix('-') {
                    Some(rest) if !s.starts_with('(') => (true, rest.to_string()),
                    _ => (false, s),
                }
            } else if c == &one {
                (false, mono)
            } else if c == &minus_one {
                (true, mono)
            } else {
                let s = fmt_coeff(&c.to_string());
                match s.strip_prefix('-') {
                    Some(rest) if !s.starts_with('(') => (true, format!("{rest}{mono}")),
                    _ => (false, format!("{s}{mono}")),
                }
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Laurent2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_vars("l", "m"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    type A = Laurent2<Rational>;

    fn l() -> A {
        A::lambda()
    }
    fn m() -> A {
        A::mu()
    }
    fn one() -> A {
        A::one()
    }

    #[test]
    fn gcd_examples() {
        let a = l() * m() - l();
        let b = m() - one();
        assert_eq!(laurent2_gcd(&[a, b.clone()]), b.canonical());
        assert_eq!(laurent2_gcd(&[l() - one()]), l() - one());
        let x = (l() - one()) * (m() - one());
        let y = (l() - one()) * m();
        assert_eq!(laurent2_gcd(&[x, y]), l() - one());
    }

    #[test]
    fn gcd_of_coprime_and_zero() {
        assert_eq!(laurent2_gcd(&[l() + one(), m() + one()]), one());
        assert!(laurent2_gcd(&[A::zero(), A::zero()]).is_zero());
        let p = (l() * m() - one()).scale(&ratio(3, 2));
        assert_eq!(laurent2_gcd(&[A::zero(), p]), l() * m() - one());
    }

    #[test]
    fn gcd_with_shared_mu_content() {
        let common = m() * m() + m() + one();
        let a = &common * &(l() + m());
        let b = &common * &(l() * l() - m());
        assert_eq!(laurent2_gcd(&[a, b]), common);
    }

    #[test]
    fn canonical_sign_uses_lex_leading_term() {
        // 1 + μ − λμ: lex-largest monomial is λμ with coefficient −1.
        let p = one() + m() - l() * m();
        let c = p.canonical_form();
        assert_eq!(c.unit.sign, -1);
        assert_eq!(c.poly, l() * m() - m() - one());
        let shifted = p.shift((-2, 3)).scale(&rat(-4));
        assert_eq!(shifted.canonical(), c.poly);
    }

    #[test]
    fn display() {
        assert_eq!((one() + m() - l() * m()).to_string(), "1+m-l*m");
        assert_eq!((l() * l() * m()).scale(&rat(3)).to_string(), "3l^2*m");
        assert_eq!(l().unit_inverse().unwrap().to_string(), "l^-1");
    }

    #[test]
    fn product_form() {
        let lm = l() * m();
        assert!((&lm * &lm - lm.scale(&rat(3)) + one()).is_function_of_product());
        assert!(!(one() + m() - l() * m()).is_function_of_product());
        assert!(A::zero().is_function_of_product());
    }

    #[test]
    fn exact_division() {
        let a = (l() - one()) * (l() * m() - one()) * (m() - one());
        assert_eq!(a.div_exact(&(l() * m() - one())), Some((l() - one()) * (m() - one())));
        assert_eq!(a.div_exact(&(l() + one())), None);
    }
}
