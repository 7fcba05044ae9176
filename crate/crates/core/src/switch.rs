//! Linear switches: 2×2 matrices satisfying the Yang-Baxter equations with
//! unit off-diagonal entries.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::matrix::Matrix;
use crate::quaternion::Quaternion;
use crate::ring::Ring;
use crate::{AlexPoly, Quat, QuatPoly};

/// Entry-wise conjugation for rings carrying a Hermitian involution.
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

impl<T: Ring> Conjugate for Quaternion<T> {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl<C: Ring + Conjugate> Conjugate for Laurent<C> {
    fn conjugate(&self) -> Self {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, c.conjugate())))
    }
}

/// `S = [[A, B], [C, D]]` with entries in a ring `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Switch<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

/// Which inversion formula applies to a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionBranch {
    /// `B`, `D` and `Δ = B⁻¹A − D⁻¹C` are units.
    ViaD,
    /// `A`, `C` and `Δ′ = C⁻¹D − A⁻¹B` are units.
    ViaA,
    /// Commutative ring with a unit determinant.
    Determinant,
}

/// Outcome of [`Switch::check_yang_baxter`].
#[derive(Clone, Debug, PartialEq)]
pub struct YangBaxterReport<R> {
    /// Right-hand side minus left-hand side of equations 1–7 in order.
    pub residuals: [R; 7],
    /// Direct comparison `(S×id)(id×S)(S×id) = (id×S)(S×id)(id×S)`.
    pub braid_identity: bool,
    pub b_unit: bool,
    pub c_unit: bool,
    pub branch: Option<InversionBranch>,
}

impl<R: Ring> YangBaxterReport<R> {
    pub fn equations_hold(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }

    pub fn units_hold(&self) -> bool {
        self.b_unit && self.c_unit && self.branch.is_some()
    }

    /// Pass iff every residual vanishes, the 3×3 identity holds and the unit
    /// conditions are met.
    pub fn is_switch(&self) -> bool {
        self.equations_hold() && self.braid_identity && self.units_hold()
    }

    /// 1-based numbers of the equations with a nonzero residual.
    pub fn failing_equations(&self) -> Vec<usize> {
        (0..7).filter(|&i| !self.residuals[i].is_zero()).map(|i| i + 1).collect()
    }
}

/// The sideways matrices `S⁺₋` (up) and `S⁻₊` (down).
#[derive(Clone, Debug, PartialEq)]
pub struct SidewaysPair<R> {
    pub up: Matrix<R>,
    pub down: Matrix<R>,
}

fn commutator<R: Ring>(x: &R, y: &R) -> R {
    x.clone() * y.clone() - y.clone() * x.clone()
}

fn inv<R: Ring>(x: &R) -> Result<R> {
    x.unit_inverse().ok_or(Error::NonUnit)
}

impl<R: Ring> Switch<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_matrix(m: &Matrix<R>) -> Self {
        assert!(m.rows() == 2 && m.cols() == 2);
        Self::new(m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone())
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn matrix(&self) -> Matrix<R> {
        Matrix::two_by_two(self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Switch<S> {
        Switch::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    /// `Δ = B⁻¹A − D⁻¹C`.
    pub fn delta(&self) -> Result<R> {
        Ok(inv(&self.b)? * self.a.clone() - inv(&self.d)? * self.c.clone())
    }

    /// `Δ′ = C⁻¹D − A⁻¹B`.
    pub fn delta_prime(&self) -> Result<R> {
        Ok(inv(&self.c)? * self.d.clone() - inv(&self.a)? * self.b.clone())
    }

    pub fn inversion_branch(&self) -> Option<InversionBranch> {
        if self.delta().is_ok_and(|x| x.is_unit()) {
            return Some(InversionBranch::ViaD);
        }
        if self.delta_prime().is_ok_and(|x| x.is_unit()) {
            return Some(InversionBranch::ViaA);
        }
        if R::is_commutative() {
            let det = self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone();
            if det.is_unit() {
                return Some(InversionBranch::Determinant);
            }
        }
        None
    }

    /// The seven equations, the direct 3×3 identity and the unit conditions.
    pub fn check_yang_baxter(&self) -> YangBaxterReport<R> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let p = |xs: &[&R]| xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc * (*x).clone());
        let residuals = [
            p(&[a, a]) + p(&[b, a, c]) - a.clone(),
            p(&[b, a, d]) - commutator(b, a),
            p(&[c, d, a]) - commutator(c, d),
            p(&[d, d]) + p(&[c, d, b]) - d.clone(),
            p(&[d, a, c]) - commutator(a, c),
            p(&[a, d, b]) - commutator(d, b),
            p(&[a, d, a]) - p(&[d, a, d]) - commutator(c, b),
        ];
        let s = self.matrix();
        let left = Matrix::embed(3, 0, &s);
        let right = Matrix::embed(3, 1, &s);
        let lhs = &(&left * &right) * &left;
        let rhs = &(&right * &left) * &right;
        YangBaxterReport {
            residuals,
            braid_identity: lhs == rhs,
            b_unit: b.is_unit(),
            c_unit: c.is_unit(),
            branch: self.inversion_branch(),
        }
    }

    pub fn is_switch(&self) -> bool {
        self.check_yang_baxter().is_switch()
    }

    /// Two-sided inverse of the matrix by whichever inversion formula applies.
    pub fn invert(&self) -> Result<Self> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        match self.inversion_branch().ok_or(Error::NotInvertible)? {
            InversionBranch::ViaD => {
                let di = inv(&self.delta()?)?;
                let (bi, dinv) = (inv(b)?, inv(d)?);
                Ok(Self::new(
                    di.clone() * bi.clone(),
                    -(di.clone() * dinv.clone()),
                    -(dinv.clone() * c.clone() * di.clone() * bi.clone()),
                    bi * a.clone() * di * dinv,
                ))
            }
            InversionBranch::ViaA => {
                let di = inv(&self.delta_prime()?)?;
                let (ai, ci) = (inv(a)?, inv(c)?);
                Ok(Self::new(
                    ci.clone() * d.clone() * di.clone() * ai.clone(),
                    -(ai.clone() * b.clone() * di.clone() * ci.clone()),
                    -(di.clone() * ai),
                    di * ci,
                ))
            }
            InversionBranch::Determinant => {
                let det = a.clone() * d.clone() - b.clone() * c.clone();
                let di = inv(&det)?;
                Ok(Self::new(
                    d.clone() * di.clone(),
                    -(b.clone() * di.clone()),
                    -(c.clone() * di.clone()),
                    a.clone() * di,
                ))
            }
        }
    }

    /// `S⁺₋ = [[DB⁻¹, C − DB⁻¹A], [B⁻¹, −B⁻¹A]]` and
    /// `S⁻₊ = [[−C⁻¹D, C⁻¹], [B − AC⁻¹D, AC⁻¹]]`.
    pub fn sideways(&self) -> Result<SidewaysPair<R>> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let bi = inv(b)?;
        let ci = inv(c)?;
        let dbi = d.clone() * bi.clone();
        let up = Matrix::two_by_two(
            dbi.clone(),
            c.clone() - dbi * a.clone(),
            bi.clone(),
            -(bi * a.clone()),
        );
        let down = Matrix::two_by_two(
            -(ci.clone() * d.clone()),
            ci.clone(),
            b.clone() - a.clone() * ci.clone() * d.clone(),
            a.clone() * ci,
        );
        Ok(SidewaysPair { up, down })
    }

    /// Checks `(S⁻¹)⁺₋ · S⁻₊ = I` and `(S⁻¹)⁻₊ · S⁺₋ = I`.
    pub fn sideways_inverse_relation(&self) -> Result<bool> {
        let own = self.sideways()?;
        let of_inverse = self.invert()?.sideways()?;
        Ok((&of_inverse.up * &own.down).is_identity() && (&of_inverse.down * &own.up).is_identity())
    }

    /// `λ = B⁻¹(1 − A)`, cross-checked against `(1 − D)⁻¹C`.
    pub fn lambda(&self) -> Result<R> {
        let first = inv(&self.b)? * (R::one() - self.a.clone());
        let second = inv(&(R::one() - self.d.clone()))? * self.c.clone();
        if first == second {
            Ok(first)
        } else {
            Err(Error::LambdaMismatch)
        }
    }

    /// `S† = [[D, C], [B, A]]`.
    pub fn dagger(&self) -> Self {
        Self::new(self.d.clone(), self.c.clone(), self.b.clone(), self.a.clone())
    }

    /// `S(t) = [[A, tB], [t⁻¹C, D]]` over Laurent polynomials in a central `t`;
    /// with `use_t = false` the entries are lifted unchanged.
    pub fn twist(&self, use_t: bool) -> Switch<Laurent<R>> {
        let k = i64::from(use_t);
        Switch::new(
            Laurent::constant(self.a.clone()),
            Laurent::monomial(self.b.clone(), k),
            Laurent::monomial(self.c.clone(), -k),
            Laurent::constant(self.d.clone()),
        )
    }

    /// `S = diag(A, 1) · [[1, 0], [C, 1]] · diag(1, CΔ′) · [[1, A⁻¹B], [0, 1]]`,
    /// available when `A` and `CΔ′` are units.
    pub fn elementary_factors(&self) -> Option<[Matrix<R>; 4]> {
        let ai = self.a.unit_inverse()?;
        let cd = self.c.clone() * self.delta_prime().ok()?;
        cd.unit_inverse()?;
        let (o, z) = (R::one(), R::zero());
        Some([
            Matrix::two_by_two(self.a.clone(), z.clone(), z.clone(), o.clone()),
            Matrix::two_by_two(o.clone(), z.clone(), self.c.clone(), o.clone()),
            Matrix::two_by_two(o.clone(), z.clone(), z.clone(), cd),
            Matrix::two_by_two(o.clone(), ai * self.b.clone(), z, o),
        ])
    }
}

impl<R: Ring + Conjugate> Switch<R> {
    /// `S* = [[Ā, C̄], [B̄, D̄]]`.
    pub fn star(&self) -> Self {
        Self::new(self.a.conjugate(), self.c.conjugate(), self.b.conjugate(), self.d.conjugate())
    }

    /// `{S⁻¹, S†, S*, S†*}`.
    pub fn variants(&self) -> Result<[Self; 4]> {
        Ok([self.invert()?, self.dagger(), self.star(), self.dagger().star()])
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Switch<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl Switch<Quat> {
    /// Parses four comma-separated quaternion literals `A,B,C,D`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected four entries `A,B,C,D`, got `{text}`")));
        }
        let q: Vec<Quat> = parts.iter().map(|p| p.parse()).collect::<Result<_>>()?;
        let [a, b, c, d]: [Quat; 4] = q.try_into().unwrap();
        Ok(Self::new(a, b, c, d))
    }
}

/// A switch over one of the supported scalar rings.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum AnySwitch {
    Quaternion(Switch<Quat>),
    Alexander(Switch<AlexPoly>),
}

impl fmt::Display for AnySwitch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySwitch::Quaternion(s) => s.fmt(f),
            AnySwitch::Alexander(s) => s.fmt(f),
        }
    }
}

const NAMED_QUATERNION: &[(&str, &str)] = &[
    ("budapest", "1+i,-j,j,1+i"),
    ("s9-1", "1+i,-j,j,1+i"),
    ("s9-2", "1+i,-1/2+1/2i+1/2j-1/2k,-1/2+1/2i-1/2j+1/2k,1/2+1/2i+1/2j+1/2k"),
    ("s9-3", "1/2+1/2i+1/2j+1/2k,-1/2+1/2i-1/2j+1/2k,-1/2+1/2i+1/2j-1/2k,1+i"),
    ("s9-4", "1+i,-1+i-k,-1/3+1/3i+1/3k,1/3+1/3i+2/3j"),
    ("table1-1", "1+i,j,-j,1+i"),
    ("table1-2", "1+i,1/2-1/2i+1/2j+1/2k,1/2-1/2i-1/2j-1/2k,1/2+1/2i+1/2j-1/2k"),
    ("table1-3", "1+i,-1/2+1/2i+1/2j+1/2k,-1/2+1/2i-1/2j-1/2k,1/2+1/2i-1/2j+1/2k"),
    ("table1-4", "1/2+1/2i+1/2j+1/2k,1/2+1/2i-1/2j-1/2k,1/2-1/2i+1/2j-1/2k,1+k"),
    ("table1-5", "1/2+1/2i+1/2j+1/2k,-1/2+1/2i+1/2j-1/2k,-1/2-1/2i+1/2j+1/2k,1+j"),
    ("table2-1", "1-j,-k,k,1-j"),
    ("table2-2", "1+i,1/2j+1/2k,-j-k,1+i"),
    ("table2-3", "1+i,1-i-j-k,1/4-1/4i+1/4j+1/4k,1/2+1/2i-1/2j+1/2k"),
    ("table2-4", "1-i,-j-k,1/2j+1/2k,1-i"),
    ("table2-5", "1+j,1-j-k,1/3-1/3j+1/3k,1/3+2/3i+1/3j"),
    ("table2-6", "1-k,-1-i-j-k,-1/4+1/4i+1/4j-1/4k,1/2-1/2i+1/2j-1/2k"),
    ("table2-7", "1-k,-1-j-k,-1/3+1/3j-1/3k,1/3-2/3i-1/3k"),
    ("table2-8", "1/2+1/2i-1/2j-1/2k,-1/4+1/4i-1/4j+1/4k,-1-i-j-k,1-j"),
    ("table2-9", "1/2+1/2i+1/2j-1/2k,1/4+1/4i-1/4j+1/4k,1-i-j-k,1+j"),
    ("table2-10", "1/3+2/3i-1/3j,-1/3-1/3j+1/3k,-1-j-k,1-j"),
    ("table2-11", "1/3-2/3i+1/3k,1/3+1/3j-1/3k,1-j-k,1+k"),
];

/// Identifiers accepted by [`named_switch`].
pub fn switch_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = NAMED_QUATERNION.iter().map(|(n, _)| *n).collect();
    names.extend(["alexander", "alexander-alt"]);
    names
}

/// `alexander` is `[[0, μ], [λ, 1 − μλ]]`; `alexander-alt` is `[[1 − μλ, μ], [λ, 0]]`.
pub fn alexander_switch(alt: bool) -> Switch<AlexPoly> {
    let (l, m) = (AlexPoly::lambda(), AlexPoly::mu());
    let x = AlexPoly::one() - &m * &l;
    if alt {
        Switch::new(x, m, l, AlexPoly::zero())
    } else {
        Switch::new(AlexPoly::zero(), m, l, x)
    }
}

pub fn named_quaternion_switch(name: &str) -> Result<Switch<Quat>> {
    NAMED_QUATERNION
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, lit)| Switch::parse(lit).expect("built-in literal parses"))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn named_switch(name: &str) -> Result<AnySwitch> {
    match name {
        "alexander" => Ok(AnySwitch::Alexander(alexander_switch(false))),
        "alexander-alt" => Ok(AnySwitch::Alexander(alexander_switch(true))),
        _ => named_quaternion_switch(name).map(AnySwitch::Quaternion),
    }
}

/// A switch given either by name or as an `A,B,C,D` literal.
pub fn resolve_switch(source: &str) -> Result<AnySwitch> {
    match named_switch(source) {
        Ok(s) => Ok(s),
        Err(Error::UnknownName(_)) if source.contains(',') => Switch::parse(source).map(AnySwitch::Quaternion),
        Err(e) => Err(e),
    }
}

impl QuatPoly {
    /// Lifts a constant quaternion.
    pub fn from_quat(q: Quat) -> Self {
        Laurent::constant(q)
    }
}
