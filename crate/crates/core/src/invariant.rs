//! Study determinants, elementary ideals and the ideal polynomials `Δᵢ`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::raw_gcd;
use crate::laurent2::raw_gcd2;
use crate::matrix::{bareiss_det, Matrix};
use crate::poly::Poly;
use crate::ring::{ExactDiv, Rational, Ring};
use crate::switch::AnySwitch;
use crate::{AlexPoly, QuatPoly, RatPoly};

/// Default highest level computed by [`deltas`] callers.
pub const DEFAULT_LEVEL_CAP: usize = 2;

/// `d(M) = det ψ(M)` for a square matrix over `ℍ[t, t⁻¹]`.
///
/// Each quaternion row is first multiplied by `L·t^{−m}` (with `m` its lowest
/// exponent and `L` the lcm of its denominators) so that `ψ(M)` lives over
/// `ℤ[i][t]`; the determinant is then taken by fraction-free elimination and
/// the scaling undone.
pub fn study_det(m: &Matrix<QuatPoly>) -> Result<RatPoly> {
    assert!(m.is_square(), "Study determinant of a non-square matrix");
    let r = m.rows();
    let mut shift = 0i64;
    let mut denom = BigInt::one();
    let mut cells: Vec<Vec<Vec<Complex<BigInt>>>> = vec![vec![Vec::new(); 2 * r]; 2 * r];
    for i in 0..r {
        let row = m.row(i);
        let Some(low) = row.iter().filter_map(|e| e.min_exp()).min() else {
            return Ok(RatPoly::zero());
        };
        let lcm = row
            .iter()
            .flat_map(|e| e.terms().flat_map(|(_, q)| q.components()))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        shift += low;
        denom *= &lcm;
        for (j, entry) in row.iter().enumerate() {
            for (e, q) in entry.terms() {
                let deg = (e - low) as usize;
                let [w, x, y, z] = q.components().map(|c| (c * &lcm).to_integer());
                let a = Complex::new(w, x);
                let b = Complex::new(y, z);
                let block = [[a.clone(), b.clone()], [-b.conj(), a.conj()]];
                for (di, brow) in block.into_iter().enumerate() {
                    for (dj, v) in brow.into_iter().enumerate() {
                        let cell = &mut cells[2 * i + di][2 * j + dj];
                        if cell.len() <= deg {
                            cell.resize(deg + 1, Complex::zero());
                        }
                        cell[deg] = cell[deg].clone() + v;
                    }
                }
            }
        }
    }
    let big = Matrix::from_rows(
        cells
            .into_iter()
            .map(|row| row.into_iter().map(Poly::new).collect())
            .collect(),
    );
    let det = bareiss_det(&big);
    if det.coeffs().iter().any(|c| !c.im.is_zero()) {
        return Err(Error::ImaginaryDeterminant);
    }
    let scale = Rational::from_integer(denom.pow(2u32)).recip();
    Ok(RatPoly::from_terms(det.coeffs().iter().enumerate().map(|(k, c)| {
        (k as i64 + 2 * shift, Rational::from_integer(c.re.clone()) * &scale)
    })))
}

/// The coefficient ring of a presentation matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    /// `ℍ[t, t⁻¹]`, minors measured by the Study determinant.
    Quaternionic,
    /// `ℚ[λ±, μ±]`, ordinary determinants.
    Alexander,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingTag::Quaternionic => "quaternionic",
            RingTag::Alexander => "alexander",
        })
    }
}

/// Rings whose presentation matrices carry elementary ideals.
pub trait IdealRing: Ring + Send + Sync {
    /// Ring in which minors and their gcds live.
    type Value: ExactDiv + Send + Sync + fmt::Display;
    const TAG: RingTag;
    /// Whether `Eᵢ` also contains the generators of `Eᵢ₋₁`.
    const CUMULATIVE: bool;

    fn minor(m: &Matrix<Self>) -> Result<Self::Value>;
    /// Gcd with its rational scalar fixed by contents.
    fn raw_gcd(values: &[Self::Value]) -> Self::Value;
    fn canonical(value: &Self::Value) -> Self::Value;
}

impl IdealRing for QuatPoly {
    type Value = RatPoly;
    const TAG: RingTag = RingTag::Quaternionic;
    const CUMULATIVE: bool = true;

    fn minor(m: &Matrix<Self>) -> Result<RatPoly> {
        study_det(m)
    }

    fn raw_gcd(values: &[RatPoly]) -> RatPoly {
        raw_gcd(values)
    }

    fn canonical(value: &RatPoly) -> RatPoly {
        value.canonical()
    }
}

impl IdealRing for AlexPoly {
    type Value = AlexPoly;
    const TAG: RingTag = RingTag::Alexander;
    const CUMULATIVE: bool = false;

    fn minor(m: &Matrix<Self>) -> Result<AlexPoly> {
        Ok(bareiss_det(m))
    }

    fn raw_gcd(values: &[AlexPoly]) -> AlexPoly {
        raw_gcd2(values)
    }

    fn canonical(value: &AlexPoly) -> AlexPoly {
        value.canonical()
    }
}

/// Determinants of all `(r−i)×(r−i)` submatrices, in lexicographic order of
/// the deleted row and column sets.
pub fn level_minors<R: IdealRing>(m: &Matrix<R>, level: usize) -> Result<Vec<R::Value>> {
    let r = m.rows();
    if level >= r.max(1) {
        return Err(Error::LevelOutOfRange { level, dim: r });
    }
    let keep = r - level;
    let subsets: Vec<Vec<usize>> = (0..r).combinations(keep).collect();
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
        subsets.iter().rev().cartesian_product(subsets.iter().rev()).collect();
    pairs
        .into_par_iter()
        .map(|(rows, cols)| R::minor(&m.submatrix(rows, cols)))
        .collect()
}

/// Generators of `Eᵢ`; in the quaternionic case they include those of every
/// lower level.
pub fn elementary_ideal_generators<R: IdealRing>(m: &Matrix<R>, level: usize) -> Result<Vec<R::Value>> {
    let mut gens = level_minors(m, level)?;
    if R::CUMULATIVE {
        for lower in (0..level).rev() {
            gens.extend(level_minors(m, lower)?);
        }
    }
    Ok(gens)
}

/// `Δᵢ = gcd Eᵢ` with normalization data.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPolynomial<P> {
    pub level: usize,
    pub ring: RingTag,
    pub canonical: P,
    pub raw: P,
    pub generator_count: usize,
}

impl<P: Ring> IdealPolynomial<P> {
    /// Constant after normalization (including zero).
    pub fn is_constant(&self) -> bool {
        self.canonical.is_zero() || self.canonical.is_one()
    }
}

/// `Δᵢ` for one level.
pub fn delta<R: IdealRing>(m: &Matrix<R>, level: usize) -> Result<IdealPolynomial<R::Value>> {
    Ok(deltas(m, &[level])?.pop().expect("one level requested"))
}

/// `Δᵢ` for each requested level, sharing the work of the cumulative chain and
/// checking `Δᵢ | Δᵢ₋₁` between consecutive computed levels.
pub fn deltas<R: IdealRing>(m: &Matrix<R>, levels: &[usize]) -> Result<Vec<IdealPolynomial<R::Value>>> {
    let Some(&top) = levels.iter().max() else {
        return Ok(Vec::new());
    };
    let r = m.rows();
    if top >= r.max(1) {
        return Err(Error::LevelOutOfRange { level: top, dim: r });
    }
    let needed: Vec<usize> = if R::CUMULATIVE { (0..=top).collect() } else { levels.iter().copied().sorted().dedup().collect() };
    let mut computed: Vec<IdealPolynomial<R::Value>> = Vec::new();
    let mut previous: Option<(R::Value, usize)> = None;
    for level in needed {
        let mut gens = level_minors(m, level)?;
        let mut count = gens.len();
        if R::CUMULATIVE {
            if let Some((g, c)) = &previous {
                gens.push(g.clone());
                count += c;
            }
        }
        let raw = R::raw_gcd(&gens);
        if let Some(prev) = computed.last().filter(|p| p.level + 1 == level) {
            assert!(divides(&raw, &prev.raw), "divisibility chain broken at level {level}");
        }
        previous = Some((raw.clone(), count));
        computed.push(IdealPolynomial {
            level,
            ring: R::TAG,
            canonical: R::canonical(&raw),
            raw,
            generator_count: count,
        });
    }
    Ok(levels
        .iter()
        .map(|l| computed.iter().find(|p| p.level == *l).expect("level computed").clone())
        .collect())
}

/// Exact divisibility `a | b`.
pub fn divides<P: ExactDiv>(a: &P, b: &P) -> bool {
    b.is_zero() || (!a.is_zero() && b.div_exact(a).is_some())
}

/// Whether every monomial `λᵃμᵇ` has `a = b`, i.e. `p = f(λμ)`.
pub fn classical_form_check(p: &AlexPoly) -> bool {
    p.is_function_of_product()
}

/// `Δᵢ` over whichever ring the switch lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum DeltaResult {
    Quaternionic(IdealPolynomial<RatPoly>),
    Alexander(IdealPolynomial<AlexPoly>),
}

impl DeltaResult {
    pub fn level(&self) -> usize {
        match self {
            DeltaResult::Quaternionic(p) => p.level,
            DeltaResult::Alexander(p) => p.level,
        }
    }

    pub fn ring(&self) -> RingTag {
        match self {
            DeltaResult::Quaternionic(p) => p.ring,
            DeltaResult::Alexander(p) => p.ring,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            DeltaResult::Quaternionic(p) => p.generator_count,
            DeltaResult::Alexander(p) => p.generator_count,
        }
    }

    pub fn canonical_string(&self) -> String {
        match self {
            DeltaResult::Quaternionic(p) => p.canonical.to_string(),
            DeltaResult::Alexander(p) => p.canonical.to_string(),
        }
    }

    pub fn raw_string(&self) -> String {
        match self {
            DeltaResult::Quaternionic(p) => p.raw.to_string(),
            DeltaResult::Alexander(p) => p.raw.to_string(),
        }
    }

    pub fn quaternionic(&self) -> Option<&IdealPolynomial<RatPoly>> {
        match self {
            DeltaResult::Quaternionic(p) => Some(p),
            DeltaResult::Alexander(_) => None,
        }
    }

    pub fn alexander(&self) -> Option<&IdealPolynomial<AlexPoly>> {
        match self {
            DeltaResult::Alexander(p) => Some(p),
            DeltaResult::Quaternionic(_) => None,
        }
    }
}

/// Builds the presentation of `diagram` for `switch` (twisted to `S(t)` when
/// `use_t` is set and the switch is quaternionic) and computes the requested
/// levels.
pub fn diagram_deltas(diagram: &Diagram, switch: &AnySwitch, use_t: bool, levels: &[usize]) -> Result<Vec<DeltaResult>> {
    match switch {
        AnySwitch::Quaternion(s) => {
            let p = diagram.presentation(&s.twist(use_t))?;
            Ok(deltas(&p.matrix, levels)?.into_iter().map(DeltaResult::Quaternionic).collect())
        }
        AnySwitch::Alexander(s) => {
            let p = diagram.presentation(s)?;
            Ok(deltas(&p.matrix, levels)?.into_iter().map(DeltaResult::Alexander).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use crate::switch::named_quaternion_switch;
    use crate::Quat;

    fn q(s: &str) -> Quat {
        s.parse().unwrap()
    }

    fn constant_matrix(rows: &[&[&str]]) -> Matrix<QuatPoly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| QuatPoly::constant(q(s))).collect()).collect())
    }

    #[test]
    fn study_det_examples() {
        let one = constant_matrix(&[&["1+i+j/2"]]);
        assert_eq!(study_det(&one).unwrap(), RatPoly::constant(ratio(9, 4)));
        let b = named_quaternion_switch("budapest").unwrap();
        let m = b.matrix().map(|e| QuatPoly::constant(e.clone()));
        assert_eq!(study_det(&m).unwrap(), RatPoly::constant(rat(1)));
        let rep = constant_matrix(&[&["1+i", "j"], &["1+i", "j"]]);
        assert!(study_det(&rep).unwrap().is_zero());
    }

    #[test]
    fn study_det_with_laurent_entries() {
        let tw = named_quaternion_switch("budapest").unwrap().twist(true);
        let d = study_det(&tw.matrix()).unwrap();
        assert_eq!(d, RatPoly::constant(rat(1)));
        let x = Matrix::from_rows(vec![vec![QuatPoly::monomial(q("j/2"), -3)]]);
        assert_eq!(study_det(&x).unwrap(), RatPoly::monomial(ratio(1, 4), -6));
    }

    #[test]
    fn generator_counts() {
        let m = constant_matrix(&[&["1+i", "j"], &["k", "2"]]);
        assert_eq!(elementary_ideal_generators(&m, 0).unwrap().len(), 1);
        assert_eq!(elementary_ideal_generators(&m, 1).unwrap().len(), 5);
        assert!(matches!(level_minors(&m, 2), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn classical_form() {
        let (l, m) = (AlexPoly::lambda(), AlexPoly::mu());
        let lm = &l * &m;
        assert!(classical_form_check(&(&lm * &lm - lm.scale(&rat(3)) + AlexPoly::one())));
        assert!(!classical_form_check(&(AlexPoly::one() + m.clone() - lm)));
        assert!(classical_form_check(&AlexPoly::zero()));
    }
}
