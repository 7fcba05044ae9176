//! Grid search for quaternionic switches.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ring::Rational;
use crate::switch::{named_quaternion_switch, Switch};
use crate::Quat;

/// Coefficient ring imposed on every entry of an emitted switch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingFilter {
    #[default]
    None,
    /// All coefficients integers.
    Integer,
    /// Entries in `ℤ⟨ξ, i, j, k⟩` with `ξ = (1+i+j+k)/2`.
    Hurwitz,
}

/// Condition on the output of the search, applied after verification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PostFilter {
    #[default]
    None,
    /// At least two of `A, B, C, D` have integer coefficients.
    TwoIntegerEntries,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Values allowed for each coefficient of `A`.
    pub a_coefficients: Vec<Rational>,
    /// Values allowed for each coefficient of `B`.
    pub b_coefficients: Vec<Rational>,
    pub ring_filter: RingFilter,
    pub post_filter: PostFilter,
    pub dedup: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    a: Vec<String>,
    b: Vec<String>,
    #[serde(default)]
    ring: RingFilter,
    #[serde(default)]
    post_filter: PostFilter,
    #[serde(default = "default_true")]
    dedup: bool,
}

fn default_true() -> bool {
    true
}

fn parse_set(values: &[String]) -> Result<Vec<Rational>> {
    let set: Vec<Rational> = values
        .iter()
        .map(|v| v.trim().parse::<Rational>().map_err(|_| Error::Config(format!("bad rational `{v}`"))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sorted()
        .dedup()
        .collect();
    if set.is_empty() {
        return Err(Error::Config("coefficient set is empty".into()));
    }
    Ok(set)
}

impl SearchConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Ok(Self {
            a_coefficients: parse_set(&raw.a)?,
            b_coefficients: parse_set(&raw.b)?,
            ring_filter: raw.ring,
            post_filter: raw.post_filter,
            dedup: raw.dedup,
        })
    }

    /// Built-in configurations: `table1`, `table2` and `integer`.
    pub fn preset(name: &str) -> Result<Self> {
        let text = match name {
            "table1" => include_str!("../presets/table1.toml"),
            "table2" => include_str!("../presets/table2.toml"),
            "integer" => include_str!("../presets/integer.toml"),
            _ => return Err(Error::UnknownName(name.to_string())),
        };
        Self::from_toml(text)
    }
}

/// Necessary conditions on `A`: `ℛ(A) > 0`, `|A|² < 4`, `|1−A|² = 1` and `A`
/// not real.
pub fn constraint_filter(a: &Quat) -> bool {
    let one = Rational::one();
    a.w.is_positive()
        && a.norm_sqr() < Rational::from_integer(4.into())
        && (Quat::real(one.clone()) - a.clone()).norm_sqr() == one
        && !a.is_real()
}

/// `C = A⁻¹B⁻¹A(1−A)` and `D = 1 − A⁻¹B⁻¹AB`.
pub fn derive_cd(a: &Quat, b: &Quat) -> Result<(Quat, Quat)> {
    let (ai, bi) = (a.inverse()?, b.inverse()?);
    let one = Quat::one();
    let conj = &(&ai * &bi) * a;
    let c = &conj * &(one.clone() - a.clone());
    let d = one - &conj * b;
    Ok((c, d))
}

/// `Θ = BA⁻¹B⁻¹A − A⁻¹B⁻¹AB − A + B⁻¹AB`.
pub fn theta_residual(a: &Quat, b: &Quat) -> Result<Quat> {
    let (ai, bi) = (a.inverse()?, b.inverse()?);
    let t1 = &(&(b * &ai) * &bi) * a;
    let t2 = &(&(&ai * &bi) * a) * b;
    let t4 = &(&bi * a) * b;
    Ok(t1 - t2 - a.clone() + t4)
}

/// The 24 signed permutations of `(i, j, k)` with determinant one, as
/// `(permutation, signs)`.
pub fn rotations() -> Vec<([usize; 3], [i8; 3])> {
    let mut out = Vec::new();
    for perm in (0..3).permutations(3) {
        let inversions = (0..3).flat_map(|a| (a + 1..3).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
        let parity: i8 = if inversions % 2 == 0 { 1 } else { -1 };
        for mask in 0..8u8 {
            let signs = [0, 1, 2].map(|b| if mask >> b & 1 == 1 { -1i8 } else { 1 });
            if parity * signs.iter().product::<i8>() == 1 {
                out.push(([perm[0], perm[1], perm[2]], signs));
            }
        }
    }
    out
}

/// Image of `q` under a rotation: the `n`-th imaginary coordinate becomes
/// `signs[n]` times coordinate `perm[n]`.
pub fn rotate(q: &Quat, (perm, signs): &([usize; 3], [i8; 3])) -> Quat {
    let v = [&q.x, &q.y, &q.z];
    let f = |n: usize| if signs[n] < 0 { -v[perm[n]].clone() } else { v[perm[n]].clone() };
    Quat::new(q.w.clone(), f(0), f(1), f(2))
}

fn serialization(s: &Switch<Quat>) -> Vec<Rational> {
    s.entries().iter().flat_map(|q| q.components().map(Clone::clone)).collect()
}

/// The switches obtained from `s` by an `(i, j, k)` rotation combined with
/// any of `S⁻¹`, `S†`, `S*`.
pub fn symmetry_orbit(s: &Switch<Quat>) -> Result<Vec<Switch<Quat>>> {
    let inv = s.invert()?;
    let mut bases = Vec::with_capacity(8);
    for base in [s.clone(), inv] {
        let dag = base.dagger();
        for x in [base, dag] {
            let star = x.star();
            bases.push(x);
            bases.push(star);
        }
    }
    let rots = rotations();
    Ok(bases
        .iter()
        .flat_map(|b| rots.iter().map(move |r| b.map(|q| rotate(q, r))))
        .collect())
}

/// Lexicographically least serialization over the symmetry orbit.
pub fn canonical_representative(s: &Switch<Quat>) -> Result<Switch<Quat>> {
    Ok(symmetry_orbit(s)?
        .into_iter()
        .min_by(|x, y| serialization(x).cmp(&serialization(y)))
        .expect("orbit is nonempty"))
}

/// `(U, V)` when `S = [[1+U, −V], [V, 1+U]]` with `U, V` orthogonal pure
/// unit quaternions.
pub fn classify_budapest_type(s: &Switch<Quat>) -> Option<(Quat, Quat)> {
    let one = Rational::one();
    let u = s.a.clone() - Quat::one();
    let v = s.c.clone();
    let pure_unit = |q: &Quat| q.w.is_zero() && q.norm_sqr() == one;
    let shape = s.a == s.d && s.b == -v.clone();
    (shape && pure_unit(&u) && pure_unit(&v) && (&u * &v.conj()).w.is_zero()).then_some((u, v))
}

fn is_integral(q: &Quat) -> bool {
    q.components().iter().all(|c| c.is_integer())
}

fn is_hurwitz(q: &Quat) -> bool {
    let half = Rational::new(1.into(), 2.into());
    is_integral(q) || q.components().iter().all(|c| (*c - &half).is_integer())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwitchRecord {
    pub switch: Switch<Quat>,
    pub canonical: Switch<Quat>,
    /// The `(A, B)` pair that produced the switch.
    pub source: (Quat, Quat),
    pub budapest: Option<(Quat, Quat)>,
    pub hurwitz: bool,
    pub integer: bool,
}

impl fmt::Display for SwitchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "switch={} canonical={}", self.switch, self.canonical)?;
        match &self.budapest {
            Some((u, v)) => write!(f, " budapest={u};{v}")?,
            None => f.write_str(" budapest=none")?,
        }
        write!(f, " hurwitz={} integer={}", self.hurwitz, self.integer)
    }
}

fn grid(values: &[Rational]) -> Vec<Quat> {
    (0..4)
        .map(|_| values.iter())
        .multi_cartesian_product()
        .map(|c| Quat::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
        .collect()
}

/// Full verification of a candidate built from `(A, B)`.
fn candidate(a: &Quat, b: &Quat, config: &SearchConfig) -> Option<Switch<Quat>> {
    if !theta_residual(a, b).ok()?.is_zero() {
        return None;
    }
    let (c, d) = derive_cd(a, b).ok()?;
    // The same bounds hold for D; this also discards the commutative
    // solutions with D = 0.
    if !constraint_filter(&d) {
        return None;
    }
    let s = Switch::new(a.clone(), b.clone(), c, d);
    if !s.is_switch() || s.sideways().is_err() {
        return None;
    }
    if s.b.norm_sqr() * s.c.norm_sqr() != Rational::one() {
        return None;
    }
    let ring_ok = match config.ring_filter {
        RingFilter::None => true,
        RingFilter::Integer => s.entries().iter().all(|q| is_integral(q)),
        RingFilter::Hurwitz => s.entries().iter().all(|q| is_hurwitz(q)),
    };
    let post_ok = match config.post_filter {
        PostFilter::None => true,
        PostFilter::TwoIntegerEntries => s.entries().iter().filter(|q| is_integral(q)).count() >= 2,
    };
    (ring_ok && post_ok).then_some(s)
}

/// Enumerates `A` over its grid (subject to [`constraint_filter`], as is the
/// derived `D`) and unit
/// `B` over its grid, derives `C, D`, verifies, filters and optionally keeps
/// one switch per symmetry orbit. Output is sorted by canonical form.
pub fn search(config: &SearchConfig) -> Vec<SwitchRecord> {
    let a_values: Vec<Quat> = grid(&config.a_coefficients).into_iter().filter(constraint_filter).collect();
    let b_values: Vec<Quat> = grid(&config.b_coefficients).into_iter().filter(|b| !b.is_zero()).collect();
    let pairs: Vec<(&Quat, &Quat)> = a_values.iter().cartesian_product(b_values.iter()).collect();
    let found: Vec<SwitchRecord> = pairs
        .into_par_iter()
        .filter_map(|(a, b)| {
            let s = candidate(a, b, config)?;
            let canonical = canonical_representative(&s).ok()?;
            Some(SwitchRecord {
                budapest: classify_budapest_type(&s),
                hurwitz: s.entries().iter().all(|q| is_hurwitz(q)),
                integer: s.entries().iter().all(|q| is_integral(q)),
                source: (a.clone(), b.clone()),
                canonical,
                switch: s,
            })
        })
        .collect();
    if config.dedup {
        let mut orbits: BTreeMap<Vec<Rational>, SwitchRecord> = BTreeMap::new();
        for r in found {
            orbits.entry(serialization(&r.canonical)).or_insert(r);
        }
        orbits.into_values().collect()
    } else {
        let mut all = found;
        all.sort_by_cached_key(|r| (serialization(&r.canonical), serialization(&r.switch)));
        all
    }
}

/// Rows of the published switch tables `1` and `2`.
pub fn table_rows(table: u8) -> Result<Vec<(String, Switch<Quat>)>> {
    let count = match table {
        1 => 5,
        2 => 11,
        _ => return Err(Error::UnknownName(format!("table{table}"))),
    };
    (1..=count)
        .map(|k| {
            let name = format!("table{table}-{k}");
            named_quaternion_switch(&name).map(|s| (name, s))
        })
        .collect()
}

/// For each table row, whether its symmetry orbit occurs among `records`.
pub fn table_coverage(table: u8, records: &[SwitchRecord]) -> Result<Vec<(String, bool)>> {
    let found: Vec<Vec<Rational>> = records.iter().map(|r| serialization(&r.canonical)).collect();
    table_rows(table)?
        .into_iter()
        .map(|(name, s)| {
            let key = serialization(&canonical_representative(&s)?);
            Ok((name, found.contains(&key)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quat {
        s.parse().unwrap()
    }

    #[test]
    fn filter_examples() {
        assert!(constraint_filter(&q("1+i")));
        assert!(!constraint_filter(&q("2")));
        assert!(constraint_filter(&q("1/2+1/2i+1/2j+1/2k")));
        assert!(!constraint_filter(&q("1")));
    }

    #[test]
    fn derived_entries() {
        assert_eq!(derive_cd(&q("1+i"), &q("-j")).unwrap(), (q("j"), q("1+i")));
        assert_eq!(derive_cd(&q("1+i"), &q("j")).unwrap(), (q("-j"), q("1+i")));
        let (c, _) = derive_cd(&q("1"), &q("j")).unwrap();
        assert!(c.is_zero());
        assert!(derive_cd(&q("0"), &q("j")).is_err());
    }

    #[test]
    fn theta_examples() {
        assert!(theta_residual(&q("1+i"), &q("-j")).unwrap().is_zero());
        assert!(theta_residual(&q("1+i"), &q("1+i")).unwrap().is_zero());
    }

    #[test]
    fn rotation_group() {
        let rots = rotations();
        assert_eq!(rots.len(), 24);
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        for r in &rots {
            assert_eq!(&rotate(&i, r) * &rotate(&j, r), rotate(&k, r));
        }
    }

    #[test]
    fn canonical_examples() {
        let b = named_quaternion_switch("budapest").unwrap();
        let t = named_quaternion_switch("table1-1").unwrap();
        let cb = canonical_representative(&b).unwrap();
        assert_eq!(cb, canonical_representative(&t).unwrap());
        assert_eq!(canonical_representative(&cb).unwrap(), cb);
        assert_eq!(canonical_representative(&b.dagger()).unwrap(), cb);
    }

    #[test]
    fn budapest_type() {
        let b = named_quaternion_switch("budapest").unwrap();
        assert_eq!(classify_budapest_type(&b), Some((Quat::i(), Quat::j())));
        assert_eq!(classify_budapest_type(&named_quaternion_switch("s9-4").unwrap()), None);
    }

    #[test]
    fn config_parsing() {
        let c = SearchConfig::from_toml("a = [\"0\", \"1/2\", \"1/2\"]\nb = [\"1\"]\nring = \"hurwitz\"").unwrap();
        assert_eq!(c.a_coefficients.len(), 2);
        assert_eq!(c.ring_filter, RingFilter::Hurwitz);
        assert!(c.dedup);
        assert!(SearchConfig::from_toml("a = []\nb = [\"1\"]").is_err());
        assert!(SearchConfig::from_toml("a = [\"x\"]\nb = [\"1\"]").is_err());
        assert!(SearchConfig::from_toml("a = [\"1\"]\nb = [\"1\"]\nextra = 1").is_err());
    }

    #[test]
    fn real_grid_is_empty() {
        let c = SearchConfig::from_toml("a = [\"0\"]\nb = [\"1\", \"0\"]").unwrap();
        assert!(search(&c).is_empty());
    }
}
