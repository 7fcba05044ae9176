//! Signed Gauss codes and their semi-arcs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Role {
    pub fn flip(self) -> Self {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

/// One passage of the link through a classical crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Pass {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Self { crossing, role, sign }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.role == Role::Over { 'O' } else { 'U' };
        let s = if self.sign == Sign::Positive { '+' } else { '-' };
        write!(f, "{r}{}{s}", self.crossing)
    }
}

/// Location of a pass: component index and position along it.
pub type Site = (usize, usize);

/// A virtual link diagram given by the cyclic sequence of passes along each
/// component. Virtual crossings are not recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    components: Vec<Vec<Pass>>,
}

/// Semi-arc numbering: the semi-arc ending at pass `(c, p)` is `incoming[c][p]`;
/// the one leaving it is the incoming arc of the next pass on the component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiArcIndexing {
    pub count: usize,
    incoming: Vec<Vec<usize>>,
}

impl SemiArcIndexing {
    pub fn incoming(&self, (c, p): Site) -> usize {
        self.incoming[c][p]
    }

    pub fn outgoing(&self, (c, p): Site) -> usize {
        let comp = &self.incoming[c];
        comp[(p + 1) % comp.len()]
    }
}

/// The two passes of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingSites {
    pub id: u32,
    pub sign: Sign,
    pub over: Site,
    pub under: Site,
}

impl GaussCode {
    /// Validates that every crossing has one over and one under pass with
    /// matching signs and that no component is empty.
    pub fn new(components: Vec<Vec<Pass>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::GaussCode("no components".into()));
        }
        if components.iter().any(Vec::is_empty) {
            return Err(Error::GaussCode("empty component".into()));
        }
        let mut seen: BTreeMap<u32, (Option<Sign>, Option<Sign>)> = BTreeMap::new();
        for pass in components.iter().flatten() {
            let entry = seen.entry(pass.crossing).or_default();
            let slot = match pass.role {
                Role::Over => &mut entry.0,
                Role::Under => &mut entry.1,
            };
            if slot.is_some() {
                return Err(Error::GaussCode(format!("duplicate pass {pass}")));
            }
            *slot = Some(pass.sign);
        }
        for (id, (over, under)) in &seen {
            match (over, under) {
                (Some(a), Some(b)) if a == b => {}
                (Some(_), Some(_)) => {
                    return Err(Error::GaussCode(format!("crossing {id} has inconsistent signs")))
                }
                (None, _) => return Err(Error::GaussCode(format!("crossing {id} lacks an O pass"))),
                (_, None) => return Err(Error::GaussCode(format!("crossing {id} lacks a U pass"))),
            }
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.pass_count() / 2
    }

    pub fn pass_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn pass(&self, (c, p): Site) -> Pass {
        self.components[c][p]
    }

    /// Cyclic successor of a site on its component.
    pub fn next_site(&self, (c, p): Site) -> Site {
        (c, (p + 1) % self.components[c].len())
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, comp)| (0..comp.len()).map(move |p| (c, p)))
    }

    pub fn locate(&self, crossing: u32, role: Role) -> Option<Site> {
        self.sites().find(|&s| {
            let pass = self.pass(s);
            pass.crossing == crossing && pass.role == role
        })
    }

    /// Crossings in order of first appearance.
    pub fn crossings(&self) -> Vec<CrossingSites> {
        let mut order = Vec::new();
        let mut by_id: BTreeMap<u32, CrossingSites> = BTreeMap::new();
        for site in self.sites() {
            let pass = self.pass(site);
            let entry = by_id.entry(pass.crossing).or_insert_with(|| {
                order.push(pass.crossing);
                CrossingSites { id: pass.crossing, sign: pass.sign, over: site, under: site }
            });
            match pass.role {
                Role::Over => entry.over = site,
                Role::Under => entry.under = site,
            }
        }
        order.into_iter().map(|id| by_id[&id]).collect()
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components.iter().flatten().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Semi-arcs are numbered consecutively along each component, the arc
    /// arriving at the `p`-th pass of component `c` getting number
    /// `offset(c) + p`.
    pub fn semi_arcs(&self) -> SemiArcIndexing {
        let mut offset = 0;
        let mut incoming = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            incoming.push((offset..offset + comp.len()).collect());
            offset += comp.len();
        }
        SemiArcIndexing { count: offset, incoming }
    }

    /// Crossing change at every crossing (mirror image in the projection plane).
    pub fn mirror(&self) -> Self {
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|p| Pass::new(p.crossing, p.role.flip(), p.sign.flip()))
                    .collect()
            })
            .collect();
        Self { components }
    }

    /// Flips every sign while keeping over/under data.
    pub fn sign_flip(&self) -> Self {
        let components = self
            .components
            .iter()
            .map(|comp| comp.iter().map(|p| Pass::new(p.crossing, p.role, p.sign.flip())).collect())
            .collect();
        Self { components }
    }

    /// Unchecked constructor for move implementations that preserve validity.
    pub(crate) fn from_components_unchecked(components: Vec<Vec<Pass>>) -> Self {
        Self { components }
    }

    pub(crate) fn components_mut(&mut self) -> &mut Vec<Vec<Pass>> {
        &mut self.components
    }
}

fn parse_component(text: &str) -> Result<Vec<Pass>> {
    let bad = |msg: String| Error::GaussCode(msg);
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
    let mut passes = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let role = match chars[i] {
            'O' | 'o' => Role::Over,
            'U' | 'u' => Role::Under,
            other => return Err(bad(format!("unexpected token `{other}`"))),
        };
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(bad("missing crossing number".into()));
        }
        let crossing: u32 = chars[start..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| bad("crossing number out of range".into()))?;
        let sign = match chars.get(i) {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            _ => return Err(bad(format!("crossing {crossing} missing sign"))),
        };
        i += 1;
        passes.push(Pass::new(crossing, role, sign));
    }
    Ok(passes)
}

/// Parses codes such as `O1+O2+U1+U2+`, `O1-,U2-,…` and multi-component
/// codes separated by `/`.
impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps = s.split('/').map(parse_component).collect::<Result<Vec<_>>>()?;
        GaussCode::new(comps)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for p in comp {
                p.fmt(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let vt: GaussCode = "O1+O2+U1+U2+".parse().unwrap();
        assert_eq!((vt.crossing_count(), vt.component_count()), (2, 1));
        assert_eq!(vt.semi_arcs().count, 4);
        let tre: GaussCode = "O1+U2+O3+U1+O2+U3+".parse().unwrap();
        assert_eq!(tre.crossing_count(), 3);
        assert_eq!(tre.semi_arcs().count, 6);
        let link: GaussCode = "O1+U2+/O2+U1+".parse().unwrap();
        assert_eq!(link.component_count(), 2);
        let commas: GaussCode = "O1-, U1-".parse().unwrap();
        assert_eq!(commas.to_string(), "O1-U1-");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("O1+U2-".parse::<GaussCode>(), Err(Error::GaussCode(_))));
        assert!("O1+U1-".parse::<GaussCode>().is_err());
        assert!("O1+O1+".parse::<GaussCode>().is_err());
        assert!("X1+U1+".parse::<GaussCode>().is_err());
        assert!("O1U1+".parse::<GaussCode>().is_err());
        assert!("O1+U1+/".parse::<GaussCode>().is_err());
        assert!("".parse::<GaussCode>().is_err());
    }

    #[test]
    fn semi_arc_wiring() {
        let code: GaussCode = "O1+U2+/O2+U1+".parse().unwrap();
        let arcs = code.semi_arcs();
        assert_eq!(arcs.incoming((1, 0)), 2);
        assert_eq!(arcs.outgoing((0, 1)), 0);
        assert_eq!(arcs.outgoing((1, 1)), 2);
        let c = code.crossings();
        assert_eq!(c[0].over, (0, 0));
        assert_eq!(c[0].under, (1, 1));
    }
}
