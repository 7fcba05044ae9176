//! Virtual braid words and their switch representations.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::switch::Switch;

use super::gauss::{GaussCode, Pass, Role, Sign};
use super::presentation::PresentationMatrix;

/// Generators with 1-based strand index `i` acting on strands `i, i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Sigma(usize),
    SigmaInv(usize),
    Tau(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Tau(i) => i,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "S{i}"),
            Letter::Tau(i) => write!(f, "t{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidWord("at least one strand is required".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= strands) {
            return Err(Error::BraidWord(format!("`{l}` out of range for {strands} strands")));
        }
        Ok(Self { strands, letters })
    }

    /// Whitespace-separated tokens `s<i>`, `S<i>` (inverse) and `t<i>`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let (head, idx) = tok.split_at(1);
                let i: usize = idx
                    .parse()
                    .map_err(|_| Error::BraidWord(format!("unknown token `{tok}`")))?;
                match head {
                    "s" => Ok(Letter::Sigma(i)),
                    "S" => Ok(Letter::SigmaInv(i)),
                    "t" => Ok(Letter::Tau(i)),
                    _ => Err(Error::BraidWord(format!("unknown token `{tok}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// True when no virtual generator occurs.
    pub fn is_classical(&self) -> bool {
        !self.letters.iter().any(|l| matches!(l, Letter::Tau(_)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            l.fmt(f)?;
        }
        Ok(())
    }
}

impl BraidWord {
    /// Gauss code of the closure. At `σᵢ` the strand in position `i` passes
    /// under and moves right; at `σᵢ⁻¹` it passes over. Virtual generators
    /// only permute strands.
    pub fn closure_gauss_code(&self) -> Result<GaussCode> {
        let n = self.strands;
        let mut at: Vec<usize> = (0..n).collect();
        let mut passes: Vec<Vec<Pass>> = vec![Vec::new(); n];
        let mut id = 0;
        for &l in &self.letters {
            let i = l.index() - 1;
            let (left, right) = (at[i], at[i + 1]);
            let roles = match l {
                Letter::Sigma(_) => Some((Role::Under, Role::Over, Sign::Positive)),
                Letter::SigmaInv(_) => Some((Role::Over, Role::Under, Sign::Negative)),
                Letter::Tau(_) => None,
            };
            if let Some((lr, rr, sign)) = roles {
                id += 1;
                passes[left].push(Pass::new(id, lr, sign));
                passes[right].push(Pass::new(id, rr, sign));
            }
            at.swap(i, i + 1);
        }
        // Strand `s` ends in position `p` and continues as strand `p`.
        let mut next = vec![0; n];
        for (p, &s) in at.iter().enumerate() {
            next[s] = p;
        }
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                comp.extend(passes[s].iter().copied());
                s = next[s];
            }
            components.push(comp);
        }
        GaussCode::new(components)
    }
}

/// `T = [[0, 1], [1, 0]]`.
pub fn transposition<R: Ring>() -> Matrix<R> {
    Matrix::two_by_two(R::zero(), R::one(), R::one(), R::zero())
}

/// `ρ′(w) = M_{w_m} ⋯ M_{w_1}` with `σᵢ ↦ id^{i−1} × S × id^{n−i−1}`,
/// `σᵢ⁻¹ ↦ Sᵢ⁻¹` and `τᵢ ↦ Tᵢ`.
pub fn braid_representation<R: Ring>(w: &BraidWord, s: &Switch<R>) -> Result<Matrix<R>> {
    let n = w.strands;
    let block = s.matrix();
    let inverse = if w.letters.iter().any(|l| matches!(l, Letter::SigmaInv(_))) {
        Some(s.invert()?.matrix())
    } else {
        None
    };
    let t = transposition();
    let mut m = Matrix::identity(n);
    for &l in &w.letters {
        let b = match l {
            Letter::Sigma(_) => &block,
            Letter::SigmaInv(_) => inverse.as_ref().expect("inverse computed"),
            Letter::Tau(_) => &t,
        };
        m = &Matrix::embed(n, l.index() - 1, b) * &m;
    }
    Ok(m)
}

/// Presentation `ρ′(w) − I` of the closure.
pub fn braid_closure_presentation<R: Ring>(w: &BraidWord, s: &Switch<R>) -> Result<PresentationMatrix<R>> {
    let m = braid_representation(w, s)?;
    Ok(PresentationMatrix::new(m.sub(&Matrix::identity(w.strands))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switch::named_quaternion_switch;
    use crate::Quat;

    #[test]
    fn parse_words() {
        let w = BraidWord::parse("s1 s1 s1", 2).unwrap();
        assert_eq!(w.letters().len(), 3);
        assert_eq!(w.to_string(), "s1 s1 s1");
        assert!(BraidWord::parse("s1 T1", 2).is_err());
        assert!(BraidWord::parse("s2", 2).is_err());
        assert!(BraidWord::parse("s0", 2).is_err());
        assert!(!BraidWord::parse("t1 t1", 2).unwrap().is_classical());
    }

    #[test]
    fn representation_examples() {
        let s = named_quaternion_switch("budapest").unwrap();
        let empty = BraidWord::parse("", 3).unwrap();
        assert!(braid_representation(&empty, &s).unwrap().is_identity());
        let t = BraidWord::parse("t1", 2).unwrap();
        assert_eq!(braid_representation(&t, &s).unwrap(), transposition::<Quat>());
        let s1 = BraidWord::parse("s1", 3).unwrap();
        let m = braid_representation(&s1, &s).unwrap();
        assert_eq!(m[(0, 0)], s.a);
        assert_eq!(m[(1, 0)], s.c);
        assert_eq!(m[(2, 2)], Quat::real(crate::ring::rat(1)));
        let round = BraidWord::parse("s1 S1", 2).unwrap();
        let code = BraidWord::parse("s1 s1 s1", 2).unwrap().closure_gauss_code().unwrap();
        assert_eq!(code.to_string(), "U1+O2+U3+O1+U2+O3+");
        assert!(BraidWord::parse("s1", 3).unwrap().closure_gauss_code().is_err());
        assert!(braid_representation(&round, &s).unwrap().is_identity());
    }
}
