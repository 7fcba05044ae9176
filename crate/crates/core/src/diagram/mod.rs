//! Virtual link diagrams: Gauss codes, braid words, presentations and moves.

pub mod braid;
pub mod catalog;
pub mod gauss;
pub mod presentation;
pub mod reidemeister;

use std::fmt;

use crate::error::Result;
use crate::ring::Ring;
use crate::switch::Switch;

pub use braid::{braid_closure_presentation, braid_representation, BraidWord, Letter};
pub use gauss::{GaussCode, Pass, Role, Sign};
pub use presentation::{build_presentation, PresentationMatrix};
pub use reidemeister::{apply_reidemeister, Move};

/// A diagram given by a Gauss code or as the closure of a virtual braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram {
    Gauss(GaussCode),
    Braid(BraidWord),
}

impl Diagram {
    pub fn presentation<R: Ring>(&self, s: &Switch<R>) -> Result<PresentationMatrix<R>> {
        match self {
            Diagram::Gauss(code) => Ok(build_presentation(code, s)),
            Diagram::Braid(word) => braid_closure_presentation(word, s),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::Gauss(code) => code.fmt(f),
            Diagram::Braid(word) => write!(f, "{word} ({} strands)", word.strands()),
        }
    }
}
