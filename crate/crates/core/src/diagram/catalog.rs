//! Built-in diagrams.

use crate::error::{Error, Result};

use super::{BraidWord, Diagram, GaussCode};

enum Source {
    Gauss(&'static str),
    Braid(&'static str, usize),
}

const CATALOG: &[(&str, Source)] = &[
    ("vtrefoil", Source::Gauss("O1+O2+U1+U2+")),
    ("kishino1", Source::Gauss("O2+U1-U2+O1-O3+U4-U3+O4-")),
    ("kishino2", Source::Gauss("U2-O1+O2-U1+U3-O4+O3-U4+")),
    ("kishino3", Source::Gauss("U2-O1+O2-U1+O3+U4-U3+O4-")),
    ("trefoil", Source::Braid("s1 s1 s1", 2)),
    ("figure8", Source::Braid("s1 S2 s1 S2", 3)),
    ("trefoil-gauss", Source::Gauss("O1+U2+O3+U1+O2+U3+")),
];

pub fn diagram_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

pub fn named_diagram(name: &str) -> Result<Diagram> {
    let (_, source) = CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(match source {
        Source::Gauss(code) => Diagram::Gauss(code.parse::<GaussCode>().expect("built-in code parses")),
        Source::Braid(word, n) => Diagram::Braid(BraidWord::parse(word, *n).expect("built-in word parses")),
    })
}
