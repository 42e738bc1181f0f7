//! Diagram fixtures shipped with the crate.

use crate::coxeter::CoxeterDiagram;
use crate::error::{Error, Result};

const DIAGRAMS: &[(&str, &str)] = &[
    (
        "alpha-plus-2beta-1",
        include_str!("../fixtures/diagrams/alpha-plus-2beta-1.json"),
    ),
    (
        "alpha-plus-2beta-2",
        include_str!("../fixtures/diagrams/alpha-plus-2beta-2.json"),
    ),
    (
        "alpha-plus-2beta-3",
        include_str!("../fixtures/diagrams/alpha-plus-2beta-3.json"),
    ),
    (
        "alpha-plus-2beta-4",
        include_str!("../fixtures/diagrams/alpha-plus-2beta-4.json"),
    ),
    (
        "alpha-plus-2beta-5",
        include_str!("../fixtures/diagrams/alpha-plus-2beta-5.json"),
    ),
    (
        "fifth-pi-1",
        include_str!("../fixtures/diagrams/fifth-pi-1.json"),
    ),
    (
        "fifth-pi-2",
        include_str!("../fixtures/diagrams/fifth-pi-2.json"),
    ),
    (
        "fifth-pi-3",
        include_str!("../fixtures/diagrams/fifth-pi-3.json"),
    ),
    (
        "k4-alpha-four-cycle",
        include_str!("../fixtures/diagrams/k4-alpha-four-cycle.json"),
    ),
    (
        "k4-alpha-path",
        include_str!("../fixtures/diagrams/k4-alpha-path.json"),
    ),
    (
        "k4-two-angles-path-path",
        include_str!("../fixtures/diagrams/k4-two-angles-path-path.json"),
    ),
    (
        "k4-two-angles-triangle-star",
        include_str!("../fixtures/diagrams/k4-two-angles-triangle-star.json"),
    ),
    (
        "k5-alpha-fork",
        include_str!("../fixtures/diagrams/k5-alpha-fork.json"),
    ),
    (
        "k5-alpha-k23",
        include_str!("../fixtures/diagrams/k5-alpha-k23.json"),
    ),
    (
        "k5-alpha-k4",
        include_str!("../fixtures/diagrams/k5-alpha-k4.json"),
    ),
    (
        "k5-cycle-alternating-spokes",
        include_str!("../fixtures/diagrams/k5-cycle-alternating-spokes.json"),
    ),
    (
        "k5-cycle-split-spokes",
        include_str!("../fixtures/diagrams/k5-cycle-split-spokes.json"),
    ),
    (
        "k5-cycle-uniform-spokes",
        include_str!("../fixtures/diagrams/k5-cycle-uniform-spokes.json"),
    ),
    (
        "quarter-pi-1",
        include_str!("../fixtures/diagrams/quarter-pi-1.json"),
    ),
    (
        "quarter-pi-2",
        include_str!("../fixtures/diagrams/quarter-pi-2.json"),
    ),
    (
        "quarter-pi-3",
        include_str!("../fixtures/diagrams/quarter-pi-3.json"),
    ),
];

/// Names of the bundled diagram fixtures, sorted.
pub fn diagram_names() -> Vec<&'static str> {
    DIAGRAMS.iter().map(|(n, _)| *n).collect()
}

/// Raw JSON of a bundled fixture.
pub fn diagram_json(name: &str) -> Option<&'static str> {
    DIAGRAMS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn diagram(name: &str) -> Result<CoxeterDiagram> {
    let s =
        diagram_json(name).ok_or_else(|| Error::Domain(format!("no bundled diagram {name}")))?;
    CoxeterDiagram::from_json(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses_under_its_own_name() {
        for name in diagram_names() {
            let d = diagram(name).unwrap();
            let f: crate::coxeter::DiagramFixture =
                serde_json::from_str(diagram_json(name).unwrap()).unwrap();
            assert_eq!(f.name, name);
            assert!(d.n() == 4 || d.n() == 5);
        }
    }
}
