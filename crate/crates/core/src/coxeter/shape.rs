//! Isomorphism classes of small unlabelled graphs, used to describe the subgraph formed by
//! the edges of one label.

use serde::Serialize;

use super::perm::{act_on_pair, all_perms, pair_index};

/// A graph on `n` vertices up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphClass {
    /// Catalog name such as `P2+P3`, or `graph(<edges>e:<mask>)` outside the catalog.
    pub name: String,
    pub edges: usize,
    /// Least edge bitmask over all vertex orders (bit `k` is pair index `k`).
    pub canonical: u64,
}

const CATALOG: &[(&str, usize, &[(usize, usize)])] = &[
    ("empty", 1, &[]),
    ("P2", 2, &[(0, 1)]),
    ("P3", 3, &[(0, 1), (1, 2)]),
    ("K3", 3, &[(0, 1), (1, 2), (0, 2)]),
    ("P2+P2", 4, &[(0, 1), (2, 3)]),
    ("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("K1,3", 4, &[(0, 1), (0, 2), (0, 3)]),
    ("C4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ("paw", 4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
    ("diamond", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ("K4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("P2+P3", 5, &[(0, 1), (2, 3), (3, 4)]),
    ("P2+K3", 5, &[(0, 1), (2, 3), (3, 4), (2, 4)]),
    ("P5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    ("K1,4", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    ("fork", 5, &[(0, 1), (1, 2), (1, 3), (0, 4)]),
    ("C5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ("K2,3", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    (
        "K5",
        5,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
    ),
];

fn canonical_mask(n: usize, edges: &[usize]) -> u64 {
    all_perms(n)
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &k| m | 1 << act_on_pair(p, k)))
        .min()
        .unwrap_or(0)
}

/// Catalog shapes that fit on `n` vertices, with their canonical masks.
pub fn graph_catalog(n: usize) -> Vec<GraphClass> {
    CATALOG
        .iter()
        .filter(|(_, k, _)| *k <= n)
        .map(|(name, _, es)| {
            let edges: Vec<usize> = es.iter().map(|&(a, b)| pair_index(a, b)).collect();
            GraphClass {
                name: name.to_string(),
                edges: edges.len(),
                canonical: canonical_mask(n, &edges),
            }
        })
        .collect()
}

/// Classifies the graph on `n` vertices with the given edges (pair indices).
pub fn classify_edges(n: usize, edges: &[usize]) -> GraphClass {
    let canonical = canonical_mask(n, edges);
    let name = graph_catalog(n)
        .into_iter()
        .find(|g| g.canonical == canonical)
        .map(|g| g.name)
        .unwrap_or_else(|| format!("graph({}e:{canonical:#x})", edges.len()));
    GraphClass {
        name,
        edges: edges.len(),
        canonical,
    }
}
