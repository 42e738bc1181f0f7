//! Exhaustive enumeration of labelled complete graphs up to isomorphism.
//!
//! Edges are assigned in pair-index order, so the triangle `{a, i, j}` (`a < i < j`) is complete
//! as soon as edge `{i, j}` is labelled; triangle tables are enforced at that point and the
//! remaining predicates at the leaves. Leaves are deduplicated by canonical form.

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use super::perm::{act_on_pair, all_perms, pair_at, pair_index, Perm};
use super::shape::{classify_edges, GraphClass};
use super::{default_names, triples, CoxeterDiagram, Label, TriangleType};
use crate::angles::{AngleForm, RelationSet};
use crate::error::{Error, Result};

/// One predicate of the constraint algebra. Labels and triangle types are normalised under the
/// enumeration's relation set before use.
#[derive(Clone, Debug)]
pub enum Constraint {
    /// Every triangle that contains `containing` (any triangle when `None`) and none of the
    /// labels in `excluding` must have a type in `allowed`.
    AllowedTriangles {
        containing: Option<Label>,
        excluding: Vec<Label>,
        allowed: Vec<TriangleType>,
    },
    /// No triangle may have one of these types.
    ForbiddenTriangles(Vec<TriangleType>),
    /// The triangles of this type form at least four orbits.
    Rich(TriangleType),
    /// At least `min` triangles of the given type.
    TriangleCount { t: TriangleType, min: usize },
    /// The subgraph of `label`-edges is one of the named catalog shapes.
    LabelSubgraph { label: Label, shapes: Vec<String> },
    /// Number of `label`-edges lies in `min..=max`.
    LabelCount {
        label: Label,
        min: usize,
        max: usize,
    },
    /// The automorphism group is trivial.
    TrivialAutomorphisms,
}

struct Compiled {
    n: usize,
    k: usize,
    /// `tri_ok[a*k*k + b*k + c]` for sorted colour triples.
    tri_ok: Vec<bool>,
    count_max: Vec<usize>,
    count_min: Vec<usize>,
    shapes: Vec<(u8, Vec<String>)>,
    rich: Vec<[u8; 3]>,
    tri_min: Vec<([u8; 3], usize)>,
    trivial: bool,
    /// For every edge, the triangles completed when it is assigned.
    closing: Vec<Vec<[usize; 3]>>,
    /// `pair_ok[a*k + b]`: some third colour completes `a, b` to an admissible triangle.
    pair_ok: Vec<bool>,
    /// For every edge `e`, the other assigned edge of each triangle that has exactly two
    /// assigned edges once `e` is.
    half_open: Vec<Vec<usize>>,
    /// Triangles as edge-index triples.
    tri_edges: Vec<[usize; 3]>,
    perms: Vec<Perm>,
}

fn sorted3(mut t: [u8; 3]) -> [u8; 3] {
    t.sort_unstable();
    t
}

impl Compiled {
    fn new(
        n: usize,
        alphabet: &[Label],
        constraints: &[Constraint],
        r: &RelationSet,
    ) -> Result<Compiled> {
        let k = alphabet.len();
        if k == 0 || k > 64 {
            return Err(Error::Domain(format!("alphabet size {k} out of range")));
        }
        let id = |l: &Label| -> Option<u8> {
            alphabet
                .iter()
                .position(|a| *a == l.normalize(r))
                .map(|i| i as u8)
        };
        let need = |l: &Label| {
            id(l).ok_or_else(|| Error::Domain(format!("label {l} is not in the alphabet")))
        };
        let ids_of = |t: &TriangleType| -> Option<[u8; 3]> {
            let t = t.normalize(r);
            let [a, b, c] = t.labels();
            Some(sorted3([id(a)?, id(b)?, id(c)?]))
        };
        let mut c = Compiled {
            n,
            k,
            tri_ok: vec![true; k * k * k],
            count_max: vec![usize::MAX; k],
            count_min: vec![0; k],
            shapes: vec![],
            rich: vec![],
            tri_min: vec![],
            trivial: false,
            closing: vec![vec![]; n * (n - 1) / 2],
            pair_ok: vec![],
            half_open: vec![vec![]; n * (n - 1) / 2],
            tri_edges: vec![],
            perms: all_perms(n),
        };
        for con in constraints {
            match con {
                Constraint::AllowedTriangles {
                    containing,
                    excluding,
                    allowed,
                } => {
                    let want = containing.as_ref().map(need).transpose()?;
                    // labels outside the alphabet can never occur, so they exclude nothing
                    let skip: Vec<u8> = excluding.iter().filter_map(id).collect();
                    let ok: BTreeSet<[u8; 3]> = allowed.iter().filter_map(ids_of).collect();
                    for t in all_triples(k) {
                        let applies = want.is_none_or(|w| t.contains(&w))
                            && !t.iter().any(|x| skip.contains(x));
                        if applies && !ok.contains(&t) {
                            c.tri_ok[tri_index(k, t)] = false;
                        }
                    }
                }
                Constraint::ForbiddenTriangles(ts) => {
                    for t in ts.iter().filter_map(ids_of) {
                        c.tri_ok[tri_index(k, t)] = false;
                    }
                }
                Constraint::Rich(t) => match ids_of(t) {
                    Some(t) => c.rich.push(t),
                    None => c.tri_ok.iter_mut().for_each(|x| *x = false),
                },
                Constraint::TriangleCount { t, min } => match ids_of(t) {
                    Some(t) => c.tri_min.push((t, *min)),
                    None if *min > 0 => c.tri_ok.iter_mut().for_each(|x| *x = false),
                    None => {}
                },
                Constraint::LabelSubgraph { label, shapes } => {
                    c.shapes.push((need(label)?, shapes.clone()))
                }
                Constraint::LabelCount { label, min, max } => {
                    let i = need(label)? as usize;
                    c.count_min[i] = c.count_min[i].max(*min);
                    c.count_max[i] = c.count_max[i].min(*max);
                }
                Constraint::TrivialAutomorphisms => c.trivial = true,
            }
        }
        for [a, i, j] in triples(n) {
            c.closing[pair_index(i, j)].push([a, i, j]);
            let mut es = [pair_index(a, i), pair_index(a, j), pair_index(i, j)];
            es.sort_unstable();
            c.half_open[es[1]].push(es[0]);
            c.tri_edges.push(es);
        }
        c.pair_ok = (0..k * k)
            .map(|ab| {
                let (a, b) = ((ab / k) as u8, (ab % k) as u8);
                (0..k as u8).any(|x| c.tri_ok[tri_index(k, sorted3([a, b, x]))])
            })
            .collect();
        Ok(c)
    }

    /// Forward checks after edges `0..=e` are assigned: every triangle with two assigned edges
    /// can still be completed, and every required triangle type can still reach its count.
    fn feasible(&self, e: usize, colors: &[u8]) -> bool {
        if !self.half_open[e]
            .iter()
            .all(|&o| self.pair_ok[colors[o] as usize * self.k + colors[e] as usize])
        {
            return false;
        }
        let needs = self
            .rich
            .iter()
            .map(|t| (t, 4))
            .chain(self.tri_min.iter().map(|(t, m)| (t, *m)));
        for (t, need) in needs {
            let possible = self
                .tri_edges
                .iter()
                .filter(|es| {
                    let mut rest = t.to_vec();
                    es.iter().filter(|&&x| x <= e).all(|&x| {
                        match rest.iter().position(|&y| y == colors[x]) {
                            Some(i) => {
                                rest.swap_remove(i);
                                true
                            }
                            None => false,
                        }
                    })
                })
                .count();
            if possible < need {
                return false;
            }
        }
        true
    }

    fn leaf_ok(&self, colors: &[u8]) -> bool {
        let mut counts = vec![0usize; self.k];
        for &x in colors {
            counts[x as usize] += 1;
        }
        if (0..self.k).any(|i| counts[i] < self.count_min[i]) {
            return false;
        }
        for (label, shapes) in &self.shapes {
            let edges: Vec<usize> = (0..colors.len()).filter(|&e| colors[e] == *label).collect();
            let g = classify_edges(self.n, &edges);
            if !shapes.contains(&g.name) {
                return false;
            }
        }
        let types: Vec<[u8; 3]> = triples(self.n)
            .into_iter()
            .map(|[a, b, c]| {
                sorted3([
                    colors[pair_index(a, b)],
                    colors[pair_index(a, c)],
                    colors[pair_index(b, c)],
                ])
            })
            .collect();
        for (t, min) in &self.tri_min {
            if types.iter().filter(|x| *x == t).count() < *min {
                return false;
            }
        }
        if self.rich.is_empty() && !self.trivial {
            return true;
        }
        let group: Vec<&Perm> = self
            .perms
            .iter()
            .filter(|p| (0..colors.len()).all(|e| colors[act_on_pair(p, e)] == colors[e]))
            .collect();
        if self.trivial && group.len() > 1 {
            return false;
        }
        let tris = triples(self.n);
        self.rich.iter().all(|t| {
            let members: Vec<[usize; 3]> = tris
                .iter()
                .zip(&types)
                .filter(|(_, x)| *x == t)
                .map(|(tri, _)| *tri)
                .collect();
            orbit_count(&group, &members) >= 4
        })
    }
}

fn tri_index(k: usize, t: [u8; 3]) -> usize {
    (t[0] as usize * k + t[1] as usize) * k + t[2] as usize
}

fn all_triples(k: usize) -> Vec<[u8; 3]> {
    let mut out = vec![];
    for a in 0..k as u8 {
        for b in a..k as u8 {
            for c in b..k as u8 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn orbit_count(group: &[&Perm], members: &[[usize; 3]]) -> usize {
    let mut seen = vec![false; members.len()];
    let mut count = 0;
    for s in 0..members.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        for p in group {
            let mut img = members[s].map(|v| p.apply(v));
            img.sort_unstable();
            if let Some(i) = members.iter().position(|m| *m == img) {
                seen[i] = true;
            }
        }
    }
    count
}

/// Least colour vector over all vertex orders.
fn canonical_colors(perms: &[Perm], colors: &[u8]) -> Vec<u8> {
    let m = colors.len();
    let mut best: Option<Vec<u8>> = None;
    let mut v = vec![0u8; m];
    for p in perms {
        for (e, slot) in v.iter_mut().enumerate() {
            *slot = colors[act_on_pair(p, e)];
        }
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v.clone());
        }
    }
    best.unwrap_or_default()
}

/// All labellings of `K_n` over `alphabet` satisfying `constraints`, one per isomorphism class,
/// ordered by canonical form. Each result is the canonical representative with vertices named
/// `u, v, w, x, y`.
pub fn enumerate_diagrams(
    n: usize,
    alphabet: &[Label],
    relations: &RelationSet,
    constraints: &[Constraint],
) -> Result<Vec<CoxeterDiagram>> {
    if !(2..=6).contains(&n) {
        return Err(Error::Domain(format!(
            "enumeration supports 2 <= n <= 6, got {n}"
        )));
    }
    let alphabet: Vec<Label> = alphabet.iter().map(|l| l.normalize(relations)).collect();
    for (i, a) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(a) {
            return Err(Error::Domain(format!(
                "label {a} occurs twice in the alphabet"
            )));
        }
    }
    let c = Compiled::new(n, &alphabet, constraints, relations)?;
    let m = n * (n - 1) / 2;
    let mut colors = vec![0u8; m];
    let mut counts = vec![0usize; c.k];
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();
    search(&c, 0, &mut colors, &mut counts, &mut found);
    found
        .into_iter()
        .map(|v| {
            let labels = v.iter().map(|&x| alphabet[x as usize].clone()).collect();
            CoxeterDiagram::new(default_names(n), labels, relations.clone())
        })
        .collect()
}

fn search(
    c: &Compiled,
    e: usize,
    colors: &mut [u8],
    counts: &mut [usize],
    found: &mut BTreeSet<Vec<u8>>,
) {
    if e == colors.len() {
        if c.leaf_ok(colors) {
            found.insert(canonical_colors(&c.perms, colors));
        }
        return;
    }
    for x in 0..c.k as u8 {
        if counts[x as usize] + 1 > c.count_max[x as usize] {
            continue;
        }
        colors[e] = x;
        let ok = c.closing[e].iter().all(|&[a, i, j]| {
            let t = sorted3([colors[pair_index(a, i)], colors[pair_index(a, j)], x]);
            c.tri_ok[tri_index(c.k, t)]
        });
        if !ok || !c.feasible(e, colors) {
            continue;
        }
        counts[x as usize] += 1;
        search(c, e + 1, colors, counts, found);
        counts[x as usize] -= 1;
    }
}

/// A set partition of the edges of `K_n` as a restricted growth string: `blocks[e]` is the block
/// of edge `e`, blocks numbered in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgePartition {
    pub n: usize,
    pub blocks: Vec<u8>,
}

impl EdgePartition {
    pub fn block_count(&self) -> usize {
        self.blocks
            .iter()
            .map(|&b| b as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Diagram with one placeholder label per block (`alpha, beta, gamma, delta, ...` as names).
    pub fn to_diagram(&self) -> CoxeterDiagram {
        const NAMES: [&str; 10] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"];
        let labels = self
            .blocks
            .iter()
            .map(|&b| Label::free(NAMES[b as usize]))
            .collect();
        CoxeterDiagram::new(default_names(self.n), labels, RelationSet::empty())
            .expect("well-formed")
    }

    /// Triangle types as sorted block triples with multiplicities.
    pub fn triangle_census(&self) -> BTreeMap<[u8; 3], usize> {
        let mut out = BTreeMap::new();
        for [a, b, c] in triples(self.n) {
            let t = sorted3([
                self.blocks[pair_index(a, b)],
                self.blocks[pair_index(a, c)],
                self.blocks[pair_index(b, c)],
            ]);
            *out.entry(t).or_insert(0) += 1;
        }
        out
    }

    /// Vertex permutations that map every block onto itself.
    pub fn automorphism_count(&self) -> usize {
        all_perms(self.n)
            .iter()
            .filter(|p| {
                (0..self.blocks.len()).all(|e| self.blocks[act_on_pair(p, e)] == self.blocks[e])
            })
            .count()
    }
}

/// Constraints for [`enumerate_edge_partitions`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraints {
    /// Required number of distinct triangle types occurring at least `min_copies` times each.
    pub frequent_types: usize,
    pub min_copies: usize,
    pub trivial_automorphisms: bool,
}

fn relabel_rgs(v: &mut [u8]) {
    let mut map = [u8::MAX; 64];
    let mut next = 0u8;
    for x in v.iter_mut() {
        if map[*x as usize] == u8::MAX {
            map[*x as usize] = next;
            next += 1;
        }
        *x = map[*x as usize];
    }
}

/// All set partitions of the edges of `K_n` satisfying `con`, up to vertex permutation and
/// renaming of blocks, ordered by canonical form.
pub fn enumerate_edge_partitions(
    n: usize,
    con: &PartitionConstraints,
) -> Result<Vec<EdgePartition>> {
    if !(2..=5).contains(&n) {
        return Err(Error::Domain(format!(
            "edge partitions supported for 2 <= n <= 5, got {n}"
        )));
    }
    let m = n * (n - 1) / 2;
    let perms = all_perms(n);
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut rgs = vec![0u8; m];
    let check = |rgs: &[u8]| -> bool {
        let p = EdgePartition {
            n,
            blocks: rgs.to_vec(),
        };
        let frequent = p
            .triangle_census()
            .values()
            .filter(|&&c| c >= con.min_copies)
            .count();
        frequent >= con.frequent_types
            && (!con.trivial_automorphisms || p.automorphism_count() == 1)
    };
    rgs_walk(&mut rgs, 1, 0, &mut |rgs| {
        if check(rgs) {
            let mut best: Option<Vec<u8>> = None;
            let mut v = vec![0u8; m];
            for p in &perms {
                for (e, slot) in v.iter_mut().enumerate() {
                    *slot = rgs[act_on_pair(p, e)];
                }
                relabel_rgs(&mut v);
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v.clone());
                }
            }
            found.insert(best.expect("at least one permutation"));
        }
    });
    Ok(found
        .into_iter()
        .map(|blocks| EdgePartition { n, blocks })
        .collect())
}

fn rgs_walk(v: &mut [u8], pos: usize, max: u8, f: &mut dyn FnMut(&[u8])) {
    if pos == v.len() {
        f(v);
        return;
    }
    for b in 0..=max + 1 {
        v[pos] = b;
        rgs_walk(v, pos + 1, max.max(b), f);
    }
}

/// Isomorphism class of the subgraph formed by the `alpha`- and `beta`-edges, with a witness.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeClass {
    pub alpha: GraphClass,
    pub beta: GraphClass,
    /// Canonical colour vector over `{0: alpha, 1: beta, 2: other}`.
    pub canonical: Vec<u8>,
    /// A completion that is rich in the type `(alpha, beta, gamma)`.
    #[serde(skip)]
    pub witness: CoxeterDiagram,
}

/// Classes of `{alpha, beta}`-edge subgraphs of `K_5` that admit a completion rich in
/// `(alpha, beta, gamma)`, subject to: the alpha-edges form one of `alpha_shapes` and no triangle
/// has all three edges in `{alpha, beta}`.
///
/// For each subgraph every subset of the remaining edges is tried as the gamma-edges, with all
/// other edges given pairwise distinct placeholder labels. Distinct placeholders leave the
/// smallest automorphism group, so this decides whether any completion is rich.
pub fn alpha_beta_shape_classes(alpha_shapes: &[&str]) -> Vec<ShapeClass> {
    let n = 5;
    let m = 10;
    let perms = all_perms(n);
    let tris = triples(n);
    let mut out: BTreeMap<Vec<u8>, ShapeClass> = BTreeMap::new();
    let rich_type = TriangleType::new(
        Label::Angle(AngleForm::alpha()),
        Label::Angle(AngleForm::beta()),
        Label::Angle(AngleForm::gamma()),
    );
    for code in 0..3usize.pow(m as u32) {
        let mut colors = vec![0u8; m];
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        let closed = tris.iter().any(|&[a, b, c]| {
            [pair_index(a, b), pair_index(a, c), pair_index(b, c)]
                .iter()
                .all(|&e| colors[e] < 2)
        });
        if closed {
            continue;
        }
        let alpha_edges: Vec<usize> = (0..m).filter(|&e| colors[e] == 0).collect();
        let alpha = classify_edges(n, &alpha_edges);
        if !alpha_shapes.contains(&alpha.name.as_str()) {
            continue;
        }
        let canonical = canonical_colors(&perms, &colors);
        if out.contains_key(&canonical) {
            continue;
        }
        let rest: Vec<usize> = (0..m).filter(|&e| colors[e] == 2).collect();
        let witness = (0..1u32 << rest.len()).find_map(|mask| {
            let labels: Vec<Label> = (0..m)
                .map(|e| match colors[e] {
                    0 => Label::Angle(AngleForm::alpha()),
                    1 => Label::Angle(AngleForm::beta()),
                    _ => {
                        let r = rest.iter().position(|&x| x == e).expect("rest edge");
                        if mask >> r & 1 == 1 {
                            Label::Angle(AngleForm::gamma())
                        } else {
                            let (a, b) = pair_at(e);
                            Label::Free(format!("o{a}{b}"))
                        }
                    }
                })
                .collect();
            let d = CoxeterDiagram::new(default_names(n), labels, RelationSet::empty())
                .expect("well-formed");
            d.is_rich(&rich_type).then_some(d)
        });
        if let Some(witness) = witness {
            let beta_edges: Vec<usize> = (0..m).filter(|&e| colors[e] == 1).collect();
            let beta = classify_edges(n, &beta_edges);
            out.insert(
                canonical.clone(),
                ShapeClass {
                    alpha,
                    beta,
                    canonical,
                    witness,
                },
            );
        }
    }
    out.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn single_letter_triangle() {
        let d = enumerate_diagrams(3, &[l("alpha")], &RelationSet::empty(), &[]).unwrap();
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn two_colourings_of_k4() {
        // 2-colourings of K4 up to isomorphism without renaming colours: 2^6 labellings fall
        // into 11 classes of graphs on 4 vertices
        let d =
            enumerate_diagrams(4, &[l("alpha"), l("beta")], &RelationSet::empty(), &[]).unwrap();
        assert_eq!(d.len(), 11);
        for (i, a) in d.iter().enumerate() {
            for b in &d[..i] {
                assert!(!a.is_isomorphic(b));
            }
        }
    }

    #[test]
    fn label_count_bounds() {
        let con = [Constraint::LabelCount {
            label: l("alpha"),
            min: 6,
            max: 6,
        }];
        let d =
            enumerate_diagrams(4, &[l("alpha"), l("beta")], &RelationSet::empty(), &con).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].label_count(&l("alpha")), 6);
    }

    #[test]
    fn partitions_of_k3_and_k4() {
        // set partitions of the 3 edges of a triangle up to symmetry: {abc}, {ab|c}, {a|b|c}
        let p = enumerate_edge_partitions(3, &PartitionConstraints::default()).unwrap();
        assert_eq!(p.len(), 3);
        let con = PartitionConstraints {
            frequent_types: 2,
            min_copies: 3,
            trivial_automorphisms: true,
        };
        assert!(enumerate_edge_partitions(4, &con).unwrap().is_empty());
    }

    #[test]
    fn monochromatic_partition_satisfies_one_frequent_type() {
        let con = PartitionConstraints {
            frequent_types: 1,
            min_copies: 4,
            trivial_automorphisms: false,
        };
        let p = enumerate_edge_partitions(5, &con).unwrap();
        assert!(p.iter().any(|q| q.block_count() == 1));
    }
}
