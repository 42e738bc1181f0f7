//! Edge-labelled complete graphs on the facets of a simplex, their label-preserving
//! automorphisms, orbit counting and constraint-driven enumeration.

mod enumerate;
mod perm;
mod shape;

pub use enumerate::{
    alpha_beta_shape_classes, enumerate_diagrams, enumerate_edge_partitions, Constraint,
    EdgePartition, PartitionConstraints, ShapeClass,
};
pub use perm::{
    act_on_pair, all_perms, burnside_count, orbit_partition, pair_at, pair_index, pair_orbit_bound,
    two_generated_subgroups, AutGroup, Perm,
};
pub use shape::{classify_edges, graph_catalog, GraphClass};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::angles::{AngleForm, RelationSet, Sym};
use crate::error::{Error, Result};

/// An edge label: an exact angle, or a named placeholder for an angle whose value is left open
/// (distinct placeholders stand for distinct, unrelated angles).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Angle(AngleForm),
    Free(String),
}

impl Label {
    pub fn free(name: &str) -> Label {
        Label::Free(name.to_string())
    }

    pub fn as_angle(&self) -> Option<&AngleForm> {
        match self {
            Label::Angle(f) => Some(f),
            Label::Free(_) => None,
        }
    }

    pub fn normalize(&self, r: &RelationSet) -> Label {
        match self {
            Label::Angle(f) => Label::Angle(r.normalize(f)),
            Label::Free(s) => Label::Free(s.clone()),
        }
    }
}

impl From<AngleForm> for Label {
    fn from(f: AngleForm) -> Label {
        Label::Angle(f)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Angle(a) => write!(f, "{a}"),
            Label::Free(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Angle literals parse as angles; any other identifier (such as `delta`) is a placeholder.
    fn from_str(s: &str) -> Result<Label> {
        match s.parse::<AngleForm>() {
            Ok(f) => Ok(Label::Angle(f)),
            Err(e) => {
                let t = s.trim();
                let ident = !t.is_empty()
                    && t.chars()
                        .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                    && !t.chars().next().is_some_and(|c| c.is_ascii_digit());
                if ident {
                    Ok(Label::Free(t.to_string()))
                } else {
                    Err(e)
                }
            }
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Unordered multiset of three labels, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleType([Label; 3]);

impl TriangleType {
    pub fn new(a: Label, b: Label, c: Label) -> TriangleType {
        let mut v = [a, b, c];
        v.sort();
        TriangleType(v)
    }

    /// From three label literals.
    pub fn parse(lits: [&str; 3]) -> Result<TriangleType> {
        let [a, b, c] = lits;
        Ok(TriangleType::new(a.parse()?, b.parse()?, c.parse()?))
    }

    pub fn labels(&self) -> &[Label; 3] {
        &self.0
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.0.contains(l)
    }

    pub fn normalize(&self, r: &RelationSet) -> TriangleType {
        let [a, b, c] = &self.0;
        TriangleType::new(a.normalize(r), b.normalize(r), c.normalize(r))
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// What [`CoxeterDiagram::orbits`] acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Vertices,
    Edges,
    /// Edges carrying one label.
    EdgesLabelled(Label),
    /// Triangles of one type.
    Triangles(TriangleType),
}

/// Orbit partition of a family of vertex tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    /// Family members as sorted vertex tuples.
    pub members: Vec<Vec<usize>>,
    /// Orbits as index lists into `members`.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit count obtained independently by Burnside counting.
    pub burnside: usize,
}

impl OrbitReport {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

/// Complete graph on `n` vertices with a label on every edge.
///
/// Edge `{i, j}` is stored at [`pair_index`]`(i, j)`. Labels are compared after normalisation
/// under the diagram's relation set.
#[derive(Clone, Debug)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    labels: Vec<Label>,
    keys: Vec<Label>,
    colors: Vec<u8>,
    relations: RelationSet,
}

impl PartialEq for CoxeterDiagram {
    fn eq(&self, o: &CoxeterDiagram) -> bool {
        self.names == o.names && self.keys == o.keys
    }
}

impl CoxeterDiagram {
    pub fn new(
        names: Vec<String>,
        labels: Vec<Label>,
        relations: RelationSet,
    ) -> Result<CoxeterDiagram> {
        let n = names.len();
        if n < 2 {
            return Err(Error::Domain(
                "a diagram needs at least two vertices".into(),
            ));
        }
        if labels.len() != n * (n - 1) / 2 {
            return Err(Error::Domain(format!(
                "{n} vertices need {} edge labels, got {}",
                n * (n - 1) / 2,
                labels.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Domain(format!("duplicate vertex name {a}")));
            }
        }
        let keys: Vec<Label> = labels.iter().map(|l| l.normalize(&relations)).collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let colors = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("present") as u8)
            .collect();
        Ok(CoxeterDiagram {
            names,
            labels,
            keys,
            colors,
            relations,
        })
    }

    /// Vertices named `u, v, w, x, y` (first `n` of them, then numbered), with labels in pair order.
    pub fn with_default_names(
        labels: Vec<Label>,
        relations: RelationSet,
    ) -> Result<CoxeterDiagram> {
        let m = labels.len();
        let n = (2..16)
            .find(|n| n * (n - 1) / 2 == m)
            .ok_or_else(|| Error::Domain(format!("{m} is not C(n,2)")))?;
        CoxeterDiagram::new(default_names(n), labels, relations)
    }

    /// Builds a diagram from `(a, b, label)` triples naming every edge exactly once.
    pub fn from_edges(
        names: &[&str],
        edges: &[(&str, &str, &str)],
        relations: RelationSet,
    ) -> Result<CoxeterDiagram> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let n = names.len();
        let mut labels: Vec<Option<Label>> = vec![None; n * (n - 1) / 2];
        let find = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::Domain(format!("unknown vertex {s}")))
        };
        for (a, b, lit) in edges {
            let (i, j) = (find(a)?, find(b)?);
            if i == j {
                return Err(Error::Domain(format!("loop at {a}")));
            }
            let slot = &mut labels[pair_index(i, j)];
            if slot.is_some() {
                return Err(Error::Domain(format!("edge {a}{b} labelled twice")));
            }
            *slot = Some(lit.parse()?);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(k, l)| {
                let (i, j) = pair_at(k);
                l.ok_or_else(|| {
                    Error::Domain(format!("edge {}{} has no label", names[i], names[j]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterDiagram::new(names, labels, relations)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// Labels as written, in pair order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize, j: usize) -> &Label {
        &self.labels[pair_index(i, j)]
    }

    /// Normalised label of edge `{i, j}`.
    pub fn key(&self, i: usize, j: usize) -> &Label {
        &self.keys[pair_index(i, j)]
    }

    pub fn edge_name(&self, k: usize) -> String {
        let (i, j) = pair_at(k);
        format!("{}{}", self.names[i], self.names[j])
    }

    /// Number of edges whose normalised label equals `l` (normalised here).
    pub fn label_count(&self, l: &Label) -> usize {
        let l = l.normalize(&self.relations);
        self.keys.iter().filter(|k| **k == l).count()
    }

    pub fn triangle_type(&self, i: usize, j: usize, k: usize) -> TriangleType {
        TriangleType::new(
            self.key(i, j).clone(),
            self.key(i, k).clone(),
            self.key(j, k).clone(),
        )
    }

    /// All vertex triples `i < j < k` in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        triples(self.n())
    }

    /// Distinct triangle types with multiplicities.
    pub fn triangle_census(&self) -> BTreeMap<TriangleType, usize> {
        let mut out = BTreeMap::new();
        for [i, j, k] in self.triangles() {
            *out.entry(self.triangle_type(i, j, k)).or_insert(0) += 1;
        }
        out
    }

    fn preserves(&self, p: &Perm) -> bool {
        (0..self.keys.len()).all(|k| self.colors[act_on_pair(p, k)] == self.colors[k])
    }

    /// The full label-preserving automorphism group, by filtering all `n!` permutations.
    pub fn automorphisms(&self) -> AutGroup {
        let elems: Vec<Perm> = all_perms(self.n())
            .into_iter()
            .filter(|p| self.preserves(p))
            .collect();
        AutGroup::new(self.n(), elems).expect("label-preserving permutations form a group")
    }

    /// Orbit partition of a family under the automorphism group, cross-checked by Burnside.
    pub fn orbits(&self, family: &Family) -> Result<OrbitReport> {
        let g = self.automorphisms();
        let members: Vec<Vec<usize>> = match family {
            Family::Vertices => (0..self.n()).map(|i| vec![i]).collect(),
            Family::Edges => (0..self.keys.len()).map(|k| pair_vec(k)).collect(),
            Family::EdgesLabelled(l) => {
                let l = l.normalize(&self.relations);
                (0..self.keys.len())
                    .filter(|&k| self.keys[k] == l)
                    .map(pair_vec)
                    .collect()
            }
            Family::Triangles(t) => {
                let t = t.normalize(&self.relations);
                self.triangles()
                    .into_iter()
                    .filter(|&[i, j, k]| self.triangle_type(i, j, k) == t)
                    .map(|t| t.to_vec())
                    .collect()
            }
        };
        let index: BTreeMap<&Vec<usize>, usize> =
            members.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let act = |p: &Perm, x: usize| {
            let mut img: Vec<usize> = members[x].iter().map(|&v| p.apply(v)).collect();
            img.sort_unstable();
            index[&img]
        };
        let orbits = orbit_partition(&g, members.len(), act);
        let burnside = burnside_count(g.elements(), self.n(), members.len(), act)?;
        if burnside != orbits.len() {
            return Err(Error::NotAGroup(format!(
                "Burnside count {burnside} != {} orbits",
                orbits.len()
            )));
        }
        Ok(OrbitReport {
            members,
            orbits,
            burnside,
        })
    }

    /// Whether the triangles of type `t` fall into at least four orbits.
    pub fn is_rich(&self, t: &TriangleType) -> bool {
        self.orbits(&Family::Triangles(t.clone()))
            .map(|r| r.count() >= 4)
            .unwrap_or(false)
    }

    /// Minimum of the normalised label vector over all vertex orders.
    pub fn canonical_form(&self) -> Vec<Label> {
        let mut best: Option<Vec<usize>> = None;
        let m = self.keys.len();
        for p in all_perms(self.n()) {
            // relabel: new edge k gets the colour of the old edge p^{-1}(k)
            let inv = p.inverse();
            let v: Vec<usize> = (0..m)
                .map(|k| self.colors[act_on_pair(&inv, k)] as usize)
                .collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        let mut distinct = self.keys.clone();
        distinct.sort();
        distinct.dedup();
        best.unwrap_or_default()
            .into_iter()
            .map(|c| distinct[c].clone())
            .collect()
    }

    pub fn is_isomorphic(&self, o: &CoxeterDiagram) -> bool {
        self.n() == o.n() && self.canonical_form() == o.canonical_form()
    }

    /// The unlabelled subgraph formed by the edges carrying `l`.
    pub fn label_subgraph(&self, l: &Label) -> GraphClass {
        let l = l.normalize(&self.relations);
        let edges: Vec<usize> = (0..self.keys.len())
            .filter(|&k| self.keys[k] == l)
            .collect();
        classify_edges(self.n(), &edges)
    }

    /// Renames vertices by `p`: vertex `i` of `self` becomes vertex `p(i)`.
    pub fn permuted(&self, p: &Perm) -> CoxeterDiagram {
        let m = self.labels.len();
        let inv = p.inverse();
        let labels = (0..m)
            .map(|k| self.labels[act_on_pair(&inv, k)].clone())
            .collect();
        let mut names = self.names.clone();
        for (i, name) in self.names.iter().enumerate() {
            names[p.apply(i)] = name.clone();
        }
        CoxeterDiagram::new(names, labels, self.relations.clone())
            .expect("permutation keeps the shape")
    }

    pub fn to_fixture(&self, name: &str) -> DiagramFixture {
        let edges = (0..self.labels.len())
            .map(|k| (self.edge_name_dashed(k), self.labels[k].clone()))
            .collect();
        let relations = self
            .relations
            .rules()
            .iter()
            .map(|(s, f)| (s.name().to_string(), f.to_string()))
            .collect();
        DiagramFixture {
            name: name.to_string(),
            vertices: self.names.clone(),
            relations,
            edges,
            note: None,
        }
    }

    fn edge_name_dashed(&self, k: usize) -> String {
        let (i, j) = pair_at(k);
        format!("{}-{}", self.names[i], self.names[j])
    }

    pub fn from_json(s: &str) -> Result<CoxeterDiagram> {
        serde_json::from_str::<DiagramFixture>(s)?.diagram()
    }

    pub fn load(path: &Path) -> Result<CoxeterDiagram> {
        CoxeterDiagram::from_json(&std::fs::read_to_string(path)?)
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.labels.len())
            .map(|k| format!("{}:{}", self.edge_name(k), self.labels[k]))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// On-disk diagram: vertex names, optional relations and an edge-label map keyed `"u-v"`
/// (or `"uv"` when both names are single characters).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramFixture {
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub relations: BTreeMap<String, String>,
    pub edges: BTreeMap<String, Label>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl DiagramFixture {
    pub fn relation_set(&self) -> Result<RelationSet> {
        let rules = self
            .relations
            .iter()
            .map(|(k, v)| {
                let s = match k.as_str() {
                    "alpha" | "α" => Sym::Alpha,
                    "beta" | "β" => Sym::Beta,
                    "gamma" | "γ" => Sym::Gamma,
                    _ => return Err(Error::Parse(format!("unknown symbol {k} in relations"))),
                };
                Ok((s, v.parse::<AngleForm>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        RelationSet::new(rules)
    }

    pub fn diagram(&self) -> Result<CoxeterDiagram> {
        let split = |key: &str| -> Result<(String, String)> {
            if let Some((a, b)) = key.split_once('-') {
                return Ok((a.trim().to_string(), b.trim().to_string()));
            }
            let cs: Vec<char> = key.chars().collect();
            if cs.len() == 2 {
                return Ok((cs[0].to_string(), cs[1].to_string()));
            }
            Err(Error::Parse(format!(
                "edge key {key:?} is neither \"a-b\" nor two characters"
            )))
        };
        let names: Vec<&str> = self.vertices.iter().map(|s| s.as_str()).collect();
        let pairs = self
            .edges
            .keys()
            .map(|k| split(k))
            .collect::<Result<Vec<_>>>()?;
        let lits: Vec<String> = self.edges.values().map(|l| l.to_string()).collect();
        let triples: Vec<(&str, &str, &str)> = pairs
            .iter()
            .zip(&lits)
            .map(|((a, b), l)| (a.as_str(), b.as_str(), l.as_str()))
            .collect();
        CoxeterDiagram::from_edges(&names, &triples, self.relation_set()?)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    let base = ["u", "v", "w", "x", "y"];
    (0..n)
        .map(|i| {
            base.get(i)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("v{i}"))
        })
        .collect()
}

fn pair_vec(k: usize) -> Vec<usize> {
    let (a, b) = pair_at(k);
    vec![a, b]
}

pub(crate) fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = vec![];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    fn uniform(n: usize, lit: &str) -> CoxeterDiagram {
        CoxeterDiagram::with_default_names(vec![l(lit); n * (n - 1) / 2], RelationSet::empty())
            .unwrap()
    }

    #[test]
    fn label_parsing() {
        assert_eq!(l("alpha"), Label::Angle(AngleForm::alpha()));
        assert_eq!(l("delta"), Label::free("delta"));
        assert_eq!(l("pi/2"), Label::Angle(AngleForm::pi_frac(1, 2)));
        assert!("2 +".parse::<Label>().is_err());
    }

    #[test]
    fn distinct_labels_give_trivial_group() {
        let labels: Vec<Label> = (0..10).map(|i| Label::Free(format!("l{i}"))).collect();
        let d = CoxeterDiagram::with_default_names(labels, RelationSet::empty()).unwrap();
        assert!(d.automorphisms().is_trivial());
    }

    #[test]
    fn uniform_diagram() {
        let d = uniform(5, "alpha");
        assert_eq!(d.automorphisms().order(), 120);
        let t = TriangleType::parse(["alpha", "alpha", "alpha"]).unwrap();
        let r = d.orbits(&Family::Triangles(t.clone())).unwrap();
        assert_eq!(r.members.len(), 10);
        assert_eq!(r.count(), 1);
        assert!(!d.is_rich(&t));
    }

    #[test]
    fn alpha_four_cycle_on_k4() {
        let d = CoxeterDiagram::from_edges(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", "alpha"),
                ("b", "c", "alpha"),
                ("c", "d", "alpha"),
                ("d", "a", "alpha"),
                ("a", "c", "beta"),
                ("b", "d", "beta"),
            ],
            RelationSet::empty(),
        )
        .unwrap();
        assert_eq!(d.automorphisms().order(), 8);
        assert_eq!(
            d.orbits(&Family::EdgesLabelled(l("alpha")))
                .unwrap()
                .count(),
            1
        );
        assert_eq!(d.label_subgraph(&l("alpha")).name, "C4");
    }

    #[test]
    fn relations_identify_labels() {
        let r = RelationSet::new(vec![(Sym::Alpha, "pi - 2*beta".parse().unwrap())]).unwrap();
        let d = CoxeterDiagram::from_edges(
            &["a", "b", "c"],
            &[
                ("a", "b", "alpha"),
                ("b", "c", "pi-2*beta"),
                ("a", "c", "beta"),
            ],
            r,
        )
        .unwrap();
        assert_eq!(d.automorphisms().order(), 2);
        assert_eq!(d.label_count(&l("alpha")), 2);
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let a = CoxeterDiagram::from_edges(
            &["a", "b", "c"],
            &[("a", "b", "alpha"), ("b", "c", "beta"), ("a", "c", "beta")],
            RelationSet::empty(),
        )
        .unwrap();
        let b = a.permuted(&Perm(vec![2, 0, 1]));
        assert_ne!(a.labels(), b.labels());
        assert!(a.is_isomorphic(&b));
        let c = uniform(3, "beta");
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn fixture_roundtrip() {
        let d = CoxeterDiagram::from_edges(
            &["u", "v", "w"],
            &[
                ("u", "v", "alpha"),
                ("v", "w", "delta"),
                ("u", "w", "2*beta"),
            ],
            RelationSet::numeric((1, 4), (1, 3), (1, 2)),
        )
        .unwrap();
        let json = serde_json::to_string(&d.to_fixture("t")).unwrap();
        let e = CoxeterDiagram::from_json(&json).unwrap();
        assert_eq!(d, e);
        let short = r#"{"name":"s","vertices":["u","v","w"],"edges":{"uv":"alpha","vw":"beta","uw":"gamma"}}"#;
        assert_eq!(
            CoxeterDiagram::from_json(short).unwrap().label(0, 2),
            &l("gamma")
        );
        let missing = r#"{"name":"s","vertices":["u","v","w"],"edges":{"uv":"alpha","vw":"beta"}}"#;
        assert!(CoxeterDiagram::from_json(missing).is_err());
    }
}
