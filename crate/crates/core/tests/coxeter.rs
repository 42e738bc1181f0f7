use std::collections::BTreeSet;

use proptest::prelude::*;

use reptile_lab::angles::RelationSet;
use reptile_lab::coxeter::*;
use reptile_lab::fixtures;

fn diagram_from_colours(colours: &[u8]) -> CoxeterDiagram {
    let names = ["a", "b", "c", "d"];
    let labels = colours.iter().map(|&c| Label::free(names[c as usize])).collect();
    CoxeterDiagram::with_default_names(labels, RelationSet::empty()).unwrap()
}

/// Label-preserving vertex permutations, counted directly.
fn brute_automorphisms(d: &CoxeterDiagram) -> usize {
    let m = d.labels().len();
    all_perms(d.n())
        .iter()
        .filter(|p| (0..m).all(|k| d.labels()[act_on_pair(p, k)] == d.labels()[k]))
        .count()
}

fn colours(n: usize, k: u8) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..k, n * (n - 1) / 2)
}

proptest! {
    #[test]
    fn automorphisms_match_direct_count(c in colours(5, 3)) {
        let d = diagram_from_colours(&c);
        let g = d.automorphisms();
        prop_assert_eq!(g.order(), brute_automorphisms(&d));
        prop_assert_eq!(120 % g.order(), 0);
    }

    #[test]
    fn relabelled_diagrams_are_isomorphic(c in colours(5, 3), p in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let d = diagram_from_colours(&c);
        let q = d.permuted(&Perm(p));
        prop_assert!(d.is_isomorphic(&q));
        prop_assert_eq!(d.canonical_form(), q.canonical_form());
        prop_assert_eq!(d.automorphisms().order(), q.automorphisms().order());
        for t in d.triangle_census().keys() {
            let a = d.orbits(&Family::Triangles(t.clone())).unwrap().count();
            let b = q.orbits(&Family::Triangles(t.clone())).unwrap().count();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn orbits_agree_with_burnside_and_stabilisers(c in colours(5, 2)) {
        let d = diagram_from_colours(&c);
        let g = d.automorphisms();
        for f in [Family::Vertices, Family::Edges, Family::EdgesLabelled(Label::free("a"))] {
            let r = d.orbits(&f).unwrap();
            prop_assert_eq!(r.count(), r.burnside);
            let covered: usize = r.orbits.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, r.members.len());
        }
        // orbit-stabiliser on vertices
        for v in 0..5 {
            let orbit: BTreeSet<usize> = g.elements().iter().map(|p| p.apply(v)).collect();
            let stab = g.elements().iter().filter(|p| p.apply(v) == v).count();
            prop_assert_eq!(orbit.len() * stab, g.order());
        }
    }
}

#[test]
fn unconstrained_enumeration_counts_graphs() {
    // two-colourings of K_n up to isomorphism are the graphs on n vertices
    for (n, graphs) in [(3, 4), (4, 11), (5, 34)] {
        let ds = enumerate_diagrams(n, &[Label::free("a"), Label::free("b")], &RelationSet::empty(), &[]).unwrap();
        assert_eq!(ds.len(), graphs, "n = {n}");
        for i in 0..ds.len() {
            for j in 0..i {
                assert!(!ds[i].is_isomorphic(&ds[j]));
            }
        }
    }
}

#[test]
fn enumeration_respects_constraints() {
    let (a, b, c) = (Label::free("a"), Label::free("b"), Label::free("c"));
    let abc = TriangleType::new(a.clone(), b.clone(), c.clone());
    let ds = enumerate_diagrams(5, &[a.clone(), b, c], &RelationSet::empty(), &[Constraint::Rich(abc.clone())]).unwrap();
    assert!(!ds.is_empty());
    assert!(ds.iter().all(|d| d.is_rich(&abc)));

    let ds = enumerate_diagrams(
        5,
        &[a.clone(), Label::free("b")],
        &RelationSet::empty(),
        &[Constraint::TrivialAutomorphisms, Constraint::LabelCount { label: a.clone(), min: 4, max: 6 }],
    )
    .unwrap();
    assert!(ds.iter().all(|d| d.automorphisms().is_trivial()));
    assert!(ds.iter().all(|d| (4..=6).contains(&d.label_count(&a))));
    // asymmetric graphs on five vertices with four to six edges
    assert!(ds.is_empty());
}

#[test]
fn fixture_symmetry_groups() {
    for (name, order) in [
        ("k4-alpha-four-cycle", 8),
        ("k5-cycle-split-spokes", 4),
        ("k5-alpha-k4", 4),
        ("k5-alpha-k23", 4),
        ("k5-cycle-uniform-spokes", 8),
        ("k5-cycle-alternating-spokes", 4),
        ("k5-alpha-fork", 2),
    ] {
        let d = fixtures::diagram(name).unwrap();
        assert_eq!(d.automorphisms().order(), order, "{name}");
        assert_eq!(brute_automorphisms(&d), order, "{name}");
    }
}

#[test]
fn every_fixture_loads_and_round_trips() {
    for name in fixtures::diagram_names() {
        let d = fixtures::diagram(name).unwrap();
        let json = serde_json::to_string(&d.to_fixture(name)).unwrap();
        let back = CoxeterDiagram::from_json(&json).unwrap();
        assert_eq!(back, d, "{name}");
    }
}

#[test]
fn subgroup_counts_of_small_symmetric_groups() {
    for (n, count) in [(3, 6), (4, 30), (5, 156)] {
        let subs = two_generated_subgroups(n);
        assert_eq!(subs.len(), count, "S{n}");
        let fact: usize = (1..=n).product();
        assert!(subs.iter().all(|g| fact % g.order() == 0));
    }
}

#[test]
fn pair_orbits_of_a_transposition() {
    for m in 2..=6usize {
        let g = AutGroup::generated(m, &[Perm::transposition(m, 0, 1)]);
        let pairs = m * (m - 1) / 2;
        let orbits = orbit_partition(&g, pairs, act_on_pair).len();
        assert_eq!(Some(orbits), pair_orbit_bound(m).ok());
        assert_eq!(burnside_count(g.elements(), m, pairs, act_on_pair).unwrap(), orbits);
    }
}

#[test]
fn groups_must_be_closed() {
    let t = Perm::transposition(3, 0, 1);
    assert!(AutGroup::new(3, vec![t]).is_err());
    assert!(AutGroup::new(3, vec![Perm::identity(3), Perm::transposition(3, 0, 1)]).is_ok());
}

#[test]
fn partition_census() {
    let ps = enumerate_edge_partitions(
        5,
        &PartitionConstraints { frequent_types: 2, min_copies: 4, trivial_automorphisms: false },
    )
    .unwrap();
    for p in &ps {
        let total: usize = p.triangle_census().values().sum();
        assert_eq!(total, 10);
        assert_eq!(p.automorphism_count(), p.to_diagram().automorphisms().order());
        assert!(p.triangle_census().values().filter(|&&c| c >= 4).count() >= 2);
    }
}
