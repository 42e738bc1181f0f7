//! Permutations of small vertex sets and finite permutation groups.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// `p[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Swaps `a` and `b`, fixes everything else.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, j)| i == *j).count()
    }

    /// Cycle notation over the given names, e.g. `(u x)(v y)`; `()` for the identity.
    pub fn cycles(&self, names: &[String]) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] == s {
                continue;
            }
            let mut cyc = vec![];
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(names.get(i).cloned().unwrap_or_else(|| i.to_string()));
                i = self.0[i];
            }
            out.push('(');
            out.push_str(&cyc.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// A finite group of permutations of `0..n`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Perm>,
}

impl AutGroup {
    /// Checks identity, closure under composition and inverses.
    pub fn new(n: usize, elements: Vec<Perm>) -> Result<AutGroup> {
        let mut elements: Vec<Perm> = elements
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        elements.sort();
        if elements.iter().any(|p| p.len() != n) {
            return Err(Error::NotAGroup(format!(
                "permutation of the wrong degree (expected {n})"
            )));
        }
        let set: BTreeSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(n)) {
            return Err(Error::NotAGroup("missing identity".into()));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::NotAGroup(format!("missing inverse of {:?}", a.0)));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::NotAGroup(format!(
                        "not closed: {:?} * {:?}",
                        a.0, b.0
                    )));
                }
            }
        }
        Ok(AutGroup { n, elements })
    }

    /// The subgroup generated by `gens`.
    pub fn generated(n: usize, gens: &[Perm]) -> AutGroup {
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut queue = VecDeque::from([Perm::identity(n)]);
        seen.insert(Perm::identity(n));
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        AutGroup {
            n,
            elements: seen.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Orbits of a group acting on `0..m` through `act(g, x)`, each sorted, ordered by least element.
pub fn orbit_partition<F>(g: &AutGroup, m: usize, act: F) -> Vec<Vec<usize>>
where
    F: Fn(&Perm, usize) -> usize,
{
    let mut owner = vec![usize::MAX; m];
    let mut orbits = vec![];
    for x in 0..m {
        if owner[x] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![x];
        owner[x] = id;
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            for p in g.elements() {
                let z = act(p, y);
                assert!(z < m, "action leaves the set");
                if owner[z] == usize::MAX {
                    owner[z] = id;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Burnside count `(1/|G|) Σ_g |Fix(g)|` for an action on `0..m`.
///
/// Fails when the elements do not form a group or the sum is not divisible by the order,
/// which signals a map that is not an action.
pub fn burnside_count<F>(elements: &[Perm], degree: usize, m: usize, act: F) -> Result<usize>
where
    F: Fn(&Perm, usize) -> usize,
{
    let g = AutGroup::new(degree, elements.to_vec())?;
    let fixed: usize = g
        .elements()
        .iter()
        .map(|p| (0..m).filter(|&x| act(p, x) == x).count())
        .sum();
    if fixed % g.order() != 0 {
        return Err(Error::NotAGroup(format!(
            "fixed-point sum {fixed} not divisible by |G| = {}",
            g.order()
        )));
    }
    Ok(fixed / g.order())
}

/// Upper bound on pair orbits for a nontrivial faithful action on an `m`-set: `C(m,2) - m + 2`.
pub fn pair_orbit_bound(m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "pair orbit bound needs m >= 2, got {m}"
        )));
    }
    Ok(m * (m - 1) / 2 + 2 - m)
}

/// Index of the unordered pair `{i, j}` (`i != j`) in colex order.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_index`].
pub fn pair_at(k: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= k {
        b += 1;
    }
    (k - b * (b - 1) / 2, b)
}

/// Action of a vertex permutation on unordered pairs, by pair index.
pub fn act_on_pair(p: &Perm, k: usize) -> usize {
    let (a, b) = pair_at(k);
    pair_index(p.apply(a), p.apply(b))
}

/// Every subgroup of the symmetric group on `n` points that is generated by at most two
/// elements, as sorted element lists. Subgroups are found as closures of all generator pairs.
pub fn two_generated_subgroups(n: usize) -> Vec<AutGroup> {
    let perms = all_perms(n);
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let k = perms.len();
    let mut table = vec![0usize; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = index[&perms[a].compose(&perms[b])];
        }
    }
    let words = k.div_ceil(64);
    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = vec![];
    for a in 0..k {
        for b in a..k {
            let mut mask = vec![0u64; words];
            let mut members = vec![index[&Perm::identity(n)]];
            mask[members[0] / 64] |= 1 << (members[0] % 64);
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for g in [a, b] {
                    let y = table[g * k + x];
                    if mask[y / 64] & (1 << (y % 64)) == 0 {
                        mask[y / 64] |= 1 << (y % 64);
                        members.push(y);
                    }
                }
                i += 1;
            }
            if found.insert(mask) {
                members.sort_unstable();
                let elements = members.into_iter().map(|i| perms[i].clone()).collect();
                out.push(AutGroup { n, elements });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perms_of_four() {
        let ps = all_perms(4);
        assert_eq!(ps.len(), 24);
        assert!(ps[0].is_identity());
        assert_eq!(ps.iter().collect::<BTreeSet<_>>().len(), 24);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Perm(vec![1, 2, 0]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p), Perm(vec![2, 0, 1]));
        let names: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
        assert_eq!(p.cycles(&names), "(u v w)");
    }

    #[test]
    fn pair_indexing_roundtrip() {
        for k in 0..15 {
            let (a, b) = pair_at(k);
            assert!(a < b);
            assert_eq!(pair_index(a, b), k);
        }
        assert_eq!(pair_at(0), (0, 1));
        assert_eq!(pair_at(3), (0, 3));
    }

    #[test]
    fn non_group_is_rejected() {
        let t = Perm::transposition(3, 0, 1);
        assert!(AutGroup::new(3, vec![t.clone()]).is_err());
        let c = Perm(vec![1, 2, 0]);
        assert!(AutGroup::new(3, vec![Perm::identity(3), c]).is_err());
        assert!(AutGroup::new(3, vec![Perm::identity(3), t]).is_ok());
    }

    #[test]
    fn burnside_small_cases() {
        let s3 = all_perms(3);
        assert_eq!(burnside_count(&s3, 3, 3, |p, x| p.apply(x)).unwrap(), 1);
        let id = vec![Perm::identity(5)];
        assert_eq!(burnside_count(&id, 5, 10, act_on_pair).unwrap(), 10);
        let t = vec![Perm::identity(5), Perm::transposition(5, 0, 1)];
        assert_eq!(burnside_count(&t, 5, 10, act_on_pair).unwrap(), 7);
    }

    #[test]
    fn bound_formula() {
        assert_eq!(pair_orbit_bound(5).unwrap(), 7);
        assert_eq!(pair_orbit_bound(4).unwrap(), 4);
        assert!(pair_orbit_bound(1).is_err());
    }

    #[test]
    fn subgroups_of_s4() {
        // S4 has 30 subgroups, all generated by at most two elements
        assert_eq!(two_generated_subgroups(4).len(), 30);
    }
}
