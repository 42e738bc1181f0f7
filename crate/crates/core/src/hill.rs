//! Right-angled Hill simplices `H^0_d`, `H^1_d`, `H^2_d` and their lattice tilings.
//!
//! The lattice tiling of `R^d` cut by the hyperplanes `x_i = n`, `x_i + x_j = n` and
//! `x_i - x_j = n` has tiles congruent to `H^1_d`. A scaled copy `m * H^1_d` is a union of
//! `m^d` tiles, and `m * H^2_d` is a union of `2 m^d` tiles that can be paired into copies of
//! `H^2_d`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::{all_perms, Perm};
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, Rational};
use crate::gram::EuclideanSimplex;

/// `H^i_d` for `i` in `{0, 1, 2}` with the standard vertex order.
pub fn hill_simplex(d: usize, i: usize) -> Result<EuclideanSimplex> {
    if d < 2 {
        return Err(Error::Domain(format!("dimension must be at least 2, got {d}")));
    }
    if i > 2 {
        return Err(Error::Domain(format!("only H^0, H^1 and H^2 are built, got H^{i}")));
    }
    let half = rat(1, 2);
    let point = |ones: usize, halves: usize| -> Vec<Rational> {
        (0..d)
            .map(|k| {
                if k < ones {
                    int(1)
                } else if k < halves {
                    half.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    let mut pts = vec![point(0, 0)];
    for k in 1..=d {
        // the first `i` steps are full unit steps, the rest add a coordinate 1/2
        pts.push(if k <= i { point(k, k) } else { point(0, k) });
    }
    EuclideanSimplex::new(pts)
}

/// A tile of the lattice tiling by copies of `H^1_d`: the unit cube centre `z` (all
/// coordinates half-integers) and a signed partial permutation of `d - 1` distinct axes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeTile {
    /// `z_k = corner_k + 1/2`.
    pub corner: Vec<i64>,
    /// Entries `+-(axis + 1)`.
    pub signed_axes: Vec<i64>,
}

impl LatticeTile {
    pub fn new(corner: Vec<i64>, signed_axes: Vec<i64>) -> Result<LatticeTile> {
        let d = corner.len();
        if d < 2 || signed_axes.len() != d - 1 {
            return Err(Error::Domain(format!(
                "a tile in dimension {d} needs {} signed axes",
                d.saturating_sub(1)
            )));
        }
        let axes: BTreeSet<i64> = signed_axes.iter().map(|a| a.abs()).collect();
        if axes.len() != d - 1 || axes.iter().any(|&a| a < 1 || a > d as i64) {
            return Err(Error::Domain(format!("invalid signed axes {signed_axes:?}")));
        }
        Ok(LatticeTile {
            corner,
            signed_axes,
        })
    }

    pub fn dim(&self) -> usize {
        self.corner.len()
    }

    pub fn center(&self) -> Vec<Rational> {
        self.corner.iter().map(|&c| int(c) + rat(1, 2)).collect()
    }

    fn missing_axis(&self) -> usize {
        let used: BTreeSet<usize> = self.signed_axes.iter().map(|a| a.unsigned_abs() as usize - 1).collect();
        (0..self.dim()).find(|k| !used.contains(k)).expect("one axis is unused")
    }

    /// `z`, then half steps along the first `d - 2` signed axes, then the two points reached
    /// by a further half step along axis `d - 1` and plus or minus a half step along the
    /// unused axis.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        let half = rat(1, 2);
        let mut p = self.center();
        let mut out = vec![p.clone()];
        let step = |p: &mut Vec<Rational>, a: i64, sign: i64| {
            let k = a.unsigned_abs() as usize - 1;
            p[k] += &half * int(a.signum() * sign);
        };
        for &a in &self.signed_axes[..d - 2] {
            step(&mut p, a, 1);
            out.push(p.clone());
        }
        step(&mut p, self.signed_axes[d - 2], 1);
        let last = self.missing_axis() as i64 + 1;
        let mut plus = p.clone();
        step(&mut plus, last, 1);
        let mut minus = p;
        step(&mut minus, last, -1);
        out.push(plus);
        out.push(minus);
        out
    }

    pub fn simplex(&self) -> EuclideanSimplex {
        EuclideanSimplex::new(self.vertices()).expect("lattice tiles are nondegenerate")
    }

    /// Same cube, same first `d - 2` signed axes and a different axis in position `d - 1`.
    /// Two such tiles share a facet and their union is a copy of `H^2_d`.
    pub fn is_compatible(&self, other: &LatticeTile) -> bool {
        let d = self.dim();
        self.corner == other.corner
            && self.signed_axes[..d - 2] == other.signed_axes[..d - 2]
            && self.signed_axes[d - 2].abs() != other.signed_axes[d - 2].abs()
    }
}

/// Every tile whose unit cube has lower corner `corner`.
pub fn tiles_in_cube(corner: &[i64]) -> Vec<LatticeTile> {
    let d = corner.len();
    let mut out = vec![];
    for p in all_perms(d) {
        let axes = &p.0[..d - 1];
        // distinct axis sequences only: the last entry of the permutation is implied
        if p.0[d - 1] != (0..d).find(|k| !axes.contains(k)).expect("unused axis") {
            continue;
        }
        for signs in 0..1u32 << (d - 1) {
            let signed: Vec<i64> = axes
                .iter()
                .enumerate()
                .map(|(j, &a)| if signs >> j & 1 == 1 { -(a as i64 + 1) } else { a as i64 + 1 })
                .collect();
            out.push(LatticeTile {
                corner: corner.to_vec(),
                signed_axes: signed,
            });
        }
    }
    out
}

/// Exact point-in-simplex test via barycentric coordinates.
struct Region {
    origin: Vec<Rational>,
    /// Inverse of the matrix with columns `v_i - v_0`, row-major.
    inverse: Vec<Rational>,
    d: usize,
}

impl Region {
    fn new(s: &EuclideanSimplex) -> Region {
        let d = s.dim();
        let v = s.vertices();
        let mut a: Vec<Rational> = vec![Rational::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                a[i * d + j] = &v[j + 1][i] - &v[0][i];
            }
        }
        Region {
            origin: v[0].clone(),
            inverse: invert(d, a).expect("simplex is nondegenerate"),
            d,
        }
    }

    fn contains(&self, p: &[Rational]) -> bool {
        let d = self.d;
        let diff: Vec<Rational> = p.iter().zip(&self.origin).map(|(x, y)| x - y).collect();
        let mut sum = Rational::zero();
        for i in 0..d {
            let l: Rational = (0..d).map(|j| &self.inverse[i * d + j] * &diff[j]).sum();
            if l.is_negative() {
                return false;
            }
            sum += l;
        }
        sum <= Rational::one()
    }
}

fn invert(d: usize, mut a: Vec<Rational>) -> Option<Vec<Rational>> {
    let mut inv: Vec<Rational> = (0..d * d)
        .map(|k| if k % (d + 1) == 0 { int(1) } else { Rational::zero() })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&r| !a[r * d + c].is_zero())?;
        for k in 0..d {
            a.swap(c * d + k, p * d + k);
            inv.swap(c * d + k, p * d + k);
        }
        let piv = a[c * d + c].clone();
        for k in 0..d {
            a[c * d + k] /= &piv;
            inv[c * d + k] /= &piv;
        }
        for r in 0..d {
            if r != c && !a[r * d + c].is_zero() {
                let f = a[r * d + c].clone();
                for k in 0..d {
                    let (x, y) = (&a[c * d + k] * &f, &inv[c * d + k] * &f);
                    a[r * d + k] -= x;
                    inv[r * d + k] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// All lattice tiles contained in `target`, sorted.
pub fn tiles_inside(target: &EuclideanSimplex) -> Vec<LatticeTile> {
    let region = Region::new(target);
    let d = target.dim();
    let lo: Vec<i64> = (0..d)
        .map(|k| {
            target.vertices().iter().map(|v| v[k].floor().to_integer()).min().expect("vertices")
        })
        .map(|x| i64::try_from(x).expect("small coordinates"))
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|k| target.vertices().iter().map(|v| v[k].ceil().to_integer()).max().expect("vertices"))
        .map(|x| i64::try_from(x).expect("small coordinates"))
        .collect();
    let mut out = vec![];
    let mut corner = lo.clone();
    loop {
        for t in tiles_in_cube(&corner) {
            if t.vertices().iter().all(|p| region.contains(p)) {
                out.push(t);
            }
        }
        // odometer over the cubes of the bounding box
        let mut k = 0;
        while k < d {
            corner[k] += 1;
            if corner[k] < hi[k] {
                break;
            }
            corner[k] = lo[k];
            k += 1;
        }
        if k == d {
            break;
        }
    }
    out.sort();
    out
}

/// The tiles of `m * H^1_d`.
pub fn generate_h1_tiling(d: usize, m: u32) -> Result<Vec<LatticeTile>> {
    if m == 0 {
        return Err(Error::Domain("scale must be positive".into()));
    }
    Ok(tiles_inside(&hill_simplex(d, 1)?.scaled(&int(m as i64))))
}

/// Congruence with mirror images: some vertex bijection preserves all squared distances.
pub fn congruent(a: &EuclideanSimplex, b: &EuclideanSimplex) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    let (da, db) = (a.squared_lengths(), b.squared_lengths());
    let sorted = |v: &[Rational]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    if sorted(&da) != sorted(&db) {
        return false;
    }
    let n = a.dim() + 1;
    let idx = |i: usize, j: usize| {
        let (x, y) = if i < j { (i, j) } else { (j, i) };
        y * (y - 1) / 2 + x
    };
    all_perms(n).iter().any(|p: &Perm| {
        (1..n).all(|j| (0..j).all(|i| da[idx(i, j)] == db[idx(p.apply(i), p.apply(j))]))
    })
}

/// Numeric congruence within `tol` on squared distances.
pub fn congruent_f64(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let d2 = |p: &[f64], q: &[f64]| p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
    all_perms(n).iter().any(|p| {
        (1..n).all(|j| (0..j).all(|i| (d2(&a[i], &a[j]) - d2(&b[p.apply(i)], &b[p.apply(j)])).abs() <= tol))
    })
}

/// Whether two tiles have disjoint interiors: some direction `e_i` or `e_i +- e_j` has the
/// two vertex projections on opposite sides of a common value.
pub fn interiors_disjoint(a: &LatticeTile, b: &LatticeTile) -> bool {
    let d = a.dim();
    let (va, vb) = (a.vertices(), b.vertices());
    let mut dirs: Vec<Vec<i64>> = vec![];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        dirs.push(e);
        for j in i + 1..d {
            for s in [1, -1] {
                let mut e = vec![0; d];
                e[i] = 1;
                e[j] = s;
                dirs.push(e);
            }
        }
    }
    let range = |vs: &[Vec<Rational>], e: &[i64]| {
        let vals: Vec<Rational> = vs
            .iter()
            .map(|p| p.iter().zip(e).map(|(x, &c)| x * int(c)).sum())
            .collect();
        (vals.iter().min().cloned().expect("vertices"), vals.iter().max().cloned().expect("vertices"))
    };
    dirs.iter().any(|e| {
        let (lo_a, hi_a) = range(&va, e);
        let (lo_b, hi_b) = range(&vb, e);
        hi_a <= lo_b || hi_b <= lo_a
    })
}

/// Classes of tiles sharing a cube and the first `d - 2` signed axes, as sorted index lists.
/// Within a full cube each class is a connected four-cycle of the compatibility graph.
pub fn compatibility_components(tiles: &[LatticeTile]) -> Vec<Vec<usize>> {
    let n = tiles.len();
    let mut groups: BTreeMap<(Vec<i64>, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (k, t) in tiles.iter().enumerate() {
        let d = t.dim();
        groups
            .entry((t.corner.clone(), t.signed_axes[..d - 2].to_vec()))
            .or_default()
            .push(k);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    debug_assert_eq!(out.iter().map(Vec::len).sum::<usize>(), n);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityGraph {
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
    /// Component size to number of components.
    pub profile: BTreeMap<usize, usize>,
    /// Every component is a four-cycle (four tiles, each compatible with exactly two).
    pub all_four_cycles: bool,
}

pub fn compatibility_graph(tiles: &[LatticeTile]) -> CompatibilityGraph {
    let mut edges = vec![];
    for i in 0..tiles.len() {
        for j in i + 1..tiles.len() {
            if tiles[i].is_compatible(&tiles[j]) {
                edges.push((i, j));
            }
        }
    }
    let components = compatibility_components(tiles);
    let mut profile = BTreeMap::new();
    for c in &components {
        *profile.entry(c.len()).or_insert(0) += 1;
    }
    let mut degree = vec![0usize; tiles.len()];
    for &(i, j) in &edges {
        degree[i] += 1;
        degree[j] += 1;
    }
    let all_four_cycles = !components.is_empty()
        && components
            .iter()
            .all(|c| c.len() == 4 && c.iter().all(|&k| degree[k] == 2));
    CompatibilityGraph {
        edges,
        components,
        profile,
        all_four_cycles,
    }
}

/// The simplex formed by two tiles when their union is one, found by dropping the point of
/// the combined vertex set that is not a corner of the union.
pub fn union_simplex(a: &LatticeTile, b: &LatticeTile) -> Option<EuclideanSimplex> {
    let mut pts: Vec<Vec<Rational>> = a.vertices();
    for p in b.vertices() {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let d = a.dim();
    if pts.len() != d + 2 {
        return None;
    }
    let total = a.simplex().volume() + b.simplex().volume();
    (0..pts.len()).find_map(|skip| {
        let rest: Vec<Vec<Rational>> = pts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, p)| p.clone())
            .collect();
        let s = EuclideanSimplex::new(rest).ok()?;
        if s.volume() != total {
            return None;
        }
        let r = Region::new(&s);
        pts.iter().all(|p| r.contains(p)).then_some(s)
    })
}

/// The tiles of `m * H^2_d` matched into pairs whose unions are copies of `H^2_d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct H2Pairing {
    pub tiles: Vec<LatticeTile>,
    pub pairs: Vec<(usize, usize)>,
}

pub fn pair_h2_tiling(d: usize, m: u32) -> Result<H2Pairing> {
    if m == 0 {
        return Err(Error::Domain("scale must be positive".into()));
    }
    let h2 = hill_simplex(d, 2)?;
    let tiles = tiles_inside(&h2.scaled(&int(m as i64)));
    let mut pairs = vec![];
    for comp in compatibility_components(&tiles) {
        let matched = match comp.len() {
            2 => try_pairs(&tiles, &[(comp[0], comp[1])]),
            4 => [
                [(comp[0], comp[1]), (comp[2], comp[3])],
                [(comp[0], comp[2]), (comp[1], comp[3])],
                [(comp[0], comp[3]), (comp[1], comp[2])],
            ]
            .iter()
            .find_map(|m| try_pairs(&tiles, m)),
            _ => None,
        };
        match matched {
            Some(ps) => pairs.extend(ps),
            None => {
                let names: Vec<String> = comp.iter().map(|&k| format!("{:?}", tiles[k])).collect();
                return Err(Error::Pairing(format!(
                    "component of {} tiles cannot be paired: {}",
                    comp.len(),
                    names.join(", ")
                )));
            }
        }
    }
    Ok(H2Pairing { tiles, pairs })
}

fn try_pairs(tiles: &[LatticeTile], ps: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    ps.iter()
        .all(|&(i, j)| tiles[i].is_compatible(&tiles[j]))
        .then(|| ps.to_vec())
}

/// Checks performed on one generated tiling.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TilingReport {
    pub d: usize,
    pub m: u32,
    /// `"H1"` or `"H2"`.
    pub base: String,
    pub tile_count: usize,
    pub expected_count: usize,
    #[serde(with = "crate::exactmath::rational_serde")]
    pub total_volume: Rational,
    #[serde(with = "crate::exactmath::rational_serde")]
    pub target_volume: Rational,
    pub volume_conserved: bool,
    pub all_congruent: bool,
    pub interiors_disjoint: bool,
    pub component_profile: BTreeMap<usize, usize>,
    /// Only for `H2`: every pair's union is congruent to `H^2_d`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_count: Option<usize>,
}

impl TilingReport {
    pub fn passed(&self) -> bool {
        self.tile_count == self.expected_count
            && self.volume_conserved
            && self.all_congruent
            && self.interiors_disjoint
            && self.pairing_ok.unwrap_or(true)
    }
}

fn common_checks(d: usize, m: u32, base: &str, target: &EuclideanSimplex, tiles: &[LatticeTile], expected: usize) -> Result<TilingReport> {
    let h1 = hill_simplex(d, 1)?;
    let total: Rational = tiles.iter().map(|t| t.simplex().volume()).sum();
    let target_volume = target.volume();
    let all_congruent = tiles.iter().all(|t| congruent(&t.simplex(), &h1));
    let disjoint = (0..tiles.len()).all(|i| (i + 1..tiles.len()).all(|j| interiors_disjoint(&tiles[i], &tiles[j])));
    let mut profile = BTreeMap::new();
    for c in compatibility_components(tiles) {
        *profile.entry(c.len()).or_insert(0) += 1;
    }
    Ok(TilingReport {
        d,
        m,
        base: base.to_string(),
        tile_count: tiles.len(),
        expected_count: expected,
        volume_conserved: total == target_volume,
        total_volume: total,
        target_volume,
        all_congruent,
        interiors_disjoint: disjoint,
        component_profile: profile,
        pairing_ok: None,
        pair_count: None,
    })
}

/// Generates and checks the tiling of `m * H^1_d` by `m^d` tiles.
pub fn check_h1_tiling(d: usize, m: u32) -> Result<TilingReport> {
    let tiles = generate_h1_tiling(d, m)?;
    let target = hill_simplex(d, 1)?.scaled(&int(m as i64));
    common_checks(d, m, "H1", &target, &tiles, (m as usize).pow(d as u32))
}

/// Generates the tiles of `m * H^2_d`, pairs them and checks every pair.
pub fn check_h2_pairing(d: usize, m: u32) -> Result<TilingReport> {
    let h2 = hill_simplex(d, 2)?;
    let target = h2.scaled(&int(m as i64));
    let p = pair_h2_tiling(d, m)?;
    let mut r = common_checks(d, m, "H2", &target, &p.tiles, 2 * (m as usize).pow(d as u32))?;
    let mut used = vec![false; p.tiles.len()];
    let ok = p.pairs.iter().all(|&(i, j)| {
        let fresh = !used[i] && !used[j];
        used[i] = true;
        used[j] = true;
        fresh && union_simplex(&p.tiles[i], &p.tiles[j]).is_some_and(|s| congruent(&s, &h2))
    }) && used.iter().all(|&u| u)
        && p.pairs.len() == (m as usize).pow(d as u32);
    r.pairing_ok = Some(ok);
    r.pair_count = Some(p.pairs.len());
    Ok(r)
}

#[derive(Serialize)]
struct TileJson {
    center: Vec<String>,
    signed_axes: Vec<i64>,
    vertices: Vec<Vec<String>>,
}

/// JSON export with coordinates as exact fractions `"p/q"`.
pub fn tiling_to_json(tiles: &[LatticeTile]) -> Result<String> {
    let list: Vec<TileJson> = tiles
        .iter()
        .map(|t| TileJson {
            center: t.center().iter().map(|x| x.to_string()).collect(),
            signed_axes: t.signed_axes.clone(),
            vertices: t
                .vertices()
                .iter()
                .map(|p| p.iter().map(|x| x.to_string()).collect())
                .collect(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&list)?)
}

/// OFF export for `d = 2` (faces in the plane `z = 0`) and `d = 3` (four triangles per tile).
pub fn tiling_to_off(tiles: &[LatticeTile]) -> Result<String> {
    let d = tiles.first().map_or(3, |t| t.dim());
    if d != 2 && d != 3 {
        return Err(Error::Domain(format!("OFF export needs d = 2 or 3, got {d}")));
    }
    let mut index: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
    let mut faces: Vec<Vec<usize>> = vec![];
    for t in tiles {
        let ids: Vec<usize> = t
            .vertices()
            .into_iter()
            .map(|p| {
                let n = index.len();
                *index.entry(p).or_insert(n)
            })
            .collect();
        if d == 2 {
            faces.push(ids);
        } else {
            for skip in 0..4 {
                faces.push(ids.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect());
            }
        }
    }
    let mut verts = vec![Vec::new(); index.len()];
    for (p, k) in index {
        verts[k] = p;
    }
    let mut s = String::new();
    writeln!(s, "OFF").expect("string write");
    writeln!(s, "{} {} 0", verts.len(), faces.len()).expect("string write");
    for p in &verts {
        let mut c: Vec<String> = p.iter().map(|x| format!("{}", crate::exactmath::to_f64(x))).collect();
        if d == 2 {
            c.push("0".into());
        }
        writeln!(s, "{}", c.join(" ")).expect("string write");
    }
    for f in &faces {
        let ids: Vec<String> = f.iter().map(|k| k.to_string()).collect();
        writeln!(s, "{} {}", f.len(), ids.join(" ")).expect("string write");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hill_simplices() {
        let h = hill_simplex(2, 1).unwrap();
        assert_eq!(
            h.vertices(),
            &[vec![int(0), int(0)], vec![int(1), int(0)], vec![rat(1, 2), rat(1, 2)]]
        );
        let h2 = hill_simplex(2, 2).unwrap();
        assert_eq!(h2.vertices()[2], vec![int(1), int(1)]);
        assert!(hill_simplex(1, 0).is_err());
        assert!(hill_simplex(3, 3).is_err());
    }

    #[test]
    fn tiles_per_cube() {
        // d! 2^(d-1) tiles of volume 1/(d! 2^(d-1)) fill a unit cube
        for d in 2..=4 {
            let ts = tiles_in_cube(&vec![0; d]);
            let count: usize = (1..=d).product::<usize>() << (d - 1);
            assert_eq!(ts.len(), count);
            let v: Rational = ts.iter().map(|t| t.simplex().volume()).sum();
            assert_eq!(v, int(1));
        }
    }

    #[test]
    fn invalid_tiles_are_rejected() {
        assert!(LatticeTile::new(vec![0, 0, 0], vec![1, -1]).is_err());
        assert!(LatticeTile::new(vec![0, 0, 0], vec![1]).is_err());
        assert!(LatticeTile::new(vec![0, 0, 0], vec![4, 1]).is_err());
        assert!(LatticeTile::new(vec![0, 0, 0], vec![-3, 1]).is_ok());
    }

    #[test]
    fn single_tile_has_no_compatibility_edges() {
        let t = LatticeTile::new(vec![0, 0], vec![1]).unwrap();
        let g = compatibility_graph(&[t]);
        assert!(g.edges.is_empty());
        assert!(!g.all_four_cycles);
    }

    #[test]
    fn matrix_inverse() {
        let a = vec![int(2), int(1), int(1), int(1)];
        let inv = invert(2, a).unwrap();
        assert_eq!(inv, vec![int(1), int(-1), int(-1), int(2)]);
        assert!(invert(2, vec![int(1), int(2), int(2), int(4)]).is_none());
    }
}
