//! Bounded exhaustive search for tilings of a spherical triangle by copies of a tile.
//!
//! The uncovered region is kept as a list of counter-clockwise polygons. Each step picks
//! the boundary vertex with the smallest interior angle; some tile must have a corner
//! there with one edge along the outgoing boundary edge, so trying the three tile
//! corners with both neighbour choices (which covers mirror images) is exhaustive.

use serde::Serialize;
use std::collections::HashSet;
use std::f64::consts::PI;

use super::geom::{
    dist, interior_angle, place_triangle, point_in_polygon, point_segment, polygon_area, rotate,
    segment_intrudes, tangent, walk, Chart, V3,
};
use super::{SphTiling, TileSpec};
use crate::error::{Error, Result};
use crate::spherical::{edge_lengths, is_valid};

/// Tolerance for matching angles and edge lengths against tile combinations.
const COMBO_TOL: f64 = 1e-7;
/// Grid used to hash region states.
const HASH_GRID: f64 = 1e-7;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchConfig {
    pub n_max: usize,
    /// Snapping distance for identifying vertices.
    pub eps: f64,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_max: 8,
            eps: 1e-9,
            node_budget: 1_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(SphTiling),
    /// No tiling with at most `n_max` tiles exists.
    Exhausted,
    /// The node budget ran out before the search finished.
    Aborted,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Exhausted => "exhausted",
            SearchOutcome::Aborted => "aborted",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

type Region = Vec<Vec<V3>>;

struct Searcher {
    angles: [f64; 3],
    edges: [f64; 3],
    area: f64,
    chart: Chart,
    eps: f64,
    n_max: usize,
    budget: u64,
    angle_sums: Vec<f64>,
    length_sums: Vec<f64>,
    tiles: Vec<[V3; 3]>,
    failed: HashSet<Vec<Vec<[i64; 3]>>>,
    stats: SearchStats,
    aborted: bool,
}

fn sums(gens: [f64; 3], limit: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let lo = gens.iter().cloned().fold(f64::INFINITY, f64::min);
    let cap = (limit / lo).ceil() as u32 + 1;
    for i in 0..=cap {
        for j in 0..=cap {
            for k in 0..=cap {
                let s = i as f64 * gens[0] + j as f64 * gens[1] + k as f64 * gens[2];
                if s > 0.0 && s <= limit + COMBO_TOL {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by(|a, b| a.total_cmp(b));
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    out
}

fn contains(sorted: &[f64], x: f64) -> bool {
    let i = sorted.partition_point(|&s| s < x - COMBO_TOL);
    i < sorted.len() && (sorted[i] - x).abs() <= COMBO_TOL
}

/// Searches for a tiling of the triangle with the given angles (radians) by congruent copies
/// of `tile`, mirror images allowed.
pub fn search_tiling(
    target: [f64; 3],
    tile: &TileSpec,
    cfg: &SearchConfig,
) -> Result<(SearchOutcome, SearchStats)> {
    let v = is_valid(target);
    if !v.valid {
        return Err(Error::InvalidTriangle(format!(
            "{target:?}: {:?}",
            v.reason
        )));
    }
    let target_area = target.iter().sum::<f64>() - PI;
    let needed = (target_area / tile.area()).round();
    if (needed * tile.area() - target_area).abs() > 1e-7 || needed as usize > cfg.n_max {
        // area is not a multiple of the tile area, or more tiles are needed than allowed
        return Ok((SearchOutcome::Exhausted, SearchStats::default()));
    }
    let poly = place_triangle(target, edge_lengths(target)?).to_vec();
    let mut s = Searcher {
        angles: tile.angles,
        edges: tile.edges,
        area: tile.area(),
        chart: Chart::for_convex(&poly),
        eps: cfg.eps,
        n_max: cfg.n_max,
        budget: cfg.node_budget,
        angle_sums: sums(tile.angles, 2.0 * PI),
        length_sums: sums(tile.edges, PI),
        tiles: Vec::new(),
        failed: HashSet::new(),
        stats: SearchStats::default(),
        aborted: false,
    };
    let found = s.dfs(vec![poly.clone()]);
    let outcome = if found {
        SearchOutcome::Found(SphTiling {
            target: poly,
            tiles: s.tiles.clone(),
        })
    } else if s.aborted {
        SearchOutcome::Aborted
    } else {
        SearchOutcome::Exhausted
    };
    Ok((outcome, s.stats))
}

fn angle_at(p: &[V3], i: usize) -> f64 {
    let n = p.len();
    interior_angle(&p[(i + n - 1) % n], &p[i], &p[(i + 1) % n])
}

impl Searcher {
    fn key(&self, region: &Region) -> Vec<Vec<[i64; 3]>> {
        let mut polys: Vec<Vec<[i64; 3]>> = region
            .iter()
            .map(|p| {
                let q: Vec<[i64; 3]> = p
                    .iter()
                    .map(|v| {
                        [
                            (v.x / HASH_GRID).round() as i64,
                            (v.y / HASH_GRID).round() as i64,
                            (v.z / HASH_GRID).round() as i64,
                        ]
                    })
                    .collect();
                let start = (0..q.len()).min_by_key(|&i| q[i]).unwrap_or(0);
                let mut r = q[start..].to_vec();
                r.extend_from_slice(&q[..start]);
                r
            })
            .collect();
        polys.sort();
        polys
    }

    fn dfs(&mut self, region: Region) -> bool {
        if region.is_empty() {
            return true;
        }
        if self.stats.nodes >= self.budget {
            self.aborted = true;
            return false;
        }
        self.stats.nodes += 1;
        let key = self.key(&region);
        if self.failed.contains(&key) {
            self.stats.memo_hits += 1;
            return false;
        }
        if !self.feasible(&region) {
            self.failed.insert(key);
            return false;
        }
        // corner with the smallest interior angle
        let mut best: Option<(f64, usize, usize)> = None;
        for (pi, p) in region.iter().enumerate() {
            for vi in 0..p.len() {
                let a = angle_at(p, vi);
                if best.is_none_or(|(b, _, _)| a < b - 1e-12) {
                    best = Some((a, pi, vi));
                }
            }
        }
        let Some((theta, pi, vi)) = best else {
            return false;
        };
        for x in 0..3 {
            if self.angles[x] > theta + COMBO_TOL {
                continue;
            }
            for y in (0..3).filter(|&y| y != x) {
                let Some((tile, next)) = self.place(&region, pi, vi, theta, x, y) else {
                    continue;
                };
                self.tiles.push(tile);
                if self.dfs(next) {
                    return true;
                }
                self.tiles.pop();
                if self.aborted {
                    return false;
                }
            }
        }
        if !self.aborted {
            self.failed.insert(key);
        }
        false
    }

    /// Necessary conditions for the region to be tileable with the remaining budget.
    fn feasible(&self, region: &Region) -> bool {
        let remaining = self.n_max - self.tiles.len();
        let mut total = 0.0;
        for p in region {
            let a = polygon_area(p);
            let k = (a / self.area).round();
            if k < 1.0 || (a - k * self.area).abs() > 1e-6 {
                return false;
            }
            total += k;
            let n = p.len();
            let th: Vec<f64> = (0..n).map(|i| angle_at(p, i)).collect();
            for &t in &th {
                let ok = if t < PI {
                    contains(&self.angle_sums, t)
                } else {
                    contains(&self.angle_sums, t) || contains(&self.angle_sums, t - PI)
                };
                if !ok {
                    return false;
                }
            }
            for i in 0..n {
                let j = (i + 1) % n;
                if th[i] < PI && th[j] < PI && !contains(&self.length_sums, dist(&p[i], &p[j])) {
                    return false;
                }
            }
        }
        total as usize <= remaining
    }

    fn snap(&self, region: &Region, p: V3) -> V3 {
        let mut best = (self.eps, p);
        for q in region.iter().flatten() {
            let d = dist(q, &p);
            if d < best.0 {
                best = (d, *q);
            }
        }
        best.1
    }

    /// Puts tile corner `x` at region vertex `(pi, vi)` with tile corner `y` along the
    /// outgoing boundary edge. Returns the tile and the remaining region.
    fn place(
        &self,
        region: &Region,
        pi: usize,
        vi: usize,
        theta: f64,
        x: usize,
        y: usize,
    ) -> Option<([V3; 3], Region)> {
        let poly = &region[pi];
        let n = poly.len();
        let u = poly[(vi + n - 1) % n];
        let v = poly[vi];
        let w = poly[(vi + 1) % n];
        let z = 3 - x - y;
        let filled = (theta - self.angles[x]).abs() <= COMBO_TOL;
        let tw = tangent(&v, &w);
        let p1 = self.snap(region, walk(&v, &tw, self.edges[z]));
        let t2 = if filled {
            tangent(&v, &u)
        } else {
            rotate(&v, &tw, self.angles[x])
        };
        let p2 = self.snap(region, walk(&v, &t2, self.edges[y]));
        let tile = [v, p1, p2];
        if tile.iter().any(|q| self.chart.height(q) <= 1e-9) {
            return None;
        }
        let tri2 = tile.map(|q| self.chart.project(&q));
        for p in region {
            let m = p.len();
            for i in 0..m {
                let a = self.chart.project(&p[i]);
                let b = self.chart.project(&p[(i + 1) % m]);
                if segment_intrudes(a, b, &tri2, 1e-9) {
                    return None;
                }
            }
        }
        let centroid = self.chart.project(&(v + p1 + p2).normalize());
        let inside = region
            .iter()
            .filter(|p| {
                let q: Vec<[f64; 2]> = p.iter().map(|x| self.chart.project(x)).collect();
                point_in_polygon(centroid, &q)
            })
            .count();
        if inside % 2 == 0 {
            return None;
        }
        let mut seq = Vec::with_capacity(n + 2);
        for (i, q) in poly.iter().enumerate() {
            if i == vi {
                if !filled {
                    seq.push(v);
                }
                seq.push(p2);
                seq.push(p1);
            } else {
                seq.push(*q);
            }
        }
        let mut next: Region = region.clone();
        next[pi] = seq;
        let next = self.cleanup(next)?;
        Some((tile, next))
    }

    /// Removes duplicate, spike and straight vertices, splits pinched polygons and drops
    /// empty ones. Returns `None` if a polygon ends up with non-positive area.
    fn cleanup(&self, mut region: Region) -> Option<Region> {
        let eps = self.eps.max(1e-12);
        loop {
            let mut changed = false;
            let mut out: Region = Vec::new();
            for mut p in region.into_iter() {
                // consecutive duplicates
                let mut q: Vec<V3> = Vec::with_capacity(p.len());
                for v in p.drain(..) {
                    if q.last().is_none_or(|l| dist(l, &v) > eps) {
                        q.push(v);
                    } else {
                        changed = true;
                    }
                }
                while q.len() > 1 && dist(&q[0], q.last().unwrap()) <= eps {
                    q.pop();
                    changed = true;
                }
                if q.len() < 3 {
                    changed |= !q.is_empty();
                    continue;
                }
                // vertices lying on other edges of the same polygon
                if let Some((at, v)) = self.find_touch(&q, eps) {
                    q.insert(at, v);
                    out.push(q);
                    changed = true;
                    continue;
                }
                // pinch points
                if let Some((i, j)) = find_duplicate(&q, eps) {
                    let a: Vec<V3> = q[i..j].to_vec();
                    let mut b: Vec<V3> = q[j..].to_vec();
                    b.extend_from_slice(&q[..i]);
                    out.push(a);
                    out.push(b);
                    changed = true;
                    continue;
                }
                // straight, spike and full-turn vertices
                let m = q.len();
                let bad = (0..m).find(|&i| {
                    let t = angle_at(&q, i);
                    t < 1e-9 || (t - PI).abs() < 1e-9 || t > 2.0 * PI - 1e-9
                });
                if let Some(i) = bad {
                    q.remove(i);
                    out.push(q);
                    changed = true;
                    continue;
                }
                out.push(q);
            }
            region = out;
            if !changed {
                break;
            }
        }
        for p in &region {
            if polygon_area(p) <= 1e-9 || signed_area_chart(&self.chart, p) <= 0.0 {
                return None;
            }
        }
        Some(region)
    }

    fn find_touch(&self, q: &[V3], eps: f64) -> Option<(usize, V3)> {
        let m = q.len();
        for (k, p) in q.iter().enumerate() {
            for i in 0..m {
                let j = (i + 1) % m;
                if i == k || j == k || dist(p, &q[i]) <= eps || dist(p, &q[j]) <= eps {
                    continue;
                }
                let (off, between) = point_segment(p, &q[i], &q[j]);
                if off <= eps && between {
                    return Some((i + 1, *p));
                }
            }
        }
        None
    }
}

fn find_duplicate(q: &[V3], eps: f64) -> Option<(usize, usize)> {
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if dist(&q[i], &q[j]) <= eps {
                return Some((i, j));
            }
        }
    }
    None
}

fn signed_area_chart(chart: &Chart, p: &[V3]) -> f64 {
    let q: Vec<[f64; 2]> = p.iter().map(|x| chart.project(x)).collect();
    let n = q.len();
    (0..n)
        .map(|i| q[i][0] * q[(i + 1) % n][1] - q[(i + 1) % n][0] * q[i][1])
        .sum::<f64>()
        / 2.0
}
