use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::collections::HashSet;
use std::f64::consts::PI;

use super::TileSpec;
use crate::angles::AngleForm;
use crate::error::{Error, Result};
use crate::exactmath::{int, to_f64, Rational};
use crate::spherical::{edge_lengths, is_valid};

/// Nonnegative integer combination `i*a + j*b + k*c` of the tile edges.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Combo {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub value: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EdgeStatus {
    Expressible {
        combo: Combo,
    },
    /// Closest combinations below and above; `None` when no combination lies on that side.
    Inexpressible {
        below: Option<Combo>,
        above: Option<Combo>,
    },
}

impl EdgeStatus {
    pub fn is_expressible(&self) -> bool {
        matches!(self, EdgeStatus::Expressible { .. })
    }
}

/// Tests whether `x` is within `tol` of a combination of `edges` with `i + j + k < bound`.
///
/// Ties between equally close combinations resolve to the last one in `(i, j, k)` order.
pub fn edge_combination(x: f64, edges: [f64; 3], bound: u32, tol: f64) -> EdgeStatus {
    let mut below: Option<(f64, Combo)> = None;
    let mut above: Option<(f64, Combo)> = None;
    for i in 0..bound {
        for j in 0..bound - i {
            for k in 0..bound - i - j {
                let value = i as f64 * edges[0] + j as f64 * edges[1] + k as f64 * edges[2];
                let t = x - value;
                let c = Combo { i, j, k, value };
                if t >= -tol && below.is_none_or(|(b, _)| t <= b) {
                    below = Some((t, c));
                }
                if -t >= -tol && above.is_none_or(|(a, _)| -t <= a) {
                    above = Some((-t, c));
                }
            }
        }
    }
    match below {
        Some((t, combo)) if t <= tol => EdgeStatus::Expressible { combo },
        _ => EdgeStatus::Inexpressible {
            below: below.map(|b| b.1),
            above: above.map(|a| a.1),
        },
    }
}

/// Triangle `(tau, phi, psi)` whose area is `n` tile areas.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub n: u32,
    /// Total multiplicities of `(alpha, beta, gamma)` in `phi + psi`.
    pub m: [u32; 3],
    pub tau: AngleForm,
    pub phi: AngleForm,
    pub psi: AngleForm,
    #[serde(serialize_with = "crate::exactmath::rational_serde::serialize")]
    pub phi_pi: Rational,
    #[serde(serialize_with = "crate::exactmath::rational_serde::serialize")]
    pub psi_pi: Rational,
    /// Length of the edge opposite `tau`.
    pub x: f64,
    pub edge: EdgeStatus,
}

impl Candidate {
    /// Angle triple in radians, `tau` first.
    pub fn angles(&self, tile: &TileSpec) -> [f64; 3] {
        [
            tile.radians(&self.tau),
            to_f64(&self.phi_pi) * PI,
            to_f64(&self.psi_pi) * PI,
        ]
    }

    /// Sorted exact angle values in units of pi; two candidates describe the same triangle
    /// iff these agree.
    pub fn shape(&self, tile: &TileSpec) -> [Rational; 3] {
        let mut v = [
            tile.pi_value(&self.tau),
            self.phi_pi.clone(),
            self.psi_pi.clone(),
        ];
        v.sort();
        v
    }
}

/// Why a triangle cannot be tiled by the base tile, from necessary conditions alone.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ScreenFailure {
    NotATriangle,
    /// Area is not a positive integer multiple of the tile area.
    Area,
    /// Edge `index` (opposite angle `index`) is no combination of tile edges.
    Edge {
        index: usize,
        length: f64,
    },
}

/// Necessary conditions for a triangle with angles `shape` (units of pi) to be tiled by `tile`:
/// a valid spherical triangle, area a positive multiple of the tile area, and every edge a
/// nonnegative integer combination of tile edges. Returns the tile count on success.
pub fn screen_triangle(
    tile: &TileSpec,
    shape: &[Rational; 3],
) -> std::result::Result<u32, ScreenFailure> {
    let angles = shape.clone().map(|q| to_f64(&q) * PI);
    if !is_valid(angles).valid {
        return Err(ScreenFailure::NotATriangle);
    }
    let excess = &shape[0] + &shape[1] + &shape[2] - int(1);
    let ratio = excess / tile.area_pi();
    if !ratio.is_integer() || ratio < int(1) {
        return Err(ScreenFailure::Area);
    }
    let edges = edge_lengths(angles).map_err(|_| ScreenFailure::NotATriangle)?;
    for (index, &length) in edges.iter().enumerate() {
        if !edge_combination(length, tile.edges, tile.coeff_bound, tile.tol).is_expressible() {
            return Err(ScreenFailure::Edge { index, length });
        }
    }
    Ok(ratio.to_integer().to_u32().unwrap_or(u32::MAX))
}

fn cos_law(psi: f64, phi: f64, tau: f64) -> f64 {
    let z = (tau.cos() + psi.cos() * phi.cos()) / (psi.sin() * phi.sin());
    z.clamp(-1.0, 1.0).acos()
}

/// Candidate triangles `(tau, phi, psi)` with `phi_min < phi <= psi < pi` whose angles are
/// combinations of the tile angles and whose area is `n` tile areas for
/// `2 <= n < 2 tau / area`. Pairs are reported once, in the first split found.
pub fn enumerate_candidates(
    tile: &TileSpec,
    tau: &AngleForm,
    phi_min: &AngleForm,
) -> Result<Vec<Candidate>> {
    let t = tile.pi_value(tau);
    let lo = tile.pi_value(phi_min);
    let [a, b, c] = tile.pi_units.clone();
    let s = tile.area_pi();
    if !(t > Rational::zero() && t < int(1)) {
        return Err(Error::Domain(format!("corner angle {tau} outside (0, pi)")));
    }
    let upper = &t * int(2) / &s;
    let mut out = Vec::new();
    let mut visited: HashSet<(Rational, Rational)> = HashSet::new();
    let mut n = 2u32;
    while int(n as i64) < upper {
        let rhs = &s * int(n as i64) + int(1) - &t;
        let kmax = (&rhs / &a).floor().to_u32().unwrap_or(0);
        for k in 0..=kmax {
            let r1 = &rhs - &a * int(k as i64);
            let lmax = (&r1 / &b).floor().to_u32().unwrap_or(0);
            for l in 0..=lmax {
                let r2 = &r1 - &b * int(l as i64);
                let mmax = (&r2 / &c).floor().to_u32().unwrap_or(0);
                for m in 0..=mmax {
                    if (&r2 - &c * int(m as i64)).is_zero() {
                        split(tile, n, [k, l, m], &t, tau, &lo, &mut visited, &mut out);
                    }
                }
            }
        }
        n += 1;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn split(
    tile: &TileSpec,
    n: u32,
    m: [u32; 3],
    t: &Rational,
    tau: &AngleForm,
    lo: &Rational,
    visited: &mut HashSet<(Rational, Rational)>,
    out: &mut Vec<Candidate>,
) {
    let [a, b, c] = &tile.pi_units;
    let one = int(1);
    for i in 0..=m[0] {
        for j in 0..=m[1] {
            for k in 0..=m[2] {
                let small = a * int(i as i64) + b * int(j as i64) + c * int(k as i64);
                let big = a * int((m[0] - i) as i64)
                    + b * int((m[1] - j) as i64)
                    + c * int((m[2] - k) as i64);
                if !(small > Rational::zero() && small <= big && big < one) {
                    continue;
                }
                let mut l = [small.clone(), big.clone(), t.clone()];
                l.sort();
                if &l[1] + &l[2] >= &one + &l[0] || &small <= lo {
                    continue;
                }
                if !visited.insert((small.clone(), big.clone())) {
                    continue;
                }
                let x = cos_law(to_f64(&small) * PI, to_f64(&big) * PI, to_f64(t) * PI);
                out.push(Candidate {
                    n,
                    m,
                    tau: tau.clone(),
                    phi: AngleForm::combo(i as i64, j as i64, k as i64),
                    psi: AngleForm::combo((m[0] - i) as i64, (m[1] - j) as i64, (m[2] - k) as i64),
                    phi_pi: small,
                    psi_pi: big,
                    x,
                    edge: edge_combination(x, tile.edges, tile.coeff_bound, tile.tol),
                });
            }
        }
    }
}
