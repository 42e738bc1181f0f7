//! Tilings of spherical triangles by congruent copies of a base tile.

mod candidates;
mod degree;
mod export;
pub mod geom;
mod search;
mod verify;

pub use candidates::{
    edge_combination, enumerate_candidates, screen_triangle, Candidate, Combo, EdgeStatus,
    ScreenFailure,
};
pub use degree::{algebraic_degree, integer_root, DegreeReport};
pub use export::{render_svg, TilingJson};
pub use search::{search_tiling, SearchConfig, SearchOutcome, SearchStats};
pub use verify::{verify_tiling, TilingDiagnostic, Verdict};

use serde::Serialize;
use std::f64::consts::PI;

use crate::angles::{AngleAssignment, AngleForm, RelationSet};
use crate::error::{Error, Result};
use crate::exactmath::{int, to_f64, Rational};
use crate::spherical::{edge_lengths, is_valid};
use geom::V3;

pub const DEFAULT_COEFF_BOUND: u32 = 20;
pub const DEFAULT_TOL: f64 = 1e-5;

/// Base tile with angles `alpha <= beta <= gamma`, each a rational multiple of pi.
#[derive(Clone, Debug, Serialize)]
pub struct TileSpec {
    /// Angles in units of pi.
    #[serde(serialize_with = "ser_pi_units")]
    pub pi_units: [Rational; 3],
    pub angles: [f64; 3],
    /// `edges[i]` is opposite `angles[i]`.
    pub edges: [f64; 3],
    pub coeff_bound: u32,
    pub tol: f64,
}

fn ser_pi_units<S: serde::Serializer>(
    v: &[Rational; 3],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for q in v {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

impl TileSpec {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<TileSpec> {
        if !(alpha <= beta && beta <= gamma) {
            return Err(Error::Domain(
                "tile angles must satisfy alpha <= beta <= gamma".into(),
            ));
        }
        let angles = [to_f64(&alpha) * PI, to_f64(&beta) * PI, to_f64(&gamma) * PI];
        let v = is_valid(angles);
        if !v.valid {
            return Err(Error::InvalidTriangle(format!(
                "{angles:?}: {:?}",
                v.reason
            )));
        }
        let edges = edge_lengths(angles)?;
        Ok(TileSpec {
            pi_units: [alpha, beta, gamma],
            angles,
            edges,
            coeff_bound: DEFAULT_COEFF_BOUND,
            tol: DEFAULT_TOL,
        })
    }

    /// Tile from three angle literals that are rational multiples of pi, e.g. `"1/4 pi"`.
    pub fn from_literals(lits: [&str; 3]) -> Result<TileSpec> {
        let mut q = Vec::new();
        for l in lits {
            let f: AngleForm = l.parse()?;
            q.push(f.pi_multiple().ok_or_else(|| {
                Error::Domain(format!("tile angle {l} must be a rational multiple of pi"))
            })?);
        }
        let c = q[2].clone();
        let b = q[1].clone();
        let a = q[0].clone();
        TileSpec::new(a, b, c)
    }

    pub fn with_bounds(mut self, coeff_bound: u32, tol: f64) -> TileSpec {
        self.coeff_bound = coeff_bound;
        self.tol = tol;
        self
    }

    /// Relations fixing alpha, beta, gamma to the tile's values.
    pub fn relations(&self) -> RelationSet {
        use crate::angles::Sym;
        RelationSet::new(vec![
            (
                Sym::Alpha,
                AngleForm::from_coeffs(self.pi_units[0].clone(), int(0), int(0), int(0)),
            ),
            (
                Sym::Beta,
                AngleForm::from_coeffs(self.pi_units[1].clone(), int(0), int(0), int(0)),
            ),
            (
                Sym::Gamma,
                AngleForm::from_coeffs(self.pi_units[2].clone(), int(0), int(0), int(0)),
            ),
        ])
        .expect("constant relations")
    }

    pub fn assignment(&self) -> AngleAssignment {
        AngleAssignment::new(self.angles[0], self.angles[1], self.angles[2])
    }

    /// Value of a form in units of pi under the tile's relations.
    pub fn pi_value(&self, f: &AngleForm) -> Rational {
        f.normalize(&self.relations())
            .pi_multiple()
            .expect("all symbols are fixed")
    }

    pub fn radians(&self, f: &AngleForm) -> f64 {
        to_f64(&self.pi_value(f)) * PI
    }

    /// Area in units of pi.
    pub fn area_pi(&self) -> Rational {
        &self.pi_units[0] + &self.pi_units[1] + &self.pi_units[2] - int(1)
    }

    pub fn area(&self) -> f64 {
        self.angles.iter().sum::<f64>() - PI
    }
}

/// A tiling of a target polygon (a triangle, or a lune given by four vertices).
#[derive(Clone, Debug, PartialEq)]
pub struct SphTiling {
    pub target: Vec<V3>,
    pub tiles: Vec<[V3; 3]>,
}

impl SphTiling {
    pub fn target_area(&self) -> f64 {
        geom::polygon_area(&self.target)
    }
}

/// Target polygon of a lune with angle `phi`: apex at the north pole, antipode at the
/// south pole, and the midpoints of both half-circles.
pub fn lune_polygon(phi: f64) -> Vec<V3> {
    let n = V3::new(0.0, 0.0, 1.0);
    let m1 = V3::new(1.0, 0.0, 0.0);
    let m2 = V3::new(phi.cos(), phi.sin(), 0.0);
    // counter-clockwise seen from outside: north, m1, south, m2 has the lune on the left
    vec![n, m1, -n, m2]
}
