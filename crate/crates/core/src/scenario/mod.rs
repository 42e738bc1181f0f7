//! End-to-end reproduction runs. Each scenario evaluates a list of checkpoints and collects the
//! tilings it found so they can be rendered.

mod cases;
mod tables;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::realize::{render_svg, SphTiling, TileSpec, DEFAULT_COEFF_BOUND, DEFAULT_TOL};

pub use tables::{match_table_rows, TableRow};

pub const SCENARIOS: &[&str] = &[
    "three-dim",
    "two-indivisible",
    "case-a",
    "case-b",
    "case-c",
    "hill",
];

const CLAIMS_JSON: &str = include_str!("../../fixtures/claims.json");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the reference proof.
    Reference,
    /// Immediate from definitions.
    Elementary,
    /// Obtained here by an independent computation.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Checkpoint {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub provenance: Provenance,
    pub actual: String,
    pub pass: bool,
    /// Claim id in `fixtures/claims.json`.
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub tol: f64,
    pub coeff_bound: u32,
    pub node_budget: u64,
    /// Restricts the hill scenario to one dimension.
    pub hill_d: Option<usize>,
    /// Restricts the hill scenario to one scale.
    pub hill_m: Option<u32>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tol: DEFAULT_TOL,
            coeff_bound: DEFAULT_COEFF_BOUND,
            node_budget: 1_000_000,
            hill_d: None,
            hill_m: None,
        }
    }
}

/// A found tiling kept for rendering.
#[derive(Clone, Debug)]
pub struct Figure {
    /// Stable file stem.
    pub name: String,
    pub title: String,
    pub tile: TileSpec,
    pub tiling: SphTiling,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub config: RunConfig,
    pub checkpoints: Vec<Checkpoint>,
    /// Milliseconds per scenario.
    pub timings_ms: BTreeMap<String, u128>,
    #[serde(skip)]
    pub figures: Vec<Figure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checkpoints.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Checkpoint> {
        self.checkpoints.iter().filter(|c| !c.pass).collect()
    }

    /// One JSON object per line: a header, the checkpoints, then a summary with timings.
    pub fn to_json_lines(&self, with_timings: bool) -> Result<String> {
        let mut out = String::new();
        let header = serde_json::json!({
            "scenario": self.scenario,
            "schema": "reptile-lab/report/1",
            "config": self.config,
        });
        writeln!(out, "{header}").expect("string write");
        for c in &self.checkpoints {
            writeln!(out, "{}", serde_json::to_string(c)?).expect("string write");
        }
        let mut summary = serde_json::json!({
            "passed": self.checkpoints.iter().filter(|c| c.pass).count(),
            "failed": self.failures().len(),
            "figures": self.figures.iter().map(|f| f.name.clone()).collect::<Vec<_>>(),
        });
        if with_timings {
            summary["timings_ms"] = serde_json::to_value(&self.timings_ms)?;
        }
        writeln!(out, "{summary}").expect("string write");
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = self.checkpoints.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checkpoints {
            writeln!(
                out,
                "{} {:w$}  expected {}  actual {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.expected,
                c.actual
            )
            .expect("string write");
        }
        let failed = self.failures().len();
        writeln!(
            out,
            "{}: {} checkpoints, {} failed, {} figures",
            self.scenario,
            self.checkpoints.len(),
            failed,
            self.figures.len()
        )
        .expect("string write");
        for (k, v) in &self.timings_ms {
            writeln!(out, "  {k}: {v} ms").expect("string write");
        }
        out
    }
}

/// Collects checkpoints for one scenario.
pub(crate) struct Recorder {
    scenario: &'static str,
    pub(crate) checkpoints: Vec<Checkpoint>,
    pub(crate) figures: Vec<Figure>,
}

impl Recorder {
    fn new(scenario: &'static str) -> Recorder {
        Recorder {
            scenario,
            checkpoints: vec![],
            figures: vec![],
        }
    }

    /// Records a checkpoint. An id `claim#instance` anchors to `claim`; a plain id is its own
    /// anchor.
    pub(crate) fn check(
        &mut self,
        id: &str,
        description: impl Into<String>,
        provenance: Provenance,
        expected: impl Display,
        actual: impl Display,
        pass: bool,
    ) {
        let (claim, instance) = match id.split_once('#') {
            Some((c, i)) => (c, Some(i)),
            None => (id, None),
        };
        let anchor = format!("{}.{claim}", self.scenario);
        let id = match instance {
            Some(i) => format!("{anchor}.{i}"),
            None => anchor.clone(),
        };
        self.checkpoints.push(Checkpoint {
            anchor,
            id,
            description: description.into(),
            expected: expected.to_string(),
            provenance,
            actual: actual.to_string(),
            pass,
        });
    }

    /// Checkpoint comparing two displayable values for equality.
    pub(crate) fn eq<T: PartialEq + fmt::Debug>(
        &mut self,
        id: &str,
        description: impl Into<String>,
        provenance: Provenance,
        expected: T,
        actual: T,
    ) {
        let pass = expected == actual;
        self.check(
            id,
            description,
            provenance,
            format!("{expected:?}"),
            format!("{actual:?}"),
            pass,
        );
    }

    /// Records an error from a computation as a failed checkpoint.
    pub(crate) fn fail(&mut self, id: &str, description: impl Into<String>, e: &Error) {
        self.check(id, description, Provenance::Computed, "no error", e, false);
    }

    pub(crate) fn figure(&mut self, stem: String, title: String, tile: &TileSpec, tiling: &SphTiling) {
        self.figures.push(Figure {
            name: format!("{}-{stem}", self.scenario),
            title,
            tile: tile.clone(),
            tiling: tiling.clone(),
        });
    }
}

/// File-name fragment for an angle triple in units of pi, e.g. `1_4+1_3+1_2`.
pub(crate) fn shape_key(v: &[Rational]) -> String {
    v.iter()
        .map(|q| format!("{}_{}", q.numer(), q.denom()))
        .collect::<Vec<_>>()
        .join("+")
}

/// Runs one scenario, or all of them for `"all"`.
pub fn run_scenario(name: &str, config: &RunConfig) -> Result<Report> {
    let names: Vec<&str> = if name == "all" {
        SCENARIOS.to_vec()
    } else if SCENARIOS.contains(&name) {
        vec![name]
    } else {
        return Err(Error::Domain(format!(
            "unknown scenario {name}; expected one of {} or all",
            SCENARIOS.join(", ")
        )));
    };
    let mut report = Report {
        scenario: name.to_string(),
        config: config.clone(),
        checkpoints: vec![],
        timings_ms: BTreeMap::new(),
        figures: vec![],
    };
    // scenarios are independent; results are assembled in the fixed order above
    let runs: Vec<(Recorder, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|&n| scope.spawn(move || run_one(n, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    });
    for (mut rec, ms) in runs {
        report.checkpoints.append(&mut rec.checkpoints);
        report.figures.append(&mut rec.figures);
        report.timings_ms.insert(rec.scenario.to_string(), ms);
    }
    Ok(report)
}

fn run_one(name: &str, config: &RunConfig) -> (Recorder, u128) {
    let t = Instant::now();
    let mut rec = Recorder::new(SCENARIOS.iter().find(|&&s| s == name).expect("known name"));
    match name {
        "three-dim" => cases::three_dim(&mut rec),
        "two-indivisible" => cases::two_indivisible(&mut rec),
        "case-a" => cases::case_a(&mut rec),
        "case-b" => cases::case_b(&mut rec, config),
        "case-c" => cases::case_c(&mut rec, config),
        "hill" => cases::hill(&mut rec, config),
        _ => unreachable!("checked by run_scenario"),
    }
    (rec, t.elapsed().as_millis())
}

/// A claim a checkpoint refers to.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub provenance: Provenance,
}

pub fn claims() -> Result<Vec<Claim>> {
    Ok(serde_json::from_str(CLAIMS_JSON)?)
}

/// Checkpoint anchors that have no claim entry.
pub fn dangling_anchors(report: &Report) -> Result<Vec<String>> {
    let ids: BTreeSet<String> = claims()?.into_iter().map(|c| c.id).collect();
    Ok(report
        .checkpoints
        .iter()
        .filter(|c| !ids.contains(&c.anchor))
        .map(|c| c.anchor.clone())
        .collect())
}

/// Writes one SVG per figure into `dir` and returns the paths.
pub fn emit_figures(report: &Report, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = vec![];
    for f in &report.figures {
        let path = dir.join(format!("{}.svg", f.name));
        std::fs::write(&path, render_svg(&f.tiling, &f.tile, &f.title))?;
        out.push(path);
    }
    Ok(out)
}
