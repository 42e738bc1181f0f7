use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use reptile_lab::coxeter::{CoxeterDiagram, Family, TriangleType};
use reptile_lab::exactmath::Rational;
use reptile_lab::fixtures;
use reptile_lab::gram::{fiedler_check, gram_from_diagram};
use reptile_lab::realize::{
    render_svg, search_tiling, verify_tiling, SearchConfig, SearchOutcome, TileSpec, TilingJson,
    DEFAULT_COEFF_BOUND, DEFAULT_TOL,
};
use reptile_lab::scenario::{emit_figures, run_scenario, RunConfig, SCENARIOS};
use reptile_lab::{Error, Result};

#[derive(Parser)]
#[command(name = "reptile-lab", version, about = "Checks for reptile simplices and spherical tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramQuery {
    /// Symmetry group of the diagram.
    Auts,
    /// Orbits of vertices, edges and each triangle type.
    Orbits,
    /// Gram matrix and the simplex test.
    Gram,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario (or `all`) and report each checkpoint.
    Run {
        scenario: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        coeff_bound: u32,
        #[arg(long, default_value_t = 1_000_000)]
        node_budget: u64,
        /// Directory for the report and the SVG figures.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Dimension for the hill scenario.
        #[arg(long)]
        d: Option<usize>,
        /// Scale for the hill scenario.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Tile a target triangle with copies of a tile. Angles are comma separated, e.g.
    /// `"1/4 pi, 1/3 pi, 1/2 pi"`; the target may also use alpha, beta, gamma.
    Tile {
        tile: String,
        target: String,
        #[arg(long, default_value_t = 1_000_000)]
        node_budget: u64,
        /// Write an SVG of the tiling here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Inspect a diagram given as a JSON file or a bundled fixture name.
    Diagram {
        fixture: String,
        #[arg(value_enum)]
        query: DiagramQuery,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Run {
            scenario,
            tol,
            coeff_bound,
            node_budget,
            out,
            format,
            d,
            m,
        } => {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Error::Domain(format!("tolerance {tol} outside (0, 1)")));
            }
            if scenario != "all" && !SCENARIOS.contains(&scenario.as_str()) {
                return Err(Error::Domain(format!(
                    "unknown scenario {scenario}; expected one of {} or all",
                    SCENARIOS.join(", ")
                )));
            }
            let config = RunConfig {
                tol,
                coeff_bound,
                node_budget,
                hill_d: d,
                hill_m: m,
            };
            let report = run_scenario(&scenario, &config)?;
            let json = report.to_json_lines(true)?;
            match format {
                Format::Json => print!("{json}"),
                Format::Text => print!("{}", report.to_text()),
            }
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)?;
                std::fs::write(dir.join(format!("{scenario}.jsonl")), &json)?;
                emit_figures(&report, &dir.join("figures"))?;
            }
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Tile {
            tile,
            target,
            node_budget,
            svg,
        } => tile_command(&tile, &target, node_budget, svg.as_deref()),
        Command::Diagram { fixture, query } => {
            let d = load_diagram(&fixture)?;
            let out = match query {
                DiagramQuery::Auts => {
                    let g = d.automorphisms();
                    json!({
                        "order": g.order(),
                        "elements": g.elements().iter().map(|p| p.cycles(d.names())).collect::<Vec<_>>(),
                    })
                }
                DiagramQuery::Orbits => orbits_json(&d)?,
                DiagramQuery::Gram => {
                    let g = gram_from_diagram(&d, None)?;
                    json!({
                        "ring": g.ring(),
                        "matrix": g.exact().map(|m| {
                            (0..d.n())
                                .map(|i| (0..d.n()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>())
                                .collect::<Vec<_>>()
                        }),
                        "fiedler": fiedler_check(&g, 1e-9)?,
                    })
                }
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(Outcome::Pass)
        }
    }
}

fn load_diagram(arg: &str) -> Result<CoxeterDiagram> {
    let path = Path::new(arg);
    if path.exists() {
        CoxeterDiagram::load(path)
    } else {
        fixtures::diagram(arg.trim_end_matches(".json"))
    }
}

fn orbits_json(d: &CoxeterDiagram) -> Result<serde_json::Value> {
    let count = |f: Family| d.orbits(&f).map(|o| o.count());
    let mut triangles = serde_json::Map::new();
    for t in d.triangle_census().keys() {
        triangles.insert(t.to_string(), json!(count(Family::Triangles(t.clone()))?));
    }
    Ok(json!({
        "vertices": count(Family::Vertices)?,
        "edges": count(Family::Edges)?,
        "triangles": triangles,
        "rich": d.triangle_census().keys().filter(|t| d.is_rich(t)).map(TriangleType::to_string).collect::<Vec<_>>(),
    }))
}

fn parse_triple(s: &str, tile: Option<&TileSpec>) -> Result<[Rational; 3]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(Error::Parse(format!("expected three comma separated angles, got {s:?}")));
    };
    let value = |p: &str| -> Result<Rational> {
        let f: reptile_lab::angles::AngleForm = p.parse()?;
        match tile {
            Some(t) => Ok(t.pi_value(&f)),
            None => f
                .pi_multiple()
                .ok_or_else(|| Error::Domain(format!("{p} is not a multiple of pi"))),
        }
    };
    Ok([value(a)?, value(b)?, value(c)?])
}

fn tile_command(tile: &str, target: &str, node_budget: u64, svg: Option<&Path>) -> Result<Outcome> {
    let [a, b, c] = parse_triple(tile, None)?;
    let spec = TileSpec::new(a, b, c)?;
    let goal = parse_triple(target, Some(&spec))?;
    let excess = &goal[0] + &goal[1] + &goal[2] - Rational::from_integer(1.into());
    let ratio = excess / spec.area_pi();
    if !ratio.is_integer() || ratio <= Rational::from_integer(0.into()) {
        return Err(Error::Domain(format!(
            "target area is {ratio} tiles, not a positive whole number"
        )));
    }
    let n: usize = ratio
        .to_integer()
        .try_into()
        .map_err(|_| Error::Domain("tile count too large".into()))?;
    let pi = std::f64::consts::PI;
    let angles = goal.clone().map(|q| reptile_lab::exactmath::to_f64(&q) * pi);
    let cfg = SearchConfig {
        n_max: n,
        node_budget,
        ..SearchConfig::default()
    };
    let (outcome, stats) = search_tiling(angles, &spec, &cfg)?;
    let (status, tiling) = match outcome {
        SearchOutcome::Found(t) => ("found", Some(t)),
        SearchOutcome::Exhausted => ("none", None),
        SearchOutcome::Aborted => ("aborted", None),
    };
    let verdict = tiling.as_ref().map(|t| verify_tiling(t, &spec, 1e-9));
    let out = json!({
        "tiles": n,
        "status": status,
        "nodes": stats.nodes,
        "verified": verdict.as_ref().map(|v| v.valid),
        "tiling": tiling.as_ref().map(TilingJson::from_tiling),
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    if let (Some(path), Some(t)) = (svg, &tiling) {
        let title = format!("{target} from {n} tiles");
        std::fs::write(path, render_svg(t, &spec, &title))?;
    }
    Ok(match verdict {
        Some(v) if v.valid => Outcome::Pass,
        _ => Outcome::Fail,
    })
}
