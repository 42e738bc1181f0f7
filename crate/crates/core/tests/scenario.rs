use reptile_lab::scenario::{dangling_anchors, run_scenario, RunConfig, SCENARIOS};

#[test]
fn every_scenario_passes() {
    let r = run_scenario("all", &RunConfig::default()).unwrap();
    for c in r.failures() {
        eprintln!("FAIL {} expected {} actual {}", c.id, c.expected, c.actual);
    }
    print!("{}", r.to_text());
    assert!(r.passed());
    assert_eq!(r.timings_ms.len(), SCENARIOS.len());
}

#[test]
fn every_anchor_has_a_claim() {
    let r = run_scenario("all", &RunConfig::default()).unwrap();
    assert_eq!(dangling_anchors(&r).unwrap(), Vec::<String>::new());
}

#[test]
fn reports_are_deterministic_without_timings() {
    let cfg = RunConfig::default();
    let a = run_scenario("two-indivisible", &cfg).unwrap();
    let b = run_scenario("two-indivisible", &cfg).unwrap();
    assert_eq!(a.to_json_lines(false).unwrap(), b.to_json_lines(false).unwrap());
}

#[test]
fn unknown_scenario_is_an_error() {
    assert!(run_scenario("nope", &RunConfig::default()).is_err());
}
