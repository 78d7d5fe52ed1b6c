//! Runs every acceptance criterion at full size and prints one line each.

use std::io::Write;
use std::time::{Duration, Instant};

use latticekit::verify::{Runner, Suite, VerifyConfig};

#[test]
fn acceptance() {
    let runner = Runner::new(VerifyConfig::default());
    let mut failures = Vec::new();
    for &k in Suite::All.criteria() {
        let start = Instant::now();
        let row = runner.criterion(k);
        let elapsed = start.elapsed();
        let budget = match k {
            1 => Some(Duration::from_secs(60)),
            4 => Some(Duration::from_secs(120)),
            _ => None,
        };
        let in_time = budget.map_or(true, |b| elapsed < b);
        let passed = row.passed && in_time;
        writeln!(
            std::io::stdout(),
            "criterion {k}: {} | {} | {} ({:.2?})",
            if passed { "PASS" } else { "FAIL" },
            row.criterion,
            row.detail,
            elapsed
        )
        .unwrap();
        if !passed {
            failures.push(k);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

#[test]
fn doubling_criteria_hold_for_other_seeds() {
    for seed in [2, 3, 4] {
        let cfg = VerifyConfig { seed, ..Default::default() };
        let report = Runner::new(cfg).run(Suite::Doubling);
        for row in &report.rows {
            assert!(row.passed, "seed {seed}: {} | {}", row.criterion, row.detail);
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = VerifyConfig { instances: 30, ..Default::default() };
    let a = Runner::new(cfg.clone()).run(Suite::All);
    let b = Runner::new(cfg).run(Suite::All);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
