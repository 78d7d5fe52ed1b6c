//! Runs the self-check suites and prints the report table.
//!
//! ```bash
//! cargo run --release --example verify_suite -- 42
//! ```

use latticekit::verify::{render_table, run_suite, Suite, VerifyConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let cfg = VerifyConfig { seed, max_chain: 5, instances: 50, ..VerifyConfig::default() };
    let report = run_suite(Suite::All, cfg);
    print!("{}", render_table(&report));
    if !report.passed() {
        std::process::exit(1);
    }
}
