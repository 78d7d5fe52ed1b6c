//! Counting posets and lattices up to isomorphism.
//!
//! ```bash
//! cargo run --release --example enumerate -- 7
//! ```

use latticekit::enumerate::{lattices, posets};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    println!("{:>2} {:>8} {:>8} {:>8} {:>8}", "n", "posets", "lattices", "modular", "distrib");
    for n in 1..=max {
        let p = if n <= 5 { posets(n).len().to_string() } else { "-".into() };
        let ls = lattices(n);
        let modular = ls.iter().filter(|l| l.is_modular()).count();
        let distributive = ls.iter().filter(|l| l.is_distributive()).count();
        println!("{n:>2} {p:>8} {:>8} {modular:>8} {distributive:>8}", ls.len());
    }
}
