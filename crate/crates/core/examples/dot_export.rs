//! Writes a ranked Hasse diagram in Graphviz DOT.
//!
//! ```bash
//! cargo run --example dot_export | dot -Tsvg > coal.svg
//! ```

use latticekit::coalition::{build_coalition_poset, LeqMethod};
use latticekit::dot::{to_dot, to_dot_by_height};
use latticekit::{Lattice, Poset};

fn main() -> latticekit::Result<()> {
    let grid = Lattice::chain(2).product(&Lattice::chain(3));
    let names: Vec<String> = (0..grid.len()).map(|i| format!("x{i}")).collect();
    eprintln!("{}", to_dot_by_height(grid.poset(), &names));

    // coalitions laid out by strength rather than height
    let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::ChainFast)?;
    let names: Vec<String> = coal.coalitions().map(|c| c.to_string()).collect();
    let rank: Vec<usize> = coal.coalitions().map(|c| coal.strength(c).unwrap()).collect();
    print!("{}", to_dot(coal.order(), &names, &rank));
    Ok(())
}
