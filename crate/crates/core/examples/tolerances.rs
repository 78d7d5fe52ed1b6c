//! Tolerances on a lattice, their blocks, and the doubling special case.
//!
//! ```bash
//! cargo run --example tolerances
//! ```

use std::sync::Arc;

use latticekit::tolerance::is_congruence_by_compatibility;
use latticekit::{DoublingTolerance, Lattice, Tolerance};

fn main() -> latticekit::Result<()> {
    let c4 = Arc::new(Lattice::chain(4));

    // two overlapping blocks {0,1,2} and {2,3}
    let t = Tolerance::generated_by(c4.clone(), &[(0, 2), (2, 3)])?;
    for b in t.blocks()? {
        println!("block [{}, {}] = {:?}", b.lo, b.hi, b.elements(&c4));
    }
    println!("congruence: {}", t.is_congruence_definitional());
    println!("doubling:   {}", t.as_doubling()?.is_some());

    let cover_only = Tolerance::generated_by(c4.clone(), &[(0, 1), (2, 3)])?;
    let d = cover_only.as_doubling()?.expect("generated by covers of a chain");
    println!("pt edges {:?}, congruence {}", d.pt_edges(), d.is_congruence());

    // in M3 any nontrivial tolerance collapses everything
    let m3 = Arc::new(Lattice::diamond(3));
    let g = Tolerance::generated_by(m3.clone(), &[(0, 1)])?;
    println!("M3 generated by (0,1): {} pairs", g.off_diagonal_pairs().len());
    if let Err(e) = Tolerance::from_pairs(m3.clone(), &[(0, 1)]) {
        println!("raw pair set rejected: {e}");
    }

    let grid = Arc::new(Lattice::chain(2).product(&Lattice::chain(2)));
    let bottom_edge = DoublingTolerance::generated_by(grid.clone(), &[(0, 1)])?;
    println!("grid generated by (0,1): pt edges {:?}", bottom_edge.pt_edges());

    let classes = [0, 0, 1, 1];
    println!("classes {classes:?} congruence: {}", is_congruence_by_compatibility(&grid, &classes)?);
    Ok(())
}
