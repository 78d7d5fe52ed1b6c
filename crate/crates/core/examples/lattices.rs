//! Meets, joins, modularity and the forbidden cover-preserving shapes.
//!
//! ```bash
//! cargo run --example lattices
//! ```

use latticekit::lattice::{jakubik_classify, ShapeCatalogue};
use latticekit::Lattice;

fn describe(name: &str, l: &Lattice) -> latticekit::Result<()> {
    let (modular, distributive) = jakubik_classify(l)?;
    assert_eq!(modular, l.is_modular());
    assert_eq!(distributive, l.is_distributive());
    println!(
        "{name:>10}: n={:<3} length={} modular={:<5} distributive={}",
        l.len(),
        l.length(),
        modular,
        distributive
    );
    Ok(())
}

fn main() -> latticekit::Result<()> {
    let m3 = Lattice::diamond(3);
    let (a, b) = (1, 2);
    println!("in M3: {a} v {b} = {}, {a} ^ {b} = {}", m3.join(a, b), m3.meet(a, b));

    describe("chain 4", &Lattice::chain(4))?;
    describe("2^3", &Lattice::boolean(3))?;
    describe("M3", &m3)?;
    describe("N5", &Lattice::pentagon())?;
    describe("M3 x 2", &m3.product(&Lattice::chain(2)))?;

    let cat = ShapeCatalogue::builtin()?;
    println!("catalogue: B has {} elements, M3 has {}", cat.b().lattice().len(), cat.m3().lattice().len());
    for shape in cat.modularity_obstructions(9, 4) {
        println!("  obstruction {:?} with {} elements", shape.kind(), shape.lattice().len());
    }

    let big = Lattice::boolean(3);
    let (sub, embed) = big.generated_sublattice(&[1, 6]);
    println!("sublattice of 2^3 generated by 1 and 6: {} elements at {embed:?}", sub.len());
    Ok(())
}
