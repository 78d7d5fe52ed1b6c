//! Building posets and reading off their basic structure.
//!
//! ```bash
//! cargo run --example posets
//! ```

use latticekit::Poset;

fn main() -> latticekit::Result<()> {
    // the "N" poset: a < c, b < c, b < d
    let n = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)])?;
    println!("N: {} elements, length {}", n.len(), n.length());
    println!("  covers     {:?}", n.covers());
    println!("  heights    {:?}", n.heights());
    println!("  extension  {:?}", n.linear_extension());
    println!("  bounded    {}", n.is_bounded());
    println!("  components {}", n.components().len());

    // transitive pairs are fine here; the covers are recovered
    let c4 = Poset::from_relation(4, [(0, 1), (1, 2), (2, 3), (0, 3)])?;
    assert!(c4.is_chain());
    println!("chain covers {:?}", c4.covers());

    let grid = Poset::chain(2).direct_product(&Poset::chain(3));
    println!("2x3 grid: {} elements, length {}", grid.len(), grid.length());

    let two_chains = Poset::chain(2).disjoint_union(&Poset::chain(3));
    println!(
        "2+3: upper bound free {}, lower bound free {}",
        two_chains.is_upper_bound_free(),
        two_chains.is_lower_bound_free()
    );

    match Poset::from_relation(2, [(0, 1), (1, 0)]) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("cycle rejected: {e}"),
    }
    Ok(())
}
