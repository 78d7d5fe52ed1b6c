//! Doubling a modular lattice along a tolerance, by both constructions.
//!
//! ```bash
//! cargo run --example doubling
//! ```

use std::sync::Arc;

use latticekit::doubling::{cover_clause, double, DoubledElement, Method};
use latticekit::{is_isomorphic, DoublingTolerance, Lattice};

fn main() -> latticekit::Result<()> {
    let c3 = Arc::new(Lattice::chain(3));

    let eq = DoublingTolerance::equality(c3.clone())?;
    let d = double(&eq, Method::Closure)?;
    let product = c3.product(&Lattice::chain(2));
    println!("equality: {} elements, product {}", d.len(), is_isomorphic(d.order(), product.poset()));

    let t = DoublingTolerance::from_pt_edges(c3.clone(), &[(0, 1)])?;
    let a = double(&t, Method::Closure)?;
    let b = double(&t, Method::Covers)?;
    assert_eq!(a.order(), b.order());
    let names: Vec<String> = (0..3).map(|i| i.to_string()).collect();
    let labels = b.names(&names);
    println!("doubled along (0,1): {} elements, modular {}", b.len(), b.lattice().is_modular());
    for &(u, v) in b.order().covers() {
        let (du, dv) = (DoubledElement::from_index(u), DoubledElement::from_index(v));
        let clause = cover_clause(&t, du, dv).map(|c| c.number());
        println!("  {} -< {}   clause {:?}", labels[u], labels[v], clause);
    }
    println!("projection monotone {}", b.projection_monotone());
    println!("level join holds    {}", b.level_join_holds());

    let n5 = Arc::new(Lattice::pentagon());
    match DoublingTolerance::equality(n5).and_then(|t| double(&t, Method::Covers)) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("N5 rejected: {e}"),
    }
    Ok(())
}
