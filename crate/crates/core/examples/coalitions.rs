//! Coalition lattices of chains and of small posets.
//!
//! ```bash
//! cargo run --example coalitions
//! LATTICEKIT_CAP=4 cargo run --example coalitions
//! ```

use latticekit::coalition::{
    build_coalition_poset, chain_meet_sandwich, complement_is_dual_automorphism, coalition_characterisation, size_cap, Coalition,
    LeqMethod,
};
use latticekit::Poset;

fn main() -> latticekit::Result<()> {
    println!("size cap {}", size_cap());

    let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::ChainFast)?;
    println!("Coal(3-chain): {} coalitions, lattice {}", coal.len(), coal.is_lattice());
    let mut by_strength: Vec<Coalition> = coal.coalitions().collect();
    by_strength.sort_by_key(|&c| coal.strength(c).unwrap());
    for c in &by_strength {
        println!("  {c:<8} strength {}", coal.strength(*c)?);
    }

    let (a, b) = (Coalition::from_members([2]), Coalition::from_members([0, 1]));
    println!("{a} v {b} = {}", coal.join(a, b).unwrap());
    println!("{a} ^ {b} = {}", coal.meet(a, b).unwrap());
    let s = chain_meet_sandwich(&coal, a, b)?;
    println!("sandwich and recursion agree: {}", s.holds());
    println!("complement is a dual automorphism: {}", complement_is_dual_automorphism(&coal)?);

    let lambda = Poset::from_covers(3, &[(0, 2), (1, 2)])?;
    let v = Poset::from_covers(3, &[(0, 1), (0, 2)])?;
    for (name, p) in [("lambda", lambda), ("V", v), ("2+1", Poset::chain(2).disjoint_union(&Poset::chain(1)))] {
        let c = build_coalition_poset(&p, LeqMethod::Matching)?;
        let r = coalition_characterisation(&p)?;
        println!("Coal({name}): {} coalitions, lattice {}, characterisation holds {}", c.len(), c.is_lattice(), r.holds());
    }

    match build_coalition_poset(&Poset::chain(12), LeqMethod::ChainFast) {
        Ok(c) => println!("12-chain built: {}", c.len()),
        Err(e) => println!("12-chain: {e}"),
    }
    Ok(())
}
