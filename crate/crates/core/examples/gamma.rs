//! Coal of a chain as the doubling of Coal of the chain without its bottom.
//!
//! ```bash
//! cargo run --example gamma -- 4
//! ```

use latticekit::coalition::ChainContext;
use latticekit::doubling::DoubledElement;

fn main() -> latticekit::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let ctx = ChainContext::of_length(k)?;
    let t = ctx.t_w_tolerance()?;
    println!("chain of {k}: zero {}, atom {}", ctx.zero(), ctx.atom());
    println!("Coal(P') has {} coalitions, T_w has {} pt edges", ctx.coal_prime().len(), t.pt_edges().len());

    let d = ctx.doubled()?;
    println!("doubled: {} elements, Coal(P): {}", d.len(), ctx.coal().len());
    for i in 0..d.len().min(8) {
        let e = DoubledElement::from_index(i);
        println!("  {e} -> {}", ctx.gamma(e));
    }
    println!("gamma is an isomorphism: {}", ctx.gamma_iso_check()?);
    println!("strength shifts by rank: {}", ctx.strength_shift_holds()?);

    let coal = ctx.coal();
    for a in coal.coalitions().take(6) {
        for b in coal.coalitions() {
            if let Some(c) = ctx.classify(a, b) {
                println!("  {a} -< {b}: {}", c.label());
            }
        }
    }
    Ok(())
}
