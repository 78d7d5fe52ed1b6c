use std::sync::Arc;

use latticekit::coalition::{build_coalition_poset, ChainContext, Coalition, LeqMethod};
use latticekit::doubling::double_by_covers;
use latticekit::enumerate::lattices;
use latticekit::lattice::{jakubik_classify, try_lattice};
use latticekit::{is_isomorphic, DoublingTolerance, Lattice, Poset};

#[test]
fn doubled_four_chain_is_coal_of_three_chain() {
    let t = DoublingTolerance::from_pt_edges(Arc::new(Lattice::chain(4)), &[(0, 1), (2, 3)]).unwrap();
    let d = double_by_covers(&t).unwrap();
    let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::Matching).unwrap();
    assert!(is_isomorphic(d.order(), coal.order()));
    assert!(try_lattice(coal.order()).is_some());
}

#[test]
fn t_w_on_the_two_element_filter() {
    let ctx = ChainContext::of_length(3).unwrap();
    let t = ctx.t_w_tolerance().unwrap();
    let lifted: Vec<(Coalition, Coalition)> = t
        .pt_edges()
        .iter()
        .map(|&(a, b)| (ctx.lift(Coalition(a as u64)), ctx.lift(Coalition(b as u64))))
        .collect();
    let c = |m: &[usize]| Coalition::from_members(m.iter().copied());
    assert_eq!(lifted, vec![(c(&[]), c(&[1])), (c(&[2]), c(&[1, 2]))]);
}

#[test]
fn gamma_on_the_two_chain() {
    let ctx = ChainContext::of_length(2).unwrap();
    let d = ctx.doubled().unwrap();
    assert!(d.order().is_chain() && d.len() == 4);
    assert!(ctx.gamma_iso_check().unwrap());
}

#[test]
fn matching_and_sorted_orders_build_the_same_poset() {
    for k in 1..=5 {
        let a = build_coalition_poset(&Poset::chain(k), LeqMethod::Matching).unwrap();
        let b = build_coalition_poset(&Poset::chain(k), LeqMethod::ChainFast).unwrap();
        assert_eq!(a.order(), b.order());
    }
}

#[test]
fn forbidden_shapes_on_all_eight_element_lattices() {
    let all = lattices(8);
    assert_eq!(all.len(), 222);
    for l in &all {
        assert_eq!(jakubik_classify(l).unwrap(), (l.is_modular(), l.is_distributive()));
    }
}
