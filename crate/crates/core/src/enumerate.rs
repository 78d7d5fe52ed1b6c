//! Exhaustive enumeration of small posets and lattices up to isomorphism.

use std::collections::HashMap;

use crate::iso::find_isomorphism;
use crate::lattice::{try_lattice, Lattice};
use crate::poset::Poset;

/// Strict down-sets as bitmasks, one per element.
type Downs = Vec<u32>;

fn extend(downs: &mut Downs, n: usize, out: &mut Vec<Downs>) {
    let k = downs.len();
    if k == n {
        out.push(downs.clone());
        return;
    }
    for ideal in 0u32..1 << k {
        let closed = (0..k).filter(|&x| ideal >> x & 1 == 1).all(|x| downs[x] & !ideal == 0);
        if closed {
            downs.push(ideal);
            extend(downs, n, out);
            downs.pop();
        }
    }
}

fn to_poset(downs: &Downs) -> Poset {
    Poset::from_order_fn(downs.len(), |a, b| downs[b] >> a & 1 == 1).expect("natural labelling is acyclic")
}

/// Every poset on `0..n` in which `a < b` implies `a < b` as integers.
/// Every isomorphism type occurs at least once.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out.iter().map(to_poset).collect()
}

fn invariant(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let mut key: Vec<_> = (0..p.len())
        .map(|a| {
            (
                p.down_set(a).count_ones(..),
                p.up_set(a).count_ones(..),
                p.lower_covers(a).len(),
                p.upper_covers(a).len(),
            )
        })
        .collect();
    key.sort_unstable();
    key
}

/// Keeps one representative per isomorphism class, in input order.
pub fn dedup_isomorphic(items: impl IntoIterator<Item = Poset>) -> Vec<Poset> {
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    let mut out: Vec<Poset> = Vec::new();
    for p in items {
        let bucket = buckets.entry(invariant(&p)).or_default();
        if bucket.iter().any(|&i| find_isomorphism(&out[i], &p).is_some()) {
            continue;
        }
        bucket.push(out.len());
        out.push(p);
    }
    out
}

/// All posets with `n` elements up to isomorphism.
pub fn posets(n: usize) -> Vec<Poset> {
    dedup_isomorphic(natural_posets(n))
}

/// All lattices with `n` elements up to isomorphism.
///
/// Each is a poset on `n - 2` elements with a new bottom and top, kept when
/// it is a lattice; non-isomorphic middles give non-isomorphic lattices.
pub fn lattices(n: usize) -> Vec<Lattice> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Lattice::chain(1)],
        _ => {}
    }
    posets(n - 2)
        .iter()
        .filter_map(|m| {
            let k = m.len();
            let pairs = (0..k)
                .flat_map(|a| m.up_set(a).ones().map(move |b| (a + 1, b + 1)))
                .chain((1..=k).flat_map(|a| [(0, a), (a, k + 1)]))
                .chain([(0, k + 1)]);
            let p = Poset::from_relation(k + 2, pairs).expect("bounded extension is acyclic");
            try_lattice(&p)
        })
        .collect()
}

/// All lattices with at most `n` elements, smallest first.
pub fn lattices_up_to(n: usize) -> Vec<Lattice> {
    (1..=n).flat_map(lattices).collect()
}
