//! Seeded instance generators for the property suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::Lattice;
use crate::tolerance::{compatible_closure, DoublingTolerance, Tolerance};

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const MAX_HOST: usize = 60;

fn random_factor(rng: &mut Rng8) -> Lattice {
    match rng.gen_range(0..6) {
        0..=3 => Lattice::chain(rng.gen_range(2..=5)),
        4 => Lattice::diamond(3),
        _ => Lattice::diamond(4),
    }
}

/// A product of one to three small chains and diamonds, optionally cut down
/// to the sublattice generated by a random subset; at most `max` elements.
pub fn random_modular_lattice(rng: &mut Rng8, max: usize) -> Lattice {
    loop {
        let k = rng.gen_range(1..=3);
        let mut l = random_factor(rng);
        for _ in 1..k {
            l = l.product(&random_factor(rng));
        }
        if rng.gen_bool(0.5) && l.len() > 4 {
            let count = rng.gen_range(2..=4.min(l.len()));
            let gens: Vec<usize> = (0..l.len()).collect::<Vec<_>>().choose_multiple(rng, count).copied().collect();
            l = l.generated_sublattice(&gens).0;
        }
        if l.len() >= 2 && l.len() <= max && l.is_modular() {
            return l;
        }
    }
}

/// Greedily adds covering pairs in random order, keeping each one whose
/// compatible closure still relates covering pairs only.
pub fn random_doubling_tolerance(rng: &mut Rng8, host: Arc<Lattice>) -> DoublingTolerance {
    let mut edges = host.covers().to_vec();
    edges.shuffle(rng);
    let keep = rng.gen_range(0.0..=1.0);
    let admit = |a: usize, b: usize| host.is_cover(a, b) || host.is_cover(b, a);
    let mut seeds = Vec::new();
    for e in edges {
        if !rng.gen_bool(keep) {
            continue;
        }
        seeds.push(e);
        if compatible_closure(&host, &seeds, admit).is_none() {
            seeds.pop();
        }
    }
    Tolerance::generated_by(host, &seeds)
        .and_then(|t| t.as_doubling())
        .expect("generated tolerance is valid on a modular host")
        .expect("closure relates covering pairs only")
}

/// A labelled (modular host, doubling tolerance) instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub tolerance: DoublingTolerance,
}

/// The fixed small instances, then `count` random ones.
pub fn doubling_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut out = hand_built_instances();
    let mut r = rng(seed);
    for i in 0..count {
        let host = Arc::new(random_modular_lattice(&mut r, MAX_HOST));
        let tolerance = random_doubling_tolerance(&mut r, host);
        out.push(Instance { name: format!("random-{i}"), tolerance });
    }
    out
}

pub fn hand_built_instances() -> Vec<Instance> {
    let grid = Lattice::chain(2).product(&Lattice::chain(2));
    let specs: Vec<(&str, Lattice, Vec<(usize, usize)>)> = vec![
        ("chain2-equality", Lattice::chain(2), vec![]),
        ("chain2-full", Lattice::chain(2), vec![(0, 1)]),
        ("chain3-overlapping", Lattice::chain(3), vec![(0, 1), (1, 2)]),
        ("chain4-two-blocks", Lattice::chain(4), vec![(0, 1), (2, 3)]),
        ("m3-equality", Lattice::diamond(3), vec![]),
        ("grid-bottom-edge", grid, vec![(0, 1)]),
        ("cube-equality", Lattice::boolean(3), vec![]),
        ("m4-equality", Lattice::diamond(4), vec![]),
    ];
    specs
        .into_iter()
        .map(|(name, host, edges)| Instance {
            name: name.to_string(),
            tolerance: DoublingTolerance::generated_by(Arc::new(host), &edges).expect("hand-built instance"),
        })
        .collect()
}

/// Merges classes along random covering pairs, then closes each class to
/// the interval it spans until every class is an interval.
pub fn random_interval_partition(rng: &mut Rng8, host: &Lattice) -> Vec<usize> {
    let n = host.len();
    let mut class: Vec<usize> = (0..n).collect();
    let merge = |class: &mut Vec<usize>, a: usize, b: usize| {
        let (from, to) = (class[a].max(class[b]), class[a].min(class[b]));
        for c in class.iter_mut() {
            if *c == from {
                *c = to;
            }
        }
    };
    let merges = rng.gen_range(0..=host.covers().len().min(4));
    for _ in 0..merges {
        let &(a, b) = host.covers().choose(rng).expect("host has a cover");
        merge(&mut class, a, b);
    }
    loop {
        let mut changed = false;
        for label in 0..n {
            let members: Vec<usize> = (0..n).filter(|&x| class[x] == label).collect();
            let Some(&first) = members.first() else { continue };
            let lo = members.iter().fold(host.top(), |m, &x| host.meet(m, x));
            let hi = members.iter().fold(host.bottom(), |m, &x| host.join(m, x));
            for x in 0..n {
                if host.leq(lo, x) && host.leq(x, hi) && class[x] != class[first] {
                    merge(&mut class, first, x);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // relabel densely
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for c in class.iter_mut() {
        if map[*c] == usize::MAX {
            map[*c] = next;
            next += 1;
        }
        *c = map[*c];
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a: Vec<usize> = doubling_instances(7, 5).iter().map(|i| i.tolerance.host().len()).collect();
        let b: Vec<usize> = doubling_instances(7, 5).iter().map(|i| i.tolerance.host().len()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn random_hosts_are_modular_and_small() {
        let mut r = rng(1);
        for _ in 0..20 {
            let l = random_modular_lattice(&mut r, MAX_HOST);
            assert!(l.is_modular() && l.len() <= MAX_HOST);
            let t = random_doubling_tolerance(&mut r, Arc::new(l));
            assert!(t.pt_edges().iter().all(|&(a, b)| t.host().is_cover(a, b)));
        }
    }

    #[test]
    fn hand_built_grid_closes_to_two_edges() {
        let grid = hand_built_instances().into_iter().find(|i| i.name == "grid-bottom-edge").unwrap();
        assert_eq!(grid.tolerance.pt_edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn interval_partitions() {
        let mut r = rng(3);
        let host = Lattice::boolean(3);
        for _ in 0..30 {
            let classes = random_interval_partition(&mut r, &host);
            assert!(crate::tolerance::is_congruence_gratzer(&host, &classes).is_ok());
        }
    }
}
