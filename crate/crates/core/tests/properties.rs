use std::sync::Arc;

use fixedbitset::FixedBitSet;
use latticekit::coalition::{coalition_leq, extensive_map_fixing_intersection, Coalition};
use latticekit::doubling::{double_by_covers, double_definitional};
use latticekit::enumerate::lattices_up_to;
use latticekit::generate::{random_doubling_tolerance, random_modular_lattice, rng};
use latticekit::lattice::jakubik_classify;
use latticekit::tolerance::Tolerance;
use latticekit::{Lattice, Poset};
use proptest::prelude::*;

/// Random acyclic relation on `0..n`: pairs `(i, j)` with `i < j`.
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::from_relation(n, pairs).unwrap()
        })
    })
}

/// Reachability by depth-first search over the covers.
fn dfs_leq(p: &Poset) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut out = vec![vec![false; n]; n];
    for (s, row) in out.iter_mut().enumerate() {
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            if !row[a] {
                row[a] = true;
                stack.extend(p.upper_covers(a));
            }
        }
    }
    out
}

fn brute_force_leq(p: &Poset, x: Coalition, y: Coalition) -> bool {
    fn go(p: &Poset, xs: &[usize], free: Coalition) -> bool {
        match xs.split_first() {
            None => true,
            Some((&a, rest)) => free.members().any(|b| p.leq(a, b) && go(p, rest, free.without(b))),
        }
    }
    let xs: Vec<usize> = x.members().collect();
    go(p, &xs, y)
}

fn maximal_cliques(rel: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let n = rel.len();
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let clique = set.iter().all(|&a| set.iter().all(|&b| rel[a].contains(b)));
        let maximal = (0..n).all(|c| set.contains(&c) || !set.iter().all(|&a| rel[a].contains(c)));
        if clique && maximal {
            out.push(set);
        }
    }
    out.sort();
    out
}

fn small_lattices() -> &'static [Lattice] {
    static CELL: std::sync::OnceLock<Vec<Lattice>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| lattices_up_to(6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_matches_dfs(p in poset_strategy(8)) {
        let dfs = dfs_leq(&p);
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(p.leq(a, b), dfs[a][b]);
            }
        }
        let q = Poset::from_covers(p.len(), p.covers()).unwrap();
        prop_assert_eq!(q.covers(), p.covers());
    }

    #[test]
    fn product_length_adds(p in poset_strategy(5), q in poset_strategy(5)) {
        prop_assert_eq!(p.direct_product(&q).length(), p.length() + q.length());
    }

    #[test]
    fn bound_free_iff_components_are_chains(p in poset_strategy(7)) {
        let both = p.is_upper_bound_free() && p.is_lower_bound_free();
        let chains = p.components().iter().all(|c| c.poset.is_chain());
        prop_assert_eq!(both, chains);
        let sizes: usize = p.components().iter().map(|c| c.elements.len()).sum();
        prop_assert_eq!(sizes, p.len());
    }

    #[test]
    fn lattice_laws(i in 0usize..78) {
        let l = &small_lattices()[i % small_lattices().len()];
        let n = l.len();
        for a in 0..n {
            prop_assert_eq!(l.meet(a, a), a);
            for b in 0..n {
                prop_assert_eq!(l.meet(a, b), l.meet(b, a));
                prop_assert_eq!(l.join(a, l.meet(a, b)), a);
                prop_assert_eq!(l.meet(a, l.join(a, b)), a);
                for c in 0..n {
                    prop_assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
                    prop_assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
                }
            }
        }
        prop_assert_eq!(jakubik_classify(l).unwrap(), (l.is_modular(), l.is_distributive()));
    }

    #[test]
    fn modular_lattices_have_diamond_squares(seed in any::<u64>()) {
        let l = random_modular_lattice(&mut rng(seed), 40);
        let p = l.poset();
        for z in 0..l.len() {
            for &x in p.upper_covers(z) {
                for &y in p.upper_covers(z) {
                    if x != y {
                        let j = l.join(x, y);
                        prop_assert!(l.is_cover(x, j) && l.is_cover(y, j));
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_are_the_maximal_cliques(i in 0usize..78, seeds in proptest::collection::vec((0usize..16, 0usize..16), 0..3)) {
        let host = Arc::new(small_lattices()[i % small_lattices().len()].clone());
        let n = host.len();
        let seeds: Vec<(usize, usize)> = seeds.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let t = Tolerance::generated_by(host.clone(), &seeds).unwrap();
        prop_assert!(Tolerance::verify(host.clone(), t.relation().to_vec()).is_ok());
        let mut blocks: Vec<Vec<usize>> = t.blocks().unwrap().iter().map(|b| b.elements(&host)).collect();
        blocks.sort();
        prop_assert_eq!(blocks, maximal_cliques(t.relation()));
        prop_assert!(t.transposed_edge_violation().is_none());
    }

    #[test]
    fn doubling_constructions_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let host = Arc::new(random_modular_lattice(&mut r, 30));
        let t = random_doubling_tolerance(&mut r, host.clone());
        let a = double_definitional(&t).unwrap();
        let b = double_by_covers(&t).unwrap();
        prop_assert_eq!(a.order(), b.order());
        prop_assert!(b.lattice().is_modular());
        prop_assert_eq!(t.is_congruence(), t.blocks_disjoint());
    }

    #[test]
    fn coalition_order_matches_brute_force(p in poset_strategy(5), x in any::<u64>(), y in any::<u64>()) {
        let full = (1u64 << p.len()) - 1;
        let (x, y) = (Coalition(x & full), Coalition(y & full));
        let leq = coalition_leq(&p, x, y);
        prop_assert_eq!(leq, brute_force_leq(&p, x, y));
        if leq {
            let f = extensive_map_fixing_intersection(&p, x, y).unwrap();
            prop_assert_eq!(f.len(), x.len());
            for &(a, b) in &f {
                prop_assert!(y.contains(b) && p.leq(a, b));
                if y.contains(a) {
                    prop_assert_eq!(a, b);
                }
            }
            if coalition_leq(&p, y, x) {
                prop_assert_eq!(x, y);
            }
        }
    }
}
