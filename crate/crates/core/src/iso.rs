//! Order-isomorphism search by backtracking.
//!
//! Elements are matched only against elements with the same invariant
//! signature, and an element whose lower cover is already placed may only
//! go to an upper cover of that image.

use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    height: usize,
    depth: usize,
    ideal: usize,
    filter: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &Poset) -> Vec<Signature> {
    let heights = p.heights();
    let depths = p.depths();
    (0..p.len())
        .map(|a| Signature {
            height: heights[a],
            depth: depths[a],
            ideal: p.down_set(a).count_ones(..),
            filter: p.up_set(a).count_ones(..),
            lower_covers: p.lower_covers(a).len(),
            upper_covers: p.upper_covers(a).len(),
        })
        .collect()
}

/// Returns a bijection `f` (as `f[a]`) with `a <= b` iff `f[a] <= f[b]`,
/// or `None` if the posets are not isomorphic.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }

    // Breadth-first from the minimal elements so later elements usually
    // have a placed lower cover.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in p.linear_extension() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in p.upper_covers(x).iter().chain(p.lower_covers(x)) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut search = Search {
        p,
        q,
        sp: &sp,
        sq: &sq,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Some(search.image)
    } else {
        None
    }
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    sp: &'a [Signature],
    sq: &'a [Signature],
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let placed_lower = self
            .p
            .lower_covers(x)
            .iter()
            .copied()
            .find(|&c| self.image[c] != usize::MAX);
        let candidates: Vec<usize> = match placed_lower {
            Some(c) => self.q.upper_covers(self.image[c]).to_vec(),
            None => (0..self.q.len()).collect(),
        };
        for y in candidates {
            if self.used[y] || self.sp[x] != self.sq[y] || !self.consistent(depth, x, y) {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.image[x] = usize::MAX;
            self.used[y] = false;
        }
        false
    }

    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let v = self.image[u];
            self.p.leq(u, x) == self.q.leq(v, y) && self.p.leq(x, u) == self.q.leq(y, v)
        })
    }
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_iso(p: &Poset, q: &Poset, f: &[usize]) -> bool {
        (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(f[a], f[b])))
    }

    #[test]
    fn chain_with_itself() {
        let c = Poset::chain(4);
        let f = find_isomorphism(&c, &c).unwrap();
        assert_eq!(f, vec![0, 1, 2, 3]);
    }

    #[test]
    fn chain_is_not_a_grid() {
        let g = Poset::chain(2).direct_product(&Poset::chain(2));
        assert!(find_isomorphism(&Poset::chain(4), &g).is_none());
    }

    #[test]
    fn relabelled_products() {
        let p = Poset::chain(2).direct_product(&Poset::chain(3));
        let q = Poset::chain(3).direct_product(&Poset::chain(2));
        let f = find_isomorphism(&p, &q).unwrap();
        assert!(check_iso(&p, &q, &f));
        let cube = Poset::chain(2)
            .direct_product(&Poset::chain(2))
            .direct_product(&Poset::chain(2));
        let f = find_isomorphism(&cube, &cube.dual()).unwrap();
        assert!(check_iso(&cube, &cube.dual(), &f));
    }

    #[test]
    fn same_signatures_but_different_order() {
        // two 2-chains vs. an N-shaped poset: both have 4 elements, but
        // different cover counts; and V+1 vs Λ+1 mismatch on signatures.
        let two_chains = Poset::chain(2).disjoint_union(&Poset::chain(2));
        let n_shape = Poset::from_relation(4, [(0, 2), (1, 2), (1, 3)]).unwrap();
        assert!(find_isomorphism(&two_chains, &n_shape).is_none());
        let v = Poset::from_relation(3, [(0, 1), (0, 2)]).unwrap();
        assert!(find_isomorphism(&v, &v.dual()).is_none());
    }
}
