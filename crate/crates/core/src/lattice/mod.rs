//! Lattices as posets with total meet and join tables.

mod shapes;

pub use shapes::{has_cover_preserving_copy, jakubik_classify, ForbiddenShape, ShapeCatalogue, ShapeKind};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    base: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// The element `g` of `set` with `set ⊆ cones[g]`, if any. With principal
/// ideals as cones this is the maximum of `set`; with filters, the minimum.
fn extremum(set: &FixedBitSet, cones: &[FixedBitSet]) -> Option<usize> {
    let size = set.count_ones(..);
    set.ones().find(|&g| cones[g].count_ones(..) >= size && set.is_subset(&cones[g]))
}

fn ideals(p: &Poset) -> Vec<FixedBitSet> {
    (0..p.len()).map(|a| p.down_set(a).clone()).collect()
}

fn filters(p: &Poset) -> Vec<FixedBitSet> {
    (0..p.len()).map(|a| p.up_set(a).clone()).collect()
}

/// Least upper bound of `a` and `b` in `p`, if it exists.
pub fn least_upper_bound(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let mut ub = p.up_set(a).clone();
    ub.intersect_with(p.up_set(b));
    let size = ub.count_ones(..);
    ub.ones().find(|&g| p.up_set(g).count_ones(..) >= size && ub.is_subset(p.up_set(g)))
}

/// Greatest lower bound of `a` and `b` in `p`, if it exists.
pub fn greatest_lower_bound(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let mut lb = p.down_set(a).clone();
    lb.intersect_with(p.down_set(b));
    let size = lb.count_ones(..);
    lb.ones().find(|&g| p.down_set(g).count_ones(..) >= size && lb.is_subset(p.down_set(g)))
}

/// Meet and join tables by definition: every pair must have a greatest
/// lower bound and a least upper bound.
pub fn try_lattice(p: &Poset) -> Option<Lattice> {
    let n = p.len();
    let bottom = p.bottom()?;
    let top = p.top()?;
    let downs = ideals(p);
    let ups = filters(p);
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let mut lb = downs[a].clone();
            lb.intersect_with(&downs[b]);
            let m = extremum(&lb, &downs)?;
            let mut ub = ups[a].clone();
            ub.intersect_with(&ups[b]);
            let j = extremum(&ub, &ups)?;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    Some(Lattice { base: p.clone(), meet, join, bottom, top })
}

/// Lattice test through the BEZ criterion: a bounded poset of finite length
/// is a lattice as soon as any two elements with a common lower cover have
/// a join.
pub fn bez_is_lattice(p: &Poset) -> Result<bool> {
    if !p.is_bounded() {
        return Err(Error::NotBounded);
    }
    for z in 0..p.len() {
        let ups = p.upper_covers(z);
        for (i, &x) in ups.iter().enumerate() {
            for &y in &ups[i + 1..] {
                if least_upper_bound(p, x, y).is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

impl Lattice {
    pub fn from_poset(p: &Poset) -> Option<Lattice> {
        try_lattice(p)
    }

    pub fn chain(k: usize) -> Lattice {
        assert!(k > 0, "a lattice is nonempty");
        try_lattice(&Poset::chain(k)).expect("chains are lattices")
    }

    /// `M_k`: bottom `0`, `k` atoms `1..=k`, top `k + 1`.
    pub fn diamond(k: usize) -> Lattice {
        let top = k + 1;
        let pairs = (1..=k).flat_map(|a| [(0, a), (a, top)]);
        try_lattice(&Poset::from_relation(k + 2, pairs).expect("acyclic")).expect("M_k is a lattice")
    }

    /// `N_5`: `0 < 1 < 2 < 4` and `0 < 3 < 4`.
    pub fn pentagon() -> Lattice {
        let p = Poset::from_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("acyclic");
        try_lattice(&p).expect("N5 is a lattice")
    }

    /// The Boolean lattice of subsets of a `k`-set, indexed by bitmask.
    pub fn boolean(k: usize) -> Lattice {
        let n = 1usize << k;
        let p = Poset::from_order_fn(n, |a, b| a & b == a).expect("subset order");
        try_lattice(&p).expect("Boolean lattices are lattices")
    }

    pub fn poset(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.base.leq(a, b)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.base.is_cover(a, b)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.base.covers()
    }

    pub fn length(&self) -> usize {
        self.base.length()
    }

    pub fn dual(&self) -> Lattice {
        let n = self.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n * n {
            meet[i] = self.join[i];
            join[i] = self.meet[i];
        }
        Lattice { base: self.base.dual(), meet, join, bottom: self.top, top: self.bottom }
    }

    /// Direct product; pair `(i, j)` has index `i * other.len() + j`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let (n, m) = (self.len(), other.len());
        let base = self.base.direct_product(&other.base);
        let size = n * m;
        let mut meet = vec![0; size * size];
        let mut join = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                meet[a * size + b] = self.meet(a1, b1) * m + other.meet(a2, b2);
                join[a * size + b] = self.join(a1, b1) * m + other.join(a2, b2);
            }
        }
        Lattice {
            base,
            meet,
            join,
            bottom: self.bottom * m + other.bottom,
            top: self.top * m + other.top,
        }
    }

    /// Smallest sublattice containing `generators`, returned with the list
    /// of host elements it consists of (ascending).
    pub fn generated_sublattice(&self, generators: &[usize]) -> (Lattice, Vec<usize>) {
        let n = self.len();
        let mut inside = FixedBitSet::with_capacity(n);
        let mut members: Vec<usize> = Vec::new();
        for &g in generators {
            if !inside.put(g) {
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..=i {
                let b = members[j];
                for c in [self.meet(a, b), self.join(a, b)] {
                    if !inside.put(c) {
                        members.push(c);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let sub = self.restrict(&members);
        (sub, members)
    }

    /// Restriction to `elements`, which must be closed under meet and join.
    pub(crate) fn restrict(&self, elements: &[usize]) -> Lattice {
        let k = elements.len();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &e) in elements.iter().enumerate() {
            local[e] = i;
        }
        let base = self.base.induced(elements);
        let mut meet = vec![0; k * k];
        let mut join = vec![0; k * k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                meet[i * k + j] = local[self.meet(a, b)];
                join[i * k + j] = local[self.join(a, b)];
            }
        }
        let bottom = (0..k).find(|&i| base.up_set(i).count_ones(..) == k).expect("closed set has a bottom");
        let top = (0..k).find(|&i| base.down_set(i).count_ones(..) == k).expect("closed set has a top");
        Lattice { base, meet, join, bottom, top }
    }

    /// Modular law checked over every triple `x <= z`.
    pub fn is_modular(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            self.base.up_set(x).ones().all(|z| {
                (0..n).all(|y| self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), z))
            })
        })
    }

    /// Distributive law `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over every triple.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (y..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z)))
            })
        })
    }

    /// Every covering square `(o, a, b, i)` with `a < b` by index.
    pub fn covering_squares(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for o in 0..self.len() {
            let ups = self.base.upper_covers(o);
            for (k, &a) in ups.iter().enumerate() {
                for &b in &ups[k + 1..] {
                    let (a, b) = (a.min(b), a.max(b));
                    for &i in self.base.upper_covers(a) {
                        if self.base.is_cover(b, i) {
                            out.push((o, a, b, i));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the edges `e1 ≺ f1` and `e2 ≺ f2` are transposed (one is
    /// perspective up to the other).
    pub fn are_transposed(&self, e1: usize, f1: usize, e2: usize, f2: usize) -> Result<bool> {
        for (e, f) in [(e1, f1), (e2, f2)] {
            if e >= self.len() || f >= self.len() || !self.is_cover(e, f) {
                return Err(Error::NotAnEdge(e, f));
            }
        }
        Ok((self.join(e2, f1) == f2 && self.meet(e2, f1) == e1)
            || (self.join(e1, f2) == f1 && self.meet(e1, f2) == e2))
    }
}
