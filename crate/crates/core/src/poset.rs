//! Finite posets over dense element indices `0..n`.
//!
//! The order is stored twice as bitset rows (`up[a]` holds every `b` with
//! `a <= b`, `down[b]` the transpose) next to the covering relation and the
//! per-element cover lists.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.up == other.up
    }
}

impl Eq for Poset {}

/// Reflexive-transitive closure of `pairs` by repeated boolean squaring.
pub fn reflexive_transitive_closure(
    n: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Vec<FixedBitSet>> {
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for (a, row) in rows.iter_mut().enumerate() {
        row.insert(a);
    }
    for (a, b) in pairs {
        check_index(a, n)?;
        check_index(b, n)?;
        rows[a].insert(b);
    }
    close_rows(&mut rows);
    Ok(rows)
}

/// In-place transitive closure: `R <- R ∪ R∘R` until nothing changes.
/// Each round doubles the path length covered, so at most `log2 n + 1`
/// rounds run.
pub(crate) fn close_rows(rows: &mut [FixedBitSet]) {
    let n = rows.len();
    loop {
        let mut changed = false;
        let snapshot = rows.to_vec();
        for row in rows.iter_mut() {
            let mut next = row.clone();
            for j in row.ones() {
                next.union_with(&snapshot[j]);
            }
            if next.count_ones(..) != row.count_ones(..) {
                changed = true;
                *row = next;
            }
        }
        if !changed || n == 0 {
            break;
        }
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::Index { index: i, n })
    } else {
        Ok(())
    }
}

impl Poset {
    /// Builds the poset generated by `pairs` (reflexive-transitive closure).
    pub fn from_relation(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let up = reflexive_transitive_closure(n, pairs)?;
        Self::from_closed_rows(up)
    }

    /// Like [`Poset::from_relation`], but every listed pair must be a
    /// covering pair of the generated order.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let p = Self::from_relation(n, covers.iter().copied())?;
        for &(a, b) in covers {
            if !p.is_cover(a, b) {
                return Err(Error::NotACover(a, b));
            }
        }
        Ok(p)
    }

    /// Builds a poset from an order predicate; the predicate is closed
    /// transitively and checked for antisymmetry like any other relation.
    pub fn from_order_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in rows.iter_mut().enumerate() {
            for b in 0..n {
                if a == b || leq(a, b) {
                    row.insert(b);
                }
            }
        }
        close_rows(&mut rows);
        Self::from_closed_rows(rows)
    }

    pub(crate) fn from_closed_rows(up: Vec<FixedBitSet>) -> Result<Self> {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                if a != b && up[b].contains(a) {
                    return Err(Error::Cycle(a.min(b), a.max(b)));
                }
                down[b].insert(a);
            }
        }
        // a ≺ b iff a < b and no c with a < c < b
        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for a in 0..n {
            for b in up[a].ones() {
                if a == b {
                    continue;
                }
                let mut between = up[a].clone();
                between.intersect_with(&down[b]);
                if between.count_ones(..) == 2 {
                    covers.push((a, b));
                    upper[a].push(b);
                    lower[b].push(a);
                }
            }
        }
        Ok(Poset { n, up, down, covers, upper, lower })
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Self {
        Self::from_relation(k, (1..k).map(|i| (i - 1, i))).expect("chain is acyclic")
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_relation(k, std::iter::empty()).expect("antichain is acyclic")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].contains(&b)
    }

    /// Covering pairs `(a, b)` with `a ≺ b`, sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower[a]
    }

    /// Principal filter `{b : a <= b}`.
    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Principal ideal `{b : b <= a}`.
    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    /// Elements in an order compatible with `<=` (smaller ideals first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (self.down[a].count_ones(..), a));
        order
    }

    /// Height of every element: length of the longest chain ending in it.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for a in self.linear_extension() {
            h[a] = self.lower[a].iter().map(|&c| h[c] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain ending above each element, dual to `heights`.
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for a in self.linear_extension().into_iter().rev() {
            d[a] = self.upper[a].iter().map(|&c| d[c] + 1).max().unwrap_or(0);
        }
        d
    }

    /// Number of elements in a longest chain, minus one; zero for the empty poset.
    pub fn length(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&a| self.up[a].count_ones(..) == self.n)
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&a| self.down[a].count_ones(..) == self.n)
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.comparable(a, b)))
    }

    /// True iff no two incomparable elements have a common upper bound.
    pub fn is_upper_bound_free(&self) -> bool {
        Self::bound_free(self.n, &self.up, |a, b| self.comparable(a, b))
    }

    /// True iff no two incomparable elements have a common lower bound.
    pub fn is_lower_bound_free(&self) -> bool {
        Self::bound_free(self.n, &self.down, |a, b| self.comparable(a, b))
    }

    fn bound_free(n: usize, rows: &[FixedBitSet], comparable: impl Fn(usize, usize) -> bool) -> bool {
        (0..n).all(|a| (a + 1..n).all(|b| comparable(a, b) || rows[a].is_disjoint(&rows[b])))
    }

    pub fn dual(&self) -> Poset {
        Self::from_closed_rows(self.down.clone()).expect("dual of a poset is a poset")
    }

    /// Induced subposet on `elements`; element `i` of the result is `elements[i]`.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let k = elements.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                if self.leq(a, b) {
                    rows[i].insert(j);
                }
            }
        }
        Self::from_closed_rows(rows).expect("induced order is a partial order")
    }

    /// Connected components of the Hasse diagram, each with its element list
    /// in increasing index order.
    pub fn components(&self) -> Vec<Component> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            label[start] = id;
            while let Some(a) = stack.pop() {
                members.push(a);
                for &b in self.upper[a].iter().chain(&self.lower[a]) {
                    if label[b] == usize::MAX {
                        label[b] = id;
                        stack.push(b);
                    }
                }
            }
            members.sort_unstable();
            let poset = self.induced(&members);
            out.push(Component { poset, elements: members });
        }
        out
    }

    /// Componentwise order on `self × other`; the pair `(i, j)` has index
    /// `i * other.len() + j`.
    pub fn direct_product(&self, other: &Poset) -> Poset {
        let (n, m) = (self.n, other.n);
        let mut rows = vec![FixedBitSet::with_capacity(n * m); n * m];
        for i in 0..n {
            for j in 0..m {
                let row = &mut rows[i * m + j];
                for k in self.up[i].ones() {
                    for l in other.up[j].ones() {
                        row.insert(k * m + l);
                    }
                }
            }
        }
        Self::from_closed_rows(rows).expect("product of posets is a poset")
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let shift = self.n;
        let pairs = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(a, b)| (a + shift, b + shift)));
        Self::from_relation(self.n + other.n, pairs).expect("disjoint union is acyclic")
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub poset: Poset,
    /// Indices in the parent poset, ascending.
    pub elements: Vec<usize>,
}
