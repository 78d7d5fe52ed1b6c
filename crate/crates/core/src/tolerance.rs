//! Tolerances on finite lattices: reflexive, symmetric relations preserved
//! by meet and join.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tolerance {
    host: Arc<Lattice>,
    rel: Vec<FixedBitSet>,
}

/// A maximal `T`-clique; always the interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub lo: usize,
    pub hi: usize,
}

impl Block {
    pub fn elements(&self, host: &Lattice) -> Vec<usize> {
        let mut set = host.poset().up_set(self.lo).clone();
        set.intersect_with(host.poset().down_set(self.hi));
        set.ones().collect()
    }
}

fn empty_rows(n: usize) -> Vec<FixedBitSet> {
    vec![FixedBitSet::with_capacity(n); n]
}

fn identity_rows(n: usize) -> Vec<FixedBitSet> {
    let mut rows = empty_rows(n);
    for (a, row) in rows.iter_mut().enumerate() {
        row.insert(a);
    }
    rows
}

fn pairs_of(rel: &[FixedBitSet]) -> Vec<(usize, usize)> {
    rel.iter().enumerate().flat_map(|(a, row)| row.ones().map(move |b| (a, b))).collect()
}

/// Least compatible reflexive symmetric relation containing `seeds`:
/// the sublattice of `L × L` generated by the diagonal and the seeds in
/// both orientations. Returns `None` as soon as a pair rejected by `admit`
/// shows up.
pub(crate) fn compatible_closure(
    host: &Lattice,
    seeds: &[(usize, usize)],
    admit: impl Fn(usize, usize) -> bool,
) -> Option<Vec<FixedBitSet>> {
    let n = host.len();
    let mut rel = identity_rows(n);
    let mut list: Vec<(usize, usize)> = (0..n).map(|a| (a, a)).collect();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let push = |rel: &mut Vec<FixedBitSet>, queue: &mut Vec<(usize, usize)>, a: usize, b: usize| -> bool {
        if rel[a].contains(b) {
            return true;
        }
        if !admit(a, b) {
            return false;
        }
        rel[a].insert(b);
        rel[b].insert(a);
        queue.push((a, b));
        if a != b {
            queue.push((b, a));
        }
        true
    };
    for &(a, b) in seeds {
        if !push(&mut rel, &mut queue, a, b) {
            return None;
        }
    }
    while let Some((a, b)) = queue.pop() {
        list.push((a, b));
        let snapshot = list.len();
        for i in 0..snapshot {
            let (c, d) = list[i];
            let j = (host.join(a, c), host.join(b, d));
            let m = (host.meet(a, c), host.meet(b, d));
            for (x, y) in [j, m] {
                if !push(&mut rel, &mut queue, x, y) {
                    return None;
                }
            }
        }
    }
    Some(rel)
}

impl Tolerance {
    /// Validates reflexivity, symmetry and compatibility of `rel` over `host`.
    pub fn verify(host: Arc<Lattice>, rel: Vec<FixedBitSet>) -> Result<Self> {
        let n = host.len();
        if rel.len() != n {
            return Err(Error::Dimension { rows: rel.len(), n });
        }
        let mut rel = rel;
        for row in rel.iter_mut() {
            row.grow(n);
            if let Some(b) = row.ones().find(|&b| b >= n) {
                return Err(Error::Index { index: b, n });
            }
        }
        for (a, row) in rel.iter().enumerate() {
            if !row.contains(a) {
                return Err(Error::NotReflexive(a));
            }
            if let Some(b) = row.ones().find(|&b| !rel[b].contains(a)) {
                return Err(Error::NotSymmetric(a, b));
            }
        }
        let pairs = pairs_of(&rel);
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                if !rel[host.join(a, c)].contains(host.join(b, d)) {
                    return Err(Error::NotCompatible { witness: [a, b, c, d], op: "join" });
                }
                if !rel[host.meet(a, c)].contains(host.meet(b, d)) {
                    return Err(Error::NotCompatible { witness: [a, b, c, d], op: "meet" });
                }
            }
        }
        Ok(Tolerance { host, rel })
    }

    /// The symmetric reflexive closure of `pairs`, verified.
    pub fn from_pairs(host: Arc<Lattice>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = host.len();
        let mut rel = identity_rows(n);
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::Index { index: x, n });
                }
            }
            rel[a].insert(b);
            rel[b].insert(a);
        }
        Self::verify(host, rel)
    }

    /// The smallest tolerance containing `pairs`.
    pub fn generated_by(host: Arc<Lattice>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = host.len();
        if let Some(&x) = pairs.iter().flat_map(|(a, b)| [a, b]).find(|&&x| x >= n) {
            return Err(Error::Index { index: x, n });
        }
        let rel = compatible_closure(&host, pairs, |_, _| true).expect("closure admits every pair");
        Ok(Tolerance { host, rel })
    }

    pub fn equality(host: Arc<Lattice>) -> Self {
        let rel = identity_rows(host.len());
        Tolerance { host, rel }
    }

    pub fn full(host: Arc<Lattice>) -> Self {
        let n = host.len();
        let mut rel = empty_rows(n);
        for row in rel.iter_mut() {
            row.insert_range(..);
        }
        Tolerance { host, rel }
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rel[a].contains(b)
    }

    pub fn relation(&self) -> &[FixedBitSet] {
        &self.rel
    }

    /// Related pairs `(a, b)` with `a < b` by index.
    pub fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        pairs_of(&self.rel).into_iter().filter(|&(a, b)| a < b).collect()
    }

    /// All blocks, sorted by `(lo, hi)`.
    ///
    /// For each `a`, the set of elements related to `a` has a largest
    /// member `h`; `[min T(h), h]` is then a maximal clique, and every block
    /// arises this way.
    pub fn blocks(&self) -> Result<Vec<Block>> {
        let host = &*self.host;
        let mut out = Vec::new();
        for a in 0..host.len() {
            let hi = self.rel[a].ones().fold(host.bottom(), |acc, x| host.join(acc, x));
            let lo = self.rel[hi].ones().fold(host.top(), |acc, x| host.meet(acc, x));
            let block = Block { lo, hi };
            let members = block.elements(host);
            if !members.contains(&a) || members.iter().any(|&x| members.iter().any(|&y| !self.related(x, y))) {
                return Err(Error::BlockNotInterval(a));
            }
            out.push(block);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Transitivity; for a tolerance this is exactly being a congruence.
    pub fn is_congruence_definitional(&self) -> bool {
        self.rel.iter().all(|row| row.ones().all(|b| self.rel[b].is_subset(row)))
    }

    /// A pair of transposed edges on which the relation disagrees, if any.
    pub fn transposed_edge_violation(&self) -> Option<[usize; 4]> {
        let host = &*self.host;
        let edges = host.covers();
        for &(e1, f1) in edges {
            for &(e2, f2) in edges {
                let transposed = host.are_transposed(e1, f1, e2, f2).expect("covers are edges");
                if transposed && self.related(e1, f1) != self.related(e2, f2) {
                    return Some([e1, f1, e2, f2]);
                }
            }
        }
        None
    }

    /// The doubling view, when every block has at most two elements. The
    /// host must be modular.
    pub fn as_doubling(&self) -> Result<Option<DoublingTolerance>> {
        if !self.host.is_modular() {
            return Err(Error::HostNotModular);
        }
        let blocks = self.blocks()?;
        let mut pt_edges = Vec::new();
        for b in blocks {
            if b.lo == b.hi {
                continue;
            }
            if !self.host.is_cover(b.lo, b.hi) {
                return Ok(None);
            }
            pt_edges.push((b.lo, b.hi));
        }
        Ok(Some(DoublingTolerance::assemble(self.clone(), pt_edges)))
    }
}

/// A tolerance on a modular lattice all of whose blocks have at most two
/// elements; `pt_edges` are the two-element blocks `[a, b]`, `a ≺ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingTolerance {
    base: Tolerance,
    pt_edges: Vec<(usize, usize)>,
    /// `pt[a]` is the `b` with `[a, b]` a two-element block, if any.
    pt: Vec<Option<usize>>,
}

impl DoublingTolerance {
    fn assemble(base: Tolerance, mut pt_edges: Vec<(usize, usize)>) -> Self {
        pt_edges.sort_unstable();
        let mut pt = vec![None; base.host.len()];
        for &(a, b) in &pt_edges {
            pt[a] = Some(b);
        }
        DoublingTolerance { base, pt_edges, pt }
    }

    /// Rebuilds the doubling tolerance whose two-element blocks are `edges`.
    pub fn from_pt_edges(host: Arc<Lattice>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = host.len();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Index { index: a.max(b), n });
            }
            if !host.is_cover(a, b) {
                return Err(Error::NotDoubling);
            }
        }
        let t = Tolerance::from_pairs(host, edges)?;
        let d = t.as_doubling()?.ok_or(Error::NotDoubling)?;
        let mut wanted = edges.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        if d.pt_edges != wanted {
            return Err(Error::NotDoubling);
        }
        Ok(d)
    }

    /// The doubling tolerance generated by `edges`, when the generated
    /// tolerance is doubling at all.
    pub fn generated_by(host: Arc<Lattice>, edges: &[(usize, usize)]) -> Result<Self> {
        Tolerance::generated_by(host, edges)?.as_doubling()?.ok_or(Error::NotDoubling)
    }

    pub fn equality(host: Arc<Lattice>) -> Result<Self> {
        Tolerance::equality(host).as_doubling()?.ok_or(Error::NotDoubling)
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.base
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.base.host
    }

    pub fn pt_edges(&self) -> &[(usize, usize)] {
        &self.pt_edges
    }

    /// `[a, b]` is a two-element block.
    pub fn is_pt(&self, a: usize, b: usize) -> bool {
        self.pt[a] == Some(b)
    }

    pub fn is_congruence(&self) -> bool {
        self.base.is_congruence_definitional()
    }

    /// Whether distinct blocks never share an element.
    pub fn blocks_disjoint(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.host().len());
        self.pt_edges.iter().all(|&(a, b)| !seen.put(a) && !seen.put(b))
    }
}

fn class_members(n: usize, classes: &[usize]) -> Result<Vec<Vec<usize>>> {
    if classes.len() != n {
        return Err(Error::Dimension { rows: classes.len(), n });
    }
    let k = classes.iter().copied().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); k];
    for (a, &c) in classes.iter().enumerate() {
        members[c].push(a);
    }
    members.retain(|m| !m.is_empty());
    Ok(members)
}

/// The relation matrix of the partition given by class labels.
pub fn partition_relation(classes: &[usize]) -> Vec<FixedBitSet> {
    let n = classes.len();
    let mut rel = empty_rows(n);
    for a in 0..n {
        for b in 0..n {
            if classes[a] == classes[b] {
                rel[a].insert(b);
            }
        }
    }
    rel
}

/// Congruence test for an equivalence by definition: the relation must be
/// compatible with meet and join.
pub fn is_congruence_by_compatibility(host: &Arc<Lattice>, classes: &[usize]) -> Result<bool> {
    class_members(host.len(), classes)?;
    Ok(Tolerance::verify(host.clone(), partition_relation(classes)).is_ok())
}

/// Congruence test for an equivalence with interval classes, using only
/// covering pairs: whenever `z ≺ x`, `z ≺ y` and `z Θ x`, also
/// `y Θ x ∨ y`; and dually.
pub fn is_congruence_gratzer(host: &Lattice, classes: &[usize]) -> Result<bool> {
    let members = class_members(host.len(), classes)?;
    for class in &members {
        let lo = class.iter().fold(host.top(), |acc, &x| host.meet(acc, x));
        let hi = class.iter().fold(host.bottom(), |acc, &x| host.join(acc, x));
        let interval = Block { lo, hi }.elements(host);
        if &interval != class {
            return Err(Error::BlocksNotIntervals(class[0]));
        }
    }
    let same = |a: usize, b: usize| classes[a] == classes[b];
    let p = host.poset();
    for z in 0..host.len() {
        for &x in p.upper_covers(z) {
            for &y in p.upper_covers(z) {
                if x != y && same(z, x) && !same(y, host.join(x, y)) {
                    return Ok(false);
                }
            }
        }
        for &x in p.lower_covers(z) {
            for &y in p.lower_covers(z) {
                if x != y && same(x, z) && !same(host.meet(x, y), y) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
