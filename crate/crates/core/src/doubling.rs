//! The doubled lattice `L∗T` of a modular lattice `L` and a doubling
//! tolerance `T`, on the ground set `L × {0, 1}`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{try_lattice, Lattice};
use crate::poset::Poset;
use crate::tolerance::DoublingTolerance;

/// `(x, level)`, stored at index `2x + level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubledElement {
    pub x: usize,
    pub level: u8,
}

impl DoubledElement {
    pub fn new(x: usize, level: u8) -> Self {
        debug_assert!(level < 2);
        DoubledElement { x, level }
    }

    pub fn index(self) -> usize {
        2 * self.x + self.level as usize
    }

    pub fn from_index(i: usize) -> Self {
        DoubledElement { x: i / 2, level: (i % 2) as u8 }
    }
}

impl std::fmt::Display for DoubledElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closure,
    Covers,
}

/// Which of the three covering clauses produces a cover of `L∗T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverClause {
    /// `(a,0) ≺ (a,1)`.
    Vertical,
    /// `(a,i) ≺ (b,i)` with `a ≺ b` and `[a,b]` not a block.
    Level,
    /// `(a,1) ≺ (b,0)` with `[a,b]` a two-element block.
    Drop,
}

impl CoverClause {
    pub fn number(self) -> u8 {
        match self {
            CoverClause::Vertical => 1,
            CoverClause::Level => 2,
            CoverClause::Drop => 3,
        }
    }
}

/// The clause that makes `u ≺ v` in `L∗T`, if any.
pub fn cover_clause(tol: &DoublingTolerance, u: DoubledElement, v: DoubledElement) -> Option<CoverClause> {
    let host = tol.host();
    match (u.level, v.level) {
        (0, 1) if u.x == v.x => Some(CoverClause::Vertical),
        (i, j) if i == j && host.is_cover(u.x, v.x) && !tol.is_pt(u.x, v.x) => Some(CoverClause::Level),
        (1, 0) if tol.is_pt(u.x, v.x) => Some(CoverClause::Drop),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct DoubledLattice {
    tol: DoublingTolerance,
    lattice: Lattice,
}

fn finish(tol: &DoublingTolerance, order: Poset) -> Result<DoubledLattice> {
    let lattice = try_lattice(&order)
        .ok_or_else(|| Error::Internal("doubled order is not a lattice".into()))?;
    Ok(DoubledLattice { tol: tol.clone(), lattice })
}

/// `ρ`: the reflexive-transitive closure of the product order `π` and the
/// drop relation `τ`.
pub fn double_definitional(tol: &DoublingTolerance) -> Result<DoubledLattice> {
    let host = tol.host();
    let n = host.len();
    let at = |x, l| DoubledElement::new(x, l).index();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in host.poset().up_set(a).ones() {
            for i in 0..2u8 {
                for j in i..2u8 {
                    pairs.push((at(a, i), at(b, j)));
                }
            }
        }
    }
    for &(a, b) in tol.pt_edges() {
        pairs.push((at(a, 1), at(b, 0)));
    }
    let order = Poset::from_relation(2 * n, pairs)
        .map_err(|e| Error::Internal(format!("closure of the doubled relation: {e}")))?;
    finish(tol, order)
}

/// Builds the covering relation of `L∗T` from the three clauses and
/// closes it.
pub fn double_by_covers(tol: &DoublingTolerance) -> Result<DoubledLattice> {
    let host = tol.host();
    let n = host.len();
    let at = |x, l| DoubledElement::new(x, l).index();
    let mut covers = Vec::new();
    for a in 0..n {
        covers.push((at(a, 0), at(a, 1)));
    }
    for &(a, b) in host.covers() {
        if !tol.is_pt(a, b) {
            covers.push((at(a, 0), at(b, 0)));
            covers.push((at(a, 1), at(b, 1)));
        }
    }
    for &(a, b) in tol.pt_edges() {
        covers.push((at(a, 1), at(b, 0)));
    }
    let order = Poset::from_covers(2 * n, &covers)
        .map_err(|e| Error::Internal(format!("clause covers do not form a reduction: {e}")))?;
    finish(tol, order)
}

pub fn double(tol: &DoublingTolerance, method: Method) -> Result<DoubledLattice> {
    match method {
        Method::Closure => double_definitional(tol),
        Method::Covers => double_by_covers(tol),
    }
}

impl DoubledLattice {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn order(&self) -> &Poset {
        self.lattice.poset()
    }

    pub fn host(&self) -> &Arc<Lattice> {
        self.tol.host()
    }

    pub fn tolerance(&self) -> &DoublingTolerance {
        &self.tol
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn leq(&self, u: DoubledElement, v: DoubledElement) -> bool {
        self.lattice.leq(u.index(), v.index())
    }

    /// Names `(x,i)` built from the host's element names.
    pub fn names(&self, host_names: &[String]) -> Vec<String> {
        (0..self.len())
            .map(|i| {
                let e = DoubledElement::from_index(i);
                format!("({},{})", host_names[e.x], e.level)
            })
            .collect()
    }

    /// First covering pair of `L∗T` not matched by any clause, or a clause
    /// pair that is not a cover.
    pub fn clause_mismatch(&self) -> Option<(DoubledElement, DoubledElement)> {
        let n = self.len();
        let p = self.order();
        for u in 0..n {
            for v in 0..n {
                let (du, dv) = (DoubledElement::from_index(u), DoubledElement::from_index(v));
                if p.is_cover(u, v) != cover_clause(&self.tol, du, dv).is_some() {
                    return Some((du, dv));
                }
            }
        }
        None
    }

    /// `(a,i) ≤ (b,j)` implies `a ≤ b`.
    pub fn projection_monotone(&self) -> bool {
        let host = self.host();
        let p = self.order();
        (0..self.len()).all(|u| {
            p.up_set(u).ones().all(|v| host.leq(u / 2, v / 2))
        })
    }

    /// `(x,1) ≤ (x,0)` never holds.
    pub fn no_upper_below_its_lower(&self) -> bool {
        (0..self.host().len()).all(|x| !self.leq(DoubledElement::new(x, 1), DoubledElement::new(x, 0)))
    }

    /// Drop covers are exactly the pt-edges, and no element has two of
    /// them above or below it.
    pub fn drop_covers_match_pt_edges(&self) -> bool {
        let p = self.order();
        let mut drops: Vec<(usize, usize)> = p
            .covers()
            .iter()
            .filter(|&&(u, v)| u % 2 == 1 && v % 2 == 0)
            .map(|&(u, v)| (u / 2, v / 2))
            .collect();
        drops.sort_unstable();
        if drops != self.tol.pt_edges() {
            return false;
        }
        let n = self.host().len();
        let mut up = vec![0u8; n];
        let mut down = vec![0u8; n];
        for &(a, b) in &drops {
            up[a] += 1;
            down[b] += 1;
        }
        up.iter().chain(&down).all(|&c| c <= 1)
    }

    /// Two distinct upper covers of a common element span a covering
    /// square with their join, and dually.
    pub fn covering_square_witness(&self) -> Option<[usize; 3]> {
        let l = &self.lattice;
        let p = l.poset();
        for z in 0..l.len() {
            for (k, &x) in p.upper_covers(z).iter().enumerate() {
                for &y in &p.upper_covers(z)[k + 1..] {
                    let j = l.join(x, y);
                    if !l.is_cover(x, j) || !l.is_cover(y, j) {
                        return Some([z, x, y]);
                    }
                }
            }
            for (k, &x) in p.lower_covers(z).iter().enumerate() {
                for &y in &p.lower_covers(z)[k + 1..] {
                    let m = l.meet(x, y);
                    if !l.is_cover(m, x) || !l.is_cover(m, y) {
                        return Some([z, x, y]);
                    }
                }
            }
        }
        None
    }

    /// If `(d1,i) ≺ (d2,i)` and `(d1,i) ≺ (d3,i)` are level covers then
    /// `(d2,i) ∨ (d3,i) = (d2 ∨ d3, i)`.
    pub fn level_join_holds(&self) -> bool {
        let host = self.host();
        let l = &self.lattice;
        let p = l.poset();
        (0..l.len()).all(|z| {
            let level: Vec<usize> = p.upper_covers(z).iter().copied().filter(|&v| v % 2 == z % 2).collect();
            level.iter().all(|&x| {
                level.iter().all(|&y| {
                    let want = DoubledElement::new(host.join(x / 2, y / 2), (z % 2) as u8).index();
                    l.join(x, y) == want
                })
            })
        })
    }
}
