//! Cover-preserving sublattice search and the forbidden-shape
//! characterization of modularity and distributivity.
//!
//! The catalogue holds `B` (the seven-element upper semimodular lattice
//! that is not lower semimodular), its dual `B'`, `M3`, and the family
//! `L(m, n)`: two chains with `m` and `n` elements glued at their common
//! bottom and top. `L(3, 4)` is `N5`, `L(4, 4)` the hexagon.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::io::PosetDoc;
use crate::iso::is_isomorphic;
use crate::lattice::{try_lattice, Lattice};
use crate::poset::Poset;

const B_DOC: &str = include_str!("../../shapes/B.json");
const B_DUAL_DOC: &str = include_str!("../../shapes/B_dual.json");
const M3_DOC: &str = include_str!("../../shapes/M3.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    B,
    BDual,
    M3,
    L { m: usize, n: usize },
}

#[derive(Clone, Debug)]
pub struct ForbiddenShape {
    kind: ShapeKind,
    shape: Lattice,
}

impl ForbiddenShape {
    /// `L(m, n)`; `m` and `n` count the elements of the two chains,
    /// shared endpoints included.
    pub fn l(m: usize, n: usize) -> Result<Self> {
        if m < 3 || n < 4 {
            return Err(Error::ShapeParameters { m, n });
        }
        let size = m + n - 2;
        let top = size - 1;
        let mut pairs = Vec::with_capacity(size);
        let mut prev = 0;
        for k in 1..m - 1 {
            pairs.push((prev, k));
            prev = k;
        }
        pairs.push((prev, top));
        prev = 0;
        for k in m - 1..size - 1 {
            pairs.push((prev, k));
            prev = k;
        }
        pairs.push((prev, top));
        let p = Poset::from_relation(size, pairs)?;
        let shape = try_lattice(&p).ok_or_else(|| Error::Internal("L(m, n) is not a lattice".into()))?;
        Ok(ForbiddenShape { kind: ShapeKind::L { m, n }, shape })
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn lattice(&self) -> &Lattice {
        &self.shape
    }

    /// Elements `x ≠ y` with `x ≺ z`, `y ≺ z` for which `(x ∧ y, x, y, z)`
    /// is not a covering square.
    pub fn lower_failure(&self) -> Option<(usize, usize, usize)> {
        lower_failure(&self.shape)
    }

    /// Elements `x ≠ y` with `z ≺ x`, `z ≺ y` for which `(z, x, y, x ∨ y)`
    /// is not a covering square.
    pub fn upper_failure(&self) -> Option<(usize, usize, usize)> {
        lower_failure(&self.shape.dual())
    }
}

fn lower_failure(l: &Lattice) -> Option<(usize, usize, usize)> {
    for z in 0..l.len() {
        let lows = l.poset().lower_covers(z);
        for (i, &x) in lows.iter().enumerate() {
            for &y in &lows[i + 1..] {
                let m = l.meet(x, y);
                if !(l.is_cover(m, x) && l.is_cover(m, y)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct ShapeCatalogue {
    b: ForbiddenShape,
    b_dual: ForbiddenShape,
    m3: ForbiddenShape,
}

fn parse_shape(kind: ShapeKind, doc: &str) -> Result<ForbiddenShape> {
    let missing = |why: String| Error::CatalogueMissing(format!("{kind:?}: {why}"));
    let doc: PosetDoc = serde_json::from_str(doc).map_err(|e| missing(e.to_string()))?;
    let p = doc.to_poset().map_err(|e| missing(e.to_string()))?;
    let shape = try_lattice(&p).ok_or_else(|| missing("not a lattice".into()))?;
    Ok(ForbiddenShape { kind, shape })
}

impl ShapeCatalogue {
    /// Parses and validates shape documents in poset JSON format.
    pub fn from_documents(b: &str, b_dual: &str, m3: &str) -> Result<Self> {
        let b = parse_shape(ShapeKind::B, b)?;
        let b_dual = parse_shape(ShapeKind::BDual, b_dual)?;
        let m3 = parse_shape(ShapeKind::M3, m3)?;
        if b.lower_failure().is_none() {
            return Err(Error::CatalogueMissing("B has no failing lower covering square".into()));
        }
        if !is_isomorphic(b_dual.shape.poset(), &b.shape.poset().dual()) {
            return Err(Error::CatalogueMissing("B' is not the dual of B".into()));
        }
        if b_dual.upper_failure().is_none() {
            return Err(Error::CatalogueMissing("B' has no failing upper covering square".into()));
        }
        if !is_isomorphic(m3.shape.poset(), Lattice::diamond(3).poset()) {
            return Err(Error::CatalogueMissing("M3 document is not M3".into()));
        }
        Ok(ShapeCatalogue { b, b_dual, m3 })
    }

    /// The catalogue shipped with the crate.
    pub fn builtin() -> Result<&'static ShapeCatalogue> {
        static CATALOGUE: OnceLock<Result<ShapeCatalogue>> = OnceLock::new();
        CATALOGUE
            .get_or_init(|| Self::from_documents(B_DOC, B_DUAL_DOC, M3_DOC))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn b(&self) -> &ForbiddenShape {
        &self.b
    }

    pub fn b_dual(&self) -> &ForbiddenShape {
        &self.b_dual
    }

    pub fn m3(&self) -> &ForbiddenShape {
        &self.m3
    }

    /// `B`, `B'` and every `L(m, n)` (with `m <= n`) that could occur as a
    /// cover-preserving sublattice of a lattice with `size` elements and
    /// length `length`.
    pub fn modularity_obstructions(&self, size: usize, length: usize) -> Vec<ForbiddenShape> {
        let mut out = vec![self.b.clone(), self.b_dual.clone()];
        for n in 4..=length + 1 {
            for m in 3..=n {
                if m + n - 2 <= size {
                    out.push(ForbiddenShape::l(m, n).expect("parameters in range"));
                }
            }
        }
        out
    }
}

/// Whether `host` has a sublattice isomorphic to the shape whose covering
/// pairs are covering pairs of `host`.
pub fn has_cover_preserving_copy(host: &Lattice, shape: &ForbiddenShape) -> bool {
    find_cover_preserving_embedding(host, &shape.shape).is_some()
}

/// An injective meet- and join-preserving map from `shape` into `host`
/// sending covers to covers, as `image[s]`.
pub fn find_cover_preserving_embedding(host: &Lattice, shape: &Lattice) -> Option<Vec<usize>> {
    if shape.len() > host.len() || shape.length() > host.length() {
        return None;
    }
    let plan = plan(shape);
    let mut search = Embedding {
        host,
        shape,
        plan: &plan,
        image: vec![usize::MAX; shape.len()],
        used: vec![false; host.len()],
    };
    search.extend(0).then_some(search.image)
}

#[derive(Clone, Copy, Debug)]
enum Source {
    Any,
    Meet(usize, usize),
    Join(usize, usize),
    UpperCoverOf(usize),
}

/// Placement order: the bottom first; afterwards any element that is the
/// meet or join of two placed ones (its image is then forced), otherwise an
/// element with a placed lower cover.
fn plan(shape: &Lattice) -> Vec<(usize, Source)> {
    let n = shape.len();
    let mut placed = vec![false; n];
    let mut order = vec![(shape.bottom(), Source::Any)];
    placed[shape.bottom()] = true;
    while order.len() < n {
        let mut next = None;
        'forced: for (i, &(a, _)) in order.iter().enumerate() {
            for &(b, _) in &order[..i] {
                let (m, j) = (shape.meet(a, b), shape.join(a, b));
                if !placed[m] {
                    next = Some((m, Source::Meet(a, b)));
                    break 'forced;
                }
                if !placed[j] {
                    next = Some((j, Source::Join(a, b)));
                    break 'forced;
                }
            }
        }
        if next.is_none() {
            next = order.iter().find_map(|&(c, _)| {
                shape
                    .poset()
                    .upper_covers(c)
                    .iter()
                    .find(|&&w| !placed[w])
                    .map(|&w| (w, Source::UpperCoverOf(c)))
            });
        }
        let (w, src) = next.expect("bounded shapes are reachable from the bottom");
        placed[w] = true;
        order.push((w, src));
    }
    order
}

struct Embedding<'a> {
    host: &'a Lattice,
    shape: &'a Lattice,
    plan: &'a [(usize, Source)],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Embedding<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.plan.len() {
            return true;
        }
        let (s, src) = self.plan[depth];
        let candidates: Vec<usize> = match src {
            Source::Any => (0..self.host.len()).collect(),
            Source::Meet(a, b) => vec![self.host.meet(self.image[a], self.image[b])],
            Source::Join(a, b) => vec![self.host.join(self.image[a], self.image[b])],
            Source::UpperCoverOf(c) => self.host.poset().upper_covers(self.image[c]).to_vec(),
        };
        for h in candidates {
            if self.used[h] || !self.consistent(depth, s, h) {
                continue;
            }
            self.image[s] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.image[s] = usize::MAX;
            self.used[h] = false;
        }
        false
    }

    fn consistent(&self, depth: usize, s: usize, h: usize) -> bool {
        let (host, shape) = (self.host, self.shape);
        self.plan[..depth].iter().all(|&(u, _)| {
            let g = self.image[u];
            if shape.leq(u, s) != host.leq(g, h) || shape.leq(s, u) != host.leq(h, g) {
                return false;
            }
            if (shape.is_cover(u, s) && !host.is_cover(g, h)) || (shape.is_cover(s, u) && !host.is_cover(h, g)) {
                return false;
            }
            // image of a shape element, counting `s` as already sent to `h`
            let image = |x: usize| if x == s { h } else { self.image[x] };
            let m = image(shape.meet(u, s));
            let j = image(shape.join(u, s));
            (m == usize::MAX || m == host.meet(g, h)) && (j == usize::MAX || j == host.join(g, h))
        })
    }
}

/// `(modular, distributive)` decided only through forbidden cover-preserving
/// sublattices.
pub fn jakubik_classify(l: &Lattice) -> Result<(bool, bool)> {
    let catalogue = ShapeCatalogue::builtin()?;
    let modular = !catalogue
        .modularity_obstructions(l.len(), l.length())
        .iter()
        .any(|s| has_cover_preserving_copy(l, s));
    let distributive = modular && !has_cover_preserving_copy(l, catalogue.m3());
    Ok((modular, distributive))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_loads_and_satisfies_witness_constraints() {
        let c = ShapeCatalogue::builtin().unwrap();
        assert!(c.b().lower_failure().is_some());
        assert!(c.b_dual().upper_failure().is_some());
        assert!(c.b().lattice().poset().len() == 7);
        for (m, n) in [(3, 4), (4, 4), (3, 6), (5, 7)] {
            let l = ForbiddenShape::l(m, n).unwrap();
            assert_eq!(l.lattice().len(), m + n - 2);
            assert!(l.lower_failure().is_some());
            assert!(!l.lattice().is_modular());
        }
        assert!(!c.b().lattice().is_modular());
        assert!(!c.b_dual().lattice().is_modular());
    }

    #[test]
    fn l_parameters_validated() {
        assert_eq!(ForbiddenShape::l(3, 3).unwrap_err(), Error::ShapeParameters { m: 3, n: 3 });
        assert!(ForbiddenShape::l(2, 5).is_err());
        let n5 = ForbiddenShape::l(3, 4).unwrap();
        assert!(is_isomorphic(n5.lattice().poset(), Lattice::pentagon().poset()));
    }

    #[test]
    fn corrupt_documents_are_rejected() {
        let err = ShapeCatalogue::from_documents("{", B_DUAL_DOC, M3_DOC).unwrap_err();
        assert_eq!(err.kind(), "catalogue_missing");
        let err = ShapeCatalogue::from_documents(B_DOC, B_DOC, M3_DOC).unwrap_err();
        assert_eq!(err.kind(), "catalogue_missing");
    }

    #[test]
    fn m3_embeddings() {
        let c = ShapeCatalogue::builtin().unwrap();
        let m3 = Lattice::diamond(3);
        assert!(has_cover_preserving_copy(&m3, c.m3()));
        assert!(!has_cover_preserving_copy(&Lattice::chain(5), c.m3()));
        assert!(!has_cover_preserving_copy(&Lattice::boolean(3), c.m3()));
    }

    #[test]
    fn classification_of_standard_lattices() {
        assert_eq!(jakubik_classify(&Lattice::diamond(3)).unwrap(), (true, false));
        assert_eq!(jakubik_classify(&Lattice::chain(2)).unwrap(), (true, true));
        assert_eq!(jakubik_classify(&Lattice::pentagon()).unwrap(), (false, false));
        assert_eq!(jakubik_classify(&Lattice::boolean(3)).unwrap(), (true, true));
        let c = ShapeCatalogue::builtin().unwrap();
        assert_eq!(jakubik_classify(c.b().lattice()).unwrap(), (false, false));
    }

    #[test]
    fn n5_inside_a_larger_lattice_but_not_cover_preserving() {
        // the hexagon contains N5 as a sublattice, never with covers kept
        let hex = ForbiddenShape::l(4, 4).unwrap();
        let n5 = ForbiddenShape::l(3, 4).unwrap();
        assert!(!has_cover_preserving_copy(hex.lattice(), &n5));
        assert!(has_cover_preserving_copy(hex.lattice(), &hex));
    }
}
