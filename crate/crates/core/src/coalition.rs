//! Coalition posets: subsets of a finite poset ordered by extensive
//! injections.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::doubling::{double_by_covers, CoverClause, DoubledElement, DoubledLattice};
use crate::error::{Error, Result};
use crate::iso::find_isomorphism;
use crate::lattice::{try_lattice, Lattice};
use crate::poset::Poset;
use crate::tolerance::{DoublingTolerance, Tolerance};

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_VAR: &str = "LATTICEKIT_CAP";
pub const DEFAULT_CAP: usize = 7;
/// Hard limit imposed by the `u64` mask representation.
const MASK_BITS: usize = 20;

/// The ground-set size cap for building coalition posets.
pub fn size_cap() -> usize {
    std::env::var(CAP_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > MASK_BITS {
        return Err(Error::SizeCap { n, cap: cap.min(MASK_BITS) });
    }
    Ok(())
}

/// A subset of the ground set `0..n`, as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(pub u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_members(members: impl IntoIterator<Item = usize>) -> Self {
        Coalition(members.into_iter().fold(0, |m, a| m | 1 << a))
    }

    pub fn full(n: usize) -> Self {
        Coalition((1u64 << n) - 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&a| self.contains(a))
    }

    pub fn with(self, a: usize) -> Self {
        Coalition(self.0 | 1 << a)
    }

    pub fn without(self, a: usize) -> Self {
        Coalition(self.0 & !(1 << a))
    }

    pub fn union(self, o: Self) -> Self {
        Coalition(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        Coalition(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        Coalition(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Kuhn's augmenting-path matching; `assign[j]` is the left vertex matched
/// to right vertex `j`.
fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], assign: &mut [Option<usize>]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if assign[j].map_or(true, |k| augment(k, adj, seen, assign)) {
            assign[j] = Some(i);
            return true;
        }
    }
    false
}

/// An injective `f: left → right` with `a ≤ f(a)`, if one exists.
fn extensive_matching(p: &Poset, left: Coalition, right: Coalition) -> Option<Vec<(usize, usize)>> {
    if left.len() > right.len() {
        return None;
    }
    let heights = p.heights();
    let mut xs: Vec<usize> = left.members().collect();
    xs.sort_by(|&a, &b| heights[b].cmp(&heights[a]).then(a.cmp(&b)));
    let ys: Vec<usize> = right.members().collect();
    let adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|&a| (0..ys.len()).filter(|&j| p.leq(a, ys[j])).collect())
        .collect();
    let mut assign = vec![None; ys.len()];
    for i in 0..xs.len() {
        let mut seen = vec![false; ys.len()];
        if !augment(i, &adj, &mut seen, &mut assign) {
            return None;
        }
    }
    let mut map: Vec<(usize, usize)> =
        assign.iter().enumerate().filter_map(|(j, i)| i.map(|i| (xs[i], ys[j]))).collect();
    map.sort_unstable();
    Some(map)
}

/// `x ≤ y` in the coalition order, by bipartite matching.
pub fn coalition_leq(p: &Poset, x: Coalition, y: Coalition) -> bool {
    extensive_matching(p, x, y).is_some()
}

/// Ranks of a chain's elements: `ranks[a] = |↓a| - 1`.
pub fn chain_ranks(p: &Poset) -> Result<Vec<usize>> {
    if !p.is_chain() {
        return Err(Error::NotAChain);
    }
    Ok((0..p.len()).map(|a| p.down_set(a).count_ones(..) - 1).collect())
}

fn ranks_desc(ranks: &[usize], c: Coalition) -> Vec<usize> {
    let mut r: Vec<usize> = c.members().map(|a| ranks[a]).collect();
    r.sort_unstable_by(|a, b| b.cmp(a));
    r
}

/// Chain fast path: sort both coalitions by rank, descending, and compare
/// elementwise.
pub fn chain_leq(ranks: &[usize], x: Coalition, y: Coalition) -> bool {
    let (rx, ry) = (ranks_desc(ranks, x), ranks_desc(ranks, y));
    rx.len() <= ry.len() && rx.iter().zip(&ry).all(|(a, b)| a <= b)
}

/// An extensive injection `x → y` that is the identity on `x ∩ y`, as
/// sorted `(a, f(a))` pairs.
pub fn extensive_map_fixing_intersection(p: &Poset, x: Coalition, y: Coalition) -> Result<Vec<(usize, usize)>> {
    if !coalition_leq(p, x, y) {
        return Err(Error::NotComparable);
    }
    let common = x.intersection(y);
    let rest = extensive_matching(p, x.difference(common), y.difference(common))
        .ok_or_else(|| Error::Internal(format!("no extensive map {x} -> {y} fixes {common}")))?;
    let mut map: Vec<(usize, usize)> = common.members().map(|a| (a, a)).chain(rest).collect();
    map.sort_unstable();
    Ok(map)
}

pub fn height(p: &Poset, x: usize) -> Result<usize> {
    if x >= p.len() {
        return Err(Error::Index { index: x, n: p.len() });
    }
    Ok(chain_ranks(p)?[x])
}

/// `str X = Σ_{u ∈ X} |↓u|`.
pub fn strength(p: &Poset, c: Coalition) -> Result<usize> {
    let ranks = chain_ranks(p)?;
    Ok(strength_with(&ranks, c))
}

fn strength_with(ranks: &[usize], c: Coalition) -> usize {
    c.members().map(|a| ranks[a] + 1).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeqMethod {
    Matching,
    /// Requires a chain.
    ChainFast,
}

/// `Coal(P)`, indexed by coalition bitmask.
#[derive(Clone, Debug)]
pub struct CoalitionPoset {
    ground: Poset,
    order: Poset,
    lattice: Option<Lattice>,
    ranks: Option<Vec<usize>>,
}

/// Builds `Coal(p)` under the cap from [`size_cap`].
pub fn build_coalition_poset(p: &Poset, method: LeqMethod) -> Result<CoalitionPoset> {
    build_coalition_poset_capped(p, method, size_cap())
}

pub fn build_coalition_poset_capped(p: &Poset, method: LeqMethod, cap: usize) -> Result<CoalitionPoset> {
    let n = p.len();
    check_cap(n, cap)?;
    let ranks = chain_ranks(p).ok();
    let size = 1usize << n;
    let order = match method {
        LeqMethod::Matching => {
            Poset::from_order_fn(size, |a, b| coalition_leq(p, Coalition(a as u64), Coalition(b as u64)))
        }
        LeqMethod::ChainFast => {
            let r = ranks.as_ref().ok_or(Error::NotAChain)?;
            Poset::from_order_fn(size, |a, b| chain_leq(r, Coalition(a as u64), Coalition(b as u64)))
        }
    }
    .map_err(|e| Error::Internal(format!("coalition order is not antisymmetric: {e}")))?;
    let lattice = try_lattice(&order);
    Ok(CoalitionPoset { ground: p.clone(), order, lattice, ranks })
}

impl CoalitionPoset {
    pub fn ground(&self) -> &Poset {
        &self.ground
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn lattice(&self) -> Option<&Lattice> {
        self.lattice.as_ref()
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice.is_some()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> {
        (0..self.len() as u64).map(Coalition)
    }

    pub fn leq(&self, a: Coalition, b: Coalition) -> bool {
        self.order.leq(a.index(), b.index())
    }

    pub fn is_cover(&self, a: Coalition, b: Coalition) -> bool {
        self.order.is_cover(a.index(), b.index())
    }

    pub fn meet(&self, a: Coalition, b: Coalition) -> Option<Coalition> {
        self.lattice.as_ref().map(|l| Coalition(l.meet(a.index(), b.index()) as u64))
    }

    pub fn join(&self, a: Coalition, b: Coalition) -> Option<Coalition> {
        self.lattice.as_ref().map(|l| Coalition(l.join(a.index(), b.index()) as u64))
    }

    /// Ranks of the ground chain.
    pub fn ranks(&self) -> Result<&[usize]> {
        self.ranks.as_deref().ok_or(Error::NotAChain)
    }

    pub fn strength(&self, c: Coalition) -> Result<usize> {
        Ok(strength_with(self.ranks()?, c))
    }

    fn chain_lattice(&self) -> Result<&Lattice> {
        self.ranks()?;
        self.lattice.as_ref().ok_or_else(|| Error::Internal("coalition poset of a chain is not a lattice".into()))
    }

    /// `δ(a) = P ∖ a`.
    pub fn complement(&self, a: Coalition) -> Coalition {
        Coalition::full(self.ground.len()).difference(a)
    }
}

/// `P ∖ a` for a chain `P`.
pub fn complement_dual(coal: &CoalitionPoset, a: Coalition) -> Result<Coalition> {
    coal.chain_lattice()?;
    Ok(coal.complement(a))
}

/// Whether `δ` reverses the order, swaps meets and joins, and is an
/// involution.
pub fn complement_is_dual_automorphism(coal: &CoalitionPoset) -> Result<bool> {
    let l = coal.chain_lattice()?;
    let d = |a: Coalition| coal.complement(a);
    for a in coal.coalitions() {
        if d(d(a)) != a {
            return Ok(false);
        }
        for b in coal.coalitions() {
            if coal.leq(a, b) != coal.leq(d(b), d(a)) {
                return Ok(false);
            }
            let (m, j) = (l.meet(a.index(), b.index()), l.join(a.index(), b.index()));
            if d(Coalition(m as u64)).index() != l.join(d(a).index(), d(b).index())
                || d(Coalition(j as u64)).index() != l.meet(d(a).index(), d(b).index())
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The four statements about `Coal(P)` checked for one poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterisationReport {
    pub upper_bound_free: bool,
    pub lower_bound_free: bool,
    pub is_lattice: bool,
    pub distributive: bool,
    pub product_isomorphic: bool,
}

impl CharacterisationReport {
    /// Lattice iff upper bound free.
    pub fn clause_i(&self) -> bool {
        self.is_lattice == self.upper_bound_free
    }

    /// `Coal(P) ≅ Π Coal(components)`.
    pub fn clause_ii(&self) -> bool {
        self.product_isomorphic
    }

    /// Lattice and lower bound free implies distributive.
    pub fn clause_iii(&self) -> bool {
        !(self.is_lattice && self.lower_bound_free) || self.distributive
    }

    /// Distributive implies lower bound free.
    pub fn clause_iv(&self) -> bool {
        !self.distributive || self.lower_bound_free
    }

    pub fn holds(&self) -> bool {
        self.clause_i() && self.clause_ii() && self.clause_iii() && self.clause_iv()
    }
}

pub fn coalition_characterisation(p: &Poset) -> Result<CharacterisationReport> {
    let cap = size_cap();
    let coal = build_coalition_poset_capped(p, LeqMethod::Matching, cap)?;
    let mut product = Poset::chain(1);
    for c in p.components() {
        let part = build_coalition_poset_capped(&c.poset, LeqMethod::Matching, cap)?;
        product = product.direct_product(part.order());
    }
    Ok(CharacterisationReport {
        upper_bound_free: p.is_upper_bound_free(),
        lower_bound_free: p.is_lower_bound_free(),
        is_lattice: coal.is_lattice(),
        distributive: coal.lattice().is_some_and(Lattice::is_distributive),
        product_isomorphic: find_isomorphism(coal.order(), &product).is_some(),
    })
}

/// Which way `b_i` is chosen in the meet recursion when `c ∉ A_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pick {
    LeastAbove,
    GreatestAbove,
}

/// `A₁ ∧ A₂` in `Coal(P)` for a chain, by removing the largest pairwise
/// meet `c` and recursing on `P ∖ {c}`.
pub fn chain_meet_recursive(ranks: &[usize], a1: Coalition, a2: Coalition, pick: Pick) -> Coalition {
    if a1.is_empty() || a2.is_empty() {
        return Coalition::EMPTY;
    }
    let top = |a: Coalition| a.members().max_by_key(|&x| ranks[x]).expect("nonempty");
    let (t1, t2) = (top(a1), top(a2));
    let c = if ranks[t1] <= ranks[t2] { t1 } else { t2 };
    let choose = |a: Coalition| {
        if a.contains(c) {
            return c;
        }
        let above = a.members().filter(|&x| ranks[x] > ranks[c]);
        match pick {
            Pick::LeastAbove => above.min_by_key(|&x| ranks[x]),
            Pick::GreatestAbove => above.max_by_key(|&x| ranks[x]),
        }
        .expect("c is the smaller of the two tops")
    };
    let (x1, x2) = (choose(a1), choose(a2));
    chain_meet_recursive(ranks, a1.without(x1), a2.without(x2), pick).with(c)
}

/// Sandwich bounds and the meet recursion for one pair of coalitions of a
/// chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub meet: Coalition,
    pub join: Coalition,
    pub meet_in_bounds: bool,
    pub join_in_bounds: bool,
    pub recursion: [Coalition; 2],
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.meet_in_bounds && self.join_in_bounds && self.recursion.iter().all(|&r| r == self.meet)
    }
}

pub fn chain_meet_sandwich(coal: &CoalitionPoset, a: Coalition, b: Coalition) -> Result<SandwichReport> {
    let l = coal.chain_lattice()?;
    let ranks = coal.ranks()?;
    let meet = Coalition(l.meet(a.index(), b.index()) as u64);
    let join = Coalition(l.join(a.index(), b.index()) as u64);
    let (lo, hi) = (a.intersection(b), a.union(b));
    let within = |x: Coalition| lo.is_subset(x) && x.is_subset(hi);
    Ok(SandwichReport {
        meet,
        join,
        meet_in_bounds: within(meet),
        join_in_bounds: within(join),
        recursion: [
            chain_meet_recursive(ranks, a, b, Pick::LeastAbove),
            chain_meet_recursive(ranks, a, b, Pick::GreatestAbove),
        ],
    })
}

/// The strength-and-exchange covering test for `a < b` in `Coal(P)`, `P` a
/// chain: `str b = str a + 1`, and either `a ⊂ b` or the two differ by one
/// exchanged element.
///
/// When the test succeeds with `a ⊂ b` or `|a| < |b|`, `b = a ∪ {0}` must
/// hold; a violation is reported as [`Error::Internal`].
pub fn chain_cover_test(coal: &CoalitionPoset, a: Coalition, b: Coalition) -> Result<bool> {
    let ranks = coal.ranks()?;
    if a == b || !coal.leq(a, b) {
        return Err(Error::NotStrictlyBelow);
    }
    let strength_step = strength_with(ranks, b) == strength_with(ranks, a) + 1;
    let shape = a.is_subset(b) || (a.len() == b.len() && a.len() == 1 + a.intersection(b).len());
    let covers = strength_step && shape;
    if covers && (a.is_subset(b) || a.len() < b.len()) {
        let zero = ranks.iter().position(|&r| r == 0).expect("nonempty chain");
        if b != a.with(zero) || a.contains(zero) {
            return Err(Error::Internal(format!("cover {a} < {b} is not the addition of the least element")));
        }
    }
    Ok(covers)
}

/// The clause of the covering characterization relative to `P′ = P ∖ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainClause {
    /// `0 ∉ A`, `B = A ∪ {0}`.
    AddZero,
    /// `0 ∉ A ∪ B`, `B ≠ A ∪ {w}`, `A ≺ B` in `Coal(P′)`.
    WithoutZero,
    /// `0 ∈ A ∩ B`, `B ≠ A ∪ {w}`, `A ∖ {0} ≺ B ∖ {0}` in `Coal(P′)`.
    WithZero,
    /// `0 ∈ A`, `w ∉ A`, `B = (A ∖ {0}) ∪ {w}`.
    ZeroToAtom,
}

impl ChainClause {
    /// The doubling clause this one corresponds to under `γ`.
    pub fn doubling_clause(self) -> CoverClause {
        match self {
            ChainClause::AddZero => CoverClause::Vertical,
            ChainClause::WithoutZero | ChainClause::WithZero => CoverClause::Level,
            ChainClause::ZeroToAtom => CoverClause::Drop,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ChainClause::AddZero => "cov*-1",
            ChainClause::WithoutZero => "cov*-2i",
            ChainClause::WithZero => "cov*-2ii",
            ChainClause::ZeroToAtom => "cov*-3",
        }
    }
}

/// A chain `P` with least element `0`, atom `w`, and `P′ = P ∖ {0}`,
/// together with `Coal(P)` and `Coal(P′)`.
#[derive(Clone, Debug)]
pub struct ChainContext {
    chain: Poset,
    zero: usize,
    w: usize,
    /// Elements of `P′`; element `i` of `P′` is `rest[i]` in `P`.
    rest: Vec<usize>,
    coal: CoalitionPoset,
    coal_prime: CoalitionPoset,
    prime_lattice: Arc<Lattice>,
}

impl ChainContext {
    pub fn new(chain: Poset) -> Result<Self> {
        Self::with_method(chain, LeqMethod::ChainFast)
    }

    pub fn with_method(chain: Poset, method: LeqMethod) -> Result<Self> {
        let ranks = chain_ranks(&chain)?;
        if chain.len() < 2 {
            return Err(Error::ChainTooShort);
        }
        let zero = ranks.iter().position(|&r| r == 0).expect("rank 0 exists");
        let w = ranks.iter().position(|&r| r == 1).expect("rank 1 exists");
        let rest: Vec<usize> = (0..chain.len()).filter(|&a| a != zero).collect();
        let prime = chain.induced(&rest);
        let coal = build_coalition_poset(&chain, method)?;
        let coal_prime = build_coalition_poset(&prime, method)?;
        let prime_lattice = Arc::new(coal_prime.chain_lattice()?.clone());
        coal.chain_lattice()?;
        Ok(ChainContext { chain, zero, w, rest, coal, coal_prime, prime_lattice })
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn of_length(k: usize) -> Result<Self> {
        Self::new(Poset::chain(k))
    }

    pub fn chain(&self) -> &Poset {
        &self.chain
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn atom(&self) -> usize {
        self.w
    }

    pub fn coal(&self) -> &CoalitionPoset {
        &self.coal
    }

    pub fn coal_prime(&self) -> &CoalitionPoset {
        &self.coal_prime
    }

    /// `w` as an element of `P′`.
    fn w_prime(&self) -> usize {
        self.rest.iter().position(|&a| a == self.w).expect("w lies in P'")
    }

    /// A coalition of `P′` as a coalition of `P`.
    pub fn lift(&self, a: Coalition) -> Coalition {
        Coalition::from_members(a.members().map(|i| self.rest[i]))
    }

    /// `a ∖ {0}` as a coalition of `P′`.
    pub fn restrict(&self, a: Coalition) -> Coalition {
        Coalition::from_members(
            self.rest.iter().enumerate().filter(|&(_, &x)| a.contains(x)).map(|(i, _)| i),
        )
    }

    pub fn classify(&self, a: Coalition, b: Coalition) -> Option<ChainClause> {
        let (z, w) = (self.zero, self.w);
        let prime_cover = |x: Coalition, y: Coalition| self.coal_prime.is_cover(self.restrict(x), self.restrict(y));
        if !a.contains(z) && b == a.with(z) {
            return Some(ChainClause::AddZero);
        }
        if !a.union(b).contains(z) && b != a.with(w) && prime_cover(a, b) {
            return Some(ChainClause::WithoutZero);
        }
        if a.intersection(b).contains(z) && b != a.with(w) && prime_cover(a.without(z), b.without(z)) {
            return Some(ChainClause::WithZero);
        }
        if a.contains(z) && !a.contains(w) && b == a.without(z).with(w) {
            return Some(ChainClause::ZeroToAtom);
        }
        None
    }

    /// `A T B` iff `A ∪ {w} = B ∪ {w}`, on `Coal(P′)`.
    pub fn t_w_tolerance(&self) -> Result<DoublingTolerance> {
        let n = self.coal_prime.len();
        let wp = self.w_prime();
        let mut rel = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in 0..n {
                if Coalition(a as u64).with(wp) == Coalition(b as u64).with(wp) {
                    rel[a].insert(b);
                }
            }
        }
        let t = Tolerance::verify(self.prime_lattice.clone(), rel)?;
        t.as_doubling()?.ok_or(Error::NotDoubling)
    }

    /// `γ(A, 0) = A`, `γ(A, 1) = A ∪ {0}`.
    pub fn gamma(&self, e: DoubledElement) -> Coalition {
        let a = self.lift(Coalition(e.x as u64));
        if e.level == 1 {
            a.with(self.zero)
        } else {
            a
        }
    }

    /// `Coal(P′) ∗ T_w`, built from the covering clauses.
    pub fn doubled(&self) -> Result<DoubledLattice> {
        double_by_covers(&self.t_w_tolerance()?)
    }

    /// A pair of doubled elements on which `γ` fails to be an isomorphism
    /// or maps a cover of one clause to a cover of a different clause.
    pub fn gamma_witness(&self) -> Result<Option<(DoubledElement, DoubledElement)>> {
        let d = self.doubled()?;
        let n = d.len();
        if n != self.coal.len() {
            return Err(Error::Internal(format!("doubled size {n} differs from |Coal(P)| = {}", self.coal.len())));
        }
        let image: Vec<Coalition> = (0..n).map(|i| self.gamma(DoubledElement::from_index(i))).collect();
        let mut hit = vec![false; n];
        for (i, c) in image.iter().enumerate() {
            if std::mem::replace(&mut hit[c.index()], true) {
                return Ok(Some((DoubledElement::from_index(i), DoubledElement::from_index(i))));
            }
        }
        let tol = d.tolerance();
        for u in 0..n {
            for v in 0..n {
                let (du, dv) = (DoubledElement::from_index(u), DoubledElement::from_index(v));
                if d.order().leq(u, v) != self.coal.leq(image[u], image[v]) {
                    return Ok(Some((du, dv)));
                }
                let left = crate::doubling::cover_clause(tol, du, dv).filter(|_| d.order().is_cover(u, v));
                let right = self.classify(image[u], image[v]).map(ChainClause::doubling_clause);
                if left != right {
                    return Ok(Some((du, dv)));
                }
            }
        }
        Ok(None)
    }

    pub fn gamma_iso_check(&self) -> Result<bool> {
        Ok(self.gamma_witness()?.is_none())
    }

    /// `str_P(X) = |X| + str_P′(X)` for every `X ⊆ P′`.
    pub fn strength_shift_holds(&self) -> Result<bool> {
        for x in self.coal_prime.coalitions() {
            let lifted = self.lift(x);
            if self.coal.strength(lifted)? != x.len() + self.coal_prime.strength(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn c(m: &[usize]) -> Coalition {
        Coalition::from_members(m.iter().copied())
    }

    /// Every extensive injection `x → y`, by brute force.
    fn all_extensive_maps(p: &Poset, x: Coalition, y: Coalition) -> Vec<Vec<(usize, usize)>> {
        fn go(p: &Poset, xs: &[usize], y: Coalition, used: Coalition, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            let Some((&a, rest)) = xs.split_first() else {
                out.push(acc.clone());
                return;
            };
            for b in y.difference(used).members() {
                if p.leq(a, b) {
                    acc.push((a, b));
                    go(p, rest, y, used.with(b), acc, out);
                    acc.pop();
                }
            }
        }
        let xs: Vec<usize> = x.members().collect();
        let mut out = Vec::new();
        go(p, &xs, y, Coalition::EMPTY, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn coalition_order_examples() {
        let p = Poset::chain(3);
        assert!(coalition_leq(&p, c(&[0, 1]), c(&[1, 2])));
        assert!(coalition_leq(&p, Coalition::EMPTY, c(&[2])));
        assert!(!coalition_leq(&p, c(&[2]), c(&[0, 1])));
        let ranks = chain_ranks(&p).unwrap();
        assert!(chain_leq(&ranks, c(&[0, 1]), c(&[1, 2])));
        assert!(!chain_leq(&ranks, c(&[2]), c(&[0, 1])));
    }

    #[test]
    fn matching_agrees_with_brute_force() {
        let v = Poset::from_relation(4, [(0, 1), (0, 2), (3, 2)]).unwrap();
        for p in [Poset::chain(4), v, Poset::antichain(3)] {
            let full = 1u64 << p.len();
            for x in 0..full {
                for y in 0..full {
                    let (x, y) = (Coalition(x), Coalition(y));
                    let maps = all_extensive_maps(&p, x, y);
                    assert_eq!(coalition_leq(&p, x, y), !maps.is_empty());
                    if let Ok(f) = extensive_map_fixing_intersection(&p, x, y) {
                        assert!(maps.contains(&f));
                        assert!(f.iter().all(|&(a, b)| !y.contains(a) || a == b));
                    } else {
                        assert!(maps.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn extensive_map_examples() {
        let p = Poset::chain(3);
        assert_eq!(extensive_map_fixing_intersection(&p, c(&[1]), c(&[1, 2])).unwrap(), vec![(1, 1)]);
        assert_eq!(extensive_map_fixing_intersection(&p, c(&[0, 1]), c(&[1, 2])).unwrap(), vec![(0, 2), (1, 1)]);
        let x = c(&[0, 2]);
        assert_eq!(all_extensive_maps(&p, x, x), vec![vec![(0, 0), (2, 2)]]);
        assert_eq!(extensive_map_fixing_intersection(&p, c(&[2]), c(&[0])), Err(Error::NotComparable));
    }

    #[test]
    fn strength_examples() {
        let p = Poset::chain(3);
        assert_eq!(strength(&p, c(&[0, 2])).unwrap(), 4);
        assert_eq!(strength(&p, Coalition::EMPTY).unwrap(), 0);
        assert_eq!(strength(&p, c(&[0, 1, 2])).unwrap(), 6);
        assert_eq!(height(&p, 2).unwrap(), 2);
        assert_eq!(strength(&Poset::antichain(2), c(&[0])), Err(Error::NotAChain));
    }

    #[test]
    fn small_coalition_posets() {
        let one = build_coalition_poset(&Poset::chain(1), LeqMethod::Matching).unwrap();
        assert!(one.order().is_chain() && one.len() == 2);
        let two = build_coalition_poset(&Poset::chain(2), LeqMethod::Matching).unwrap();
        assert!(two.order().is_chain());
        for (a, b) in [(0, 1), (1, 2), (2, 3)] {
            assert!(two.is_cover(Coalition(a), Coalition(b)));
        }
        let three = build_coalition_poset(&Poset::chain(3), LeqMethod::Matching).unwrap();
        let chain = [c(&[]), c(&[0]), c(&[1])];
        assert!(three.is_cover(chain[0], chain[1]) && three.is_cover(chain[1], chain[2]));
        let (x, y) = (c(&[0, 1]), c(&[2]));
        assert!(three.is_cover(c(&[1]), x) && three.is_cover(c(&[1]), y));
        assert!(three.is_cover(x, c(&[0, 2])) && three.is_cover(y, c(&[0, 2])));
        assert!(three.is_cover(c(&[0, 2]), c(&[1, 2])) && three.is_cover(c(&[1, 2]), c(&[0, 1, 2])));
        assert!(three.is_lattice());
    }

    #[test]
    fn cap_is_enforced() {
        let err = build_coalition_poset_capped(&Poset::chain(4), LeqMethod::Matching, 3).unwrap_err();
        assert_eq!(err, Error::SizeCap { n: 4, cap: 3 });
    }

    #[test]
    fn characterisation_examples() {
        let lambda = Poset::from_relation(3, [(0, 2), (1, 2)]).unwrap();
        let r = coalition_characterisation(&lambda).unwrap();
        assert!(!r.upper_bound_free && !r.is_lattice && r.holds());
        let two = Poset::chain(2).disjoint_union(&Poset::chain(2));
        let coal = build_coalition_poset(&two, LeqMethod::Matching).unwrap();
        let grid = Poset::chain(4).direct_product(&Poset::chain(4));
        assert!(is_isomorphic(coal.order(), &grid));
        assert!(coalition_characterisation(&two).unwrap().holds());
    }

    #[test]
    fn sandwich_examples() {
        let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::ChainFast).unwrap();
        let r = chain_meet_sandwich(&coal, c(&[0, 1]), c(&[2])).unwrap();
        assert!(r.holds());
        let r = chain_meet_sandwich(&coal, c(&[1]), c(&[2])).unwrap();
        assert_eq!(r.meet, c(&[1]));
        assert!(r.holds());
        let r = chain_meet_sandwich(&coal, c(&[0, 2]), c(&[0, 2])).unwrap();
        assert_eq!((r.meet, r.join), (c(&[0, 2]), c(&[0, 2])));
    }

    #[test]
    fn cover_test_examples() {
        let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::ChainFast).unwrap();
        assert!(chain_cover_test(&coal, c(&[1]), c(&[0, 1])).unwrap());
        assert!(chain_cover_test(&coal, c(&[1]), c(&[2])).unwrap());
        assert!(!chain_cover_test(&coal, c(&[0]), c(&[0, 1, 2])).unwrap());
        assert_eq!(chain_cover_test(&coal, c(&[2]), c(&[0])), Err(Error::NotStrictlyBelow));
    }

    #[test]
    fn classify_examples() {
        let ctx = ChainContext::of_length(3).unwrap();
        assert_eq!(ctx.classify(c(&[1]), c(&[0, 1])), Some(ChainClause::AddZero));
        assert_eq!(ctx.classify(c(&[0, 1]), c(&[0, 2])), Some(ChainClause::WithZero));
        assert_eq!(ctx.classify(c(&[0, 2]), c(&[1, 2])), Some(ChainClause::ZeroToAtom));
        assert_eq!(ctx.classify(c(&[0]), c(&[2])), None);
    }

    #[test]
    fn t_w_examples() {
        let ctx = ChainContext::of_length(2).unwrap();
        let t = ctx.t_w_tolerance().unwrap();
        assert_eq!(t.tolerance().blocks().unwrap().len(), 1);
        let ctx = ChainContext::of_length(3).unwrap();
        let t = ctx.t_w_tolerance().unwrap();
        // P' = {1, 2} has local indices 0 and 1, so {1} is mask 1 and {2} is mask 2
        assert_eq!(t.pt_edges(), &[(0, 1), (2, 3)]);
        assert!(t.is_congruence() && t.blocks_disjoint());
    }

    #[test]
    fn gamma_small_chains() {
        for k in 2..=4 {
            let ctx = ChainContext::of_length(k).unwrap();
            assert_eq!(ctx.gamma_witness().unwrap(), None);
            assert!(ctx.strength_shift_holds().unwrap());
            assert!(complement_is_dual_automorphism(ctx.coal()).unwrap());
        }
        let ctx = ChainContext::of_length(3).unwrap();
        assert_eq!(ctx.gamma(DoubledElement::new(1, 1)), c(&[0, 1]));
        assert_eq!(ctx.gamma(DoubledElement::new(2, 0)), c(&[2]));
    }

    #[test]
    fn complement_examples() {
        let coal = build_coalition_poset(&Poset::chain(3), LeqMethod::ChainFast).unwrap();
        assert_eq!(complement_dual(&coal, Coalition::EMPTY).unwrap(), c(&[0, 1, 2]));
        assert_eq!(complement_dual(&coal, c(&[0, 1])).unwrap(), c(&[2]));
        assert!(coal.leq(c(&[0, 1]), c(&[0, 2])) && coal.leq(c(&[1]), c(&[2])));
    }
}
