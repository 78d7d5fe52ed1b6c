//! Property suites. Each criterion returns one [`ReportRow`]; a failing row
//! carries the first counterexample in its detail.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::coalition::{
    build_coalition_poset, chain_cover_test, chain_leq, chain_meet_sandwich, coalition_leq,
    complement_is_dual_automorphism, coalition_characterisation, ChainContext, LeqMethod,
};
use crate::doubling::{double_by_covers, double_definitional, DoubledLattice};
use crate::enumerate::{lattices_up_to, posets};
use crate::error::Error;
use crate::generate::{doubling_instances, random_interval_partition, rng, Instance};
use crate::io::{ReportDoc, ReportRow};
use crate::iso::is_isomorphic;
use crate::lattice::{jakubik_classify, Lattice};
use crate::poset::Poset;
use crate::tolerance::{is_congruence_by_compatibility, is_congruence_gratzer, DoublingTolerance, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Doubling,
    Coalition,
    Jakubik,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Doubling => "doubling",
            Suite::Coalition => "coalition",
            Suite::Jakubik => "jakubik",
            Suite::All => "all",
        }
    }

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Doubling => &[1, 2, 3, 8],
            Suite::Coalition => &[4, 5, 6, 9],
            Suite::Jakubik => &[7],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest chain for the coalition criteria; exhaustive pair checks
    /// stop at `min(max_chain, 5)`.
    pub max_chain: usize,
    /// Random (host, tolerance) instances on top of the hand-built ones.
    pub instances: usize,
    /// Largest enumerated lattice.
    pub max_lattice: usize,
    /// Interval-class equivalences for the congruence-test comparison.
    pub equivalences: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 1, max_chain: 6, instances: 200, max_lattice: 7, equivalences: 500 }
    }
}

impl VerifyConfig {
    fn small_chain(&self) -> usize {
        self.max_chain.min(5)
    }
}

type Outcome = Result<String, String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn lib<T>(what: &str, r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {} ({})", e, e.kind()))
}

struct Doubled {
    closure: DoubledLattice,
    covers: DoubledLattice,
}

/// Shared fixtures, built on first use.
pub struct Runner {
    cfg: VerifyConfig,
    instances: OnceCell<Vec<Instance>>,
    doubled: OnceCell<Vec<Result<Doubled, String>>>,
    chains: OnceCell<Result<Vec<ChainContext>, String>>,
}

impl Runner {
    pub fn new(cfg: VerifyConfig) -> Self {
        Runner { cfg, instances: OnceCell::new(), doubled: OnceCell::new(), chains: OnceCell::new() }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    fn instances(&self) -> &[Instance] {
        self.instances.get_or_init(|| doubling_instances(self.cfg.seed, self.cfg.instances))
    }

    fn doubled(&self) -> &[Result<Doubled, String>] {
        self.doubled.get_or_init(|| {
            self.instances()
                .iter()
                .map(|i| {
                    let closure = lib(&i.name, double_definitional(&i.tolerance))?;
                    let covers = lib(&i.name, double_by_covers(&i.tolerance))?;
                    Ok(Doubled { closure, covers })
                })
                .collect()
        })
    }

    fn chains(&self) -> Result<&[ChainContext], String> {
        self.chains
            .get_or_init(|| {
                (2..=self.cfg.max_chain)
                    .map(|k| lib(&format!("chain {k}"), ChainContext::of_length(k)))
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn hosts(&self) -> Vec<Arc<Lattice>> {
        self.instances().iter().map(|i| i.tolerance.host().clone()).collect()
    }

    pub fn criterion(&self, k: u8) -> ReportRow {
        let (label, outcome) = match k {
            1 => ("1 doubling yields a modular lattice", self.c1()),
            2 => ("2 closure and cover constructions agree", self.c2()),
            3 => ("3 equality tolerance gives the product", self.c3()),
            4 => ("4 T_w doubling congruence and gamma isomorphism", self.c4()),
            5 => ("5 chain covering clauses", self.c5()),
            6 => ("6 coalition poset structure", self.c6()),
            7 => ("7 forbidden shapes agree with identities", self.c7()),
            8 => ("8 tolerance kernel properties", self.c8()),
            9 => ("9 meet sandwich and recursion", self.c9()),
            _ => ("unknown criterion", fail(format!("no criterion {k}"))),
        };
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        ReportRow { criterion: label.to_string(), passed, detail }
    }

    pub fn run(&self, suite: Suite) -> ReportDoc {
        let rows = suite.criteria().iter().map(|&k| self.criterion(k)).collect();
        ReportDoc { suite: suite.name().to_string(), seed: self.cfg.seed, rows }
    }

    fn c1(&self) -> Outcome {
        let mut max_host = 0;
        for (inst, d) in self.instances().iter().zip(self.doubled()) {
            let d = d.as_ref().map_err(Clone::clone)?;
            let host = inst.tolerance.host();
            let l = d.covers.lattice();
            max_host = max_host.max(host.len());
            if l.len() != 2 * host.len() {
                return fail(format!("{}: |L*T| = {} but |L| = {}", inst.name, l.len(), host.len()));
            }
            if l.length() > 2 * (host.length() + 1) {
                return fail(format!("{}: length {} too large", inst.name, l.length()));
            }
            if !l.is_modular() {
                return fail(format!("{}: doubled lattice is not modular", inst.name));
            }
            if host.is_distributive() && !l.is_distributive() {
                return fail(format!("{}: distributive host, non-distributive double", inst.name));
            }
        }
        Ok(format!("{} instances, hosts up to {} elements", self.instances().len(), max_host))
    }

    fn c2(&self) -> Outcome {
        for (inst, d) in self.instances().iter().zip(self.doubled()) {
            let d = d.as_ref().map_err(Clone::clone)?;
            let name = &inst.name;
            if d.closure.order() != d.covers.order() {
                return fail(format!("{name}: order matrices differ"));
            }
            let c = &d.covers;
            if let Some((u, v)) = c.clause_mismatch() {
                return fail(format!("{name}: covering clauses disagree at {u} -> {v}"));
            }
            let checks = [
                (c.projection_monotone(), "projection is not monotone"),
                (c.no_upper_below_its_lower(), "(x,1) <= (x,0)"),
                (c.drop_covers_match_pt_edges(), "drop covers differ from pt-edges"),
                (c.covering_square_witness().is_none(), "covering square missing"),
                (c.level_join_holds(), "join of level covers"),
            ];
            if let Some((_, what)) = checks.iter().find(|c| !c.0) {
                return fail(format!("{name}: {what}"));
            }
        }
        Ok(format!("{} instances, identical orders", self.instances().len()))
    }

    fn c3(&self) -> Outcome {
        let hosts = self.hosts();
        let two = Lattice::chain(2);
        for host in &hosts {
            let t = lib("equality", DoublingTolerance::equality(host.clone()))?;
            let d = lib("equality", double_by_covers(&t))?;
            if !is_isomorphic(d.order(), host.product(&two).poset()) {
                return fail(format!("host of size {}: L*T not isomorphic to L x 2", host.len()));
            }
        }
        Ok(format!("{} hosts", hosts.len()))
    }

    fn c4(&self) -> Outcome {
        let chains = self.chains()?;
        let mut pairs = 0usize;
        for ctx in chains {
            let k = ctx.chain().len();
            let ranks = lib("ranks", ctx.coal().ranks())?;
            for a in ctx.coal().coalitions() {
                for b in ctx.coal().coalitions() {
                    pairs += 1;
                    if coalition_leq(ctx.chain(), a, b) != chain_leq(ranks, a, b) {
                        return fail(format!("chain {k}: matching and sorted comparison differ on {a}, {b}"));
                    }
                }
            }
            let t = lib(&format!("chain {k}: T_w"), ctx.t_w_tolerance())?;
            if !t.is_congruence() {
                return fail(format!("chain {k}: T_w is not a congruence"));
            }
            if let Some((u, v)) = lib("gamma", ctx.gamma_witness())? {
                return fail(format!("chain {k}: gamma fails at {u}, {v}"));
            }
            let distributive = |c: &crate::coalition::CoalitionPoset| c.lattice().is_some_and(Lattice::is_distributive);
            if !distributive(ctx.coal()) || !distributive(ctx.coal_prime()) {
                return fail(format!("chain {k}: coalition lattice is not distributive"));
            }
        }
        Ok(format!("chains 2..={}, {pairs} order pairs matched", self.cfg.max_chain))
    }

    fn c5(&self) -> Outcome {
        let mut pairs = 0usize;
        for k in 2..=self.cfg.small_chain() {
            let ctx = lib("context", ChainContext::of_length(k))?;
            let coal = ctx.coal();
            if !lib("strength", ctx.strength_shift_holds())? {
                return fail(format!("chain {k}: strength shift"));
            }
            for a in coal.coalitions() {
                for b in coal.coalitions() {
                    pairs += 1;
                    let cover = coal.is_cover(a, b);
                    if ctx.classify(a, b).is_some() != cover {
                        return fail(format!("chain {k}: clause classification wrong for {a}, {b}"));
                    }
                    if a == b || !coal.leq(a, b) {
                        continue;
                    }
                    if lib(&format!("chain {k}: {a} < {b}"), chain_cover_test(coal, a, b))? != cover {
                        return fail(format!("chain {k}: strength test wrong for {a}, {b}"));
                    }
                    let (sa, sb) = (lib("str", coal.strength(a))?, lib("str", coal.strength(b))?);
                    if sa >= sb {
                        return fail(format!("chain {k}: strength not increasing on {a} < {b}"));
                    }
                }
            }
        }
        Ok(format!("chains 2..={}, {pairs} pairs", self.cfg.small_chain()))
    }

    fn c6(&self) -> Outcome {
        let mut count = 0;
        let mut lattices = 0;
        for n in 0..=self.cfg.small_chain() {
            for p in posets(n) {
                count += 1;
                let r = lib("characterisation", coalition_characterisation(&p))?;
                lattices += r.is_lattice as usize;
                if !r.holds() {
                    let doc = crate::io::PosetDoc::from_poset(&p, None);
                    return fail(format!("{r:?} for {}", serde_json::to_string(&doc).unwrap()));
                }
            }
        }
        Ok(format!("{count} posets up to {}, {lattices} with a coalition lattice", self.cfg.small_chain()))
    }

    fn c7(&self) -> Outcome {
        let enumerated = lattices_up_to(self.cfg.max_lattice);
        let hosts = self.hosts();
        let mut doubled = Vec::new();
        for d in self.doubled() {
            doubled.push(d.as_ref().map_err(Clone::clone)?.covers.lattice());
        }
        let all = enumerated.iter().chain(hosts.iter().map(|h| &**h)).chain(doubled.iter().copied());
        let mut counts = [0usize; 2];
        for l in all {
            let by_shapes = lib("catalogue", jakubik_classify(l))?;
            let by_identities = (l.is_modular(), l.is_distributive());
            counts[by_identities.0 as usize] += 1;
            if by_shapes != by_identities {
                let doc = crate::io::PosetDoc::from_poset(l.poset(), None);
                return fail(format!(
                    "shapes say {by_shapes:?}, identities say {by_identities:?} on {}",
                    serde_json::to_string(&doc).unwrap()
                ));
            }
        }
        Ok(format!(
            "{} enumerated lattices up to {}, {} fuzzed hosts and their doubles ({} non-modular in total)",
            enumerated.len(),
            self.cfg.max_lattice,
            hosts.len(),
            counts[0]
        ))
    }

    fn c8(&self) -> Outcome {
        let mut tolerances: Vec<(String, Tolerance)> =
            self.instances().iter().map(|i| (i.name.clone(), i.tolerance.tolerance().clone())).collect();
        for ctx in self.chains()? {
            let t = lib("T_w", ctx.t_w_tolerance())?;
            tolerances.push((format!("T_w chain {}", ctx.chain().len()), t.tolerance().clone()));
        }
        for (name, t) in &tolerances {
            let blocks = lib(name, t.blocks())?;
            let los: BTreeSet<usize> = blocks.iter().map(|b| b.lo).collect();
            let his: BTreeSet<usize> = blocks.iter().map(|b| b.hi).collect();
            if los.len() != blocks.len() || his.len() != blocks.len() {
                return fail(format!("{name}: two blocks share an endpoint"));
            }
            if let Some(w) = t.transposed_edge_violation() {
                return fail(format!("{name}: transposed edges {w:?} disagree"));
            }
            let d = lib(name, t.as_doubling())?.ok_or_else(|| format!("{name}: not doubling"))?;
            if t.is_congruence_definitional() != d.blocks_disjoint() {
                return fail(format!("{name}: congruence does not match block disjointness"));
            }
        }
        let mut hosts: Vec<Arc<Lattice>> = lattices_up_to(6).into_iter().filter(|l| l.len() >= 2).map(Arc::new).collect();
        hosts.extend(self.hosts().into_iter().filter(|h| h.len() <= 24).take(20));
        let mut r = rng(self.cfg.seed ^ 0x5eed);
        let mut congruences = 0;
        for i in 0..self.cfg.equivalences {
            let host = &hosts[i % hosts.len()];
            let classes = random_interval_partition(&mut r, host);
            let quick = lib("interval classes", is_congruence_gratzer(host, &classes))?;
            let slow = lib("interval classes", is_congruence_by_compatibility(host, &classes))?;
            congruences += slow as usize;
            if quick != slow {
                let doc = crate::io::PosetDoc::from_poset(host.poset(), None);
                return fail(format!(
                    "covering test {quick}, definition {slow} for classes {classes:?} on {}",
                    serde_json::to_string(&doc).unwrap()
                ));
            }
        }
        Ok(format!(
            "{} tolerances; {} interval equivalences ({} congruences)",
            tolerances.len(),
            self.cfg.equivalences,
            congruences
        ))
    }

    fn c9(&self) -> Outcome {
        let mut pairs = 0usize;
        for k in 1..=self.cfg.small_chain() {
            let coal = lib("coalitions", build_coalition_poset(&Poset::chain(k), LeqMethod::ChainFast))?;
            for a in coal.coalitions() {
                for b in coal.coalitions() {
                    pairs += 1;
                    let r = lib("sandwich", chain_meet_sandwich(&coal, a, b))?;
                    if !r.holds() {
                        return fail(format!("chain {k}: {a}, {b}: {r:?}"));
                    }
                }
            }
            if !lib("complement", complement_is_dual_automorphism(&coal))? {
                return fail(format!("chain {k}: complementation is not a dual automorphism"));
            }
        }
        Ok(format!("chains 1..={}, {pairs} pairs", self.cfg.small_chain()))
    }
}

pub fn run_suite(suite: Suite, cfg: VerifyConfig) -> ReportDoc {
    Runner::new(cfg).run(suite)
}

/// One aligned line per row.
pub fn render_table(report: &ReportDoc) -> String {
    report
        .rows
        .iter()
        .map(|r| format!("{:<4} {:<50} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.criterion, r.detail))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_suite_passes() {
        let cfg = VerifyConfig { max_chain: 2, instances: 3, max_lattice: 5, equivalences: 20, ..Default::default() };
        let report = run_suite(Suite::All, cfg);
        assert_eq!(report.rows.len(), 9);
        assert!(report.passed(), "{}", render_table(&report));
    }
}
