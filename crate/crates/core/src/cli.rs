//! Command-line front end. Errors go to stderr as one JSON object and map
//! to distinct exit codes.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::coalition::{build_coalition_poset, chain_ranks, Coalition, LeqMethod};
use crate::doubling::{double_by_covers, double_definitional, DoubledLattice};
use crate::dot::{to_dot, to_dot_by_height};
use crate::error::Error;
use crate::io::{Document, PosetDoc, ReportDoc, ToleranceDoc};
use crate::lattice::{jakubik_classify, try_lattice, Lattice};
use crate::poset::Poset;
use crate::tolerance::{DoublingTolerance, Tolerance};
use crate::verify::{render_table, Runner, Suite, VerifyConfig};

pub mod exit {
    pub const VERIFY_FAILED: u8 = 1;
    pub const INVALID: u8 = 2;
    pub const NOT_MODULAR_OR_DOUBLING: u8 = 3;
    pub const DISAGREEMENT: u8 = 4;
    pub const IO: u8 = 5;
    pub const INTERNAL: u8 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("closure and covers constructions disagree")]
    Disagreement,
    #[error("{failed} of {total} criteria failed")]
    VerifyFailed { failed: usize, total: usize, first: Box<crate::io::ReportRow> },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed { .. } => exit::VERIFY_FAILED,
            CliError::Lib(Error::HostNotModular | Error::NotDoubling) => exit::NOT_MODULAR_OR_DOUBLING,
            CliError::Lib(Error::Internal(_)) => exit::INTERNAL,
            CliError::Lib(_) | CliError::Parse { .. } => exit::INVALID,
            CliError::Disagreement => exit::DISAGREEMENT,
            CliError::Io { .. } => exit::IO,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Disagreement => "construction_disagreement",
            CliError::VerifyFailed { .. } => "verify_failed",
        }
    }

    pub fn diagnostic(&self) -> serde_json::Value {
        let mut v = json!({
            "error": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::VerifyFailed { first, .. } = self {
            v["counterexample"] = serde_json::to_value(first).expect("rows serialize");
        }
        v
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "latticekit", version, about = "Finite lattices, tolerances, doubling and coalition lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the coalition poset of a chain or of a poset file.
    Coalition(CoalitionArgs),
    /// Double a modular lattice along a doubling tolerance.
    Double(DoubleArgs),
    /// Report structural properties of one poset or lattice.
    Check(CheckArgs),
    /// Run a property suite and print one line per criterion.
    Verify(VerifyArgs),
    /// Write the Hasse diagram of a poset document as DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct CoalitionSource {
    /// Use the chain 0 < 1 < ... < N-1.
    #[arg(long, group = "source")]
    pub chain: Option<usize>,
    /// Poset document.
    #[arg(long, group = "source")]
    pub poset: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoalitionArgs {
    #[command(flatten)]
    pub source: CoalitionSource,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closure,
    Covers,
    Both,
}

#[derive(Debug, Args)]
pub struct DoubleArgs {
    #[arg(long)]
    pub lattice: PathBuf,
    #[arg(long)]
    pub tolerance: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    pub method: MethodArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Poset or lattice document.
    pub input: PathBuf,
    /// Tolerance document to validate against the lattice.
    #[arg(long)]
    pub tolerance: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Doubling,
    Coalition,
    Jakubik,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Doubling => Suite::Doubling,
            SuiteArg::Coalition => Suite::Coalition,
            SuiteArg::Jakubik => Suite::Jakubik,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 6)]
    pub max_chain: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random doubling instances.
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    #[arg(long, default_value_t = 7)]
    pub max_lattice: usize,
    #[arg(long, default_value_t = 500)]
    pub equivalences: usize,
    /// Also write the report document here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Parse { path: path.to_owned(), message: e.to_string() }
}

/// A poset document, tagged or bare.
fn load_poset_doc(path: &Path) -> CliResult<PosetDoc> {
    let text = read(path)?;
    match Document::parse(&text) {
        Ok(Document::Poset(d) | Document::Lattice(d)) => Ok(d),
        Ok(_) => Err(parse_err(path, "expected a poset or lattice document")),
        Err(_) => serde_json::from_str(&text).map_err(|e| parse_err(path, e)),
    }
}

fn load_tolerance_doc(path: &Path) -> CliResult<ToleranceDoc> {
    let text = read(path)?;
    match Document::parse(&text) {
        Ok(Document::Tolerance(t)) => Ok(t),
        Ok(_) => Err(parse_err(path, "expected a tolerance document")),
        Err(_) => serde_json::from_str(&text).map_err(|e| parse_err(path, e)),
    }
}

fn pairs(v: &[[usize; 2]]) -> Vec<(usize, usize)> {
    v.iter().map(|&[a, b]| (a, b)).collect()
}

fn doubling_tolerance(host: Arc<Lattice>, doc: &ToleranceDoc) -> CliResult<DoublingTolerance> {
    Ok(match doc {
        ToleranceDoc::Pairs { pairs: p } => {
            Tolerance::from_pairs(host, &pairs(p))?.as_doubling()?.ok_or(Error::NotDoubling)?
        }
        ToleranceDoc::PtEdges { pt_edges } => DoublingTolerance::from_pt_edges(host, &pairs(pt_edges))?,
    })
}

fn coalition_name(c: Coalition, names: &[String]) -> String {
    let items: Vec<&str> = c.members().map(|a| names[a].as_str()).collect();
    format!("{{{}}}", items.join(","))
}

/// Poset document of a constructed lattice plus its meet and join tables.
fn lattice_json(kind: &str, p: &Poset, names: Vec<String>, lattice: Option<&Lattice>) -> serde_json::Value {
    let doc = PosetDoc::from_poset(p, Some(names));
    let mut v = serde_json::to_value(&doc).expect("poset documents serialize");
    v["kind"] = json!(kind);
    v["is_lattice"] = json!(lattice.is_some());
    if let Some(l) = lattice {
        let n = l.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        v["meet"] = json!(table(&|a, b| l.meet(a, b)));
        v["join"] = json!(table(&|a, b| l.join(a, b)));
    }
    v
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn cmd_coalition(args: &CoalitionArgs) -> CliResult<()> {
    let (ground, names) = match (&args.source.chain, &args.source.poset) {
        (Some(n), _) => (Poset::chain(*n), (0..*n).map(|i| i.to_string()).collect()),
        (None, Some(path)) => {
            let doc = load_poset_doc(path)?;
            (doc.to_poset()?, doc.names_or_indices())
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let coal = build_coalition_poset(&ground, LeqMethod::Matching)?;
    let labels: Vec<String> = coal.coalitions().map(|c| coalition_name(c, &names)).collect();
    let kind = if coal.is_lattice() { "lattice" } else { "poset" };
    write(args.out.as_deref(), &pretty(&lattice_json(kind, coal.order(), labels.clone(), coal.lattice())))?;
    if let Some(dot) = &args.dot {
        let text = match chain_ranks(&ground) {
            Ok(_) => {
                let rank: Vec<usize> = coal.coalitions().map(|c| coal.strength(c)).collect::<Result<_, _>>()?;
                to_dot(coal.order(), &labels, &rank)
            }
            Err(_) => to_dot_by_height(coal.order(), &labels),
        };
        write(Some(dot), &text)?;
    }
    Ok(())
}

fn cmd_double(args: &DoubleArgs) -> CliResult<()> {
    let doc = load_poset_doc(&args.lattice)?;
    let host = Arc::new(try_lattice(&doc.to_poset()?).ok_or(Error::NotALattice)?);
    let tol = doubling_tolerance(host, &load_tolerance_doc(&args.tolerance)?)?;
    let d: DoubledLattice = match args.method {
        MethodArg::Closure => double_definitional(&tol)?,
        MethodArg::Covers => double_by_covers(&tol)?,
        MethodArg::Both => {
            let a = double_definitional(&tol)?;
            let b = double_by_covers(&tol)?;
            if a.order() != b.order() {
                return Err(CliError::Disagreement);
            }
            b
        }
    };
    let names = d.names(&doc.names_or_indices());
    write(args.out.as_deref(), &pretty(&lattice_json("lattice", d.order(), names.clone(), None)))?;
    if let Some(dot) = &args.dot {
        write(Some(dot), &to_dot_by_height(d.order(), &names))?;
    }
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> CliResult<()> {
    let doc = load_poset_doc(&args.input)?;
    let p = doc.to_poset()?;
    let mut v = json!({
        "n": p.len(),
        "length": p.length(),
        "bounded": p.is_bounded(),
        "chain": p.is_chain(),
        "upper_bound_free": p.is_upper_bound_free(),
        "lower_bound_free": p.is_lower_bound_free(),
        "components": p.components().len(),
    });
    let lattice = try_lattice(&p);
    v["is_lattice"] = json!(lattice.is_some());
    if let Some(l) = &lattice {
        let (m, d) = jakubik_classify(l)?;
        v["modular"] = json!(l.is_modular());
        v["distributive"] = json!(l.is_distributive());
        v["shapes_agree"] = json!((m, d) == (l.is_modular(), l.is_distributive()));
        v["covering_squares"] = json!(l.covering_squares().len());
    }
    if let Some(path) = &args.tolerance {
        let host = Arc::new(lattice.ok_or(Error::NotALattice)?);
        let t = match load_tolerance_doc(path)? {
            ToleranceDoc::Pairs { pairs: ps } => Tolerance::from_pairs(host, &pairs(&ps))?,
            ToleranceDoc::PtEdges { pt_edges } => {
                DoublingTolerance::from_pt_edges(host, &pairs(&pt_edges))?.tolerance().clone()
            }
        };
        let blocks: Vec<[usize; 2]> = t.blocks()?.iter().map(|b| [b.lo, b.hi]).collect();
        let doubling = match t.as_doubling() {
            Ok(d) => json!(d.is_some()),
            Err(Error::HostNotModular) => json!(null),
            Err(e) => return Err(e.into()),
        };
        v["tolerance"] = json!({
            "blocks": blocks,
            "congruence": t.is_congruence_definitional(),
            "doubling": doubling,
        });
    }
    write(None, &pretty(&v))
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    let cfg = VerifyConfig {
        seed: args.seed,
        max_chain: args.max_chain,
        instances: args.instances,
        max_lattice: args.max_lattice,
        equivalences: args.equivalences,
    };
    let report: ReportDoc = Runner::new(cfg).run(args.suite.into());
    print!("{}", render_table(&report));
    if let Some(out) = &args.out {
        write(Some(out), &Document::Report(report.clone()).to_json())?;
    }
    let failed: Vec<_> = report.rows.iter().filter(|r| !r.passed).collect();
    match failed.first() {
        None => Ok(()),
        Some(first) => Err(CliError::VerifyFailed {
            failed: failed.len(),
            total: report.rows.len(),
            first: Box::new((*first).clone()),
        }),
    }
}

fn cmd_export_dot(args: &ExportDotArgs) -> CliResult<()> {
    let doc = load_poset_doc(&args.input)?;
    let p = doc.to_poset()?;
    write(args.out.as_deref(), &to_dot_by_height(&p, &doc.names_or_indices()))
}

pub fn execute(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Coalition(a) => cmd_coalition(a),
        Command::Double(a) => cmd_double(a),
        Command::Check(a) => cmd_check(a),
        Command::Verify(a) => cmd_verify(a),
        Command::ExportDot(a) => cmd_export_dot(a),
    }
}

/// Parses the process arguments, runs, and returns the exit code.
pub fn run() -> std::process::ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            std::process::ExitCode::from(e.exit_code())
        }
    }
}
