//! JSON documents for posets, tolerances and reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// `{"n": int, "covers": [[a, b], ...], "names": optional [string]}`.
///
/// Lattices use the same document; their tables are derived on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl PosetDoc {
    pub fn from_poset(p: &Poset, names: Option<Vec<String>>) -> Self {
        PosetDoc {
            n: p.len(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
            names,
        }
    }

    /// Validates the covers: they must be in range, acyclic, and exactly
    /// covering pairs of the order they generate.
    pub fn to_poset(&self) -> Result<Poset> {
        if let Some(names) = &self.names {
            if names.len() != self.n {
                return Err(Error::Index { index: names.len(), n: self.n });
            }
        }
        let pairs: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Poset::from_covers(self.n, &pairs)
    }

    /// Element names, defaulting to decimal indices.
    pub fn names_or_indices(&self) -> Vec<String> {
        self.names.clone().unwrap_or_else(|| (0..self.n).map(|i| i.to_string()).collect())
    }
}

/// Either the listed pairs (closed to a symmetric reflexive relation and then
/// verified), or the two-element blocks of a doubling tolerance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ToleranceDoc {
    Pairs { pairs: Vec<[usize; 2]> },
    PtEdges { pt_edges: Vec<[usize; 2]> },
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub criterion: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub suite: String,
    pub seed: u64,
    pub rows: Vec<ReportRow>,
}

impl ReportDoc {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

/// A self-describing document: `{"kind": "...", ...payload}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Poset(PosetDoc),
    Lattice(PosetDoc),
    Tolerance(ToleranceDoc),
    Report(ReportDoc),
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn parse(s: &str) -> serde_json::Result<Document> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_doc_round_trip() {
        let p = Poset::chain(3);
        let doc = PosetDoc::from_poset(&p, None);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"n":3,"covers":[[0,1],[1,2]]}"#);
        let back: PosetDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poset().unwrap(), p);
    }

    #[test]
    fn redundant_covers_rejected() {
        let doc: PosetDoc = serde_json::from_str(r#"{"n":3,"covers":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(doc.to_poset(), Err(Error::NotACover(0, 2)));
        let doc: PosetDoc = serde_json::from_str(r#"{"n":2,"covers":[[0,1]],"names":["x"]}"#).unwrap();
        assert!(doc.to_poset().is_err());
    }

    #[test]
    fn tolerance_doc_forms() {
        let a: ToleranceDoc = serde_json::from_str(r#"{"pairs":[[0,1]]}"#).unwrap();
        assert_eq!(a, ToleranceDoc::Pairs { pairs: vec![[0, 1]] });
        let b: ToleranceDoc = serde_json::from_str(r#"{"pt_edges":[[0,1]]}"#).unwrap();
        assert_eq!(b, ToleranceDoc::PtEdges { pt_edges: vec![[0, 1]] });
    }

    #[test]
    fn tagged_document() {
        let d = Document::Tolerance(ToleranceDoc::PtEdges { pt_edges: vec![[2, 3]] });
        let text = d.to_json();
        assert!(text.contains(r#""kind": "tolerance""#));
        assert_eq!(Document::parse(&text).unwrap(), d);
    }
}
