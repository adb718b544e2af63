use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use super::checks::Verdict;
use crate::usp::UspStatus;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub title: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Whether the relation itself has the square property; otherwise a
/// violating square or edge pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarePropertySummary {
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instance: String,
    pub seed: Option<u64>,
    /// `has-usp`, `usp-by-witness`, `not-usp` or `unknown`.
    pub usp: String,
    pub certified: bool,
    pub square_property: SquarePropertySummary,
    pub metadata: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
}

pub(crate) fn usp_label(status: &UspStatus) -> &'static str {
    match status {
        UspStatus::HasUsp => "has-usp",
        UspStatus::UspByWitness(_) => "usp-by-witness",
        UspStatus::NotUsp => "not-usp",
        UspStatus::Unknown { .. } => "unknown",
    }
}

const BUG_NOTE: &str = "a check failed on a certified USP-relation; this is an implementation bug";

impl Report {
    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let pass = self.entries.iter().filter(|e| e.verdict.is_pass()).count();
        let fail = self.entries.iter().filter(|e| e.verdict.is_fail()).count();
        (pass, fail, self.entries.len() - pass - fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.verdict.is_fail())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    /// A failure on a certified instance contradicts a proven statement.
    pub fn is_bug(&self) -> bool {
        self.certified && self.has_failures()
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "instance {}", self.instance);
        if let Some(seed) = self.seed {
            let _ = write!(out, " (seed {seed})");
        }
        out.push('\n');
        let _ = writeln!(out, "usp: {}", self.usp);
        match &self.square_property.witness {
            None => out.push_str("square property: yes\n"),
            Some(w) => {
                let _ = writeln!(out, "square property: no ({w})");
            }
        }
        for e in &self.entries {
            let _ = match &e.verdict {
                Verdict::Pass => writeln!(out, "PASS  {}", e.id),
                Verdict::Fail { witness } => writeln!(out, "FAIL  {}: {}", e.id, witness.message),
                Verdict::Skipped { reason } => writeln!(out, "SKIP  {}: {}", e.id, reason),
            };
        }
        let (p, f, s) = self.counts();
        let _ = writeln!(out, "summary: {p} passed, {f} failed, {s} skipped");
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "note {k}: {v}");
        }
        if self.is_bug() {
            let _ = writeln!(out, "error: {BUG_NOTE}");
        }
        out
    }

    /// One JSON object per line: a header, one record per statement, and a
    /// summary.
    pub fn to_json_lines(&self) -> String {
        let mut lines = vec![json!({
            "record": "instance",
            "instance": self.instance,
            "seed": self.seed,
            "usp": self.usp,
            "certified": self.certified,
            "square_property": self.square_property,
            "metadata": self.metadata,
        })];
        for e in &self.entries {
            let mut v = serde_json::to_value(e).expect("entries serialize");
            v["record"] = json!("statement");
            lines.push(v);
        }
        let (p, f, s) = self.counts();
        let mut summary = json!({
            "record": "summary",
            "passed": p,
            "failed": f,
            "skipped": s,
            "bug": self.is_bug(),
        });
        if self.is_bug() {
            summary["note"] = json!(BUG_NOTE);
        }
        lines.push(summary);
        let mut out = String::new();
        for l in lines {
            out.push_str(&l.to_string());
            out.push('\n');
        }
        out
    }
}
