//! Report generation behind the `qschur` binary.
//!
//! Every command produces a [`Report`], a list of checks each carrying an
//! anchor string naming the statement it exercises. Reports are sorted by
//! check id, so the same configuration and seed always give the same output.

mod suites;

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{enumerate_pr, lambda_pp, r_splits};
use crate::error::{Error, Result};
use crate::qmatrix::SuperMatrix;
use crate::schur::{schur_dimension, NormBasisElt};
use crate::symcomb::LParabolicClass;

pub use suites::run_suite;

/// Largest tensor space dimension accepted without `--force`.
pub const GUARD_LIMIT: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Action,
    Norms,
    Basis,
    Vanishing,
    Psi,
    Structure,
    Filtration,
    Brauer,
    Qmatrix,
    Levi,
    Classify,
    Bijections,
    All,
}

impl Suite {
    /// The suites `All` expands to.
    pub fn members(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Action, Norms, Basis, Vanishing, Psi, Structure, Filtration, Brauer, Qmatrix, Levi, Classify, Bijections],
            s => vec![s],
        }
    }

    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Command {
    Dim,
    Verify(Suite),
    Classify,
}

/// Parameters shared by every command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: usize,
    pub command: Command,
    pub format: Format,
    pub seed: u64,
    pub force: bool,
}

impl RunConfig {
    pub fn new(m: usize, n: usize, r: usize, l: usize, command: Command) -> Self {
        RunConfig { m, n, r, l, command, format: Format::Text, seed: 0, force: false }
    }

    /// Rejects even or small `l`, empty superspaces and (unless forced)
    /// tensor spaces above [`GUARD_LIMIT`].
    pub fn validate(&self) -> Result<()> {
        if self.l < 3 || self.l.is_multiple_of(2) {
            return Err(Error::Domain(format!("l must be odd and at least 3, got {}", self.l)));
        }
        if self.m + self.n == 0 {
            return Err(Error::Domain("m + n must be positive".into()));
        }
        if !self.force && self.tensor_dim() > GUARD_LIMIT {
            return Err(Error::Domain(format!(
                "(m+n)^r = {} exceeds {GUARD_LIMIT}; pass --force to run anyway",
                self.tensor_dim()
            )));
        }
        Ok(())
    }

    pub fn tensor_dim(&self) -> u128 {
        (self.m as u128 + self.n as u128).saturating_pow(self.r as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl ReportEntry {
    pub fn new(check: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        ReportEntry {
            check: check.into(),
            anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The result of a command: checks plus free-form listing lines.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub listing: Vec<String>,
}

impl Report {
    pub fn from_entries(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| a.check.cmp(&b.check));
        Report { entries, listing: Vec::new() }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    /// `0` when every check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        if self.listing.is_empty() {
            json!(self.entries)
        } else {
            json!({ "checks": self.entries, "listing": self.listing })
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("report serializes"),
            Format::Text => {
                let mut out = String::new();
                for line in &self.listing {
                    let _ = writeln!(out, "{line}");
                }
                for e in &self.entries {
                    let tag = if e.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{tag} {} [{}] {}", e.check, e.anchor, e.detail);
                }
                out
            }
        }
    }
}

/// `dim S(m|n, r)` from the norm basis triples and from matrix enumeration.
///
/// Disagreement is an internal inconsistency and is reported as an error.
pub fn cmd_dim(cfg: &RunConfig) -> Result<Report> {
    let triples = NormBasisElt::all(cfg.m, cfg.n, cfg.r, cfg.l).len();
    let matrices = SuperMatrix::enumerate(cfg.m, cfg.n, cfg.r).len();
    let formula = schur_dimension(cfg.m, cfg.n, cfg.r);
    if triples != matrices || matrices != formula {
        return Err(Error::Mismatch(format!(
            "triples {triples}, matrices {matrices}, closed form {formula} for ({}|{}, {})",
            cfg.m, cfg.n, cfg.r
        )));
    }
    let mut report = Report::from_entries(vec![ReportEntry::new(
        "dim.triples_vs_matrices",
        "dimension of the q-Schur superalgebra",
        true,
        format!("dim S({}|{}, {}) = {matrices}", cfg.m, cfg.n, cfg.r),
    )]);
    report.listing.push(matrices.to_string());
    Ok(report)
}

/// Runs the requested suite; `All` runs its members concurrently.
pub fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<Report> {
    cfg.validate()?;
    use rayon::prelude::*;
    let parts: Vec<Vec<ReportEntry>> =
        suite.members().into_par_iter().map(|s| run_suite(cfg, s)).collect::<Result<_>>()?;
    Ok(Report::from_entries(parts.into_iter().flatten().collect()))
}

/// Lists `P_r` by split, with the defect group `P_rbar` of each split.
pub fn cmd_classify(cfg: &RunConfig) -> Result<Report> {
    let (m, n, r, l) = (cfg.m, cfg.n, cfg.r, cfg.l);
    let mut listing = Vec::new();
    let mut entries = Vec::new();
    if r > m + n {
        listing.push(format!("warning: r = {r} > m + n = {}; the labels need not classify irreducibles", m + n));
    }
    let groups = enumerate_pr(m, n, r, l);
    let mut total = 0;
    for (rbar, labels) in &groups {
        let defect = LParabolicClass(rbar.1).standard_composition(r, l);
        listing.push(format!("rbar = {rbar:?}, defect group {:?}: {} labels", defect.parts(), labels.len()));
        for t in labels {
            listing.push(format!("  ({}, {}, {})", t.lam, t.xi, t.eta));
        }
        total += labels.len();
    }
    listing.push(format!("|P_r| = {total}"));
    entries.push(ReportEntry::new(
        "classify.splits",
        "index set of splits of r",
        groups.len() == r_splits(r, l).len(),
        format!("{} splits", groups.len()),
    ));
    if r <= m + n {
        let weights = lambda_pp(m, n, r, l).len();
        listing.push(format!("|tau Lambda++({m}|{n}, {r})| = {weights}"));
        entries.push(ReportEntry::new(
            "classify.count_vs_weights",
            "labels versus restricted super weights",
            weights == total,
            format!("{total} labels, {weights} weights"),
        ));
    }
    let mut report = Report::from_entries(entries);
    report.listing = listing;
    Ok(report)
}

/// Dispatches on the configured command.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    match cfg.command {
        Command::Dim => cmd_dim(cfg),
        Command::Verify(s) => cmd_verify(cfg, s),
        Command::Classify => cmd_classify(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_and_exit_codes() {
        let report = Report::from_entries(vec![
            ReportEntry::new("b.second", "anchor b", false, "0/1"),
            ReportEntry::new("a.first", "anchor a", true, "1/1"),
        ]);
        assert_eq!(report.entries[0].check, "a.first");
        assert_eq!(report.exit_code(), 1);
        let text = report.render(Format::Text);
        assert_eq!(text, "PASS a.first [anchor a] 1/1\nFAIL b.second [anchor b] 0/1\n");
        assert_eq!(report.to_json()[1]["status"], "fail");
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::All.members().len(), 12);
        assert_eq!(Suite::Brauer.name(), "brauer");
    }
}
