//! Registry of printed claims, each bound to an exact checker that compares
//! the printed statement with derived ground truth over a parameter range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequences::Sequences;

mod claims;

pub use claims::REGISTRY;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
    #[error("unsupported report format '{0}' (expected json or md)")]
    UnsupportedFormat(String),
    #[error("unknown profile '{0}' (expected quick or full)")]
    UnknownProfile(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Mismatch,
    NotCheckable,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Mismatch => "MISMATCH",
            Status::NotCheckable => "NOT_CHECKABLE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    /// `n <= 20`, series order 8.
    Quick,
    /// Registry defaults (`n <= 100`), series order 32.
    #[default]
    Full,
}

impl Profile {
    const QUICK_MAX_INDEX: usize = 20;

    pub fn series_order(self) -> usize {
        match self {
            Profile::Quick => 8,
            Profile::Full => 32,
        }
    }
}

impl FromStr for Profile {
    type Err = AuditError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(AuditError::UnknownProfile(other.to_string())),
        }
    }
}

/// What a claim is checked over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Indices `lo..=hi` (registry default for the full profile).
    Index { lo: usize, hi: usize },
    /// Series coefficients `0..=K`, with `K` taken from the profile.
    Series,
    /// A finite input set that does not scale with the profile.
    Fixed(&'static str),
}

/// Inclusive index range replacing a claim's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeOverride {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for RangeOverride {
    type Err = String;

    /// Parses `lo..hi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected lo..hi, got '{s}'"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(RangeOverride { lo, hi })
    }
}

/// Checker input: shared sequences and the resolved range.
pub struct Ctx<'a> {
    pub seqs: &'a Sequences,
    pub lo: usize,
    pub hi: usize,
}

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// Verbatim fragment of the printed statement.
    pub anchor: &'static str,
    pub domain: Domain,
    pub checker: fn(&Ctx) -> Verdict,
}

impl Claim {
    fn resolve(&self, profile: Profile, range: Option<RangeOverride>) -> (usize, usize, String) {
        match (self.domain, range) {
            (Domain::Fixed(label), _) => (0, 0, label.to_string()),
            (Domain::Series, Some(r)) => (0, r.hi, format!("0..{}", r.hi)),
            (Domain::Series, None) => {
                let k = profile.series_order();
                (0, k, format!("0..{k}"))
            }
            (Domain::Index { .. }, Some(r)) => (r.lo, r.hi, format!("{}..{}", r.lo, r.hi)),
            (Domain::Index { lo, hi }, None) => {
                let hi = match profile {
                    Profile::Quick => hi.min(Profile::QUICK_MAX_INDEX),
                    Profile::Full => hi,
                };
                (lo, hi, format!("{lo}..{hi}"))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(input: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Counterexample {
            input: input.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// Checker output before the registry metadata is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub derived_form: Option<String>,
    pub notes: String,
}

impl Verdict {
    pub fn pass(notes: impl Into<String>) -> Self {
        Verdict {
            status: Status::Pass,
            counterexample: None,
            derived_form: None,
            notes: notes.into(),
        }
    }

    pub fn fail(cx: Counterexample, notes: impl Into<String>) -> Self {
        Verdict {
            status: Status::Fail,
            counterexample: Some(cx),
            derived_form: None,
            notes: notes.into(),
        }
    }

    pub fn mismatch(derived: impl Into<String>, notes: impl Into<String>) -> Self {
        Verdict {
            status: Status::Mismatch,
            counterexample: None,
            derived_form: Some(derived.into()),
            notes: notes.into(),
        }
    }

    pub fn not_checkable(notes: impl Into<String>) -> Self {
        Verdict {
            status: Status::NotCheckable,
            counterexample: None,
            derived_form: None,
            notes: notes.into(),
        }
    }

    pub fn with_counterexample(mut self, cx: Counterexample) -> Self {
        self.counterexample = Some(cx);
        self
    }

    pub fn with_derived(mut self, derived: impl Into<String>) -> Self {
        self.derived_form = Some(derived.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub range: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived_form: Option<String>,
    pub notes: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub mismatch: usize,
    pub not_checkable: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn new(mut claims: Vec<ClaimResult>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &claims {
            *match c.status {
                Status::Pass => &mut summary.pass,
                Status::Fail => &mut summary.fail,
                Status::Mismatch => &mut summary.mismatch,
                Status::NotCheckable => &mut summary.not_checkable,
            } += 1;
        }
        AuditReport { claims, summary }
    }

    /// True if any claim is FAIL or MISMATCH.
    pub fn has_defects(&self) -> bool {
        self.summary.fail + self.summary.mismatch > 0
    }
}

pub fn find_claim(id: &str) -> Result<&'static Claim, AuditError> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| AuditError::UnknownClaim(id.to_string()))
}

fn execute(
    seqs: &Sequences,
    claim: &Claim,
    profile: Profile,
    range: Option<RangeOverride>,
) -> ClaimResult {
    let (lo, hi, range) = claim.resolve(profile, range);
    let v = (claim.checker)(&Ctx { seqs, lo, hi });
    ClaimResult {
        id: claim.id.to_string(),
        anchor: claim.anchor.to_string(),
        status: v.status,
        range,
        counterexample: v.counterexample,
        derived_form: v.derived_form,
        notes: v.notes,
    }
}

/// Runs one claim with the full-profile defaults unless overridden.
pub fn run_claim(id: &str, range: Option<RangeOverride>) -> Result<ClaimResult, AuditError> {
    run_claim_in(id, Profile::Full, range)
}

pub fn run_claim_in(
    id: &str,
    profile: Profile,
    range: Option<RangeOverride>,
) -> Result<ClaimResult, AuditError> {
    let claim = find_claim(id)?;
    Ok(execute(&Sequences::new(), claim, profile, range))
}

/// Runs every registered claim, sequentially and sharing one memo table.
pub fn run_all(profile: Profile) -> AuditReport {
    let seqs = Sequences::new();
    AuditReport::new(
        REGISTRY
            .iter()
            .map(|c| execute(&seqs, c, profile, None))
            .collect(),
    )
}

/// `json` (compact, schema key order) or `md` / `markdown` (one table row
/// per claim).
pub fn render_report(report: &AuditReport, format: &str) -> Result<String, AuditError> {
    match format {
        "json" => Ok(serde_json::to_string(report).expect("report serializes")),
        "md" | "markdown" => {
            let mut out = String::from("| id | status | range |\n|---|---|---|\n");
            for c in &report.claims {
                out.push_str(&format!("| {} | {} | {} |\n", c.id, c.status, c.range));
            }
            let s = &report.summary;
            out.push_str(&format!(
                "\npass: {}, fail: {}, mismatch: {}, not_checkable: {}\n",
                s.pass, s.fail, s.mismatch, s.not_checkable
            ));
            Ok(out)
        }
        other => Err(AuditError::UnsupportedFormat(other.to_string())),
    }
}
