use serde::Serialize;

use crate::chardeg::{character_degrees, DegreeData};
use crate::constructions::corpus::{CorpusEntry, Source};
use crate::constructions::realize::realize;
use crate::error::Result;
use crate::graphs::{build_graph, classify_shape, GraphKind, ShapeClass};
use crate::group::{DerivedSeriesReport, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Group-level results for a recomputed entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub order: u128,
    pub classes: usize,
    pub degrees: DegreeData,
    pub derived_series: DerivedSeriesReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub source: String,
    pub recorded_only: bool,
    pub status: Status,
    pub claimed_cd: Vec<u64>,
    pub computed: Option<Computed>,
    pub claimed_shape: String,
    /// Shape of B built from the computed cd, or from the claimed cd for
    /// recorded entries.
    pub shape: Option<ShapeClass>,
    pub label: Option<String>,
    pub cite: String,
    /// Why the entry failed; empty on a pass.
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn compute(spec: &crate::constructions::GroupSpec, limits: Limits) -> Result<Computed> {
    let group = realize(spec, limits)?;
    let degrees = character_degrees(&group)?;
    Ok(Computed {
        order: group.order(),
        classes: group.conjugacy_classes()?.len(),
        degrees,
        derived_series: group.derived_series()?,
    })
}

pub fn verify_entry(entry: &CorpusEntry, limits: Limits) -> EntryReport {
    let mut problems = Vec::new();
    let mut computed = None;
    let cd = match &entry.source {
        Source::RecordedOnly => Some(entry.claimed_cd.clone()),
        Source::Spec(spec) => match compute(spec, limits) {
            Ok(c) => {
                if c.degrees.cd != entry.claimed_cd {
                    problems.push(format!(
                        "cd mismatch: claimed {:?}, computed {:?}",
                        entry.claimed_cd, c.degrees.cd
                    ));
                }
                let cd = c.degrees.cd.clone();
                computed = Some(c);
                Some(cd)
            }
            Err(e) => {
                problems.push(format!("computation failed: {e}"));
                None
            }
        },
    };

    let mut shape = None;
    if let Some(cd) = cd {
        let stars: Vec<u64> = cd.into_iter().filter(|&d| d > 1).collect();
        match build_graph(&stars, GraphKind::B) {
            Ok(b) => {
                let failures = entry.claimed_shape.failures(&b);
                if !failures.is_empty() {
                    let listed: Vec<String> = failures.iter().map(ToString::to_string).collect();
                    problems.push(format!(
                        "shape claim fails on {}: {}",
                        classify_shape(&b).tag,
                        listed.join(", ")
                    ));
                }
                shape = Some(classify_shape(&b));
            }
            Err(e) => problems.push(format!("graph construction failed: {e}")),
        }
    }

    EntryReport {
        name: entry.name.clone(),
        source: entry.source.to_string(),
        recorded_only: entry.source == Source::RecordedOnly,
        status: if problems.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        claimed_cd: entry.claimed_cd.clone(),
        computed,
        claimed_shape: entry.claimed_shape.to_string(),
        shape,
        label: entry.label.clone(),
        cite: entry.cite.clone(),
        problems,
    }
}

/// Checks every entry in order. Failures are part of the report, never errors.
pub fn verify_corpus(entries: &[CorpusEntry], limits: Limits) -> VerificationReport {
    let reports: Vec<EntryReport> = entries.iter().map(|e| verify_entry(e, limits)).collect();
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    VerificationReport {
        failed: reports.len() - passed,
        passed,
        entries: reports,
    }
}
