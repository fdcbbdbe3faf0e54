//! Serializable verification reports.
//!
//! The JSON layout is part of the tool's external interface:
//! `{tool_version, command, instances, summary, wall_time_ms}`, each
//! instance `{theorem, inputs, params, predicted, observed, agree,
//! witness?}` (or `{theorem, inputs, params, skipped}` when a hypothesis
//! fails). Typed structs rather than ad-hoc JSON values fix the field
//! order, so two runs over the same inputs produce byte-identical output
//! apart from the wall-clock line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::verify::{CheckId, InstanceResult, Outcome, ReportSummary};

/// One instance in serialized form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub theorem: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl InstanceRecord {
    pub(crate) fn from_instance(r: &InstanceResult) -> InstanceRecord {
        let inputs: BTreeMap<String, String> = r
            .inputs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let params: BTreeMap<String, i64> =
            r.params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let mut rec = InstanceRecord {
            theorem: r.check.id().to_string(),
            inputs,
            params,
            predicted: None,
            observed: None,
            agree: None,
            witness: None,
            skipped: None,
        };
        match &r.outcome {
            Outcome::Checked {
                predicted,
                observed,
                witness,
            } => {
                rec.predicted = Some(*predicted);
                rec.observed = Some(*observed);
                rec.agree = Some(witness.is_none());
                rec.witness = witness
                    .as_ref()
                    .map(|w| format!("{w}; replay: {}", replay_hint(r)));
            }
            Outcome::Skipped(reason) => rec.skipped = Some(reason.clone()),
        }
        rec
    }

    pub fn failed(&self) -> bool {
        self.agree == Some(false)
    }

    /// One-line rendering for text output.
    pub fn to_line(&self) -> String {
        let mut line = self.theorem.clone();
        for (k, v) in &self.inputs {
            let _ = write!(line, " {k}={v}");
        }
        for (k, v) in &self.params {
            let _ = write!(line, " {k}={v}");
        }
        match (&self.skipped, self.agree) {
            (Some(reason), _) => {
                let _ = write!(line, "  SKIP ({reason})");
            }
            (None, Some(true)) => {
                let _ = write!(
                    line,
                    "  ok (predicted {}, observed {})",
                    bool_word(self.predicted),
                    bool_word(self.observed)
                );
            }
            _ => {
                let _ = write!(
                    line,
                    "  FAIL (predicted {}, observed {})",
                    bool_word(self.predicted),
                    bool_word(self.observed)
                );
                if let Some(w) = &self.witness {
                    let _ = write!(line, "\n    {w}");
                }
            }
        }
        line
    }
}

/// A `dbal verify` invocation that reproduces this single instance.
fn replay_hint(r: &InstanceResult) -> String {
    let mut cmd = format!("dbal verify --check {}", r.check.id());
    for (k, v) in &r.inputs {
        let _ = write!(cmd, " --{k} '{v}'");
    }
    for (k, v) in &r.params {
        let _ = write!(cmd, " --{k} {v}");
    }
    cmd
}

/// Full result of a verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    /// Canonical form of the invocation (output- and scheduling-related
    /// flags removed), so reruns compare byte-for-byte.
    pub command: String,
    /// Failures always; passes and skips only for single-instance runs.
    pub instances: Vec<InstanceRecord>,
    pub summary: ReportSummary,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(
        command: String,
        summary: ReportSummary,
        kept: &[InstanceResult],
        wall_time_ms: u64,
    ) -> VerificationReport {
        VerificationReport {
            tool_version: crate::TOOL_VERSION.to_string(),
            command,
            instances: kept.iter().map(InstanceRecord::from_instance).collect(),
            summary,
            wall_time_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Human-readable rendering: one line per retained instance, optional
/// per-check subtotals, and the grand total.
pub fn render_text(
    report: &VerificationReport,
    by_check: Option<&BTreeMap<CheckId, ReportSummary>>,
) -> String {
    let mut out = String::new();
    for rec in &report.instances {
        out.push_str(&rec.to_line());
        out.push('\n');
    }
    if let Some(by_check) = by_check {
        if by_check.len() > 1 || report.instances.is_empty() {
            for (check, s) in by_check {
                let _ = writeln!(
                    out,
                    "{check}: {} checked, {} skipped, {} failed",
                    s.checked, s.skipped, s.failed
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "total: {} checked, {} skipped, {} failed ({} ms)",
        report.summary.checked, report.summary.skipped, report.summary.failed, report.wall_time_ms
    );
    out
}

fn bool_word(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "?",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::verify::{run_single, SingleInputs};

    #[test]
    fn records_carry_witnesses_with_replay_hints() {
        let r = InstanceResult {
            check: CheckId::Prop61,
            inputs: vec![("g", "g6:Cr".to_string())],
            params: vec![("l", 2)],
            outcome: Outcome::Checked {
                predicted: true,
                observed: false,
                witness: Some("shell sums differ".to_string()),
            },
        };
        let rec = InstanceRecord::from_instance(&r);
        assert!(rec.failed());
        let w = rec.witness.unwrap();
        assert!(w.contains("replay: dbal verify --check prop-6.1 --g 'g6:Cr' --l 2"));
    }

    #[test]
    fn json_layout_is_stable() {
        let inputs = SingleInputs {
            g: Some(Family::Path(4).build().unwrap()),
            budget: 60,
            ..Default::default()
        };
        let results = run_single(CheckId::Prop61, &inputs).unwrap();
        let mut acc = crate::verify::Acc::new(true);
        for r in results {
            acc.push(r);
        }
        let report = VerificationReport::new(
            "dbal verify --check prop-6.1 --g P4".to_string(),
            acc.counts,
            &acc.kept,
            0,
        );
        let a = report.to_json();
        let report2 = VerificationReport::new(
            "dbal verify --check prop-6.1 --g P4".to_string(),
            acc.counts,
            &acc.kept,
            0,
        );
        assert_eq!(a, report2.to_json());

        // Top-level field order is part of the interface.
        let tv = a.find("\"tool_version\"").unwrap();
        let cmd = a.find("\"command\"").unwrap();
        let inst = a.find("\"instances\"").unwrap();
        let summ = a.find("\"summary\"").unwrap();
        let wall = a.find("\"wall_time_ms\"").unwrap();
        assert!(tv < cmd && cmd < inst && inst < summ && summ < wall);

        let parsed: VerificationReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.summary.checked, 3);
        assert_eq!(parsed.summary.failed, 0);
        assert_eq!(parsed.instances[0].theorem, "prop-6.1");
    }

    #[test]
    fn text_rendering_mentions_totals() {
        let report = VerificationReport::new(
            "dbal verify".to_string(),
            ReportSummary {
                checked: 5,
                skipped: 2,
                failed: 0,
            },
            &[],
            17,
        );
        let text = render_text(&report, None);
        assert!(text.contains("total: 5 checked, 2 skipped, 0 failed"));
    }
}
