//! Deterministic rendering of claim reports and scan results.

use super::{ClaimReport, ScanReport, Verdict};
use crate::poly::Poly;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonValue<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<&'a Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<String>,
}

impl<'a> JsonValue<'a> {
    fn from(value: &'a super::Value) -> Self {
        let total = match (&value.total, &value.poly) {
            (Some(t), _) => Some(t.to_string()),
            (None, Some(p)) => Some(p.total().to_string()),
            (None, None) => None,
        };
        JsonValue {
            poly: value.poly.as_ref(),
            total,
        }
    }
}

#[derive(Serialize)]
struct JsonClaim<'a> {
    id: &'a str,
    verdict: &'static str,
    witness_params: Option<&'a Vec<usize>>,
    asserted: JsonValue<'a>,
    ground_truth: JsonValue<'a>,
    method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<u128>,
}

#[derive(Serialize)]
struct JsonSummary {
    confirmed: usize,
    refuted: usize,
    untested: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    claims: Vec<JsonClaim<'a>>,
    summary: JsonSummary,
}

fn summary(reports: &[ClaimReport]) -> JsonSummary {
    JsonSummary {
        confirmed: reports
            .iter()
            .filter(|r| r.verdict == Verdict::Confirmed)
            .count(),
        refuted: reports
            .iter()
            .filter(|r| r.verdict == Verdict::Refuted)
            .count(),
        untested: reports
            .iter()
            .filter(|r| r.verdict == Verdict::Untested)
            .count(),
    }
}

/// Renders claim reports, ordered by claim id. `timings` adds the
/// per-claim runtime_ms field; leaving it off keeps repeated runs
/// bytewise identical.
pub fn emit_report(reports: &[ClaimReport], format: ReportFormat, timings: bool) -> String {
    let mut ordered: Vec<&ClaimReport> = reports.iter().collect();
    ordered.sort_by(|a, b| a.id.cmp(&b.id));
    match format {
        ReportFormat::Json => {
            let doc = JsonReport {
                claims: ordered
                    .iter()
                    .map(|r| JsonClaim {
                        id: &r.id,
                        verdict: r.verdict.as_str(),
                        witness_params: r.witness_params.as_ref(),
                        asserted: JsonValue::from(&r.asserted),
                        ground_truth: JsonValue::from(&r.ground_truth),
                        method: r.method.map(|m| m.as_str()),
                        runtime_ms: timings.then_some(r.runtime_ms),
                    })
                    .collect(),
                summary: summary(reports),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
            out.push('\n');
            out
        }
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:<28} {:<10} {:<7} WITNESS\n",
                "CLAIM", "VERDICT", "METHOD"
            ));
            for r in &ordered {
                let witness = match (&r.witness_params, r.verdict) {
                    (Some(w), Verdict::Refuted) => format!(
                        "at {:?}: asserted {}, ground truth {}",
                        w,
                        r.asserted.render(),
                        r.ground_truth.render()
                    ),
                    (Some(w), Verdict::Untested) => format!("stopped at {w:?}"),
                    _ => "-".into(),
                };
                let method = r.method.map_or("-", |m| m.as_str());
                out.push_str(&format!(
                    "{:<28} {:<10} {:<7} {}\n",
                    r.id,
                    r.verdict.as_str(),
                    method,
                    witness
                ));
                if timings {
                    out.push_str(&format!("{:<28}   ({} ms)\n", "", r.runtime_ms));
                }
                if let Some(note) = &r.note {
                    if r.verdict != Verdict::Confirmed {
                        out.push_str(&format!("{:<28}   note: {note}\n", ""));
                    }
                }
            }
            let s = summary(reports);
            out.push_str(&format!(
                "summary: {} confirmed, {} refuted, {} untested\n",
                s.confirmed, s.refuted, s.untested
            ));
            let status = if s.refuted == 0 && s.untested == 0 {
                "all-confirmed"
            } else {
                "mixed"
            };
            out.push_str(&format!("status: {status}\n"));
            out
        }
    }
}

#[derive(Serialize)]
struct JsonScanEntry<'a> {
    spec: String,
    vertices: usize,
    edges: usize,
    unimodal: Option<bool>,
    internal_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<&'a Poly>,
    method: Option<&'static str>,
}

#[derive(Serialize)]
struct JsonScan<'a> {
    entries: Vec<JsonScanEntry<'a>>,
    classified: usize,
    counterexamples: usize,
    anomalies: usize,
}

/// Renders a unimodality scan. Counterexamples print with their full
/// coefficient list.
pub fn render_scan(report: &ScanReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let doc = JsonScan {
                entries: report
                    .entries
                    .iter()
                    .map(|e| JsonScanEntry {
                        spec: e.spec.to_string(),
                        vertices: e.vertices,
                        edges: e.edges,
                        unimodal: e.unimodal,
                        internal_zero: e.internal_zero,
                        poly: e.poly.as_ref(),
                        method: e.method.map(|m| m.as_str()),
                    })
                    .collect(),
                classified: report.classified(),
                counterexamples: report.counterexamples().count(),
                anomalies: report.anomalies().count(),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("scan serializes");
            out.push('\n');
            out
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for e in &report.entries {
                let status = match e.unimodal {
                    Some(true) => "unimodal",
                    Some(false) => "NOT UNIMODAL",
                    None => "untested (resource limit)",
                };
                out.push_str(&format!(
                    "{:<24} n={:<3} m={:<3} {}\n",
                    e.spec.to_string(),
                    e.vertices,
                    e.edges,
                    status
                ));
                if e.unimodal == Some(false) || e.internal_zero {
                    if let Some(p) = &e.poly {
                        let coeffs: Vec<String> =
                            p.coeffs().iter().map(|c| c.to_string()).collect();
                        out.push_str(&format!("  coefficients: [{}]\n", coeffs.join(", ")));
                    }
                    if e.internal_zero {
                        out.push_str("  anomaly: zero coefficient inside the support\n");
                    }
                }
            }
            let counterexamples = report.counterexamples().count();
            out.push_str(&format!(
                "scanned {} graphs, classified {}\n",
                report.entries.len(),
                report.classified()
            ));
            if counterexamples == 0 {
                out.push_str("no counterexample at desk scale\n");
            } else {
                out.push_str(&format!(
                    "FOUND {counterexamples} COUNTEREXAMPLE(S) — see coefficient lists above\n"
                ));
            }
            out
        }
    }
}
