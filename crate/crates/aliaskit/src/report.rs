//! Text and JSON Lines renderings of findings, diffs and metrics.
//!
//! Text findings are one per line: severity, code and `name/TYPE`, then an
//! em dash (U+2014) and the message, with `-` in place of the key for
//! table-wide findings and ` [chapter C, line L]` appended when the finding
//! has a corpus position. The JSON Lines report has one object per finding
//! with the fields `severity`, `code`, `name`, `type`, `message`, `chapter`
//! and `line`; absent values are `null`.

use aliaskit_core::resolver::ClusterMetrics;
use aliaskit_core::{DiffReport, Finding, Severity};
use serde::Serialize;

pub fn finding_line(f: &Finding) -> String {
    let key = f.key.as_ref().map_or_else(|| "-".to_string(), |k| k.to_string());
    let mut line = format!("{} {} {} — {}", f.severity.as_str(), f.code, key, f.message);
    if let Some(loc) = f.location {
        line.push_str(&format!(" [chapter {}, line {}]", loc.chapter, loc.line));
    }
    line
}

pub fn findings_text(findings: &[Finding]) -> String {
    findings.iter().map(|f| finding_line(f) + "\n").collect()
}

/// Closing count line, e.g. `2 errors, 1 warning`.
pub fn findings_summary(findings: &[Finding]) -> String {
    let count = |s: Severity| findings.iter().filter(|f| f.severity == s).count();
    let plural = |n: usize, word: &str| format!("{n} {word}{}", if n == 1 { "" } else { "s" });
    format!("{}, {}", plural(count(Severity::Error), "error"), plural(count(Severity::Warn), "warning"))
}

#[derive(Serialize)]
struct FindingRow<'a> {
    severity: &'a str,
    code: &'a str,
    name: Option<&'a str>,
    #[serde(rename = "type")]
    etype: Option<&'a str>,
    message: &'a str,
    chapter: Option<usize>,
    line: Option<usize>,
}

pub fn findings_jsonl(findings: &[Finding]) -> String {
    let mut out = String::new();
    for f in findings {
        let row = FindingRow {
            severity: f.severity.as_str(),
            code: f.code.as_str(),
            name: f.key.as_ref().map(|k| k.surface.as_str()),
            etype: f.key.as_ref().map(|k| k.etype.as_str()),
            message: &f.message,
            chapter: f.location.map(|l| l.chapter),
            line: f.location.map(|l| l.line),
        };
        out.push_str(&serde_json::to_string(&row).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

fn quoted(v: Option<&str>) -> String {
    match v {
        Some(s) => serde_json::to_string(s).expect("string serializes"),
        None => "(blank)".to_string(),
    }
}

/// One line per difference, then a count line.
pub fn diff_text(report: &DiffReport) -> String {
    let mut out = String::new();
    for m in &report.mismatches {
        out.push_str(&format!(
            "MISMATCH {} v1={} v2={}\n",
            m.key,
            quoted(m.v1.as_deref()),
            quoted(m.v2.as_deref())
        ));
    }
    for k in &report.only_in_v1 {
        out.push_str(&format!("ONLY-IN-V1 {k}\n"));
    }
    for k in &report.only_in_v2 {
        out.push_str(&format!("ONLY-IN-V2 {k}\n"));
    }
    out.push_str(&format!(
        "{} mismatches, {} only in v1, {} only in v2\n",
        report.mismatches.len(),
        report.only_in_v1.len(),
        report.only_in_v2.len()
    ));
    out
}

#[derive(Serialize)]
struct DiffRow<'a> {
    kind: &'a str,
    name: &'a str,
    #[serde(rename = "type")]
    etype: &'a str,
    v1: Option<&'a str>,
    v2: Option<&'a str>,
}

pub fn diff_jsonl(report: &DiffReport) -> String {
    let mut rows = Vec::new();
    for m in &report.mismatches {
        rows.push(DiffRow {
            kind: "mismatch",
            name: &m.key.surface,
            etype: m.key.etype.as_str(),
            v1: m.v1.as_deref(),
            v2: m.v2.as_deref(),
        });
    }
    for (kind, keys) in [("only_in_v1", &report.only_in_v1), ("only_in_v2", &report.only_in_v2)] {
        for k in keys {
            rows.push(DiffRow {
                kind,
                name: &k.surface,
                etype: k.etype.as_str(),
                v1: None,
                v2: None,
            });
        }
    }
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("plain data serializes") + "\n")
        .collect()
}

pub fn metrics_text(m: &ClusterMetrics) -> String {
    [
        ("pairwise_precision", m.pairwise_precision),
        ("pairwise_recall", m.pairwise_recall),
        ("pairwise_f1", m.pairwise_f1),
        ("b3_precision", m.b3_precision),
        ("b3_recall", m.b3_recall),
        ("b3_f1", m.b3_f1),
    ]
    .iter()
    .map(|(k, v)| format!("{k}={v:.6}\n"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use aliaskit_core::{EntityKey, EntityType, RuleCode};

    #[test]
    fn text_and_json_forms() {
        let f = Finding::new(
            RuleCode::CoverageBlank,
            Some(EntityKey::new("Athos", EntityType::Chr)),
            "no canonical form",
        );
        assert_eq!(finding_line(&f), "ERROR COVERAGE-BLANK Athos/CHR — no canonical form");
        let g = Finding::new(RuleCode::UnicityVariant, None, "x").at(2, 5);
        assert_eq!(finding_line(&g), "WARN UNICITY-VARIANT - — x [chapter 2, line 5]");
        let j = findings_jsonl(&[f, g]);
        let lines: Vec<&str> = j.lines().collect();
        let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(v["name"], "Athos");
        assert_eq!(v["type"], "CHR");
        assert!(v["chapter"].is_null());
        let w: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(w["line"], 5);
        assert!(w["name"].is_null());
    }
}
