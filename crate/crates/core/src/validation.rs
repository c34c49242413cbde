//! Annotation checks and the v1/v2 table comparison.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::conll::Corpus;
use crate::etype::EntityType;
use crate::finding::{sort_findings, Finding, RuleCode};
use crate::listing::{build_entity_list, EntityKey, EntityRecord};
use crate::registry::AliasTable;
use crate::text::unicity_form;

/// One ERROR per record whose canonical cell is empty or blank.
pub fn check_coverage(table: &AliasTable) -> Vec<Finding> {
    table
        .records()
        .iter()
        .filter(|r| r.filled_canonical().is_none())
        .map(|r| {
            Finding::new(
                RuleCode::CoverageBlank,
                Some(r.key.clone()),
                "no canonical form assigned",
            )
        })
        .collect()
}

/// One WARN per group of canonical spellings that share a normal form
/// (NFC, case fold, trimmed, whitespace collapsed) but differ as raw strings.
pub fn check_unicity(table: &AliasTable) -> Vec<Finding> {
    let mut groups: BTreeMap<String, BTreeSet<&str>> = BTreeMap::new();
    for r in table.records() {
        if let Some(c) = r.filled_canonical() {
            groups.entry(unicity_form(c)).or_default().insert(c);
        }
    }
    groups
        .into_values()
        .filter(|variants| variants.len() >= 2)
        .map(|variants| {
            let listed: Vec<String> = variants.iter().map(|v| format!("{v:?}")).collect();
            Finding::new(
                RuleCode::UnicityVariant,
                None,
                format!(
                    "canonical form written {} ways: {}",
                    variants.len(),
                    listed.join(", ")
                ),
            )
        })
        .collect()
}

fn allowed_name_char(c: char) -> bool {
    c.is_alphabetic() || matches!(c, ' ' | '\'' | '\u{2019}' | '-' | '.')
}

/// A final period is accepted after a short abbreviation ("Mme.", "St.").
fn has_trailing_punctuation(surface: &str) -> bool {
    let Some(last) = surface.chars().last() else {
        return false;
    };
    if last.is_alphanumeric() {
        return false;
    }
    if last == '.' {
        let word = surface.rsplit(' ').next().unwrap_or(surface);
        let stem = word.trim_end_matches('.');
        return stem.chars().count() >= 4 || !stem.chars().all(char::is_alphabetic);
    }
    true
}

fn is_all_lowercase(surface: &str) -> bool {
    surface.chars().any(char::is_lowercase) && !surface.chars().any(char::is_uppercase)
}

/// Surfaces that are a strict prefix of another same-type surface missing
/// exactly one trailing letter. A trailing plural "s" on a group name is not
/// counted.
fn truncated_keys(records: &[EntityRecord]) -> BTreeMap<EntityKey, String> {
    let keys: BTreeSet<(&str, EntityType)> = records
        .iter()
        .map(|r| (r.key.surface.as_str(), r.key.etype))
        .collect();
    let mut out = BTreeMap::new();
    for r in records {
        let surface = r.key.surface.as_str();
        let Some((cut, last)) = surface.char_indices().last() else {
            continue;
        };
        if cut == 0 || !last.is_alphabetic() {
            continue;
        }
        if r.key.etype == EntityType::Grp && last == 's' {
            continue;
        }
        let prefix = &surface[..cut];
        if keys.contains(&(prefix, r.key.etype)) {
            out.entry(EntityKey::new(prefix, r.key.etype))
                .or_insert_with(|| String::from(surface));
        }
    }
    out
}

/// At most one WARN per record whose surface looks like an annotation error.
/// The code is that of the first reason found; the message lists them all.
pub fn check_suspect_names(records: &[EntityRecord]) -> Vec<Finding> {
    let truncated = truncated_keys(records);
    let mut out = Vec::new();
    for r in records {
        let surface = r.key.surface.as_str();
        let mut reasons: Vec<(RuleCode, String)> = Vec::new();
        if surface.chars().any(|c| !allowed_name_char(c)) {
            reasons.push((RuleCode::SuspectChars, String::from("contains non-alphabetic characters")));
        }
        if has_trailing_punctuation(surface) {
            reasons.push((RuleCode::SuspectPunct, String::from("ends with punctuation")));
        }
        if r.key.etype == EntityType::Chr && is_all_lowercase(surface) {
            reasons.push((RuleCode::SuspectCase, String::from("character name is entirely lowercase")));
        }
        if let Some(longer) = truncated.get(&r.key) {
            reasons.push((RuleCode::SuspectTruncated, format!("looks incomplete next to {longer:?}")));
        }
        if let Some((code, _)) = reasons.first() {
            let text: Vec<&str> = reasons.iter().map(|(_, m)| m.as_str()).collect();
            out.push(Finding::new(*code, Some(r.key.clone()), text.join("; ")));
        }
    }
    out
}

/// ERRORs for keys present on one side only, and for frequency mismatches,
/// between the table and a fresh count of the corpus.
pub fn check_consistency(corpus: &Corpus, table: &AliasTable) -> Vec<Finding> {
    let fresh = build_entity_list(corpus);
    let mut out = Vec::new();
    for r in &fresh {
        match table.get(&r.key) {
            None => out.push(Finding::new(
                RuleCode::ConsistMissing,
                Some(r.key.clone()),
                format!("occurs {} time{} in the corpus but is missing from the table", r.frequency, if r.frequency == 1 { "" } else { "s" }),
            )),
            Some(t) if t.frequency != r.frequency => out.push(Finding::new(
                RuleCode::ConsistFreq,
                Some(r.key.clone()),
                format!("table frequency {} but the corpus has {}", t.frequency, r.frequency),
            )),
            Some(_) => {}
        }
    }
    let present: BTreeSet<&EntityKey> = fresh.iter().map(|r| &r.key).collect();
    for r in table.records() {
        if !present.contains(&r.key) {
            out.push(Finding::new(
                RuleCode::ConsistStale,
                Some(r.key.clone()),
                "no longer occurs in the corpus",
            ));
        }
    }
    out
}

/// Every corpus-side and table-side check, in report order: tagging
/// repairs, coverage, unicity, suspect names (on the regenerated entity
/// list) and consistency.
pub fn validate(corpus: &Corpus, table: &AliasTable) -> Vec<Finding> {
    let mut out: Vec<Finding> = corpus.findings().to_vec();
    out.extend(check_coverage(table));
    out.extend(check_unicity(table));
    out.extend(check_suspect_names(&build_entity_list(corpus)));
    out.extend(check_consistency(corpus, table));
    sort_findings(&mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub key: EntityKey,
    /// `None` stands for a blank canonical cell.
    pub v1: Option<String>,
    pub v2: Option<String>,
}

/// Key-aligned comparison of two alias tables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    pub mismatches: Vec<Mismatch>,
    pub only_in_v1: Vec<EntityKey>,
    pub only_in_v2: Vec<EntityKey>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty() && self.only_in_v1.is_empty() && self.only_in_v2.is_empty()
    }
}

/// Align `v1` and `v2` by entity key and compare canonical cells as raw
/// strings. Output lists follow entity-list order.
pub fn diff_tables(v1: &AliasTable, v2: &AliasTable) -> DiffReport {
    let mut report = DiffReport::default();
    for a in v1.records() {
        match v2.get(&a.key) {
            None => report.only_in_v1.push(a.key.clone()),
            Some(b) => {
                let (ca, cb) = (a.filled_canonical(), b.filled_canonical());
                if ca != cb {
                    report.mismatches.push(Mismatch {
                        key: a.key.clone(),
                        v1: ca.map(String::from),
                        v2: cb.map(String::from),
                    });
                }
            }
        }
    }
    for b in v2.records() {
        if v1.get(&b.key).is_none() {
            report.only_in_v2.push(b.key.clone());
        }
    }
    report.mismatches.sort_by(|x, y| x.key.cmp(&y.key));
    report.only_in_v1.sort();
    report.only_in_v2.sort();
    report
}

/// `regenerated` with canonical cells copied from `source` by key; keys
/// unknown to `source` stay blank.
pub fn carry_over(source: &AliasTable, regenerated: Vec<EntityRecord>) -> Vec<EntityRecord> {
    regenerated
        .into_iter()
        .map(|mut r| {
            r.canonical = source.get(&r.key).and_then(|s| s.canonical.clone());
            r
        })
        .collect()
}
