//! Canonical-form conventions: honorific stripping, the demonym majority
//! rule and per-type lint rules.
//!
//! Lint rules are advisory. Most naming conventions need knowledge a tool
//! does not have (a character's full historical name, whether a smaller
//! location matters to the story), so every rule here reports a WARN and
//! nothing is ever rewritten.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::etype::EntityType;
use crate::finding::{sort_findings, Finding, RuleCode};
use crate::listing::EntityRecord;
use crate::registry::AliasTable;
use crate::text::fold_case;

/// Name particles that never identify anyone on their own.
pub const PARTICLES: [&str; 13] = [
    "de", "du", "des", "la", "le", "les", "d'", "von", "van", "of", "the", "ter", "al",
];

/// Articles that may sit between two honorifics ("Monsieur le Comte").
const ARTICLES: [&str; 5] = ["le", "la", "les", "the", "l'"];

pub const DEFAULT_HONORIFICS: [&str; 23] = [
    "Mr.", "Mrs.", "Ms.", "M.", "Mme.", "Madame", "Mademoiselle", "Monsieur", "Monseigneur",
    "Lord", "Lady", "Sir", "Dame", "Dr.", "St.", "Saint", "Comte", "Comtesse", "Duc", "Duchesse",
    "Cardinal", "Captain", "Milady",
];

/// Honorifics that are ranks: kept in front of a lone family name.
pub const DEFAULT_RANKS: [&str; 10] = [
    "Comte", "Comtesse", "Duc", "Duchesse", "Cardinal", "Captain", "Lord", "Lady", "Sir", "Dame",
];

pub fn is_particle(token: &str) -> bool {
    let t = fold_case(token);
    PARTICLES.contains(&t.as_str())
}

fn clean_token(token: &str) -> &str {
    token.trim_end_matches(',')
}

/// Tokens that carry a name: everything but particles.
fn name_tokens<'a>(tokens: &[&'a str]) -> Vec<&'a str> {
    tokens
        .iter()
        .map(|t| clean_token(t))
        .filter(|t| !t.is_empty() && !is_particle(t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("honorific lexicon must not be empty")]
    Empty,
    #[error("group marker must not be empty")]
    EmptyMarker,
}

/// Honorific entries, matched case-insensitively on whole leading tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HonorificLexicon {
    entries: BTreeSet<Vec<String>>,
    ranks: BTreeSet<Vec<String>>,
}

fn fold_tokens(entry: &str) -> Vec<String> {
    entry.split_whitespace().map(fold_case).collect()
}

impl HonorificLexicon {
    pub fn new<I, S>(entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries: BTreeSet<Vec<String>> = entries
            .into_iter()
            .map(|e| fold_tokens(e.as_ref()))
            .filter(|t| !t.is_empty())
            .collect();
        if entries.is_empty() {
            return Err(LexiconError::Empty);
        }
        Ok(HonorificLexicon {
            entries,
            ranks: BTreeSet::new(),
        })
    }

    pub fn add(&mut self, entry: &str) {
        let t = fold_tokens(entry);
        if !t.is_empty() {
            self.entries.insert(t);
        }
    }

    /// Removing the last entry is refused.
    pub fn remove(&mut self, entry: &str) -> Result<(), LexiconError> {
        let t = fold_tokens(entry);
        if self.entries.len() == 1 && self.entries.contains(&t) {
            return Err(LexiconError::Empty);
        }
        self.entries.remove(&t);
        self.ranks.remove(&t);
        Ok(())
    }

    /// Mark `entry` as a rank; it is added to the lexicon if missing.
    pub fn add_rank(&mut self, entry: &str) {
        let t = fold_tokens(entry);
        if !t.is_empty() {
            self.entries.insert(t.clone());
            self.ranks.insert(t);
        }
    }

    pub fn remove_rank(&mut self, entry: &str) {
        self.ranks.remove(&fold_tokens(entry));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Length in tokens of the longest entry matching at `tokens[at..]`.
    fn match_at(&self, tokens: &[&str], at: usize) -> Option<usize> {
        let rest = tokens.get(at..)?;
        self.entries
            .iter()
            .filter(|e| {
                e.len() <= rest.len() && e.iter().zip(rest).all(|(a, b)| *a == fold_case(b))
            })
            .map(Vec::len)
            .max()
    }

    fn is_rank(&self, tokens: &[&str]) -> bool {
        let t: Vec<String> = tokens.iter().map(|t| fold_case(t)).collect();
        self.ranks.contains(&t)
    }

    pub fn contains_token(&self, token: &str) -> bool {
        self.match_at(&[token], 0).is_some()
    }

    /// Leading honorific run: its end and the span of its last honorific.
    fn leading_run(&self, tokens: &[&str]) -> (usize, Option<(usize, usize)>) {
        let mut i = 0;
        let mut last = None;
        loop {
            if let Some(n) = self.match_at(tokens, i) {
                last = Some((i, i + n));
                i += n;
                continue;
            }
            let is_article = tokens
                .get(i)
                .is_some_and(|t| ARTICLES.contains(&fold_case(t).as_str()));
            if last.is_some() && is_article && self.match_at(tokens, i + 1).is_some() {
                i += 1;
                continue;
            }
            return (i, last);
        }
    }
}

impl Default for HonorificLexicon {
    fn default() -> Self {
        let mut lex = HonorificLexicon::new(DEFAULT_HONORIFICS).expect("non-empty default lexicon");
        for r in DEFAULT_RANKS {
            lex.add_rank(r);
        }
        lex
    }
}

/// Tokens of `name` after its leading honorific run; all tokens when the
/// name is nothing but honorifics.
pub fn tokens_after_honorifics<'a>(name: &'a str, lex: &HonorificLexicon) -> Vec<&'a str> {
    let tokens: Vec<&str> = name.split_whitespace().collect();
    let (end, _) = lex.leading_run(&tokens);
    if end == tokens.len() {
        tokens
    } else {
        tokens[end..].to_vec()
    }
}

/// Remove the leading honorifics of `name`.
///
/// When what remains has at most one name token, the last honorific of the
/// run is kept if it is a rank ("Monsieur le Comte de Wardes" gives
/// "Comte de Wardes"). If nothing would remain, `name` is returned as is.
pub fn strip_honorifics(name: &str, lex: &HonorificLexicon) -> String {
    let tokens: Vec<&str> = name.split_whitespace().collect();
    let (end, last) = lex.leading_run(&tokens);
    if end == 0 || end == tokens.len() {
        return name.to_string();
    }
    let rest = &tokens[end..];
    match last {
        Some((a, b)) if lex.is_rank(&tokens[a..b]) && name_tokens(rest).len() <= 1 => {
            let mut kept: Vec<&str> = tokens[a..b].to_vec();
            kept.extend_from_slice(rest);
            kept.join(" ")
        }
        _ => rest.join(" "),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenderClass {
    Masculine,
    Feminine,
    Neutral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenderSuffix {
    pub suffix: String,
    pub class: GenderClass,
    pub plural: bool,
}

impl GenderSuffix {
    pub fn new(suffix: &str, class: GenderClass, plural: bool) -> Self {
        GenderSuffix {
            suffix: fold_case(suffix),
            class,
            plural,
        }
    }
}

pub fn default_gender_suffixes() -> Vec<GenderSuffix> {
    alloc::vec![
        GenderSuffix::new("man", GenderClass::Masculine, false),
        GenderSuffix::new("men", GenderClass::Masculine, true),
        GenderSuffix::new("woman", GenderClass::Feminine, false),
        GenderSuffix::new("women", GenderClass::Feminine, true),
    ]
}

/// Gender class and plurality of a demonym. The longest matching suffix
/// wins; unmatched words are neutral and plural when they end in "s".
pub fn classify_demonym(word: &str, suffixes: &[GenderSuffix]) -> (GenderClass, bool) {
    let w = fold_case(word.trim());
    suffixes
        .iter()
        .filter(|s| w.ends_with(s.suffix.as_str()))
        .max_by_key(|s| s.suffix.len())
        .map(|s| (s.class, s.plural))
        .unwrap_or((GenderClass::Neutral, w.ends_with('s')))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("demonym majority rule needs at least one variant")]
pub struct NoVariants;

/// A demonym variant: text, frequency, plural flag.
type Variant<'a> = (&'a str, u64, bool);

/// Majority rule over the gendered variants of one group name, with the
/// default suffix map.
pub fn demonym_canonical(variants: &[(&str, u64)]) -> Result<String, NoVariants> {
    demonym_canonical_with(variants, &default_gender_suffixes())
}

/// The gender class with the largest summed frequency wins, and its plural
/// form is returned if one is among the variants; otherwise its most
/// frequent variant. Ties go to the higher individual frequency, then to
/// the lexicographically smaller surface.
pub fn demonym_canonical_with(
    variants: &[(&str, u64)],
    suffixes: &[GenderSuffix],
) -> Result<String, NoVariants> {
    let mut classes: BTreeMap<GenderClass, Vec<Variant<'_>>> = BTreeMap::new();
    for &(surface, freq) in variants {
        let (class, plural) = classify_demonym(surface, suffixes);
        classes.entry(class).or_default().push((surface, freq, plural));
    }
    // Better: higher frequency, then smaller surface.
    fn better(a: &Variant, b: &Variant) -> bool {
        a.1 > b.1 || (a.1 == b.1 && a.0 < b.0)
    }
    fn top<'v>(members: &[Variant<'v>]) -> Variant<'v> {
        let mut best = members[0];
        for m in &members[1..] {
            if better(m, &best) {
                best = *m;
            }
        }
        best
    }
    let mut winner: Option<(u64, Variant, &Vec<Variant>)> = None;
    for members in classes.values() {
        let sum: u64 = members.iter().map(|m| m.1).sum();
        let head = top(members);
        let replace = match &winner {
            None => true,
            Some((best_sum, best_head, _)) => {
                sum > *best_sum || (sum == *best_sum && better(&head, best_head))
            }
        };
        if replace {
            winner = Some((sum, head, members));
        }
    }
    let (_, head, members) = winner.ok_or(NoVariants)?;
    let plurals: Vec<Variant<'_>> = members.iter().copied().filter(|m| m.2).collect();
    let chosen = if plurals.is_empty() { head } else { top(&plurals) };
    Ok(chosen.0.to_string())
}

/// Lint settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintConfig {
    pub honorifics: HonorificLexicon,
    /// Word marking a family group ("House", or "Family").
    pub group_marker: String,
    pub gender_suffixes: Vec<GenderSuffix>,
    pub enabled: BTreeSet<RuleCode>,
    /// Shortest name part that links two aliases in cluster suggestion.
    pub min_part_len: usize,
}

pub const LINT_RULES: [RuleCode; 7] = [
    RuleCode::ChrHonorific,
    RuleCode::ChrMonarch,
    RuleCode::GrpHouse,
    RuleCode::GrpPlural,
    RuleCode::OrgNature,
    RuleCode::MscLang,
    RuleCode::XtypeCollide,
];

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            honorifics: HonorificLexicon::default(),
            group_marker: String::from("House"),
            gender_suffixes: default_gender_suffixes(),
            enabled: LINT_RULES.into_iter().collect(),
            min_part_len: 3,
        }
    }
}

impl LintConfig {
    pub fn with_group_marker(mut self, marker: &str) -> Result<Self, LexiconError> {
        if marker.trim().is_empty() {
            return Err(LexiconError::EmptyMarker);
        }
        self.group_marker = marker.trim().to_string();
        Ok(self)
    }
}

const ROMAN: [&str; 20] = [
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII", "XIV", "XV",
    "XVI", "XVII", "XVIII", "XIX", "XX",
];

pub fn is_roman_numeral(token: &str) -> bool {
    ROMAN.contains(&token)
}

/// Table-wide facts the per-record rules look up.
struct LintContext<'a> {
    /// Types under which each canonical form is used.
    canonical_types: BTreeMap<&'a str, BTreeSet<EntityType>>,
    /// Folded family names appearing in character canonical forms.
    family_names: BTreeSet<String>,
    /// Folded last names of character forms that also carry a first name.
    full_name_lasts: BTreeSet<String>,
    /// Surfaces of each group canonical form.
    group_clusters: BTreeMap<&'a str, Vec<&'a str>>,
    /// Folded demonym stems from group surfaces and canonical forms.
    demonym_stems: BTreeSet<String>,
}

impl<'a> LintContext<'a> {
    fn new(table: &'a AliasTable, cfg: &LintConfig) -> Self {
        let lex = &cfg.honorifics;
        let mut ctx = LintContext {
            canonical_types: BTreeMap::new(),
            family_names: BTreeSet::new(),
            full_name_lasts: BTreeSet::new(),
            group_clusters: BTreeMap::new(),
            demonym_stems: BTreeSet::new(),
        };
        for r in table.records() {
            let canonical = r.filled_canonical().map(str::trim);
            if let Some(c) = canonical {
                ctx.canonical_types.entry(c).or_default().insert(r.key.etype);
            }
            match r.key.etype {
                EntityType::Chr => {
                    for form in [Some(r.key.surface.as_str()), canonical].into_iter().flatten() {
                        let tokens: Vec<&str> = form.split_whitespace().collect();
                        let (end, _) = lex.leading_run(&tokens);
                        let names = name_tokens(&tokens[end..]);
                        if names.len() >= 2 {
                            ctx.full_name_lasts.insert(fold_case(names[names.len() - 1]));
                        }
                        if Some(form) == canonical {
                            let skip = if end > 0 { 0 } else { 1 };
                            for n in names.iter().skip(skip) {
                                ctx.family_names.insert(fold_case(n));
                            }
                        }
                    }
                }
                EntityType::Grp => {
                    if let Some(c) = canonical {
                        ctx.group_clusters.entry(c).or_default().push(&r.key.surface);
                        ctx.add_stems(c, cfg);
                    }
                    ctx.add_stems(&r.key.surface, cfg);
                }
                _ => {}
            }
        }
        ctx
    }

    fn add_stems(&mut self, group: &str, cfg: &LintConfig) {
        let g = fold_case(group.trim());
        for s in &cfg.gender_suffixes {
            if let Some(stem) = g.strip_suffix(s.suffix.as_str()) {
                if !stem.is_empty() {
                    self.demonym_stems.insert(stem.to_string());
                }
            }
        }
        for tail in ["s", " people"] {
            if let Some(stem) = g.strip_suffix(tail) {
                if !stem.is_empty() {
                    self.demonym_stems.insert(stem.to_string());
                }
            }
        }
        self.demonym_stems.insert(g);
    }

    fn lint(&self, rec: &EntityRecord, cfg: &LintConfig) -> Vec<Finding> {
        let Some(canonical) = rec.filled_canonical().map(str::trim) else {
            return Vec::new();
        };
        let tokens: Vec<&str> = canonical.split_whitespace().collect();
        let mut hits: Vec<(RuleCode, String)> = Vec::new();
        match rec.key.etype {
            EntityType::Chr => {
                let (end, _) = cfg.honorifics.leading_run(&tokens);
                if end > 0 {
                    let names = name_tokens(&tokens[end..]);
                    let fuller_known = names.len() == 1
                        && self.full_name_lasts.contains(&fold_case(names[0]));
                    if names.len() >= 2 || fuller_known {
                        hits.push((
                            RuleCode::ChrHonorific,
                            format!(
                                "starts with honorific {:?}; canonical forms use first and family names",
                                tokens[..end].join(" ")
                            ),
                        ));
                    }
                }
                if tokens.len() >= 2 && is_roman_numeral(tokens[tokens.len() - 1]) {
                    hits.push((
                        RuleCode::ChrMonarch,
                        format!("monarch name without realm; expected e.g. \"{canonical} of <realm>\""),
                    ));
                }
            }
            EntityType::Grp => {
                let has_marker = tokens.iter().any(|t| *t == cfg.group_marker);
                if !has_marker && self.family_names.contains(&fold_case(canonical)) {
                    hits.push((
                        RuleCode::GrpHouse,
                        format!(
                            "bare family name; expected \"{} {canonical}\"",
                            cfg.group_marker
                        ),
                    ));
                }
                let (class, plural) = classify_demonym(canonical, &cfg.gender_suffixes);
                let cluster = self.group_clusters.get(canonical).map(Vec::as_slice).unwrap_or(&[]);
                let plural_variant = if plural {
                    None
                } else if class == GenderClass::Neutral {
                    let folded = fold_case(canonical);
                    cluster.iter().copied().find(|s| {
                        let f = fold_case(s);
                        f == format!("{folded}s") || f == format!("{folded}es")
                    })
                } else {
                    cluster.iter().copied().find(|s| {
                        let (c, p) = classify_demonym(s, &cfg.gender_suffixes);
                        p && c != GenderClass::Neutral
                    })
                };
                if let Some(p) = plural_variant {
                    hits.push((
                        RuleCode::GrpPlural,
                        format!("singular form while the plural {p:?} occurs; use the plural"),
                    ));
                }
            }
            EntityType::Org => {
                if tokens.len() == 1 {
                    hits.push((
                        RuleCode::OrgNature,
                        String::from("single word; state the nature of the organization (e.g. \"Kingdom of ...\")"),
                    ));
                }
            }
            EntityType::Msc => {
                let folded = fold_case(canonical);
                if !folded.ends_with(" language") && self.demonym_stems.contains(&folded) {
                    hits.push((
                        RuleCode::MscLang,
                        format!("matches a group name; expected \"{canonical} language\""),
                    ));
                }
            }
            EntityType::Loc => {}
        }
        if let Some(types) = self.canonical_types.get(canonical) {
            if types.len() > 1 {
                let names: Vec<&str> = types.iter().map(|t| t.as_str()).collect();
                hits.push((
                    RuleCode::XtypeCollide,
                    format!("canonical form shared by types {}", names.join(", ")),
                ));
            }
        }
        hits.into_iter()
            .filter(|(code, _)| cfg.enabled.contains(code))
            .map(|(code, msg)| Finding::new(code, Some(rec.key.clone()), msg))
            .collect()
    }
}

/// Lint one record's canonical form in the context of its table.
pub fn lint_canonical(rec: &EntityRecord, table: &AliasTable, cfg: &LintConfig) -> Vec<Finding> {
    let mut out = LintContext::new(table, cfg).lint(rec, cfg);
    sort_findings(&mut out);
    out
}

/// Lint every filled canonical form of `table`.
pub fn lint_table(table: &AliasTable, cfg: &LintConfig) -> Vec<Finding> {
    let ctx = LintContext::new(table, cfg);
    let mut out: Vec<Finding> = table
        .records()
        .iter()
        .flat_map(|r| ctx.lint(r, cfg))
        .collect();
    sort_findings(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listing::EntityKey;
    use alloc::vec;

    fn lex() -> HonorificLexicon {
        HonorificLexicon::default()
    }

    #[test]
    fn strip_examples() {
        assert_eq!(strip_honorifics("Madame Bonacieux", &lex()), "Bonacieux");
        assert_eq!(strip_honorifics("Mme. Bonacieux", &lex()), "Bonacieux");
        assert_eq!(strip_honorifics("Monsieur le Comte de Wardes", &lex()), "Comte de Wardes");
        assert_eq!(strip_honorifics("Constance", &lex()), "Constance");
        assert_eq!(strip_honorifics("Milady", &lex()), "Milady");
        assert_eq!(strip_honorifics("Monseigneur the Cardinal", &lex()), "Monseigneur the Cardinal");
        assert_eq!(strip_honorifics("Mr. Golyadkin", &lex()), "Golyadkin");
        assert_eq!(strip_honorifics("monsieur Athos", &lex()), "Athos");
    }

    #[test]
    fn lexicon_edits() {
        let mut l = lex();
        assert!(!l.contains_token("Herr"));
        l.add("Herr");
        assert_eq!(strip_honorifics("Herr Schmidt", &l), "Schmidt");
        l.remove("Madame").unwrap();
        assert_eq!(strip_honorifics("Madame Bonacieux", &l), "Madame Bonacieux");
        let mut single = HonorificLexicon::new(["Sir"]).unwrap();
        assert_eq!(single.remove("Sir"), Err(LexiconError::Empty));
        assert_eq!(HonorificLexicon::new(Vec::<&str>::new()), Err(LexiconError::Empty));
    }

    #[test]
    fn multi_word_entries_match_longest() {
        let l = HonorificLexicon::new(["Lord", "Lord High Admiral"]).unwrap();
        assert_eq!(strip_honorifics("Lord High Admiral Nelson Smith", &l), "Nelson Smith");
    }

    #[test]
    fn demonym_worked_example() {
        let v = [("Englishman", 36), ("Englishmen", 10), ("Englishwoman", 5)];
        assert_eq!(demonym_canonical(&v).unwrap(), "Englishmen");
        assert_eq!(demonym_canonical(&[("Assyrians", 4)]).unwrap(), "Assyrians");
    }

    #[test]
    fn demonym_feminine_majority() {
        // feminine 7 + 2 = 9 against masculine 3; the feminine plural wins.
        let v = [("Frenchwoman", 7), ("Frenchwomen", 2), ("Frenchman", 3)];
        assert_eq!(demonym_canonical(&v).unwrap(), "Frenchwomen");
    }

    #[test]
    fn demonym_without_plural_and_ties() {
        assert_eq!(demonym_canonical(&[("Frenchman", 3), ("Frenchwoman", 2)]).unwrap(), "Frenchman");
        // class sums tie at 4: masculine holds the higher single count.
        assert_eq!(
            demonym_canonical(&[("Scotsman", 3), ("Scotsmen", 1), ("Scotswoman", 2), ("Scotswomen", 2)])
                .unwrap(),
            "Scotsmen"
        );
        // full tie: lexicographic.
        assert_eq!(demonym_canonical(&[("Germans", 2), ("Frenchmen", 2)]).unwrap(), "Frenchmen");
        assert_eq!(demonym_canonical(&[]), Err(NoVariants));
    }

    #[test]
    fn roman_numerals() {
        assert!(is_roman_numeral("I") && is_roman_numeral("XIII") && is_roman_numeral("XX"));
        assert!(!is_roman_numeral("XXI") && !is_roman_numeral("IIII") && !is_roman_numeral("i"));
    }

    fn rec(s: &str, t: EntityType, c: &str) -> EntityRecord {
        EntityRecord::new(EntityKey::new(s, t), 1).with_canonical(c)
    }

    fn codes(rec: &EntityRecord, rows: Vec<EntityRecord>) -> Vec<RuleCode> {
        let mut rows = rows;
        rows.push(rec.clone());
        let table = AliasTable::new(rows, None).unwrap();
        lint_canonical(rec, &table, &LintConfig::default())
            .into_iter()
            .map(|f| f.code)
            .collect()
    }

    #[test]
    fn honorific_rule_needs_a_known_first_name() {
        let constance = rec("Constance Bonacieux", EntityType::Chr, "Constance Bonacieux");
        let madame = rec("Madame Bonacieux", EntityType::Chr, "Madame Bonacieux");
        assert_eq!(codes(&madame, vec![constance]), [RuleCode::ChrHonorific]);
        let alone = rec("Madame Bonacieux", EntityType::Chr, "Madame Bonacieux");
        assert!(codes(&alone, vec![]).is_empty());
        let coquenard = rec("Coquenard", EntityType::Chr, "Monsieur Coquenard");
        assert!(codes(&coquenard, vec![]).is_empty());
        let wardes = rec("De Wardes", EntityType::Chr, "Comte de Wardes");
        assert!(codes(&wardes, vec![]).is_empty());
        let both = rec("Lady Anne Clarik", EntityType::Chr, "Lady Anne Clarik");
        assert_eq!(codes(&both, vec![]), [RuleCode::ChrHonorific]);
    }

    #[test]
    fn monarch_rule() {
        let f = rec("Francis I", EntityType::Chr, "Francis I");
        assert_eq!(codes(&f, vec![]), [RuleCode::ChrMonarch]);
        let ok = rec("Francis I", EntityType::Chr, "Francis I of France");
        assert!(codes(&ok, vec![]).is_empty());
    }

    #[test]
    fn group_rules() {
        let chr = rec("Constance Bonacieux", EntityType::Chr, "Constance Bonacieux");
        let bare = rec("Bonacieux", EntityType::Grp, "Bonacieux");
        assert_eq!(codes(&bare, vec![chr.clone()]), [RuleCode::GrpHouse]);
        let housed = rec("Bonacieux", EntityType::Grp, "House Bonacieux");
        assert!(codes(&housed, vec![chr.clone()]).is_empty());
        let family = LintConfig::default().with_group_marker("Family").unwrap();
        let t = AliasTable::new(vec![chr, bare.clone()], None).unwrap();
        assert_eq!(lint_canonical(&bare, &t, &family).len(), 1);

        let singular = rec("Englishman", EntityType::Grp, "Englishman");
        let plural = rec("Englishmen", EntityType::Grp, "Englishman");
        assert_eq!(codes(&singular, vec![plural]), [RuleCode::GrpPlural]);
        let berrichon = rec("Berrichon", EntityType::Grp, "Berrichon");
        let berrichons = rec("Berrichons", EntityType::Grp, "Berrichon");
        assert_eq!(codes(&berrichon, vec![berrichons]), [RuleCode::GrpPlural]);
        let people = rec("Béarnais", EntityType::Grp, "Béarnese people");
        assert!(codes(&people, vec![]).is_empty());
    }

    #[test]
    fn org_and_msc_rules() {
        assert_eq!(codes(&rec("France", EntityType::Org, "France"), vec![]), [RuleCode::OrgNature]);
        assert!(codes(&rec("France", EntityType::Org, "Kingdom of France"), vec![]).is_empty());
        let grp = rec("Englishmen", EntityType::Grp, "Englishmen");
        let lang = rec("English", EntityType::Msc, "English");
        assert_eq!(codes(&lang, vec![grp.clone()]), [RuleCode::MscLang]);
        let ok = rec("English", EntityType::Msc, "English language");
        assert!(codes(&ok, vec![grp]).is_empty());
    }

    #[test]
    fn cross_type_collision() {
        let city = rec("Bordeaux", EntityType::Loc, "Bordeaux");
        let wine = rec("Bordeaux", EntityType::Msc, "Bordeaux");
        assert_eq!(codes(&wine, vec![city.clone()]), [RuleCode::XtypeCollide]);
        let fixed = rec("Bordeaux", EntityType::Msc, "Bordeaux wine");
        assert!(codes(&fixed, vec![city]).is_empty());
    }

    #[test]
    fn disabled_rules_are_silent() {
        let mut cfg = LintConfig::default();
        cfg.enabled.remove(&RuleCode::OrgNature);
        let r = rec("France", EntityType::Org, "France");
        let t = AliasTable::new(vec![r.clone()], None).unwrap();
        assert!(lint_canonical(&r, &t, &cfg).is_empty());
        assert!(LintConfig::default().with_group_marker(" ").is_err());
    }

    #[test]
    fn lint_table_skips_blank_canonicals() {
        let t = AliasTable::new(
            vec![EntityRecord::new(EntityKey::new("France", EntityType::Org), 1)],
            None,
        )
        .unwrap();
        assert!(lint_table(&t, &LintConfig::default()).is_empty());
    }
}
