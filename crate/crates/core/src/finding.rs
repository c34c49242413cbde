use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::listing::EntityKey;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warn,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "ERROR",
            Severity::Warn => "WARN",
            Severity::Info => "INFO",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! rule_codes {
    ($($variant:ident => $code:literal, $severity:ident, $summary:literal;)*) => {
        /// The rule catalogue. Every finding carries exactly one of these codes.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum RuleCode {
            $($variant,)*
        }

        impl RuleCode {
            pub const ALL: &'static [RuleCode] = &[$(RuleCode::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(RuleCode::$variant => $code,)*
                }
            }

            pub fn severity(self) -> Severity {
                match self {
                    $(RuleCode::$variant => Severity::$severity,)*
                }
            }

            /// One-line description, used by `--help` style listings.
            pub fn summary(self) -> &'static str {
                match self {
                    $(RuleCode::$variant => $summary,)*
                }
            }
        }

        impl FromStr for RuleCode {
            type Err = UnknownRuleCode;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($code => Ok(RuleCode::$variant),)*
                    other => Err(UnknownRuleCode(other.into())),
                }
            }
        }
    };
}

rule_codes! {
    ConllOrphanInside => "CONLL-ORPHAN-I", Error, "I- tag without a preceding B-/I- tag of the same type";
    CoverageBlank => "COVERAGE-BLANK", Error, "entity name has no canonical form";
    UnicityVariant => "UNICITY-VARIANT", Warn, "one canonical form written in several ways";
    SuspectChars => "SUSPECT-CHARS", Warn, "name contains non-alphabetic characters";
    SuspectPunct => "SUSPECT-PUNCT", Warn, "name ends with punctuation";
    SuspectCase => "SUSPECT-CASE", Warn, "character name is entirely lowercase";
    SuspectTruncated => "SUSPECT-TRUNCATED", Warn, "name looks like a truncation of another name";
    ConsistMissing => "CONSIST-MISSING", Error, "name present in the corpus but absent from the table";
    ConsistStale => "CONSIST-STALE", Error, "name present in the table but absent from the corpus";
    ConsistFreq => "CONSIST-FREQ", Error, "table frequency differs from the corpus count";
    ChrHonorific => "CHR-HONORIFIC", Warn, "character canonical form starts with an honorific";
    ChrMonarch => "CHR-MONARCH", Warn, "monarch canonical form lacks its realm";
    GrpHouse => "GRP-HOUSE", Warn, "family group canonical form lacks the group marker";
    GrpPlural => "GRP-PLURAL", Warn, "demonym canonical form is singular while plural variants exist";
    OrgNature => "ORG-NATURE", Warn, "organization canonical form does not state its nature";
    MscLang => "MSC-LANG", Warn, "language canonical form lacks the word language";
    XtypeCollide => "XTYPE-COLLIDE", Warn, "same canonical form used under several entity types";
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule code {0:?}")]
pub struct UnknownRuleCode(pub String);

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl PartialOrd for RuleCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RuleCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_str().cmp(other.as_str())
    }
}

/// Position of a finding in the corpus: chapter index and sentence line, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub chapter: usize,
    pub line: usize,
}

/// One validation or lint result.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Finding {
    pub severity: Severity,
    pub code: RuleCode,
    pub key: Option<EntityKey>,
    pub message: String,
    pub location: Option<Location>,
}

impl Finding {
    /// A finding at the code's default severity.
    pub fn new(code: RuleCode, key: Option<EntityKey>, message: impl Into<String>) -> Self {
        let message = message.into();
        debug_assert!(!message.is_empty());
        Finding {
            severity: code.severity(),
            code,
            key,
            message,
            location: None,
        }
    }

    pub fn at(mut self, chapter: usize, line: usize) -> Self {
        self.location = Some(Location { chapter, line });
        self
    }
}

impl PartialOrd for Finding {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Finding {
    fn cmp(&self, other: &Self) -> Ordering {
        self.severity
            .cmp(&other.severity)
            .then_with(|| self.code.cmp(&other.code))
            .then_with(|| self.key.cmp(&other.key))
            .then_with(|| self.location.cmp(&other.location))
            .then_with(|| self.message.cmp(&other.message))
    }
}

/// Sort findings into report order and drop exact duplicates.
pub fn sort_findings(findings: &mut alloc::vec::Vec<Finding>) {
    findings.sort();
    findings.dedup();
}
