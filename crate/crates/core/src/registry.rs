//! The annotated alias table and its document metadata.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::listing::{EntityKey, EntityRecord};

/// A three-part `major.minor.patch` guidelines version, kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Version(String);

impl Version {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Version {
    type Err = MetadataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split('.').collect();
        let ok = parts.len() == 3
            && parts
                .iter()
                .all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
        if ok {
            Ok(Version(s.to_string()))
        } else {
            Err(MetadataError::Version(s.to_string()))
        }
    }
}

impl fmt::Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A calendar date written `YYYY-MM-DD`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Date {
    year: u16,
    month: u8,
    day: u8,
}

impl Date {
    pub fn new(year: u16, month: u8, day: u8) -> Option<Self> {
        let leap = (year.is_multiple_of(4) && !year.is_multiple_of(100)) || year.is_multiple_of(400);
        let days = match month {
            1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
            4 | 6 | 9 | 11 => 30,
            2 if leap => 29,
            2 => 28,
            _ => return None,
        };
        (1..=days).contains(&day).then_some(Date { year, month, day })
    }
}

impl FromStr for Date {
    type Err = MetadataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MetadataError::Date(s.to_string());
        let b = s.as_bytes();
        if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
            return Err(bad());
        }
        let num = |r: core::ops::Range<usize>| -> Result<u16, MetadataError> {
            let part = &s[r];
            if part.bytes().all(|c| c.is_ascii_digit()) {
                part.parse().map_err(|_| bad())
            } else {
                Err(bad())
            }
        };
        let (y, m, d) = (num(0..4)?, num(5..7)?, num(8..10)?);
        Date::new(y, m as u8, d as u8).ok_or_else(bad)
    }
}

impl fmt::Display for Date {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetadataError {
    #[error("guidelines version {0:?} is not of the form major.minor.patch")]
    Version(String),
    #[error("date {0:?} is not a valid YYYY-MM-DD date")]
    Date(String),
    #[error("row {row}: metadata cell {cell:?} is not a Key=Value pair")]
    Pair { row: usize, cell: String },
    #[error("row {row}: unknown metadata key {key:?} (expected Title, Annotator, Guidelines, Updated)")]
    UnknownKey { row: usize, key: String },
    #[error("row {row}: metadata key {key} given twice")]
    Repeated { row: usize, key: &'static str },
    #[error("metadata is missing the {0} field")]
    Missing(&'static str),
}

/// Document metadata stored in the `metadata` column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metadata {
    pub title: String,
    pub annotators: Vec<String>,
    pub guidelines_version: Version,
    pub updated: Date,
}

pub const METADATA_KEYS: [&str; 4] = ["Title", "Annotator", "Guidelines", "Updated"];

impl Metadata {
    pub fn new(
        title: impl Into<String>,
        annotators: Vec<String>,
        guidelines_version: &str,
        updated: &str,
    ) -> Result<Self, MetadataError> {
        Ok(Metadata {
            title: title.into(),
            annotators,
            guidelines_version: guidelines_version.parse()?,
            updated: updated.parse()?,
        })
    }

    /// The four `Key=Value` cells, in the order they are written.
    pub fn to_cells(&self) -> [String; 4] {
        [
            alloc::format!("Title={}", self.title),
            alloc::format!("Annotator={}", self.annotators.join(";")),
            alloc::format!("Guidelines={}", self.guidelines_version),
            alloc::format!("Updated={}", self.updated),
        ]
    }

    /// Parse the non-empty metadata cells of a table, given as
    /// `(row number, cell)`. No cells means no metadata.
    pub fn from_cells<'a, I>(cells: I) -> Result<Option<Self>, MetadataError>
    where
        I: IntoIterator<Item = (usize, &'a str)>,
    {
        let mut fields: [Option<String>; 4] = Default::default();
        let mut any = false;
        for (row, cell) in cells {
            if cell.is_empty() {
                continue;
            }
            any = true;
            let (key, value) = cell.split_once('=').ok_or_else(|| MetadataError::Pair {
                row,
                cell: cell.to_string(),
            })?;
            let slot = METADATA_KEYS
                .iter()
                .position(|k| *k == key)
                .ok_or_else(|| MetadataError::UnknownKey {
                    row,
                    key: key.to_string(),
                })?;
            if fields[slot].is_some() {
                return Err(MetadataError::Repeated {
                    row,
                    key: METADATA_KEYS[slot],
                });
            }
            fields[slot] = Some(value.to_string());
        }
        if !any {
            return Ok(None);
        }
        let [title, annotators, version, updated] = fields;
        let title = title.ok_or(MetadataError::Missing("Title"))?;
        let annotators = annotators
            .ok_or(MetadataError::Missing("Annotator"))?
            .split(';')
            .map(str::trim)
            .filter(|a| !a.is_empty())
            .map(String::from)
            .collect();
        let version = version.ok_or(MetadataError::Missing("Guidelines"))?;
        let updated = updated.ok_or(MetadataError::Missing("Updated"))?;
        Metadata::new(title, annotators, &version, &updated).map(Some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("duplicate entry {key} in records {first} and {second}")]
    Duplicate {
        key: EntityKey,
        first: usize,
        second: usize,
    },
    #[error("record {index} ({key}) has frequency 0")]
    ZeroFrequency { key: EntityKey, index: usize },
}

/// The annotated entity list plus optional metadata. Keys are unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AliasTable {
    records: Vec<EntityRecord>,
    metadata: Option<Metadata>,
    index: BTreeMap<EntityKey, usize>,
}

impl AliasTable {
    /// Errors name 0-based record indices.
    pub fn new(records: Vec<EntityRecord>, metadata: Option<Metadata>) -> Result<Self, TableError> {
        let mut index = BTreeMap::new();
        for (i, r) in records.iter().enumerate() {
            if r.frequency == 0 {
                return Err(TableError::ZeroFrequency {
                    key: r.key.clone(),
                    index: i,
                });
            }
            if let Some(first) = index.insert(r.key.clone(), i) {
                return Err(TableError::Duplicate {
                    key: r.key.clone(),
                    first,
                    second: i,
                });
            }
        }
        Ok(AliasTable {
            records,
            metadata,
            index,
        })
    }

    pub fn records(&self) -> &[EntityRecord] {
        &self.records
    }

    pub fn metadata(&self) -> Option<&Metadata> {
        self.metadata.as_ref()
    }

    pub fn get(&self, key: &EntityKey) -> Option<&EntityRecord> {
        self.index.get(key).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn set_metadata(self, metadata: Metadata) -> Self {
        AliasTable {
            metadata: Some(metadata),
            ..self
        }
    }

    pub fn into_records(self) -> Vec<EntityRecord> {
        self.records
    }
}
