//! Entity and mention inventories.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::conll::{Corpus, Mention};
use crate::etype::EntityType;
use crate::text::{collate, nfc};

/// A (surface form, entity type) pair.
///
/// Equality is exact and case-sensitive. Ordering follows the entity-list
/// collation: case-insensitive code points, then case-sensitive, then type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntityKey {
    pub surface: String,
    pub etype: EntityType,
}

impl EntityKey {
    pub fn new(surface: &str, etype: EntityType) -> Self {
        EntityKey {
            surface: nfc(surface),
            etype,
        }
    }
}

impl PartialOrd for EntityKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EntityKey {
    fn cmp(&self, other: &Self) -> Ordering {
        collate(&self.surface, &other.surface).then(self.etype.cmp(&other.etype))
    }
}

impl fmt::Display for EntityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.surface, self.etype)
    }
}

/// One row of the entity list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntityRecord {
    pub key: EntityKey,
    pub frequency: u64,
    /// Raw canonical cell; `None` when the cell is empty.
    pub canonical: Option<String>,
}

impl EntityRecord {
    pub fn new(key: EntityKey, frequency: u64) -> Self {
        EntityRecord {
            key,
            frequency,
            canonical: None,
        }
    }

    pub fn with_canonical(mut self, canonical: impl Into<String>) -> Self {
        self.canonical = Some(canonical.into());
        self
    }

    /// The canonical form, if present and not blank.
    pub fn filled_canonical(&self) -> Option<&str> {
        self.canonical
            .as_deref()
            .filter(|c| !c.trim().is_empty())
    }
}

/// One record per distinct key with its mention count, in collation order.
/// Canonical cells are left empty.
pub fn build_entity_list(corpus: &Corpus) -> Vec<EntityRecord> {
    let mut counts: BTreeMap<EntityKey, u64> = BTreeMap::new();
    for m in corpus.mentions() {
        *counts.entry(m.key()).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(key, frequency)| EntityRecord::new(key, frequency))
        .collect()
}

/// Every mention in document order (chapter, line, token offset).
pub fn build_mention_list(corpus: &Corpus) -> Vec<Mention> {
    let mut rows = corpus.mentions().to_vec();
    rows.sort_by_key(|m| (m.chapter, m.line, m.token_start));
    rows
}

/// Copy of `records` where every canonical equals its surface.
pub fn annotate_identity(records: &[EntityRecord]) -> Vec<EntityRecord> {
    records
        .iter()
        .map(|r| r.clone().with_canonical(r.key.surface.clone()))
        .collect()
}
