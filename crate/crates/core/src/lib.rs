//! Core primitives for alias-resolution annotation of novels.
//!
//! Everything here is pure and allocation-only: IOB2 chapter parsing and
//! serialization, the entity and mention inventories, the alias table model,
//! validation checks, canonical-form lint rules, alias cluster suggestion and
//! the character co-occurrence graph. File IO, CSV and GraphML live in the
//! `aliaskit` crate.
#![no_std]

extern crate alloc;

pub mod canon;
pub mod conll;
pub mod etype;
pub mod finding;
pub mod graph;
pub mod listing;
pub mod registry;
pub mod resolver;
pub mod text;
pub mod validation;

pub use canon::{HonorificLexicon, LintConfig};
pub use conll::{Chapter, Corpus, Mention, Tag, Token};
pub use etype::EntityType;
pub use finding::{Finding, RuleCode, Severity};
pub use graph::CharacterGraph;
pub use listing::{EntityKey, EntityRecord};
pub use registry::{AliasTable, Metadata};
pub use resolver::{ClusterMetrics, ClusterSet};
pub use validation::DiffReport;
