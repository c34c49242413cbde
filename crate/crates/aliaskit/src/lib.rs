//! File formats, bundled fixtures and the `aliaskit` command line on top of
//! `aliaskit-core`.
//!
//! Corpora are directories of `chapter_NN.conll` files. Entity lists, mention
//! lists and alias tables are RFC 4180 CSV. Character graphs are written as
//! GraphML or as a tab-separated edge list.

pub mod cli;
pub mod config;
pub mod corpus_io;
pub mod error;
pub mod fixtures;
pub mod graph_io;
pub mod report;
pub mod tables;

mod atomic;

pub use atomic::write_atomic;
pub use error::{Error, Result};
