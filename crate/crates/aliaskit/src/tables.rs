//! CSV forms of the entity list, the mention list, alias tables and
//! cluster suggestions.
//!
//! Metadata lives in the `metadata` column as `Key=Value` cells, one per
//! data row, in the first four rows. A table with fewer than four records
//! gets extra rows whose other cells are all empty; readers skip them.

use std::fs;
use std::path::Path;

use aliaskit_core::conll::Mention;
use aliaskit_core::registry::{Metadata, TableError};
use aliaskit_core::resolver::ClusterSet;
use aliaskit_core::{AliasTable, EntityKey, EntityRecord, EntityType};

use crate::error::{Error, Result};
use crate::write_atomic;

pub const ENTITY_HEADER: [&str; 5] = ["name", "type", "frequency", "canonical", "metadata"];
pub const MENTION_HEADER: [&str; 6] = ["name", "type", "chapter", "line", "token_start", "token_end"];
pub const SUGGESTION_HEADER: [&str; 4] = ["cluster_id", "name", "type", "candidate_canonical"];

/// File name of a finalized alias table.
pub const FINAL_NAME: &str = "alias_resolution.csv";

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("CSV built from UTF-8 strings")
}

/// Entity list or alias table as CSV text.
pub fn entity_csv(records: &[EntityRecord], metadata: Option<&Metadata>) -> String {
    let mut w = writer();
    let cells = metadata.map(Metadata::to_cells);
    let meta = |i: usize| cells.as_ref().and_then(|c| c.get(i)).map_or("", String::as_str);
    w.write_record(ENTITY_HEADER).expect("in-memory write");
    for (i, r) in records.iter().enumerate() {
        let freq = r.frequency.to_string();
        w.write_record([
            r.key.surface.as_str(),
            r.key.etype.as_str(),
            &freq,
            r.canonical.as_deref().unwrap_or(""),
            meta(i),
        ])
        .expect("in-memory write");
    }
    if cells.is_some() {
        for i in records.len()..4 {
            w.write_record(["", "", "", "", meta(i)]).expect("in-memory write");
        }
    }
    finish(w)
}

pub fn mention_csv(mentions: &[Mention]) -> String {
    let mut w = writer();
    w.write_record(MENTION_HEADER).expect("in-memory write");
    for m in mentions {
        w.write_record([
            m.surface.clone(),
            m.etype.to_string(),
            m.chapter.to_string(),
            m.line.to_string(),
            m.token_start.to_string(),
            m.token_end.to_string(),
        ])
        .expect("in-memory write");
    }
    finish(w)
}

/// One row per member, clusters numbered from 1 in set order.
pub fn suggestion_csv(set: &ClusterSet) -> String {
    let mut w = writer();
    w.write_record(SUGGESTION_HEADER).expect("in-memory write");
    for (i, c) in set.clusters().iter().enumerate() {
        let id = (i + 1).to_string();
        for m in &c.members {
            w.write_record([id.as_str(), &m.surface, m.etype.as_str(), &c.candidate.surface])
                .expect("in-memory write");
        }
    }
    finish(w)
}

/// Parse an entity list or alias table. `path` is only used in errors.
pub fn parse_alias_table(text: &str, path: &Path) -> Result<AliasTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let header = rdr.headers().map_err(csv_err)?.clone();
    if header.iter().ne(ENTITY_HEADER) {
        return Err(Error::Format {
            path: path.to_path_buf(),
            message: format!(
                "expected header {:?}, found {:?}",
                ENTITY_HEADER.join(","),
                header.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut meta_cells: Vec<(usize, String)> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let row = rec.position().map_or(0, |p| p.line());
        let bad = |message: String| Error::Row {
            path: path.to_path_buf(),
            row,
            message,
        };
        if rec.len() != ENTITY_HEADER.len() {
            return Err(bad(format!("expected {} columns, found {}", ENTITY_HEADER.len(), rec.len())));
        }
        meta_cells.push((row as usize, rec[4].to_string()));
        if rec.iter().take(4).all(str::is_empty) {
            continue;
        }
        let name = &rec[0];
        if name.trim().is_empty() {
            return Err(bad("empty name".into()));
        }
        let etype: EntityType = rec[1].parse().map_err(|e| bad(format!("{e}")))?;
        let frequency: u64 = rec[2]
            .parse()
            .map_err(|_| bad(format!("frequency {:?} is not a non-negative integer", &rec[2])))?;
        let mut record = EntityRecord::new(EntityKey::new(name, etype), frequency);
        if !rec[3].is_empty() {
            record.canonical = Some(rec[3].to_string());
        }
        records.push(record);
        rows.push(row);
    }
    let metadata = Metadata::from_cells(meta_cells.iter().map(|(r, c)| (*r, c.as_str()))).map_err(|source| {
        Error::Metadata {
            path: path.to_path_buf(),
            source,
        }
    })?;
    AliasTable::new(records, metadata).map_err(|e| match e {
        TableError::Duplicate { key, first, second } => Error::Format {
            path: path.to_path_buf(),
            message: format!("duplicate entry {key} in rows {} and {}", rows[first], rows[second]),
        },
        TableError::ZeroFrequency { key, index } => Error::Row {
            path: path.to_path_buf(),
            row: rows[index],
            message: format!("{key} has frequency 0"),
        },
    })
}

pub fn read_alias_table(path: &Path) -> Result<AliasTable> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_alias_table(&text, path)
}

pub fn write_alias_table(table: &AliasTable, path: &Path) -> Result<()> {
    write_atomic(path, entity_csv(table.records(), table.metadata()).as_bytes())
}
