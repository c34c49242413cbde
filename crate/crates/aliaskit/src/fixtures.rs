//! Bundled test corpora and golden files.
//!
//! Each fixture is a directory under `fixtures/` holding a `fixture.toml`
//! manifest and any of: `corpus/chapter_NN.conll`, golden
//! `entity_list.csv` and `mention_list.csv`, and an annotated
//! `alias_table.csv`. The manifest lists the findings `validate` and `lint`
//! must produce, as `CODE name/TYPE` (or `CODE -` for table-wide findings).

use std::fs;
use std::path::{Path, PathBuf};

use aliaskit_core::{AliasTable, Corpus, Finding};
use serde::Deserialize;

use crate::corpus_io::read_corpus;
use crate::error::{Error, Result};
use crate::tables::read_alias_table;

pub const FIXTURES: [&str; 7] = [
    "clean",
    "case-variant",
    "musketeers-mini",
    "suspect-names",
    "validation-defects",
    "lint-defects",
    "naming-conventions",
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    description: String,
    #[serde(default)]
    validate: Vec<String>,
    #[serde(default)]
    lint: Vec<String>,
}

#[derive(Debug)]
pub struct Fixture {
    pub name: String,
    pub dir: PathBuf,
    pub description: String,
    pub corpus: Option<Corpus>,
    pub entity_csv: Option<String>,
    pub mention_csv: Option<String>,
    pub table: Option<AliasTable>,
    /// Expected validation findings, as [`signature`] strings, sorted.
    pub expected_validate: Vec<String>,
    /// Expected lint findings, as [`signature`] strings, sorted.
    pub expected_lint: Vec<String>,
}

impl Fixture {
    pub fn corpus_dir(&self) -> PathBuf {
        self.dir.join("corpus")
    }

    pub fn table_path(&self) -> PathBuf {
        self.dir.join("alias_table.csv")
    }
}

/// `CODE name/TYPE`, or `CODE -` without a key.
pub fn signature(f: &Finding) -> String {
    match &f.key {
        Some(k) => format!("{} {k}", f.code),
        None => format!("{} -", f.code),
    }
}

pub fn fixtures_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read_optional(path: &Path) -> Result<Option<String>> {
    match fs::read_to_string(path) {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(source) => Err(Error::Io {
            path: path.to_path_buf(),
            source,
        }),
    }
}

pub fn load_fixture(name: &str) -> Result<Fixture> {
    load_fixture_from(&fixtures_root(), name)
}

pub fn load_fixture_from(root: &Path, name: &str) -> Result<Fixture> {
    let dir = root.join(name);
    let manifest_path = dir.join("fixture.toml");
    let Some(manifest_text) = read_optional(&manifest_path)? else {
        return Err(Error::UnknownFixture {
            name: name.to_string(),
            known: FIXTURES.to_vec(),
        });
    };
    let manifest: Manifest = toml::from_str(&manifest_text).map_err(|e| Error::Format {
        path: manifest_path.clone(),
        message: e.to_string(),
    })?;
    let corpus_dir = dir.join("corpus");
    let corpus = if corpus_dir.is_dir() {
        Some(read_corpus(&corpus_dir)?)
    } else {
        None
    };
    let table_path = dir.join("alias_table.csv");
    let table = if table_path.is_file() {
        Some(read_alias_table(&table_path)?)
    } else {
        None
    };
    let mut expected_validate = manifest.validate;
    let mut expected_lint = manifest.lint;
    expected_validate.sort();
    expected_lint.sort();
    Ok(Fixture {
        name: name.to_string(),
        description: manifest.description,
        corpus,
        entity_csv: read_optional(&dir.join("entity_list.csv"))?,
        mention_csv: read_optional(&dir.join("mention_list.csv"))?,
        table,
        expected_validate,
        expected_lint,
        dir,
    })
}
