//! Reading and writing corpus directories.

use std::fs;
use std::path::{Path, PathBuf};

use aliaskit_core::conll::{parse_chapter, serialize_chapter, Chapter, Corpus};

use crate::error::{Error, Result};
use crate::write_atomic;

/// True for names of the form `chapter_<digits>.conll`.
pub fn is_chapter_file(name: &str) -> bool {
    name.strip_prefix("chapter_")
        .and_then(|rest| rest.strip_suffix(".conll"))
        .is_some_and(|n| !n.is_empty() && n.bytes().all(|b| b.is_ascii_digit()))
}

/// Chapter files of `dir`, sorted by file name.
pub fn chapter_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |source| Error::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let entry = entry.map_err(io)?;
        let name = entry.file_name();
        if name.to_str().is_some_and(is_chapter_file) && entry.path().is_file() {
            files.push(entry.path());
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parse every chapter of `dir`. Chapter indices follow file-name order,
/// starting at 1. Tagging problems that could be repaired are kept as
/// corpus findings.
pub fn read_corpus(dir: &Path) -> Result<Corpus> {
    let files = chapter_files(dir)?;
    if files.is_empty() {
        return Err(Error::NoChapters(dir.to_path_buf()));
    }
    let mut parsed = Vec::with_capacity(files.len());
    for (i, path) in files.iter().enumerate() {
        let text = read_text(path)?;
        let chapter = parse_chapter(&text, i + 1, &path.display().to_string()).map_err(|source| Error::Conll {
            path: path.clone(),
            source,
        })?;
        parsed.push(chapter);
    }
    Corpus::from_parsed(parsed).map_err(|source| Error::Conll {
        path: dir.to_path_buf(),
        source,
    })
}

pub fn write_chapter(chapter: &Chapter, path: &Path) -> Result<()> {
    write_atomic(path, serialize_chapter(chapter).as_bytes())
}
