//! Lint configuration files.
//!
//! A TOML file of flat keys, all optional:
//!
//! ```toml
//! group_marker = "Family"
//! min_part_len = 3
//! honorifics_add = ["Herr", "Frau"]
//! honorifics_remove = ["Saint"]
//! ranks_add = ["Baron"]
//! ranks_remove = ["Captain"]
//! disable = ["ORG-NATURE"]
//! ```
//!
//! Honorific and rank edits apply to the default lexicon. `disable` turns
//! lint rules off by code.

use std::fs;
use std::path::Path;

use aliaskit_core::canon::LINT_RULES;
use aliaskit_core::{LintConfig, RuleCode};
use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    group_marker: Option<String>,
    min_part_len: Option<usize>,
    #[serde(default)]
    honorifics_add: Vec<String>,
    #[serde(default)]
    honorifics_remove: Vec<String>,
    #[serde(default)]
    ranks_add: Vec<String>,
    #[serde(default)]
    ranks_remove: Vec<String>,
    #[serde(default)]
    disable: Vec<String>,
}

pub fn parse_config(text: &str) -> std::result::Result<LintConfig, String> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| e.to_string())?;
    let mut cfg = LintConfig::default();
    if let Some(marker) = file.group_marker {
        cfg = cfg.with_group_marker(&marker).map_err(|e| e.to_string())?;
    }
    if let Some(n) = file.min_part_len {
        if n == 0 {
            return Err("min_part_len must be at least 1".into());
        }
        cfg.min_part_len = n;
    }
    for h in &file.honorifics_add {
        cfg.honorifics.add(h);
    }
    for h in &file.honorifics_remove {
        cfg.honorifics.remove(h).map_err(|e| e.to_string())?;
    }
    for r in &file.ranks_add {
        cfg.honorifics.add_rank(r);
    }
    for r in &file.ranks_remove {
        cfg.honorifics.remove_rank(r);
    }
    for code in &file.disable {
        let code: RuleCode = code.parse().map_err(|e| format!("{e}"))?;
        if !LINT_RULES.contains(&code) {
            return Err(format!("{code} is not a lint rule"));
        }
        cfg.enabled.remove(&code);
    }
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<LintConfig> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text).map_err(|message| Error::Format {
        path: path.to_path_buf(),
        message,
    })
}
