//! The `aliaskit` command line.
//!
//! Exit status: 0 when clean, 1 when processing succeeded but reported an
//! ERROR finding or a non-empty diff, 2 on usage, parse or IO errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use aliaskit_core::canon::lint_table;
use aliaskit_core::conll::locate_mention;
use aliaskit_core::graph::build_cooccurrence;
use aliaskit_core::listing::{build_entity_list, build_mention_list};
use aliaskit_core::resolver::{evaluate_clusters, suggest_all};
use aliaskit_core::validation::{carry_over, diff_tables, validate};
use aliaskit_core::{AliasTable, Finding, LintConfig, Metadata, Severity};
use clap::{Parser, Subcommand};

use crate::config::load_config;
use crate::corpus_io::read_corpus;
use crate::error::{Error, Result};
use crate::graph_io::{render, GraphFormat};
use crate::report;
use crate::tables::{entity_csv, mention_csv, read_alias_table, suggestion_csv, write_alias_table, FINAL_NAME};
use crate::write_atomic;

#[derive(Debug, Parser)]
#[command(name = "aliaskit", version, about = "Alias-resolution annotation tooling for NER-tagged novels")]
struct Cli {
    /// Lint configuration file (TOML).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write entity_list.csv and mention_list.csv for a corpus.
    Extract { corpus_dir: PathBuf, out_dir: PathBuf },
    /// Check an alias table against its corpus.
    Validate {
        corpus_dir: PathBuf,
        alias_csv: PathBuf,
        /// Also write the findings as JSON Lines.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Compare the canonical forms of two alias tables.
    Diff {
        v1_csv: PathBuf,
        v2_csv: PathBuf,
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Regenerate the entity list and compare it with v1. Canonical forms
    /// are carried over from alias_resolution.csv beside v1 when present,
    /// otherwise from v1 itself.
    Verify { corpus_dir: PathBuf, v1_csv: PathBuf },
    /// Check canonical forms against the naming conventions.
    Lint {
        alias_csv: PathBuf,
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Suggest alias clusters for an entity list.
    Suggest {
        entity_csv: PathBuf,
        /// Write the suggestions here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Score the suggestions against this annotated table.
        #[arg(long, value_name = "PATH", requires = "out")]
        gold: Option<PathBuf>,
    },
    /// Stamp metadata and write alias_resolution.csv.
    Finalize {
        alias_csv: PathBuf,
        #[arg(long)]
        title: String,
        /// Repeat for several annotators.
        #[arg(long, required = true)]
        annotator: Vec<String>,
        /// Guidelines version, major.minor.patch.
        #[arg(long)]
        guidelines: String,
        /// Date of last update, YYYY-MM-DD.
        #[arg(long)]
        updated: String,
        /// Directory for alias_resolution.csv (default: next to the input).
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Export the character co-occurrence graph.
    Graph {
        corpus_dir: PathBuf,
        alias_csv: PathBuf,
        /// Window size in sentences.
        #[arg(long, default_value_t = 10)]
        window: usize,
        #[arg(long, value_enum, default_value = "graphml")]
        format: GraphFormat,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Show the mentions of a surface form on one line, with context.
    Locate {
        corpus_dir: PathBuf,
        chapter: usize,
        line: usize,
        surface: String,
    },
}

/// Parse `args` (program name first), run the subcommand, and return the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn has_errors(findings: &[Finding]) -> bool {
    findings.iter().any(|f| f.severity == Severity::Error)
}

fn print_findings(out: &mut dyn Write, findings: &[Finding], report_path: Option<&Path>) -> Result<()> {
    emit(out, &report::findings_text(findings))?;
    emit(out, &format!("{}\n", report::findings_summary(findings)))?;
    if let Some(p) = report_path {
        write_atomic(p, report::findings_jsonl(findings).as_bytes())?;
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let config = || -> Result<LintConfig> {
        match &cli.config {
            Some(p) => load_config(p),
            None => Ok(LintConfig::default()),
        }
    };
    match &cli.command {
        Command::Extract { corpus_dir, out_dir } => {
            let corpus = read_corpus(corpus_dir)?;
            let entities = build_entity_list(&corpus);
            let mentions = build_mention_list(&corpus);
            fs::create_dir_all(out_dir).map_err(|source| Error::Io {
                path: out_dir.clone(),
                source,
            })?;
            write_atomic(&out_dir.join("entity_list.csv"), entity_csv(&entities, None).as_bytes())?;
            write_atomic(&out_dir.join("mention_list.csv"), mention_csv(&mentions).as_bytes())?;
            emit(out, &report::findings_text(corpus.findings()))?;
            emit(
                out,
                &format!("{} entities, {} mentions\n", entities.len(), mentions.len()),
            )?;
            Ok(has_errors(corpus.findings()) as i32)
        }
        Command::Validate {
            corpus_dir,
            alias_csv,
            report,
        } => {
            let corpus = read_corpus(corpus_dir)?;
            let table = read_alias_table(alias_csv)?;
            let findings = validate(&corpus, &table);
            print_findings(out, &findings, report.as_deref())?;
            Ok(has_errors(&findings) as i32)
        }
        Command::Diff { v1_csv, v2_csv, report } => {
            let v1 = read_alias_table(v1_csv)?;
            let v2 = read_alias_table(v2_csv)?;
            let diff = diff_tables(&v1, &v2);
            emit(out, &report::diff_text(&diff))?;
            if let Some(p) = report {
                write_atomic(p, report::diff_jsonl(&diff).as_bytes())?;
            }
            Ok(!diff.is_empty() as i32)
        }
        Command::Verify { corpus_dir, v1_csv } => {
            let corpus = read_corpus(corpus_dir)?;
            let v1 = read_alias_table(v1_csv)?;
            let finalized = match v1_csv.parent() {
                Some(p) if !p.as_os_str().is_empty() => p.join(FINAL_NAME),
                _ => PathBuf::from(FINAL_NAME),
            };
            let base = if finalized.is_file() && !same_file(&finalized, v1_csv) {
                read_alias_table(&finalized)?
            } else {
                v1.clone()
            };
            let regenerated = carry_over(&base, build_entity_list(&corpus));
            let v2 = AliasTable::new(regenerated, None).expect("entity list keys are unique and counted");
            let diff = diff_tables(&v1, &v2);
            emit(out, &report::diff_text(&diff))?;
            if diff.is_empty() {
                emit(out, "fixpoint reached\n")?;
                Ok(0)
            } else {
                emit(out, "fixpoint not reached\n")?;
                Ok(1)
            }
        }
        Command::Lint { alias_csv, report } => {
            let cfg = config()?;
            let table = read_alias_table(alias_csv)?;
            let findings = lint_table(&table, &cfg);
            print_findings(out, &findings, report.as_deref())?;
            Ok(has_errors(&findings) as i32)
        }
        Command::Suggest {
            entity_csv: path,
            out: out_path,
            gold,
        } => {
            let cfg = config()?;
            let table = read_alias_table(path)?;
            let set = suggest_all(table.records(), &cfg)?;
            let csv = suggestion_csv(&set);
            match out_path {
                Some(p) => write_atomic(p, csv.as_bytes())?,
                None => emit(out, &csv)?,
            }
            if let Some(g) = gold {
                let gold = read_alias_table(g)?;
                let metrics = evaluate_clusters(&set, &gold)?;
                emit(out, &report::metrics_text(&metrics))?;
            }
            Ok(0)
        }
        Command::Finalize {
            alias_csv,
            title,
            annotator,
            guidelines,
            updated,
            out_dir,
        } => {
            let annotators = annotator
                .iter()
                .flat_map(|a| a.split(';'))
                .map(str::trim)
                .filter(|a| !a.is_empty())
                .map(String::from)
                .collect();
            let metadata = Metadata::new(title.as_str(), annotators, guidelines, updated)?;
            let table = read_alias_table(alias_csv)?.set_metadata(metadata);
            let dir = match out_dir {
                Some(d) => {
                    fs::create_dir_all(d).map_err(|source| Error::Io {
                        path: d.clone(),
                        source,
                    })?;
                    d.clone()
                }
                None => match alias_csv.parent() {
                    Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
                    _ => PathBuf::from("."),
                },
            };
            let target = dir.join(FINAL_NAME);
            write_alias_table(&table, &target)?;
            emit(out, &format!("wrote {}\n", target.display()))?;
            Ok(0)
        }
        Command::Graph {
            corpus_dir,
            alias_csv,
            window,
            format,
            out: out_path,
        } => {
            let corpus = read_corpus(corpus_dir)?;
            let table = read_alias_table(alias_csv)?;
            let graph = build_cooccurrence(&corpus, &table, *window)?;
            let text = render(&graph, *format);
            match out_path {
                Some(p) => write_atomic(p, text.as_bytes())?,
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        Command::Locate {
            corpus_dir,
            chapter,
            line,
            surface,
        } => {
            let corpus = read_corpus(corpus_dir)?;
            let hits = locate_mention(&corpus, *chapter, *line, surface)?;
            if hits.is_empty() {
                emit(out, &format!("no mention of {surface:?} at chapter {chapter}, line {line}\n"))?;
            }
            for h in hits {
                let m = &h.mention;
                emit(
                    out,
                    &format!(
                        "{}/{} chapter {} line {} tokens {}-{}\n{}\n",
                        m.surface, m.etype, m.chapter, m.line, m.token_start, m.token_end, h.context
                    ),
                )?;
            }
            Ok(0)
        }
    }
}

fn same_file(a: &Path, b: &Path) -> bool {
    match (fs::canonicalize(a), fs::canonicalize(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}
