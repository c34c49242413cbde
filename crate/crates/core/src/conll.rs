//! Two-column IOB2 chapter files.
//!
//! A chapter file holds one `token<TAB>tag` pair per line, a blank line
//! between sentences and `#`-prefixed comment lines anywhere. Comments are
//! kept verbatim together with their anchor, so a well-formed file
//! serializes back to the same bytes.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::etype::EntityType;
use crate::finding::{Finding, RuleCode};
use crate::listing::EntityKey;
use crate::text::nfc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Outside,
    Begin(EntityType),
    Inside(EntityType),
}

impl Tag {
    pub fn etype(self) -> Option<EntityType> {
        match self {
            Tag::Outside => None,
            Tag::Begin(t) | Tag::Inside(t) => Some(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TagError {
    Malformed,
    UnknownType(String),
}

impl FromStr for Tag {
    type Err = TagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "O" {
            return Ok(Tag::Outside);
        }
        let (ctor, suffix): (fn(EntityType) -> Tag, &str) =
            if let Some(rest) = s.strip_prefix("B-") {
                (Tag::Begin, rest)
            } else if let Some(rest) = s.strip_prefix("I-") {
                (Tag::Inside, rest)
            } else {
                return Err(TagError::Malformed);
            };
        suffix
            .parse::<EntityType>()
            .map(ctor)
            .map_err(|_| TagError::UnknownType(suffix.to_string()))
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Outside => f.write_str("O"),
            Tag::Begin(t) => write!(f, "B-{t}"),
            Tag::Inside(t) => write!(f, "I-{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    text: String,
    tag: Tag,
}

impl Token {
    pub fn new(text: impl Into<String>, tag: Tag) -> Result<Self, ConllError> {
        let text = text.into();
        if text.is_empty() || text.chars().any(char::is_whitespace) {
            return Err(ConllError::BadToken { text });
        }
        Ok(Token {
            text: nfc(&text),
            tag,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }
}

/// A raw comment line and its anchor: it sits after `offset` tokens of
/// sentence `sentence`. An anchor of `(sentences.len(), 0)` means after the
/// last sentence's closing blank line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comment {
    pub sentence: usize,
    pub offset: usize,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConllError {
    #[error("{path}:{line}: expected 2 columns (token, tag), found {found}")]
    Columns {
        path: String,
        line: usize,
        found: usize,
    },
    #[error("{path}:{line}: malformed tag {tag:?} (expected O, B-<TYPE> or I-<TYPE>)")]
    BadTag {
        path: String,
        line: usize,
        tag: String,
    },
    #[error("{path}:{line}: unknown entity type {etype:?} in tag {tag:?}")]
    UnknownType {
        path: String,
        line: usize,
        tag: String,
        etype: String,
    },
    #[error("{path}: chapter contains no sentences")]
    NoSentences { path: String },
    #[error("sentence {sentence} is empty")]
    EmptySentence { sentence: usize },
    #[error("token text {text:?} is empty or contains whitespace")]
    BadToken { text: String },
    #[error("sentence {sentence}, token {token}: I- tag does not continue an entity of the same type")]
    OrphanInside { sentence: usize, token: usize },
    #[error("comment {text:?} has an invalid anchor ({sentence}, {offset})")]
    CommentAnchor {
        text: String,
        sentence: usize,
        offset: usize,
    },
    #[error("chapter indices must run 1..=n in order; position {position} holds chapter {found}")]
    ChapterIndex { position: usize, found: usize },
}

/// One chapter file. Construction enforces well-formed IOB2, non-empty
/// sentences and valid comment anchors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chapter {
    index: usize,
    source_path: String,
    sentences: Vec<Vec<Token>>,
    comments: Vec<Comment>,
    separator: char,
}

impl Chapter {
    pub fn new(
        index: usize,
        source_path: impl Into<String>,
        sentences: Vec<Vec<Token>>,
        comments: Vec<Comment>,
    ) -> Result<Self, ConllError> {
        let source_path = source_path.into();
        if sentences.is_empty() {
            return Err(ConllError::NoSentences { path: source_path });
        }
        for (s, sentence) in sentences.iter().enumerate() {
            if sentence.is_empty() {
                return Err(ConllError::EmptySentence { sentence: s + 1 });
            }
            let mut open = None;
            for (k, token) in sentence.iter().enumerate() {
                match token.tag {
                    Tag::Outside => open = None,
                    Tag::Begin(t) => open = Some(t),
                    Tag::Inside(t) if open == Some(t) => {}
                    Tag::Inside(_) => {
                        return Err(ConllError::OrphanInside {
                            sentence: s + 1,
                            token: k,
                        })
                    }
                }
            }
        }
        let mut previous = (0, 0);
        for c in &comments {
            let anchor = (c.sentence, c.offset);
            let in_range = match sentences.get(c.sentence) {
                Some(sentence) => c.offset <= sentence.len(),
                None => c.sentence == sentences.len() && c.offset == 0,
            };
            if !in_range || anchor < previous || !c.text.starts_with('#') || c.text.contains('\n')
            {
                return Err(ConllError::CommentAnchor {
                    text: c.text.clone(),
                    sentence: c.sentence,
                    offset: c.offset,
                });
            }
            previous = anchor;
        }
        Ok(Chapter {
            index,
            source_path,
            sentences,
            comments,
            separator: '\t',
        })
    }

    /// Use `sep` (tab or space) between columns when serializing.
    pub fn with_separator(mut self, sep: char) -> Self {
        if sep == '\t' || sep == ' ' {
            self.separator = sep;
        }
        self
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    pub fn sentences(&self) -> &[Vec<Token>] {
        &self.sentences
    }

    pub fn comments(&self) -> &[Comment] {
        &self.comments
    }

    pub fn separator(&self) -> char {
        self.separator
    }

    /// Tokens `start..=end` of sentence `line` (1-based), space-joined.
    pub fn span_text(&self, line: usize, start: usize, end: usize) -> Option<String> {
        let sentence = self.sentences.get(line.checked_sub(1)?)?;
        let tokens = sentence.get(start..=end)?;
        Some(join_tokens(tokens))
    }

    /// Plain text of sentence `line` (1-based).
    pub fn sentence_text(&self, line: usize) -> Option<String> {
        let sentence = self.sentences.get(line.checked_sub(1)?)?;
        Some(join_tokens(sentence))
    }

    /// Every maximal B-/I- run, in document order.
    pub fn mentions(&self) -> Vec<Mention> {
        let mut out = Vec::new();
        for (s, sentence) in self.sentences.iter().enumerate() {
            let mut k = 0;
            while k < sentence.len() {
                let Tag::Begin(etype) = sentence[k].tag else {
                    k += 1;
                    continue;
                };
                let start = k;
                k += 1;
                while k < sentence.len() && sentence[k].tag == Tag::Inside(etype) {
                    k += 1;
                }
                out.push(Mention {
                    surface: join_tokens(&sentence[start..k]),
                    etype,
                    chapter: self.index,
                    line: s + 1,
                    token_start: start,
                    token_end: k - 1,
                });
            }
        }
        out
    }
}

fn join_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&t.text);
    }
    out
}

/// One annotated occurrence of an entity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mention {
    pub surface: String,
    pub etype: EntityType,
    pub chapter: usize,
    pub line: usize,
    pub token_start: usize,
    pub token_end: usize,
}

impl Mention {
    pub fn key(&self) -> EntityKey {
        EntityKey::new(self.surface.as_str(), self.etype)
    }
}

/// Result of parsing one chapter file: the repaired chapter and one
/// finding per orphan I- tag that was turned into a B- tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedChapter {
    pub chapter: Chapter,
    pub findings: Vec<Finding>,
}

fn is_comment(line: &str) -> bool {
    if !line.starts_with('#') {
        return false;
    }
    // "#<TAB>O" is a token whose text is "#", not a comment.
    let mut cols = line.split_whitespace();
    match (cols.next(), cols.next(), cols.next()) {
        (Some(_), Some(tag), None) => tag.parse::<Tag>().is_err(),
        _ => true,
    }
}

/// Parse the text of one chapter file.
///
/// Token text is NFC-normalized. An I- tag that does not continue an open
/// entity of the same type is repaired into a B- tag and reported.
pub fn parse_chapter(text: &str, index: usize, source_path: &str) -> Result<ParsedChapter, ConllError> {
    let mut sentences: Vec<Vec<Token>> = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut comments = Vec::new();
    let mut separator = None;

    let body = text.strip_suffix('\n').unwrap_or(text);
    for (n, raw) in body.split('\n').enumerate() {
        let line_no = n + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            if !current.is_empty() {
                sentences.push(core::mem::take(&mut current));
            }
            continue;
        }
        if is_comment(line) {
            comments.push(Comment {
                sentence: sentences.len(),
                offset: current.len(),
                text: line.to_string(),
            });
            continue;
        }
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() != 2 {
            return Err(ConllError::Columns {
                path: source_path.to_string(),
                line: line_no,
                found: cols.len(),
            });
        }
        let tag = cols[1].parse::<Tag>().map_err(|e| match e {
            TagError::Malformed => ConllError::BadTag {
                path: source_path.to_string(),
                line: line_no,
                tag: cols[1].to_string(),
            },
            TagError::UnknownType(etype) => ConllError::UnknownType {
                path: source_path.to_string(),
                line: line_no,
                tag: cols[1].to_string(),
                etype,
            },
        })?;
        if separator.is_none() {
            let gap = &line.trim_start()[cols[0].len()..];
            let gap = &gap[..gap.len() - gap.trim_start().len()];
            separator = Some(if gap == " " { ' ' } else { '\t' });
        }
        current.push(Token {
            text: nfc(cols[0]),
            tag,
        });
    }
    if !current.is_empty() {
        sentences.push(current);
    }

    let mut repairs = Vec::new();
    for (s, sentence) in sentences.iter_mut().enumerate() {
        let mut open = None;
        for (k, token) in sentence.iter_mut().enumerate() {
            match token.tag {
                Tag::Outside => open = None,
                Tag::Begin(t) => open = Some(t),
                Tag::Inside(t) => {
                    if open != Some(t) {
                        token.tag = Tag::Begin(t);
                        repairs.push((s + 1, k));
                    }
                    open = Some(t);
                }
            }
        }
    }

    let chapter = Chapter::new(index, source_path, sentences, comments)?
        .with_separator(separator.unwrap_or('\t'));
    let findings = if repairs.is_empty() {
        Vec::new()
    } else {
        let mentions = chapter.mentions();
        repairs
            .into_iter()
            .map(|(line, token)| {
                let key = mentions
                    .iter()
                    .find(|m| m.line == line && m.token_start == token)
                    .map(Mention::key);
                Finding::new(
                    RuleCode::ConllOrphanInside,
                    key,
                    alloc::format!(
                        "{source_path}: sentence {line}, token {token}: I- tag opens an entity; read as B-"
                    ),
                )
                .at(index, line)
            })
            .collect()
    };
    Ok(ParsedChapter { chapter, findings })
}

/// Serialize a chapter back to file text. Sentences are separated by one
/// blank line and the output ends with exactly one newline.
pub fn serialize_chapter(ch: &Chapter) -> String {
    let mut out = String::new();
    let mut comments = ch.comments.iter().peekable();
    let mut emit_comments = |out: &mut String, sentence: usize, offset: usize| {
        while let Some(c) = comments.next_if(|c| c.sentence == sentence && c.offset == offset) {
            out.push_str(&c.text);
            out.push('\n');
        }
    };
    for (s, sentence) in ch.sentences.iter().enumerate() {
        if s > 0 {
            out.push('\n');
        }
        emit_comments(&mut out, s, 0);
        for (k, token) in sentence.iter().enumerate() {
            out.push_str(&token.text);
            out.push(ch.separator);
            // Display for Tag never fails.
            let _ = fmt::write(&mut out, format_args!("{}", token.tag));
            out.push('\n');
            emit_comments(&mut out, s, k + 1);
        }
    }
    let n = ch.sentences.len();
    if ch.comments.iter().any(|c| c.sentence == n) {
        out.push('\n');
        emit_comments(&mut out, n, 0);
    }
    out
}

/// A parsed corpus: chapters in order, the derived mentions in document
/// order, and any tagging findings raised while parsing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    chapters: Vec<Chapter>,
    mentions: Vec<Mention>,
    findings: Vec<Finding>,
}

impl Corpus {
    pub fn new(chapters: Vec<Chapter>) -> Result<Self, ConllError> {
        Self::with_findings(chapters, Vec::new())
    }

    pub fn from_parsed(parsed: Vec<ParsedChapter>) -> Result<Self, ConllError> {
        let mut chapters = Vec::with_capacity(parsed.len());
        let mut findings = Vec::new();
        for p in parsed {
            chapters.push(p.chapter);
            findings.extend(p.findings);
        }
        Self::with_findings(chapters, findings)
    }

    fn with_findings(chapters: Vec<Chapter>, findings: Vec<Finding>) -> Result<Self, ConllError> {
        for (i, ch) in chapters.iter().enumerate() {
            if ch.index != i + 1 {
                return Err(ConllError::ChapterIndex {
                    position: i + 1,
                    found: ch.index,
                });
            }
        }
        let mentions = chapters.iter().flat_map(Chapter::mentions).collect();
        Ok(Corpus {
            chapters,
            mentions,
            findings,
        })
    }

    pub fn chapters(&self) -> &[Chapter] {
        &self.chapters
    }

    pub fn mentions(&self) -> &[Mention] {
        &self.mentions
    }

    /// Tagging findings raised while parsing (orphan I- repairs).
    pub fn findings(&self) -> &[Finding] {
        &self.findings
    }

    pub fn chapter(&self, index: usize) -> Option<&Chapter> {
        self.chapters.get(index.checked_sub(1)?)
    }

    /// Mentions of one sentence, in token order.
    pub fn mentions_at(&self, chapter: usize, line: usize) -> &[Mention] {
        let lo = self
            .mentions
            .partition_point(|m| (m.chapter, m.line) < (chapter, line));
        let hi = self
            .mentions
            .partition_point(|m| (m.chapter, m.line) <= (chapter, line));
        &self.mentions[lo..hi]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocateError {
    #[error("chapter {chapter} out of range (valid: 1..={max})")]
    Chapter { chapter: usize, max: usize },
    #[error("line {line} out of range for chapter {chapter} (valid: 1..={max})")]
    Line {
        chapter: usize,
        line: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedMention {
    pub mention: Mention,
    /// The sentence before, the sentence itself and the sentence after,
    /// one per line, as plain text.
    pub context: String,
}

/// All mentions on `line` of `chapter` whose surface equals `surface`.
pub fn locate_mention(
    corpus: &Corpus,
    chapter: usize,
    line: usize,
    surface: &str,
) -> Result<Vec<LocatedMention>, LocateError> {
    let ch = corpus.chapter(chapter).ok_or(LocateError::Chapter {
        chapter,
        max: corpus.chapters.len(),
    })?;
    let max = ch.sentences.len();
    if line == 0 || line > max {
        return Err(LocateError::Line { chapter, line, max });
    }
    let query = nfc(surface);
    let hits: Vec<&Mention> = corpus
        .mentions_at(chapter, line)
        .iter()
        .filter(|m| m.surface == query)
        .collect();
    if hits.is_empty() {
        return Ok(Vec::new());
    }
    let context = (line.saturating_sub(1).max(1)..=(line + 1).min(max))
        .filter_map(|l| ch.sentence_text(l))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(hits
        .into_iter()
        .map(|m| LocatedMention {
            mention: m.clone(),
            context: context.clone(),
        })
        .collect())
}
