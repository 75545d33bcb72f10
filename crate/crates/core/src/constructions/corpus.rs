//! The claims corpus: one record per line.
//!
//! ```text
//! # comment
//! name=ex5 | source=ExtraspecialSemidirect(7,3) | cd=1,3,6,14 | shape=path:5 | cite=...
//! ```
//!
//! Fields are `key=value` pairs separated by `|`. `name`, `source`, `cd`,
//! `shape` and `cite` are required and `label` is optional. `cite` must come
//! last and runs to the end of the line, so it may contain `|`. `source` is
//! either a constructor expression or the word `recorded` for degree sets
//! that are checked at graph level only. `shape` is a `&`-joined list of
//! predicates such as `union_paths:5,1&components:2`.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::constructions::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::graphs::ShapeClaim;

pub const SHIPPED_CORPUS: &str = include_str!("../../corpus/claims.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Spec(GroupSpec),
    RecordedOnly,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Spec(s) => write!(f, "{s}"),
            Source::RecordedOnly => f.write_str("recorded"),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    /// Sorted, always contains 1.
    pub claimed_cd: Vec<u64>,
    #[serde(serialize_with = "as_string")]
    pub claimed_shape: ShapeClaim,
    /// Literal shape label as printed in the source text, when it differs
    /// from the edge convention.
    pub label: Option<String>,
    pub cite: String,
    pub line: usize,
}

fn as_string<S: serde::Serializer>(c: &ShapeClaim, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(c)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_corpus(&text)
}

pub fn shipped_corpus() -> Vec<CorpusEntry> {
    parse_corpus(SHIPPED_CORPUS).expect("shipped corpus parses")
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut names = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry = parse_line(trimmed, line)?;
        if !names.insert(entry.name.clone()) {
            return Err(Error::Corpus {
                line,
                message: format!("duplicate entry name {:?}", entry.name),
            });
        }
        entries.push(entry);
    }
    Ok(entries)
}

fn parse_line(text: &str, line: usize) -> Result<CorpusEntry> {
    let err = |message: String| Error::Corpus { line, message };
    let mut name = None;
    let mut source = None;
    let mut cd = None;
    let mut shape = None;
    let mut label = None;
    let mut cite = None;

    let mut rest = text;
    while !rest.is_empty() {
        let (key, after) = rest
            .split_once('=')
            .ok_or_else(|| err(format!("expected key=value near {rest:?}")))?;
        let key = key.trim();
        if key == "cite" {
            cite = Some(after.trim().to_string());
            break;
        }
        let (value, next) = match after.split_once('|') {
            Some((v, n)) => (v.trim(), n.trim_start()),
            None => (after.trim(), ""),
        };
        let slot = match key {
            "name" => &mut name,
            "source" => &mut source,
            "cd" => &mut cd,
            "shape" => &mut shape,
            "label" => &mut label,
            other => return Err(err(format!("unknown field {other:?}"))),
        };
        if slot.replace(value.to_string()).is_some() {
            return Err(err(format!("field {key:?} given twice")));
        }
        rest = next;
    }

    let missing = |k: &str| err(format!("missing field {k:?}"));
    let name = name.ok_or_else(|| missing("name"))?;
    if name.is_empty() {
        return Err(err("empty entry name".into()));
    }
    let in_entry = |m: String| err(format!("entry {name:?}: {m}"));

    let source = match source.ok_or_else(|| missing("source"))?.as_str() {
        "recorded" => Source::RecordedOnly,
        expr => Source::Spec(expr.parse().map_err(|e: Error| in_entry(e.to_string()))?),
    };

    let cd_text = cd.ok_or_else(|| missing("cd"))?;
    let mut claimed_cd = cd_text
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| in_entry(format!("bad degree list {cd_text:?}")))?;
    claimed_cd.sort_unstable();
    let before = claimed_cd.len();
    claimed_cd.dedup();
    if claimed_cd.len() != before {
        return Err(in_entry("repeated degree in cd".into()));
    }
    if claimed_cd.first() == Some(&0) {
        return Err(in_entry("degree 0 in cd".into()));
    }
    if claimed_cd.first() != Some(&1) {
        return Err(in_entry("cd must contain 1".into()));
    }

    let claimed_shape: ShapeClaim = shape
        .ok_or_else(|| missing("shape"))?
        .parse()
        .map_err(|e: Error| in_entry(e.to_string()))?;
    let cite = cite.ok_or_else(|| missing("cite"))?;

    Ok(CorpusEntry {
        name,
        source,
        claimed_cd,
        claimed_shape,
        label: label.filter(|l| !l.is_empty()),
        cite,
        line,
    })
}
