//! Transforming selected string fields of JSON Lines records.
//!
//! Each selected field is paired with its parse in a sidecar CoNLL-U file.
//! Sidecar sentence ids have the form `<record id>/<field path>/<n>`, where
//! the field path is concrete (`questions[1].input_text`) and `n` counts the
//! field's sentences from 0. Rewritten fields are spliced into the original
//! line at their byte offsets, so every other byte of a record is preserved.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;

use serde_json::value::RawValue;

use crate::conllu::Document;
use crate::error::{Error, Result};
use crate::model::ParsedSentence;
use crate::profile::DialectProfile;
use crate::provenance::{Edit, Provenance};
use crate::transform::{derive_seed, run_indexed, transform_sentence, TransformConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Step {
    Key(String),
    Each,
    Index(usize),
}

/// A path into a JSON record: dot-separated keys, each optionally followed
/// by `[*]` (every element) or `[n]` (one element).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSelector {
    raw: String,
    steps: Vec<Step>,
}

impl fmt::Display for FieldSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

impl FieldSelector {
    pub fn parse(selector: &str) -> Result<Self> {
        let fail = |message: &str| Error::Selector {
            selector: selector.to_owned(),
            message: message.to_owned(),
        };
        let mut steps = Vec::new();
        for segment in selector.split('.') {
            let (key, mut rest) = segment.split_at(segment.find('[').unwrap_or(segment.len()));
            if key.is_empty() {
                return Err(fail("empty key"));
            }
            steps.push(Step::Key(key.to_owned()));
            while !rest.is_empty() {
                let close = rest.find(']').ok_or_else(|| fail("unclosed '['"))?;
                let inner = &rest[1..close];
                steps.push(match inner {
                    "*" => Step::Each,
                    n => Step::Index(n.parse().map_err(|_| fail("index must be '*' or a number"))?),
                });
                rest = &rest[close + 1..];
                if !rest.is_empty() && !rest.starts_with('[') {
                    return Err(fail("unexpected text after ']'"));
                }
            }
        }
        Ok(FieldSelector {
            raw: selector.to_owned(),
            steps,
        })
    }

    /// Every string this selector reaches in `line`, as (concrete path,
    /// byte range of the JSON string literal, decoded value).
    fn resolve(&self, line: &str, record: &str) -> Result<Vec<(String, Range<usize>, String)>> {
        let fail = |message: String| Error::Record {
            record: record.to_owned(),
            message: format!("selector {}: {message}", self.raw),
        };
        let root: &RawValue = serde_json::from_str(line).map_err(|e| fail(e.to_string()))?;
        let mut frontier: Vec<(String, &RawValue)> = vec![(String::new(), root)];
        for step in &self.steps {
            let mut next = Vec::new();
            for (path, value) in frontier {
                match step {
                    Step::Key(key) => {
                        let map: HashMap<String, &RawValue> = serde_json::from_str(value.get())
                            .map_err(|_| fail(format!("{path:?} is not an object")))?;
                        let child = map.get(key).ok_or_else(|| fail(format!("no field {key:?}")))?;
                        let path = if path.is_empty() {
                            key.clone()
                        } else {
                            format!("{path}.{key}")
                        };
                        next.push((path, *child));
                    }
                    Step::Each | Step::Index(_) => {
                        let items: Vec<&RawValue> =
                            serde_json::from_str(value.get()).map_err(|_| fail(format!("{path:?} is not an array")))?;
                        let picked: Vec<(usize, &RawValue)> = match step {
                            Step::Index(i) => {
                                let item = items.get(*i).ok_or_else(|| fail(format!("{path}[{i}] out of range")))?;
                                vec![(*i, *item)]
                            }
                            _ => items.into_iter().enumerate().collect(),
                        };
                        next.extend(picked.into_iter().map(|(i, v)| (format!("{path}[{i}]"), v)));
                    }
                }
            }
            frontier = next;
        }
        frontier
            .into_iter()
            .map(|(path, value)| {
                let text: String =
                    serde_json::from_str(value.get()).map_err(|_| fail(format!("{path} is not a string")))?;
                let start = value.get().as_ptr() as usize - line.as_ptr() as usize;
                Ok((path, start..start + value.get().len(), text))
            })
            .collect()
    }
}

fn record_id(line: &str, index: usize) -> String {
    #[derive(serde::Deserialize)]
    struct Id {
        id: Option<serde_json::Value>,
    }
    match serde_json::from_str::<Id>(line).ok().and_then(|r| r.id) {
        Some(serde_json::Value::String(s)) => s,
        Some(serde_json::Value::Number(n)) => n.to_string(),
        _ => index.to_string(),
    }
}

/// Groups sidecar sentences by `<record id>/<field path>`, in sentence order.
fn index_parses(parses: &Document) -> Result<HashMap<&str, Vec<&ParsedSentence>>> {
    let mut grouped: HashMap<&str, BTreeMap<usize, &ParsedSentence>> = HashMap::new();
    for s in &parses.sentences {
        let bad = || Error::InvalidSentence {
            sent_id: s.sent_id.clone(),
            message: "sidecar sent_id must look like <record>/<field>/<n>".into(),
        };
        let (key, n) = s.sent_id.rsplit_once('/').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        grouped.entry(key).or_default().insert(n, s);
    }
    Ok(grouped
        .into_iter()
        .map(|(k, v)| (k, v.into_values().collect()))
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetOutput {
    /// Output records, one JSON object per line, in input order.
    pub records: Vec<String>,
    /// One entry per changed field, with `sent_id` set to
    /// `<record id>/<field path>` and `seed` set to the global seed.
    pub provenance: Vec<Provenance>,
    pub skips: usize,
}

struct FieldResult {
    range: Range<usize>,
    provenance: Provenance,
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn transform_field(
    key: &str,
    sentences: &[&ParsedSentence],
    profile: &DialectProfile,
    config: &TransformConfig,
) -> (Provenance, usize) {
    let mut source = String::new();
    let mut output = String::new();
    let mut edits = Vec::new();
    let mut skips = 0;
    for (n, s) in sentences.iter().enumerate() {
        let out = transform_sentence(s, profile, derive_seed(config.seed, key, n), config.density);
        skips += out.skips;
        if n > 0 {
            source.push(' ');
            output.push(' ');
        }
        let shift = source.chars().count();
        edits.extend(out.provenance.edits.into_iter().map(|e| Edit {
            original_span: (e.original_span.0 + shift, e.original_span.1 + shift),
            ..e
        }));
        source.push_str(&out.provenance.source_text);
        output.push_str(&out.provenance.output_text);
    }
    let provenance = Provenance {
        sent_id: key.to_owned(),
        source_text: source,
        output_text: output,
        edits,
        seed: config.seed,
    };
    (provenance, skips)
}

/// Transforms the selected fields of every record in `input` (JSON Lines).
/// Blank lines are dropped; every other line yields exactly one output line.
pub fn transform_dataset(
    input: &str,
    selectors: &[FieldSelector],
    parses: &Document,
    profile: &DialectProfile,
    config: &TransformConfig,
) -> Result<DatasetOutput> {
    if !(0.0..=1.0).contains(&config.density) {
        return Err(Error::DensityScale(config.density));
    }
    let index = index_parses(parses)?;
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();

    let per_record = run_indexed(
        &lines,
        config.threads,
        |(i, line)| -> Result<(String, Vec<Provenance>, usize)> {
            let id = record_id(line, i);
            let mut fields: Vec<FieldResult> = Vec::new();
            let mut skips = 0;
            let mut seen = std::collections::HashSet::new();
            for selector in selectors {
                for (path, range, text) in selector.resolve(line, &id)? {
                    if !seen.insert(range.start) {
                        continue;
                    }
                    let key = format!("{id}/{path}");
                    let sentences = index.get(key.as_str()).ok_or_else(|| Error::MissingParse {
                        record: id.clone(),
                        field: path.clone(),
                    })?;
                    let (provenance, skipped) = transform_field(&key, sentences, profile, config);
                    skips += skipped;
                    if strip_ws(&provenance.source_text) != strip_ws(&text) {
                        return Err(Error::Record {
                            record: id.clone(),
                            message: format!("parse of {path} does not match the field text"),
                        });
                    }
                    if provenance.is_changed() {
                        fields.push(FieldResult { range, provenance });
                    }
                }
            }
            if fields.is_empty() {
                return Ok((line.to_string(), Vec::new(), skips));
            }
            fields.sort_by_key(|f| f.range.start);
            let mut out = String::with_capacity(line.len() + 64);
            let mut pos = 0;
            for f in &fields {
                out.push_str(&line[pos..f.range.start]);
                out.push_str(&serde_json::to_string(&f.provenance.output_text).expect("string serializes"));
                pos = f.range.end;
            }
            out.push_str(&line[pos..]);
            Ok((out, fields.into_iter().map(|f| f.provenance).collect(), skips))
        },
    );

    let mut output = DatasetOutput {
        records: Vec::with_capacity(lines.len()),
        provenance: Vec::new(),
        skips: 0,
    };
    for result in per_record {
        let (record, provenance, skips) = result?;
        output.records.push(record);
        output.provenance.extend(provenance);
        output.skips += skips;
    }
    Ok(output)
}
