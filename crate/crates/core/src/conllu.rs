//! CoNLL-U reading and writing, and surface detokenization.
//!
//! Only plain token lines are accepted: multiword ranges (`3-4`), empty
//! nodes (`5.1`) and non-empty DEPS columns are errors, since rules address
//! tokens by position and silent renumbering would shift edit spans.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ParsedSentence, Token};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Document {
    pub doc_id: String,
    pub sentences: Vec<ParsedSentence>,
}

impl Document {
    pub fn new(doc_id: impl Into<String>, sentences: Vec<ParsedSentence>) -> Self {
        Document {
            doc_id: doc_id.into(),
            sentences,
        }
    }
}

const SENT_ID: &str = "# sent_id = ";
const NEWDOC: &str = "# newdoc id = ";

pub fn parse_conllu(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    let mut seen = HashSet::new();
    let mut block: Vec<(usize, &str)> = Vec::new();

    let lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    for (line_no, line) in lines.chain(std::iter::once((0, ""))) {
        let line = line.trim_end_matches('\r');
        if !line.trim().is_empty() {
            block.push((line_no, line));
            continue;
        }
        if block.is_empty() {
            continue;
        }
        let ordinal = doc.sentences.len() + 1;
        if let Some(sentence) = parse_block(&block, ordinal, &mut doc.doc_id)? {
            if !seen.insert(sentence.sent_id.clone()) {
                return Err(Error::Conllu {
                    sent_id: sentence.sent_id,
                    line: block[0].0,
                    message: "duplicate sent_id".into(),
                });
            }
            doc.sentences.push(sentence);
        }
        block.clear();
    }
    Ok(doc)
}

fn parse_block(block: &[(usize, &str)], ordinal: usize, doc_id: &mut String) -> Result<Option<ParsedSentence>> {
    let mut sent_id = None;
    let mut comments = Vec::new();
    let mut tokens = Vec::new();

    for &(_, line) in block.iter().filter(|(_, l)| l.starts_with('#')) {
        if let Some(id) = line.strip_prefix(SENT_ID) {
            sent_id = Some(id.trim().to_owned());
        } else if let Some(id) = line.strip_prefix(NEWDOC) {
            *doc_id = id.trim().to_owned();
        } else {
            comments.push(line[1..].to_owned());
        }
    }
    let sent_id = sent_id.unwrap_or_else(|| ordinal.to_string());

    for &(line_no, line) in block.iter().filter(|(_, l)| !l.starts_with('#')) {
        let fail = |message: String| Error::Conllu {
            sent_id: sent_id.clone(),
            line: line_no,
            message,
        };
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(fail(format!("expected 10 columns, found {}", cols.len())));
        }
        if cols[0].contains('-') {
            return Err(fail(format!("multiword token range {} not supported", cols[0])));
        }
        if cols[0].contains('.') {
            return Err(fail(format!("empty node {} not supported", cols[0])));
        }
        let index: usize = cols[0]
            .parse()
            .map_err(|_| fail(format!("non-integer ID {:?}", cols[0])))?;
        if index != tokens.len() + 1 {
            return Err(fail(format!(
                "ID {index} out of sequence (expected {})",
                tokens.len() + 1
            )));
        }
        let head: usize = cols[6]
            .parse()
            .map_err(|_| fail(format!("non-integer HEAD {:?}", cols[6])))?;
        if cols[8] != "_" {
            return Err(fail("enhanced dependencies (DEPS) not supported".into()));
        }
        let morph_features = if cols[5] == "_" {
            Vec::new()
        } else {
            cols[5]
                .split('|')
                .map(|kv| {
                    kv.split_once('=')
                        .map(|(k, v)| (k.to_owned(), v.to_owned()))
                        .ok_or_else(|| fail(format!("malformed feature {kv:?}")))
                })
                .collect::<Result<_>>()?
        };
        let mut space_after = true;
        let mut misc = Vec::new();
        if cols[9] != "_" {
            for item in cols[9].split('|') {
                if item == "SpaceAfter=No" {
                    space_after = false;
                } else {
                    misc.push(item.to_owned());
                }
            }
        }
        tokens.push(Token {
            index,
            surface: cols[1].to_owned(),
            lemma: (cols[2] != "_").then(|| cols[2].to_owned()),
            upos: cols[3].to_owned(),
            xpos: cols[4].to_owned(),
            head,
            deprel: cols[7].to_owned(),
            morph_features,
            space_after,
            misc,
        });
    }

    if tokens.is_empty() {
        // A comment-only block (e.g. a lone `# newdoc`) carries no sentence.
        return Ok(None);
    }
    let first_token_line = block.iter().find(|(_, l)| !l.starts_with('#')).map_or(0, |(n, _)| *n);
    for (tok, &(line_no, _)) in tokens.iter().zip(block.iter().filter(|(_, l)| !l.starts_with('#'))) {
        if tok.head > tokens.len() {
            return Err(Error::Conllu {
                sent_id: sent_id.clone(),
                line: line_no,
                message: format!("dangling HEAD {} on token {}", tok.head, tok.index),
            });
        }
    }
    let sentence = ParsedSentence {
        sent_id,
        tokens,
        comments,
    };
    sentence.validate().map_err(|e| match e {
        Error::InvalidSentence { sent_id, message } => Error::Conllu {
            sent_id,
            line: first_token_line,
            message,
        },
        other => other,
    })?;
    Ok(Some(sentence))
}

pub fn serialize_conllu(doc: &Document) -> String {
    let mut out = String::new();
    if !doc.doc_id.is_empty() && !doc.sentences.is_empty() {
        out.push_str(NEWDOC);
        out.push_str(&doc.doc_id);
        out.push('\n');
    }
    for s in &doc.sentences {
        write_sentence(&mut out, s);
    }
    out
}

pub fn serialize_sentence(s: &ParsedSentence) -> String {
    let mut out = String::new();
    write_sentence(&mut out, s);
    out
}

fn write_sentence(out: &mut String, s: &ParsedSentence) {
    out.push_str(SENT_ID);
    out.push_str(&s.sent_id);
    out.push('\n');
    for c in &s.comments {
        out.push('#');
        out.push_str(c);
        out.push('\n');
    }
    for t in &s.tokens {
        let feats = if t.morph_features.is_empty() {
            "_".to_owned()
        } else {
            t.morph_features
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join("|")
        };
        let mut misc: Vec<&str> = Vec::new();
        if !t.space_after {
            misc.push("SpaceAfter=No");
        }
        misc.extend(t.misc.iter().map(String::as_str));
        let misc = if misc.is_empty() {
            "_".to_owned()
        } else {
            misc.join("|")
        };
        let cols = [
            t.index.to_string(),
            t.surface.clone(),
            t.lemma.clone().unwrap_or_else(|| "_".into()),
            t.upos.clone(),
            t.xpos.clone(),
            feats,
            t.head.to_string(),
            t.deprel.clone(),
            "_".into(),
            misc,
        ];
        out.push_str(&cols.join("\t"));
        out.push('\n');
    }
    out.push('\n');
}

/// Joins surfaces, with one space after each token that has
/// `space_after` set, except the last.
pub fn detokenize(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        out.push_str(&t.surface);
        if t.space_after && i + 1 < tokens.len() {
            out.push(' ');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_tree() {
        let doc = parse_conllu("1\tHi\thi\tINTJ\tUH\t_\t0\troot\t_\t_\n").unwrap();
        assert_eq!(doc.sentences.len(), 1);
        assert_eq!(doc.sentences[0].tokens[0].head, 0);
        assert_eq!(doc.sentences[0].sent_id, "1");
    }

    #[test]
    fn dangling_head_names_sentence_and_line() {
        let text = "# sent_id = bad\n\
                    1\ta\ta\tX\tX\t_\t0\troot\t_\t_\n\
                    2\tb\tb\tX\tX\t_\t5\tdep\t_\t_\n\
                    3\tc\tc\tX\tX\t_\t1\tdep\t_\t_\n";
        match parse_conllu(text).unwrap_err() {
            Error::Conllu { sent_id, line, .. } => {
                assert_eq!(sent_id, "bad");
                assert_eq!(line, 3);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn rejects_cycle_range_and_empty_node() {
        let cyc = "1\ta\ta\tX\tX\t_\t0\troot\t_\t_\n2\tb\tb\tX\tX\t_\t3\tdep\t_\t_\n3\tc\tc\tX\tX\t_\t2\tdep\t_\t_\n";
        assert!(parse_conllu(cyc).is_err());
        let mwt = "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n1\tdo\tdo\tAUX\tVBP\t_\t0\troot\t_\t_\n";
        assert!(parse_conllu(mwt).is_err());
        let empty = "1\ta\ta\tX\tX\t_\t0\troot\t_\t_\n1.1\tb\tb\tX\tX\t_\t_\t_\t_\t_\n";
        assert!(parse_conllu(empty).is_err());
        let non_int = "x\ta\ta\tX\tX\t_\t0\troot\t_\t_\n";
        assert!(parse_conllu(non_int).is_err());
        let deps = "1\ta\ta\tX\tX\t_\t0\troot\t0:root\t_\n";
        assert!(parse_conllu(deps).is_err());
    }

    #[test]
    fn duplicate_sent_ids_rejected() {
        let s = "# sent_id = a\n1\tx\tx\tX\tX\t_\t0\troot\t_\t_\n\n";
        assert!(parse_conllu(&format!("{s}{s}")).is_err());
    }

    #[test]
    fn missing_lemma_is_none() {
        let doc = parse_conllu("1\tHi\t_\tINTJ\tUH\t_\t0\troot\t_\t_\n").unwrap();
        assert_eq!(doc.sentences[0].tokens[0].lemma, None);
        let back = serialize_conllu(&doc);
        assert!(back.contains("\tHi\t_\t"));
    }

    #[test]
    fn empty_document() {
        assert_eq!(serialize_conllu(&Document::default()), "");
        assert!(parse_conllu("").unwrap().sentences.is_empty());
    }

    #[test]
    fn one_block_ends_with_blank_line() {
        let doc = parse_conllu("1\tHi\thi\tINTJ\tUH\t_\t0\troot\t_\t_\n").unwrap();
        let out = serialize_conllu(&doc);
        assert!(out.ends_with("\t_\n\n"));
        assert_eq!(out.matches("\n\n").count(), 1);
    }

    #[test]
    fn space_after_and_misc_preserved() {
        let text = "# sent_id = s\n# text = He left.\n\
                    1\tHe\the\tPRON\tPRP\tCase=Nom|Person=3\t2\tnsubj\t_\t_\n\
                    2\tleft\tleave\tVERB\tVBD\t_\t0\troot\t_\tSpaceAfter=No|Gloss=x\n\
                    3\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n";
        let doc = parse_conllu(text).unwrap();
        let s = &doc.sentences[0];
        assert!(!s.tokens[1].space_after);
        assert_eq!(s.tokens[1].misc, vec!["Gloss=x".to_owned()]);
        assert_eq!(s.tokens[0].morph_features.len(), 2);
        assert_eq!(s.text(), "He left.");
        assert_eq!(serialize_conllu(&doc), text);
    }

    #[test]
    fn newdoc_sets_doc_id() {
        let text = "# newdoc id = d1\n# sent_id = s\n1\tHi\thi\tINTJ\tUH\t_\t0\troot\t_\t_\n\n";
        let doc = parse_conllu(text).unwrap();
        assert_eq!(doc.doc_id, "d1");
        assert_eq!(serialize_conllu(&doc), text);
    }

    fn t(form: &str, space_after: bool) -> Token {
        let tok = Token::new(1, form, form, "X", "X");
        if space_after {
            tok
        } else {
            tok.no_space()
        }
    }

    #[test]
    fn detokenize_examples() {
        assert_eq!(
            detokenize(&[t("He", true), t("left", false), t(".", false)]),
            "He left."
        );
        assert_eq!(detokenize(&[]), "");
        assert_eq!(
            detokenize(&[t("y'all", false), t("'s", true), t("books", false)]),
            "y'all's books"
        );
        assert_eq!(detokenize(&[t("end", true)]), "end");
    }
}
