//! Synthetic corpora with hand-built gold parses.
//!
//! Templates use one token per whitespace-separated item:
//! `form/lemma/UPOS/XPOS/head/deprel`, with a trailing `/-` for no space
//! after. `$N` (singular noun), `$P` (name) and `$M` (mass noun) are slots.

#![allow(dead_code)]

use dialect_forge::data::RULE_EXAMPLES_CONLLU;
use dialect_forge::{parse_conllu, Document, ParsedSentence, Token};

pub const EXTRA_CONLLU: &str = include_str!("../../../../fixtures/extra_examples.conllu");

const NOUNS: [&str; 12] = [
    "point", "ball", "game", "house", "car", "book", "town", "window", "letter", "garden", "school", "road",
];
const NAMES: [&str; 8] = ["John", "Mary", "Priya", "Carlos", "Aisha", "Wei", "Tom", "Rosa"];
const MASS: [&str; 6] = ["furniture", "equipment", "evidence", "luggage", "advice", "mail"];

const QUESTIONS: [&str; 14] = [
    "Do/do/AUX/VBP/3/aux you/you/PRON/PRP/3/nsubj get/get/VERB/VB/0/ROOT the/the/DET/DT/5/det $N/$N/NOUN/NN/3/dobj/- ?/?/PUNCT/./3/punct",
    "Does/do/AUX/VBZ/3/aux $P/$P/PROPN/NNP/3/nsubj like/like/VERB/VB/0/ROOT the/the/DET/DT/5/det $N/$N/NOUN/NN/3/dobj/- ?/?/PUNCT/./3/punct",
    "Who/who/PRON/WP/2/nsubj came/come/VERB/VBD/0/ROOT to/to/ADP/IN/2/prep the/the/DET/DT/5/det $N/$N/NOUN/NN/3/pobj/- ?/?/PUNCT/./2/punct",
    "Why/why/ADV/WRB/6/advmod does/do/AUX/VBZ/6/aux/- n't/not/PART/RB/6/neg $P/$P/PROPN/NNP/6/nsubj ever/ever/ADV/RB/6/advmod call/call/VERB/VB/0/ROOT anyone/anyone/PRON/NN/6/dobj/- ?/?/PUNCT/./6/punct",
    "Are/be/AUX/VBP/3/aux you/you/PRON/PRP/3/nsubj going/go/VERB/VBG/0/ROOT to/to/ADP/IN/3/prep $N/$N/NOUN/NN/4/pobj/- ?/?/PUNCT/./3/punct",
    "Can/can/AUX/MD/3/aux you/you/PRON/PRP/3/nsubj help/help/VERB/VB/0/ROOT me/I/PRON/PRP/5/nsubj carry/carry/VERB/VB/3/ccomp the/the/DET/DT/7/det boxes/box/NOUN/NNS/5/dobj/- ?/?/PUNCT/./3/punct",
    "Is/be/VERB/VBZ/0/ROOT there/there/PRON/EX/1/expl any/any/DET/DT/4/det $M/$M/NOUN/NN/1/attr in/in/ADP/IN/1/prep the/the/DET/DT/7/det $N/$N/NOUN/NN/5/pobj/- ?/?/PUNCT/./1/punct",
    "Which/which/DET/WDT/2/det team/team/NOUN/NN/3/nsubj won/win/VERB/VBD/0/ROOT the/the/DET/DT/5/det game/game/NOUN/NN/3/dobj yesterday/yesterday/NOUN/NN/3/npadvmod/- ?/?/PUNCT/./3/punct",
    "Did/do/AUX/VBD/3/aux $P/$P/PROPN/NNP/3/nsubj see/see/VERB/VB/0/ROOT the/the/DET/DT/5/det $N/$N/NOUN/NN/3/dobj/- ?/?/PUNCT/./3/punct",
    "What/what/PRON/WP/4/dobj did/do/AUX/VBD/4/aux you/you/PRON/PRP/4/nsubj tell/tell/VERB/VB/0/ROOT $P/$P/PROPN/NNP/4/dative/- ?/?/PUNCT/./4/punct",
    "Where/where/ADV/WRB/4/advmod is/be/AUX/VBZ/4/aux $P/$P/PROPN/NNP/4/nsubj going/go/VERB/VBG/0/ROOT/- ?/?/PUNCT/./4/punct",
    "How/how/ADV/WRB/4/advmod could/could/AUX/MD/4/aux they/they/PRON/PRP/4/nsubj lose/lose/VERB/VB/0/ROOT the/the/DET/DT/6/det game/game/NOUN/NN/4/dobj/- ?/?/PUNCT/./4/punct",
    "Does/do/AUX/VBZ/7/aux the/the/DET/DT/3/det man/man/NOUN/NN/7/nsubj who/who/PRON/WP/5/nsubj lives/live/VERB/VBZ/3/relcl there/there/ADV/RB/5/advmod speak/speak/VERB/VB/0/ROOT English/English/PROPN/NNP/7/dobj/- ?/?/PUNCT/./7/punct",
    "When/when/ADV/WRB/4/advmod did/do/AUX/VBD/4/aux $P/$P/PROPN/NNP/4/nsubj leave/leave/VERB/VB/0/ROOT the/the/DET/DT/6/det $N/$N/NOUN/NN/4/dobj/- ?/?/PUNCT/./4/punct",
];

const DECLARATIVES: [&str; 10] = [
    "$P/$P/PROPN/NNP/3/nsubjpass was/be/AUX/VBD/3/auxpass scolded/scold/VERB/VBN/0/ROOT by/by/ADP/IN/3/agent his/his/DET/PRP$/6/poss boss/boss/NOUN/NN/4/pobj/- ././PUNCT/./3/punct",
    "I/I/PRON/PRP/4/nsubj do/do/AUX/VBP/4/aux/- n't/not/PART/RB/4/neg want/want/VERB/VB/0/ROOT any/any/DET/DT/6/det $M/$M/NOUN/NN/4/dobj/- ././PUNCT/./4/punct",
    "He/he/PRON/PRP/2/nsubj speaks/speak/VERB/VBZ/0/ROOT English/English/PROPN/NNP/2/dobj/- ././PUNCT/./2/punct",
    "The/the/DET/DT/2/det $N/$N/NOUN/NN/4/nsubjpass was/be/AUX/VBD/4/auxpass opened/open/VERB/VBN/0/ROOT/- ././PUNCT/./4/punct",
    "She/she/PRON/PRP/2/nsubj walks/walk/VERB/VBZ/0/ROOT slowly/slowly/ADV/RB/2/advmod to/to/ADP/IN/2/prep the/the/DET/DT/6/det $N/$N/NOUN/NN/4/pobj/- ././PUNCT/./2/punct",
    "They/they/PRON/PRP/3/nsubjpass were/be/AUX/VBD/3/auxpass allowed/allow/VERB/VBN/0/ROOT to/to/PART/TO/5/aux call/call/VERB/VB/3/xcomp $P/$P/PROPN/NNP/5/dobj/- ././PUNCT/./3/punct",
    "$P/$P/PROPN/NNP/2/nsubj made/make/VERB/VBD/0/ROOT me/I/PRON/PRP/4/nsubj do/do/VERB/VB/2/ccomp it/it/PRON/PRP/4/dobj/- ././PUNCT/./2/punct",
    "We/we/PRON/PRP/3/nsubj could/could/AUX/MD/3/aux do/do/VERB/VB/0/ROOT that/that/PRON/DT/3/dobj/- ././PUNCT/./3/punct",
    "There/there/PRON/EX/2/expl are/be/VERB/VBP/0/ROOT two/two/NUM/CD/4/nummod men/man/NOUN/NNS/2/attr waiting/wait/VERB/VBG/4/acl in/in/ADP/IN/5/prep the/the/DET/DT/8/det $N/$N/NOUN/NN/6/pobj/- ././PUNCT/./2/punct",
    "I/I/PRON/PRP/3/nsubj/- 'm/be/AUX/VBP/3/aux going/go/VERB/VBG/0/ROOT to/to/ADP/IN/3/prep $N/$N/NOUN/NN/4/pobj/- ././PUNCT/./3/punct",
];

/// Builds a sentence from template notation.
pub fn from_template(sent_id: &str, template: &str, noun: &str, name: &str, mass: &str) -> ParsedSentence {
    let tokens = template
        .split_whitespace()
        .enumerate()
        .map(|(i, item)| {
            let item = item.replace("$N", noun).replace("$P", name).replace("$M", mass);
            let cols: Vec<&str> = item.split('/').collect();
            assert!(cols.len() == 6 || cols.len() == 7, "bad template item {item}");
            let tok =
                Token::new(i + 1, cols[0], cols[1], cols[2], cols[3]).with_head(cols[4].parse().unwrap(), cols[5]);
            if cols.len() == 7 {
                tok.no_space()
            } else {
                tok
            }
        })
        .collect();
    ParsedSentence::new(sent_id, tokens).expect("template parses are trees")
}

fn fill(templates: &[&str], prefix: &str, n: usize) -> Vec<ParsedSentence> {
    (0..n)
        .map(|i| {
            let t = templates.len();
            let noun = NOUNS[(i / t) % NOUNS.len()];
            let name = NAMES[(i / (t * NOUNS.len())) % NAMES.len()];
            let mass = MASS[(i / t) % MASS.len()];
            from_template(&format!("{prefix}{i}"), templates[i % t], noun, name, mass)
        })
        .collect()
}

pub fn questions(n: usize) -> Vec<ParsedSentence> {
    fill(&QUESTIONS, "q", n)
}

pub fn declaratives(n: usize) -> Vec<ParsedSentence> {
    fill(&DECLARATIVES, "d", n)
}

pub fn gold_sentences() -> Vec<ParsedSentence> {
    let mut all = parse_conllu(RULE_EXAMPLES_CONLLU).unwrap().sentences;
    all.extend(parse_conllu(EXTRA_CONLLU).unwrap().sentences);
    all
}

/// A mixed document: the gold fixtures, then alternating questions and
/// declaratives, with unique sentence ids.
pub fn corpus(doc_id: &str, n: usize) -> Document {
    let gold = gold_sentences();
    let rest = n.saturating_sub(gold.len());
    let mut qs = questions(rest / 2 + 1).into_iter();
    let mut ds = declaratives(rest / 2 + 1).into_iter();
    let mut sentences: Vec<ParsedSentence> = gold.into_iter().take(n).collect();
    while sentences.len() < n {
        let next = if sentences.len().is_multiple_of(2) {
            qs.next()
        } else {
            ds.next()
        };
        sentences.push(next.unwrap());
    }
    for (i, s) in sentences.iter_mut().enumerate() {
        s.sent_id = format!("{doc_id}-{i}");
    }
    Document::new(doc_id, sentences)
}

/// `n` copies of one sentence with distinct ids.
pub fn repeated(s: &ParsedSentence, n: usize) -> Document {
    let sentences = (0..n)
        .map(|i| {
            let mut c = s.clone();
            c.sent_id = format!("{}-{i}", s.sent_id);
            c
        })
        .collect();
    Document::new("repeated", sentences)
}

/// A JSON Lines record split into the literal text around its selected
/// string fields: `fixed[0] sel[0] fixed[1] sel[1] ... fixed[k]`.
pub struct Record {
    pub fixed: Vec<String>,
    pub selected: Vec<String>,
}

impl Record {
    pub fn line(&self) -> String {
        let mut out = self.fixed[0].clone();
        for (sel, fixed) in self.selected.iter().zip(&self.fixed[1..]) {
            out.push_str(&serde_json::to_string(sel).unwrap());
            out.push_str(fixed);
        }
        out
    }

    /// The line with the selected fields replaced by `values`.
    pub fn with_values(&self, values: &[String]) -> String {
        Record {
            fixed: self.fixed.clone(),
            selected: values.to_vec(),
        }
        .line()
    }
}

/// CoQA-style records whose `questions[*].input_text` fields have gold
/// parses in the returned sidecar document.
pub fn coqa_records(n: usize) -> (Vec<Record>, Document) {
    let pool = questions(n * 2 + 1);
    let mut sidecar = Vec::new();
    let mut records = Vec::new();
    for i in 0..n {
        let id = format!("rec{i:04}");
        let k = 1 + i % 2;
        let mut fixed = vec![format!(
            "{{\"id\": \"{id}\", \"story\":\"Caf\\u00e9 story {i}\\nline two\",  \"meta\": {{\"score\": 1.50e3, \"tags\": [\"a\",\"b\"], \"nested\": {{\"x\": null}}}}, \"questions\": [",
        )];
        let mut selected = Vec::new();
        for q in 0..k {
            let mut s = pool[(i * 2 + q) % pool.len()].clone();
            s.sent_id = format!("{id}/questions[{q}].input_text/0");
            selected.push(s.text());
            sidecar.push(s);
            let prefix = if q == 0 {
                "{\"input_text\": "
            } else {
                ", {\"input_text\":"
            };
            fixed.last_mut().unwrap().push_str(prefix);
            fixed.push(format!(", \"turn_id\": {}}}", q + 1));
        }
        fixed.last_mut().unwrap().push_str(&format!(
            "], \"answers\": [{{\"span_text\": \"answer {i}\", \"span_start\": {}}}]}}",
            i * 7
        ));
        records.push(Record { fixed, selected });
    }
    (records, Document::new("sidecar", sidecar))
}
