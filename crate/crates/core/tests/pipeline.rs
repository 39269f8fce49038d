mod support;

use std::collections::HashSet;

use dialect_forge::data::shipped_profile;
use dialect_forge::{
    catalog, derive_seed, parse_conllu, serialize_conllu, transform_dataset, transform_document, transform_sentence,
    DialectProfile, Error, FieldSelector, ParsedSentence, Pervasiveness, Token, TransformConfig,
};
use proptest::prelude::*;

fn config(seed: u64) -> TransformConfig {
    TransformConfig {
        seed,
        ..TransformConfig::default()
    }
}

#[test]
fn sae_is_identity() {
    let sae = shipped_profile("SAE").unwrap();
    let doc = support::corpus("c", 300);
    let out = transform_document(&doc, &sae, &config(9)).unwrap();
    for p in &out.provenance {
        assert_eq!(p.output_text, p.source_text);
        assert!(p.edits.is_empty());
    }
    assert_eq!(serialize_conllu(&out.document), serialize_conllu(&doc));
}

#[test]
fn give_passive_is_deterministic_at_class_a() {
    let s = support::gold_sentences()
        .into_iter()
        .find(|s| s.sent_id == "f153")
        .unwrap();
    let p = DialectProfile::new("p").with(153, Pervasiveness::A);
    for seed in 0..50 {
        let out = transform_sentence(&s, &p, seed, 1.0);
        assert_eq!(out.provenance.output_text, "John give his boss scold.");
    }
}

#[test]
fn sites_never_overlap_on_corpus() {
    let doc = support::corpus("c", 500);
    for rule in catalog() {
        for s in &doc.sentences {
            let sites = rule.match_sites(s);
            for w in sites.windows(2) {
                assert!(w[0].last < w[1].first, "{rule:?} on {}", s.sent_id);
            }
            for site in &sites {
                assert!(site.first <= site.anchor && site.anchor <= site.last && site.last <= s.len());
            }
        }
    }
}

#[test]
fn output_is_a_valid_tree_and_round_trips() {
    let multi = shipped_profile("Multi").unwrap();
    let doc = support::corpus("c", 400);
    let out = transform_document(&doc, &multi, &config(5)).unwrap();
    for (s, p) in out.document.sentences.iter().zip(&out.provenance) {
        s.validate().unwrap();
        assert_eq!(s.text(), p.output_text);
        assert!(p.is_sound(), "{}", p.sent_id);
    }
    let text = serialize_conllu(&out.document);
    assert_eq!(serialize_conllu(&parse_conllu(&text).unwrap()), text);
}

#[test]
fn expected_edits_grow_with_density() {
    let multi = shipped_profile("Multi").unwrap();
    let doc = support::corpus("c", 200);
    let mut last = 0usize;
    for density in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let mut edits = 0;
        for seed in 0..50 {
            let cfg = TransformConfig {
                seed,
                density,
                threads: None,
            };
            let out = transform_document(&doc, &multi, &cfg).unwrap();
            edits += out.provenance.iter().map(|p| p.edits.len()).sum::<usize>();
        }
        if density == 0.0 {
            assert_eq!(edits, 0);
        }
        assert!(edits >= last, "density {density}: {edits} < {last}");
        last = edits;
    }
}

#[test]
fn density_outside_unit_interval_is_rejected() {
    let doc = support::corpus("c", 3);
    let cfg = TransformConfig {
        density: 1.5,
        ..TransformConfig::default()
    };
    let err = transform_document(&doc, &DialectProfile::new("x"), &cfg).unwrap_err();
    assert_eq!(err, Error::DensityScale(1.5));
}

#[test]
fn seed_derivation_has_no_collisions() {
    let mut seen = HashSet::new();
    for doc in ["d", "e", "doc-1", "doc-2"] {
        for global in 0..5u64 {
            for i in 0..5_000 {
                assert!(seen.insert(derive_seed(global, doc, i)));
            }
        }
    }
    assert_eq!(seen.len(), 100_000);
    assert_ne!(derive_seed(1, "d", 0), derive_seed(0, "d", 0));
}

#[test]
fn dataset_sae_is_byte_identical() {
    let (records, sidecar) = support::coqa_records(20);
    let input: String = records.iter().map(|r| r.line() + "\n").collect();
    let sel = [FieldSelector::parse("questions[*].input_text").unwrap()];
    let out = transform_dataset(&input, &sel, &sidecar, &shipped_profile("SAE").unwrap(), &config(1)).unwrap();
    assert!(out.provenance.is_empty());
    let joined: String = out.records.iter().map(|r| r.clone() + "\n").collect();
    assert_eq!(joined, input);
}

#[test]
fn dataset_one_entry_per_changed_field() {
    let passive = support::declaratives(1).remove(0);
    let plain = support::questions(1).remove(0);
    let mut q0 = passive.clone();
    q0.sent_id = "r1/questions[0].input_text/0".into();
    let mut q1 = plain.clone();
    q1.sent_id = "r1/questions[1].input_text/0".into();
    let line = format!(
        r#"{{"id": "r1", "questions": [{{"input_text": {}}}, {{"input_text": {}}}], "label": 3}}"#,
        serde_json::to_string(&passive.text()).unwrap(),
        serde_json::to_string(&plain.text()).unwrap()
    );
    let sidecar = dialect_forge::Document::new("s", vec![q0, q1]);
    let sel = [FieldSelector::parse("questions[*].input_text").unwrap()];
    let p = DialectProfile::new("p").with(153, Pervasiveness::A);
    let out = transform_dataset(&line, &sel, &sidecar, &p, &config(1)).unwrap();
    assert_eq!(out.provenance.len(), 1);
    assert_eq!(out.provenance[0].sent_id, "r1/questions[0].input_text");
    assert_eq!(out.provenance[0].output_text, "John give his boss scold.");
    assert!(out.records[0].contains(r#""input_text": "John give his boss scold.""#));
    assert!(out.records[0].ends_with(r#", "label": 3}"#));
}

#[test]
fn dataset_errors() {
    let (records, sidecar) = support::coqa_records(3);
    let input: String = records.iter().map(|r| r.line() + "\n").collect();
    let sel = [FieldSelector::parse("questions[*].input_text").unwrap()];
    let p = shipped_profile("IndE").unwrap();

    let mut partial = sidecar.clone();
    partial.sentences.retain(|s| !s.sent_id.starts_with("rec0001/"));
    let err = transform_dataset(&input, &sel, &partial, &p, &config(1)).unwrap_err();
    assert!(
        matches!(err, Error::MissingParse { ref record, .. } if record == "rec0001"),
        "{err}"
    );

    let bad = [FieldSelector::parse("questions[*].nope").unwrap()];
    let err = transform_dataset(&input, &bad, &sidecar, &p, &config(1)).unwrap_err();
    assert!(matches!(err, Error::Record { .. }), "{err}");
}

#[test]
fn dataset_multi_sentence_fields_join_with_spaces() {
    let gold = support::gold_sentences();
    let mut a = gold.iter().find(|s| s.sent_id == "f170").unwrap().clone();
    let mut b = gold.iter().find(|s| s.sent_id == "f153").unwrap().clone();
    a.sent_id = "7/text/0".into();
    b.sent_id = "7/text/1".into();
    let text = format!("{} {}", a.text(), b.text());
    let line = format!(r#"{{"id": 7, "text": {}}}"#, serde_json::to_string(&text).unwrap());
    let sidecar = dialect_forge::Document::new("s", vec![a, b]);
    let p = DialectProfile::new("p")
        .with(153, Pervasiveness::A)
        .with(170, Pervasiveness::A);
    let sel = [FieldSelector::parse("text").unwrap()];
    let out = transform_dataset(&line, &sel, &sidecar, &p, &config(1)).unwrap();
    let prov = &out.provenance[0];
    assert_eq!(prov.output_text, "He speak English. John give his boss scold.");
    assert!(prov.is_sound());
    assert_eq!(
        out.records[0],
        format!(r#"{{"id": 7, "text": "{}"}}"#, prov.output_text)
    );
}

const VOCAB: [(&str, &str, &str, &str); 24] = [
    ("you", "you", "PRON", "PRP"),
    ("Who", "who", "PRON", "WP"),
    ("wives", "wife", "NOUN", "NNS"),
    ("furniture", "furniture", "NOUN", "NN"),
    ("easier", "easy", "ADJ", "JJR"),
    ("'ve", "have", "AUX", "VBP"),
    ("eaten", "eat", "VERB", "VBN"),
    ("were", "be", "AUX", "VBD"),
    ("could", "could", "AUX", "MD"),
    ("caught", "catch", "VERB", "VBD"),
    ("saw", "see", "VERB", "VBD"),
    ("by", "by", "ADP", "IN"),
    ("any", "any", "DET", "DT"),
    ("n't", "not", "PART", "RB"),
    ("does", "do", "AUX", "VBZ"),
    ("did", "do", "AUX", "VBD"),
    ("speaks", "speak", "VERB", "VBZ"),
    ("There", "there", "PRON", "EX"),
    ("thinking", "think", "VERB", "VBG"),
    ("to", "to", "PART", "TO"),
    ("call", "call", "VERB", "VB"),
    ("softly", "softly", "ADV", "RB"),
    ("Nobody", "nobody", "PRON", "NN"),
    ("?", "?", "PUNCT", "."),
];

const DEPRELS: [&str; 20] = [
    "nsubj",
    "nsubjpass",
    "aux",
    "auxpass",
    "neg",
    "agent",
    "pobj",
    "dobj",
    "det",
    "prep",
    "expl",
    "relcl",
    "xcomp",
    "ccomp",
    "advcl",
    "mark",
    "advmod",
    "conj",
    "punct",
    "attr",
];

fn arb_sentence() -> impl Strategy<Value = ParsedSentence> {
    (1usize..12)
        .prop_flat_map(|n| {
            (
                prop::collection::vec((0..VOCAB.len(), 0..DEPRELS.len(), any::<bool>(), any::<u32>()), n),
                0..n,
            )
        })
        .prop_map(|(items, root)| {
            let n = items.len();
            // Attach every token to one already in the tree, starting from the root.
            let mut order: Vec<usize> = (0..n).filter(|&i| i != root).collect();
            order.insert(0, root);
            let mut heads = vec![0usize; n];
            for (k, &i) in order.iter().enumerate().skip(1) {
                let pick = items[i].3 as usize % k;
                heads[i] = order[pick] + 1;
            }
            let tokens = items
                .iter()
                .enumerate()
                .map(|(i, &(v, d, space, _))| {
                    let (form, lemma, upos, xpos) = VOCAB[v];
                    let deprel = if heads[i] == 0 { "ROOT" } else { DEPRELS[d] };
                    let t = Token::new(i + 1, form, lemma, upos, xpos).with_head(heads[i], deprel);
                    if space {
                        t
                    } else {
                        t.no_space()
                    }
                })
                .collect();
            ParsedSentence::new("fuzz", tokens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn random_trees_transform_soundly(s in arb_sentence(), seed in any::<u64>(), density in 0.0f64..=1.0) {
        let multi = shipped_profile("Multi").unwrap();
        let out = transform_sentence(&s, &multi, seed, density);
        prop_assert!(out.provenance.is_sound());
        prop_assert!(out.sentence.validate().is_ok());
        prop_assert_eq!(out.sentence.text(), out.provenance.output_text.clone());
        let again = transform_sentence(&s, &multi, seed, density);
        prop_assert_eq!(again, out);
    }

    #[test]
    fn every_rule_alone_is_sound_on_random_trees(s in arb_sentence(), seed in any::<u64>()) {
        for rule in catalog() {
            let p = DialectProfile::new("one").with(rule.feature.number(), Pervasiveness::A);
            let out = transform_sentence(&s, &p, seed, 1.0);
            prop_assert!(out.provenance.is_sound(), "{:?}", rule);
            prop_assert!(out.sentence.validate().is_ok());
        }
    }
}
