use dialect_forge::data::RULE_EXAMPLES_CONLLU;
use dialect_forge::{replay_edits, Edit, FeatureId, Provenance};
use dialect_forge_web::{distance_matrix_json, fixtures, profile_names, segments, transform_json, Survey};
use serde_json::Value;

#[test]
fn transform_highlights_rewritten_text() {
    let out: Value = serde_json::from_str(&transform_json(RULE_EXAMPLES_CONLLU, "IndE", 4, 1.0).unwrap()).unwrap();
    let sentences = out.as_array().unwrap();
    assert_eq!(sentences.len(), 28);
    for s in sentences {
        let joined: String = s["segments"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g["text"].as_str().unwrap())
            .collect();
        assert_eq!(joined, s["output"].as_str().unwrap());
        let tagged = s["segments"]
            .as_array()
            .unwrap()
            .iter()
            .any(|g| g["feature"].is_number());
        let inserted = s["edits"].as_array().unwrap().iter().any(|e| e["replacement"] != "");
        assert_eq!(tagged, inserted, "{}", s["sent_id"]);
    }
    assert!(transform_json("not conllu", "IndE", 0, 1.0).is_err());
    assert!(transform_json(RULE_EXAMPLES_CONLLU, "Nope", 0, 1.0).is_err());
    assert!(transform_json(RULE_EXAMPLES_CONLLU, "IndE", 0, 2.0).is_err());
}

#[test]
fn segments_follow_replay() {
    let edit = |s, e, r: &str, f| Edit {
        feature: FeatureId::of(f),
        original_span: (s, e),
        replacement: r.into(),
        site_token_indices: vec![],
    };
    let p = Provenance {
        sent_id: "s".into(),
        source_text: "He speaks English.".into(),
        output_text: "He speak English.".into(),
        edits: vec![edit(3, 9, "speak", 170)],
        seed: 0,
    };
    let segs = segments(&p);
    assert_eq!(segs.len(), 3);
    assert_eq!(segs[1].text, "speak");
    assert_eq!(segs[1].rule, Some("uninflect"));
    assert_eq!(segs[0].feature, None);
    let joined: String = segs.iter().map(|s| s.text.as_str()).collect();
    assert_eq!(joined, replay_edits(&p.source_text, &p.edits));
}

#[test]
fn matrix_is_symmetric_with_zero_diagonal() {
    let m: Value = serde_json::from_str(&distance_matrix_json()).unwrap();
    let names = m["names"].as_array().unwrap();
    let rows = m["matrix"].as_array().unwrap();
    assert_eq!(names.len(), rows.len());
    for i in 0..rows.len() {
        assert_eq!(rows[i][i], 0.0);
        for (j, row) in rows.iter().enumerate() {
            assert_eq!(rows[i][j], row[i]);
        }
    }
    let listed: Value = serde_json::from_str(&profile_names()).unwrap();
    assert_eq!(&listed, &m["names"]);
    assert!(fixtures().contains("# sent_id = f153"));
}

#[test]
fn survey_steps_to_a_result() {
    let mut survey = Survey::new();
    let mut view: Value = serde_json::from_str(&survey.view()).unwrap();
    assert!(survey.answer_json(200, true).is_err());
    let mut steps = 0;
    while let Some(f) = view["question"]["feature"].as_u64() {
        view = serde_json::from_str(&survey.answer_json(f as u16, false).unwrap()).unwrap();
        steps += 1;
        assert!(steps < 30);
    }
    assert!(!view["result"].as_array().unwrap().is_empty());
}
