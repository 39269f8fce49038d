//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns JSON text; the `*_json` functions are the same
//! operations without the wasm-bindgen wrapper.

use dialect_forge::data::{self, shipped_profile, shipped_profiles};
use dialect_forge::rules::rule_for;
use dialect_forge::survey::{binary_profiles, parse_bank};
use dialect_forge::{
    catalog_universe, feature_vector, manhattan_distance, parse_conllu, transform_document, Edit, FeatureId,
    Provenance, Session, TransformConfig,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Serialize, PartialEq)]
pub struct Segment {
    pub text: String,
    pub feature: Option<u16>,
    pub rule: Option<&'static str>,
}

#[derive(Debug, Serialize)]
struct SentenceView {
    sent_id: String,
    source: String,
    output: String,
    segments: Vec<Segment>,
    edits: Vec<Edit>,
}

/// Splits the output text into runs, tagging each run with the edit that
/// produced it.
pub fn segments(p: &Provenance) -> Vec<Segment> {
    let mut chars: Vec<(char, Option<usize>)> = p.source_text.chars().map(|c| (c, None)).collect();
    let mut order: Vec<(usize, &Edit)> = p.edits.iter().enumerate().collect();
    order.sort_by_key(|(_, e)| std::cmp::Reverse(e.original_span));
    for (i, e) in order {
        let (s, t) = e.original_span;
        chars.splice(s..t, e.replacement.chars().map(|c| (c, Some(i))));
    }
    let mut out: Vec<(String, Option<usize>)> = Vec::new();
    for (c, tag) in chars {
        match out.last_mut() {
            Some((text, last)) if *last == tag => text.push(c),
            _ => out.push((c.to_string(), tag)),
        }
    }
    out.into_iter()
        .map(|(text, tag)| {
            let feature = tag.map(|i| p.edits[i].feature);
            Segment {
                text,
                feature: feature.map(FeatureId::number),
                rule: feature.and_then(rule_for).map(|r| r.name),
            }
        })
        .collect()
}

pub fn transform_json(conllu: &str, profile: &str, seed: u64, density: f64) -> Result<String, String> {
    let doc = parse_conllu(conllu).map_err(|e| e.to_string())?;
    let profile = shipped_profile(profile).ok_or_else(|| format!("unknown profile {profile}"))?;
    let config = TransformConfig {
        seed,
        density,
        threads: None,
    };
    let out = transform_document(&doc, &profile, &config).map_err(|e| e.to_string())?;
    let views: Vec<SentenceView> = out
        .provenance
        .into_iter()
        .map(|p| SentenceView {
            segments: segments(&p),
            sent_id: p.sent_id,
            source: p.source_text,
            output: p.output_text,
            edits: p.edits,
        })
        .collect();
    serde_json::to_string(&views).map_err(|e| e.to_string())
}

pub fn distance_matrix_json() -> String {
    let universe = catalog_universe();
    let profiles = shipped_profiles();
    let vectors: Vec<_> = profiles
        .iter()
        .map(|p| feature_vector(p, &universe).expect("catalog universe is valid"))
        .collect();
    let matrix: Vec<Vec<f64>> = vectors
        .iter()
        .map(|a| {
            vectors
                .iter()
                .map(|b| manhattan_distance(a, b).expect("same universe"))
                .collect()
        })
        .collect();
    let names: Vec<&str> = profiles.iter().map(|p| p.name.as_str()).collect();
    serde_json::json!({ "names": names, "matrix": matrix }).to_string()
}

/// The gold parses of the rule examples, for the page's sentence picker.
#[wasm_bindgen]
pub fn fixtures() -> String {
    data::RULE_EXAMPLES_CONLLU.to_owned()
}

#[wasm_bindgen]
pub fn profile_names() -> String {
    serde_json::to_string(&data::PROFILE_NAMES).expect("names serialize")
}

#[wasm_bindgen]
pub fn transform(conllu: &str, profile: &str, seed: u64, density: f64) -> Result<String, JsError> {
    transform_json(conllu, profile, seed, density).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn distance_matrix() -> String {
    distance_matrix_json()
}

#[wasm_bindgen]
pub struct Survey {
    session: Session,
}

#[wasm_bindgen]
impl Survey {
    /// Candidates are the shipped dialects other than the merged profile.
    #[wasm_bindgen(constructor)]
    pub fn new() -> Survey {
        let profiles = shipped_profiles();
        let profiles = binary_profiles(profiles.iter().filter(|p| p.name != "Multi"));
        let bank = parse_bank(data::QUESTION_BANK).expect("shipped bank parses");
        Survey {
            session: Session::new(profiles, bank),
        }
    }

    pub fn view(&self) -> String {
        serde_json::to_string(&self.session.view()).expect("view serializes")
    }

    pub fn answer(&mut self, feature: u16, accept: bool) -> Result<String, JsError> {
        self.answer_json(feature, accept).map_err(|e| JsError::new(&e))
    }
}

impl Survey {
    pub fn answer_json(&mut self, feature: u16, accept: bool) -> Result<String, String> {
        let f = FeatureId::new(feature.into()).map_err(|e| e.to_string())?;
        let view = self.session.answer(f, accept).map_err(|e| e.to_string())?;
        Ok(serde_json::to_string(&view).expect("view serializes"))
    }
}

impl Default for Survey {
    fn default() -> Self {
        Survey::new()
    }
}
