//! Applying a dialect profile to sentences and documents.
//!
//! Rules run in ascending feature order. For each rule, the sites found in
//! the current sentence are visited left to right and each one gets a
//! Bernoulli draw with the feature's probability (times the density scale).
//! All randomness for a sentence comes from one SplitMix64 stream seeded by
//! [`derive_seed`], so output depends only on the global seed, the document
//! id and the sentence's position.

use crate::conllu::Document;
use crate::error::{Error, Result};
use crate::model::ParsedSentence;
use crate::profile::DialectProfile;
use crate::provenance::Provenance;
use crate::rules::catalog;
use crate::working::WorkingSentence;

/// Small, fast, splittable PRNG.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`. `n` must be non-zero.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }
}

pub(crate) fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01B3)
    })
}

/// Per-sentence seed.
pub fn derive_seed(global: u64, doc_id: &str, sentence_index: usize) -> u64 {
    let h = mix64(global ^ 0x6469_616c_6563_7473);
    let h = mix64(h ^ fnv1a(doc_id.as_bytes()));
    mix64(h ^ mix64((sentence_index as u64).wrapping_add(0x9E37_79B9_7F4A_7C15)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformConfig {
    pub seed: u64,
    /// Multiplies every feature probability; must lie in `[0, 1]`.
    pub density: f64,
    /// Worker threads for document transforms; `None` uses all cores.
    pub threads: Option<usize>,
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            seed: 0,
            density: 1.0,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SentenceOutput {
    pub sentence: ParsedSentence,
    pub provenance: Provenance,
    /// Sites that won their draw but could not be rewritten.
    pub skips: usize,
}

/// Transforms one sentence with the given sentence seed at full density.
pub fn transform(s: &ParsedSentence, profile: &DialectProfile, seed: u64) -> (ParsedSentence, Provenance) {
    let out = transform_sentence(s, profile, seed, 1.0);
    (out.sentence, out.provenance)
}

/// Transforms one sentence. `density` is clamped to `[0, 1]`.
pub fn transform_sentence(s: &ParsedSentence, profile: &DialectProfile, seed: u64, density: f64) -> SentenceOutput {
    let density = if density.is_finite() {
        density.clamp(0.0, 1.0)
    } else {
        1.0
    };
    let mut rng = SplitMix64::new(seed);
    let mut working = WorkingSentence::new(s);
    let mut edits = Vec::new();
    let mut skips = 0;
    for rule in catalog() {
        let p = profile.probability(rule.feature) * density;
        if p <= 0.0 {
            continue;
        }
        let mut rewrites = Vec::new();
        for site in rule.match_sites(working.sentence()) {
            if !working.is_free(&site) {
                continue;
            }
            if rng.next_f64() >= p {
                continue;
            }
            match rule.rewrite(working.sentence(), &site) {
                Ok(rw) => rewrites.push(rw),
                Err(_) => skips += 1,
            }
        }
        if rewrites.is_empty() {
            continue;
        }
        let (applied, skipped) = working.apply(rule.feature, rewrites);
        skips += skipped.len();
        edits.extend(applied);
    }
    let mut sentence = working.into_sentence();
    let output_text = sentence.text();
    sentence.comments = s
        .comments
        .iter()
        .map(|c| {
            if c.trim_start().starts_with("text =") {
                format!(" text = {output_text}")
            } else {
                c.clone()
            }
        })
        .collect();
    SentenceOutput {
        provenance: Provenance {
            sent_id: s.sent_id.clone(),
            source_text: s.text(),
            output_text,
            edits,
            seed,
        },
        sentence,
        skips,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DocumentOutput {
    pub document: Document,
    pub provenance: Vec<Provenance>,
    pub skips: usize,
}

/// Transforms every sentence of a document. The result does not depend on
/// the number of threads.
pub fn transform_document(
    doc: &Document,
    profile: &DialectProfile,
    config: &TransformConfig,
) -> Result<DocumentOutput> {
    if !(0.0..=1.0).contains(&config.density) {
        return Err(Error::DensityScale(config.density));
    }
    let run = |(i, s): (usize, &ParsedSentence)| {
        transform_sentence(s, profile, derive_seed(config.seed, &doc.doc_id, i), config.density)
    };
    let outputs = run_indexed(&doc.sentences, config.threads, run);
    let mut sentences = Vec::with_capacity(outputs.len());
    let mut provenance = Vec::with_capacity(outputs.len());
    let mut skips = 0;
    for out in outputs {
        sentences.push(out.sentence);
        provenance.push(out.provenance);
        skips += out.skips;
    }
    Ok(DocumentOutput {
        document: Document {
            doc_id: doc.doc_id.clone(),
            sentences,
        },
        provenance,
        skips,
    })
}

#[cfg(feature = "parallel")]
pub(crate) fn run_indexed<T, R, F>(items: &[T], threads: Option<usize>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn((usize, &T)) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let work = || items.par_iter().enumerate().map(&f).collect();
    match threads {
        Some(1) => items.iter().enumerate().map(&f).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn run_indexed<T, R, F>(items: &[T], _threads: Option<usize>, f: F) -> Vec<R>
where
    F: Fn((usize, &T)) -> R,
{
    items.iter().enumerate().map(f).collect()
}
