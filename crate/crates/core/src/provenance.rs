//! Edit records and per-sentence provenance.

use serde::{Deserialize, Serialize};

use crate::profile::FeatureId;

/// One applied rewrite. `original_span` is a half-open range of character
/// offsets into the provenance's `source_text`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edit {
    pub feature: FeatureId,
    pub original_span: (usize, usize),
    pub replacement: String,
    /// Source token indices consumed by the rewrite.
    pub site_token_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub sent_id: String,
    pub source_text: String,
    pub output_text: String,
    pub edits: Vec<Edit>,
    pub seed: u64,
}

impl Provenance {
    pub fn identity(sent_id: &str, text: &str, seed: u64) -> Self {
        Provenance {
            sent_id: sent_id.to_owned(),
            source_text: text.to_owned(),
            output_text: text.to_owned(),
            edits: Vec::new(),
            seed,
        }
    }

    pub fn is_changed(&self) -> bool {
        !self.edits.is_empty()
    }

    /// Splices every edit into `source_text`. Spans refer to the source, so
    /// edits are applied right to left.
    pub fn replay(&self) -> String {
        replay_edits(&self.source_text, &self.edits)
    }

    /// True when no two edit spans overlap and replay reproduces the output.
    pub fn is_sound(&self) -> bool {
        let mut spans: Vec<_> = self.edits.iter().map(|e| e.original_span).collect();
        spans.sort();
        let len = self.source_text.chars().count();
        let ordered = spans.iter().all(|&(s, e)| s <= e && e <= len) && spans.windows(2).all(|w| w[0].1 <= w[1].0);
        ordered && self.replay() == self.output_text
    }
}

pub fn replay_edits(source: &str, edits: &[Edit]) -> String {
    let mut chars: Vec<char> = source.chars().collect();
    let mut order: Vec<&Edit> = edits.iter().collect();
    order.sort_by_key(|e| std::cmp::Reverse(e.original_span));
    for e in order {
        let (s, t) = e.original_span;
        chars.splice(s..t, e.replacement.chars());
    }
    chars.into_iter().collect()
}
