//! Scoring helpers and the paired bootstrap test.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transform::{mix64, run_indexed, SplitMix64};

fn is_punct(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{2018}' | '\u{2019}' | '\u{201C}' | '\u{201D}' | '\u{2026}' | '\u{2013}' | '\u{2014}'
        )
}

fn normalized_tokens(s: &str) -> Vec<String> {
    s.split_whitespace()
        .map(|t| t.trim_matches(is_punct).to_lowercase())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Token-overlap F1 after lowercasing and stripping edge punctuation.
pub fn token_f1(prediction: &str, gold: &str) -> f64 {
    let pred = normalized_tokens(prediction);
    let gold = normalized_tokens(gold);
    match (pred.is_empty(), gold.is_empty()) {
        (true, true) => return 1.0,
        (true, false) | (false, true) => return 0.0,
        _ => {}
    }
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for t in &gold {
        *counts.entry(t).or_default() += 1;
    }
    let mut common = 0;
    for t in &pred {
        if let Some(n) = counts.get_mut(t.as_str()).filter(|n| **n > 0) {
            *n -= 1;
            common += 1;
        }
    }
    if common == 0 {
        return 0.0;
    }
    let precision = common as f64 / pred.len() as f64;
    let recall = common as f64 / gold.len() as f64;
    2.0 * precision * recall / (precision + recall)
}

/// 1 when the strings match after lowercasing and collapsing whitespace.
pub fn exact_match(prediction: &str, gold: &str) -> u8 {
    let norm = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase();
    u8::from(norm(prediction) == norm(gold))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BootstrapResult {
    pub p_value: f64,
    pub mean_delta: f64,
}

fn check(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::PairedLength { a: a.len(), b: b.len() });
    }
    let bad = a.iter().chain(b).position(|x| !x.is_finite());
    match bad {
        Some(i) => Err(Error::NonFiniteScore(i % a.len())),
        None => Ok(()),
    }
}

/// One-sided paired bootstrap on `mean(a) - mean(b)`.
///
/// The p-value is the share of resampled deltas on the far side of zero from
/// the observed delta, with resamples exactly at zero counting one half.
/// Resample `r` draws from its own stream seeded by `(seed, r)`.
pub fn paired_bootstrap(a: &[f64], b: &[f64], resamples: usize, seed: u64) -> Result<BootstrapResult> {
    check(a, b)?;
    if resamples == 0 {
        return Err(Error::ZeroResamples);
    }
    let n = a.len();
    let deltas: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let mean_delta = deltas.iter().sum::<f64>() / n as f64;
    let indices: Vec<usize> = (0..resamples).collect();
    let resampled = run_indexed(&indices, None, |(_, &r)| {
        let mut rng = SplitMix64::new(mix64(seed ^ mix64(r as u64 + 1)));
        let sum: f64 = (0..n).map(|_| deltas[rng.below(n)]).sum();
        sum / n as f64
    });
    // Resampled deltas within eps of zero count as ties.
    let eps = 1e-12 * deltas.iter().fold(1.0f64, |m, d| m.max(d.abs()));
    let mut far = 0.0;
    for d in resampled {
        let d = if mean_delta >= 0.0 { d } else { -d };
        if d < -eps {
            far += 1.0;
        } else if d <= eps {
            far += 0.5;
        }
    }
    Ok(BootstrapResult {
        p_value: far / resamples as f64,
        mean_delta,
    })
}
