//! Feature vectors, inter-dialect distance, and transformation density.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::{DialectProfile, FeatureId};
use crate::provenance::Provenance;
use crate::rules::catalog;

/// Per-feature probabilities over an explicit feature universe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    universe: Vec<FeatureId>,
    values: Vec<f64>,
}

fn check_universe(universe: &[FeatureId]) -> Result<()> {
    if universe.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let mut seen = HashSet::new();
    for f in universe {
        if !seen.insert(*f) {
            return Err(Error::DuplicateUniverse(f.number()));
        }
    }
    Ok(())
}

impl FeatureVector {
    /// Builds a vector from raw values aligned with `universe`.
    pub fn from_values(universe: Vec<FeatureId>, values: Vec<f64>) -> Result<Self> {
        check_universe(&universe)?;
        assert_eq!(universe.len(), values.len(), "one value per universe feature");
        Ok(FeatureVector { universe, values })
    }

    pub fn universe(&self) -> &[FeatureId] {
        &self.universe
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, feature: FeatureId) -> Option<f64> {
        self.universe.iter().position(|f| *f == feature).map(|i| self.values[i])
    }
}

pub fn feature_vector(p: &DialectProfile, universe: &[FeatureId]) -> Result<FeatureVector> {
    check_universe(universe)?;
    Ok(FeatureVector {
        universe: universe.to_vec(),
        values: universe.iter().map(|f| p.probability(*f)).collect(),
    })
}

/// Mean absolute per-feature difference: 0 for identical vectors, 1 for
/// maximally different ones.
pub fn manhattan_distance(a: &FeatureVector, b: &FeatureVector) -> Result<f64> {
    if a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    let sum: f64 = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).sum();
    Ok(sum / a.universe.len() as f64)
}

/// The features covered by the rule catalog, ascending.
pub fn catalog_universe() -> Vec<FeatureId> {
    catalog().iter().map(|r| r.feature).collect()
}

/// Reads a universe file: one feature number per line, `#` comments allowed.
pub fn parse_universe(text: &str) -> Result<Vec<FeatureId>> {
    let mut universe = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let n: i64 = line.parse().map_err(|_| Error::ProfileParse {
            line: i + 1,
            message: format!("expected a feature number, found {line:?}"),
        })?;
        universe.push(FeatureId::new(n)?);
    }
    check_universe(&universe)?;
    Ok(universe)
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub sentences_total: usize,
    pub sentences_changed: usize,
    pub changed_fraction: f64,
    pub edits_per_feature: BTreeMap<FeatureId, usize>,
}

impl DensityReport {
    pub fn add(&mut self, p: &Provenance) {
        self.sentences_total += 1;
        if p.is_changed() {
            self.sentences_changed += 1;
        }
        for e in &p.edits {
            *self.edits_per_feature.entry(e.feature).or_default() += 1;
        }
        self.refresh();
    }

    /// Combines two partial reports.
    pub fn merge(mut self, other: &DensityReport) -> DensityReport {
        self.sentences_total += other.sentences_total;
        self.sentences_changed += other.sentences_changed;
        for (f, n) in &other.edits_per_feature {
            *self.edits_per_feature.entry(*f).or_default() += n;
        }
        self.refresh();
        self
    }

    fn refresh(&mut self) {
        self.changed_fraction = if self.sentences_total == 0 {
            0.0
        } else {
            self.sentences_changed as f64 / self.sentences_total as f64
        };
    }
}

pub fn density_report<'a>(provenances: impl IntoIterator<Item = &'a Provenance>) -> DensityReport {
    let mut report = DensityReport::default();
    for p in provenances {
        report.add(p);
    }
    report
}
