//! Feature ids, pervasiveness classes, and dialect profiles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Highest feature number in the eWAVE catalogue.
pub const MAX_FEATURE: u16 = 235;

/// An eWAVE feature number in `1..=235`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u16")]
pub struct FeatureId(u16);

impl FeatureId {
    pub fn new(number: i64) -> Result<Self> {
        if (1..=MAX_FEATURE as i64).contains(&number) {
            Ok(FeatureId(number as u16))
        } else {
            Err(Error::FeatureOutOfRange(number))
        }
    }

    /// Panics on out-of-range numbers; for ids known at compile time.
    pub const fn of(number: u16) -> Self {
        assert!(number >= 1 && number <= MAX_FEATURE);
        FeatureId(number)
    }

    pub fn number(self) -> u16 {
        self.0
    }
}

impl TryFrom<i64> for FeatureId {
    type Error = Error;
    fn try_from(n: i64) -> Result<Self> {
        FeatureId::new(n)
    }
}

impl From<FeatureId> for u16 {
    fn from(f: FeatureId) -> u16 {
        f.0
    }
}

impl fmt::Display for FeatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// eWAVE pervasiveness rating of a feature within one dialect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pervasiveness {
    /// Pervasive or obligatory.
    A,
    /// Neither pervasive nor rare.
    B,
    /// Rare.
    C,
    /// Attested absence.
    D,
    /// Not applicable.
    X,
    /// No information.
    U,
}

impl Pervasiveness {
    pub const ALL: [Pervasiveness; 6] = [
        Pervasiveness::A,
        Pervasiveness::B,
        Pervasiveness::C,
        Pervasiveness::D,
        Pervasiveness::X,
        Pervasiveness::U,
    ];

    /// Probability that a matched site is perturbed.
    pub fn probability(self) -> f64 {
        pervasiveness_to_probability(self)
    }

    /// Total order used when merging: A > B > C > D > X > U.
    pub(crate) fn rank(self) -> u8 {
        match self {
            Pervasiveness::A => 5,
            Pervasiveness::B => 4,
            Pervasiveness::C => 3,
            Pervasiveness::D => 2,
            Pervasiveness::X => 1,
            Pervasiveness::U => 0,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pervasiveness::A => 'A',
            Pervasiveness::B => 'B',
            Pervasiveness::C => 'C',
            Pervasiveness::D => 'D',
            Pervasiveness::X => 'X',
            Pervasiveness::U => 'U',
        }
    }

    /// Parses a class letter. `?` is the eWAVE spelling of "no information".
    pub fn from_letter(s: &str) -> Option<Self> {
        Some(match s {
            "A" => Pervasiveness::A,
            "B" => Pervasiveness::B,
            "C" => Pervasiveness::C,
            "D" => Pervasiveness::D,
            "X" => Pervasiveness::X,
            "U" | "?" => Pervasiveness::U,
            _ => return None,
        })
    }
}

/// A→1.0, B→0.6, C→0.3, and 0.0 for attested absence, not applicable, or
/// no information.
pub fn pervasiveness_to_probability(p: Pervasiveness) -> f64 {
    match p {
        Pervasiveness::A => 1.0,
        Pervasiveness::B => 0.6,
        Pervasiveness::C => 0.3,
        Pervasiveness::D | Pervasiveness::X | Pervasiveness::U => 0.0,
    }
}

/// Map from feature to pervasiveness. Missing features read as class U.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DialectProfile {
    pub name: String,
    pub features: BTreeMap<FeatureId, Pervasiveness>,
}

impl DialectProfile {
    pub fn new(name: impl Into<String>) -> Self {
        DialectProfile {
            name: name.into(),
            features: BTreeMap::new(),
        }
    }

    pub fn with(mut self, feature: u16, class: Pervasiveness) -> Self {
        self.features.insert(FeatureId::of(feature), class);
        self
    }

    pub fn class(&self, feature: FeatureId) -> Pervasiveness {
        self.features.get(&feature).copied().unwrap_or(Pervasiveness::U)
    }

    pub fn probability(&self, feature: FeatureId) -> f64 {
        self.class(feature).probability()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    /// Profile file contents: one `feature<TAB>class` line per entry.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (f, c) in &self.features {
            out.push_str(&format!("{}\t{}\n", f, c.letter()));
        }
        out
    }
}

/// Parses the profile file format. Comment lines start with `#`; blank lines
/// are skipped.
pub fn load_profile(name: &str, text: &str) -> Result<DialectProfile> {
    let mut profile = DialectProfile::new(name);
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |message: &str| Error::ProfileParse {
            line: line_no,
            message: format!("{message}: {line:?}"),
        };
        let mut cols = line.split('\t');
        let (Some(num), Some(class), None) = (cols.next(), cols.next(), cols.next()) else {
            return Err(malformed("expected <feature><TAB><class>"));
        };
        let number: i64 = num.trim().parse().map_err(|_| malformed("feature is not an integer"))?;
        let feature = FeatureId::new(number)?;
        let class = Pervasiveness::from_letter(class.trim())
            .ok_or_else(|| malformed("class must be one of A, B, C, D, X, U"))?;
        if profile.features.insert(feature, class).is_some() {
            return Err(Error::DuplicateFeature {
                line: line_no,
                feature: feature.number(),
            });
        }
    }
    Ok(profile)
}

/// Per-feature maximum pervasiveness over `profiles`, named `Multi`.
pub fn merge_multi(profiles: &[DialectProfile]) -> Result<DialectProfile> {
    if profiles.is_empty() {
        return Err(Error::EmptyMerge);
    }
    let mut merged = DialectProfile::new("Multi");
    for p in profiles {
        for (&f, &c) in &p.features {
            merged
                .features
                .entry(f)
                .and_modify(|cur| {
                    if c.rank() > cur.rank() {
                        *cur = c;
                    }
                })
                .or_insert(c);
        }
    }
    Ok(merged)
}
