//! Adaptive dialect survey: each question asks about the feature that splits
//! the remaining candidate dialects most evenly.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::{DialectProfile, FeatureId, Pervasiveness};

pub const PROMPT: &str = "Is this sentence something you might say?";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryProfile {
    pub dialect: String,
    pub has_feature: BTreeMap<FeatureId, bool>,
}

impl BinaryProfile {
    /// Features absent from the map count as not accepted.
    pub fn has(&self, f: FeatureId) -> bool {
        self.has_feature.get(&f).copied().unwrap_or(false)
    }
}

/// Accepts a feature when it is pervasive or common (class A or B).
pub fn binarize(p: &DialectProfile) -> BinaryProfile {
    binarize_at(p, Pervasiveness::B)
}

/// Accepts a feature when its class ranks at least as high as `threshold`.
pub fn binarize_at(p: &DialectProfile, threshold: Pervasiveness) -> BinaryProfile {
    BinaryProfile {
        dialect: p.name.clone(),
        has_feature: p
            .features
            .iter()
            .map(|(f, c)| (*f, c.rank() >= threshold.rank()))
            .collect(),
    }
}

pub type Profiles = BTreeMap<String, BinaryProfile>;

pub fn binary_profiles<'a>(profiles: impl IntoIterator<Item = &'a DialectProfile>) -> Profiles {
    profiles.into_iter().map(|p| (p.name.clone(), binarize(p))).collect()
}

/// Reads a question bank: `feature<TAB>sentence` per line.
pub fn parse_bank(text: &str) -> Result<BTreeMap<FeatureId, String>> {
    let mut bank = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |message: String| Error::ProfileParse { line: i + 1, message };
        let (num, sentence) = line
            .split_once('\t')
            .ok_or_else(|| fail("expected feature<TAB>sentence".into()))?;
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| fail(format!("bad feature number {num:?}")))?;
        let f = FeatureId::new(n)?;
        if bank.insert(f, sentence.trim().to_owned()).is_some() {
            return Err(Error::DuplicateFeature {
                line: i + 1,
                feature: f.number(),
            });
        }
    }
    Ok(bank)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyState {
    pub candidates: BTreeSet<String>,
    pub asked: Vec<(FeatureId, bool)>,
    pub question_bank: BTreeMap<FeatureId, String>,
}

impl SurveyState {
    pub fn new(profiles: &Profiles, question_bank: BTreeMap<FeatureId, String>) -> Self {
        SurveyState {
            candidates: profiles.keys().cloned().collect(),
            asked: Vec::new(),
            question_bank,
        }
    }

    pub fn was_asked(&self, f: FeatureId) -> bool {
        self.asked.iter().any(|(g, _)| *g == f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Ask(FeatureId),
    Done,
}

pub fn select_feature(state: &SurveyState, profiles: &Profiles) -> Selection {
    if state.candidates.len() <= 1 {
        return Selection::Done;
    }
    let n = state.candidates.len();
    let best = state
        .question_bank
        .keys()
        .filter(|f| !state.was_asked(**f))
        .filter_map(|f| {
            let with = state
                .candidates
                .iter()
                .filter(|c| profiles.get(*c).is_some_and(|p| p.has(*f)))
                .count();
            (with > 0 && with < n).then(|| ((with as isize - (n - with) as isize).abs(), *f))
        })
        .min();
    match best {
        Some((_, f)) => Selection::Ask(f),
        None => Selection::Done,
    }
}

/// Keeps the candidates whose answer to `f` matches. An answer that would
/// rule out every candidate leaves the set unchanged; `f` is still consumed.
pub fn update_candidates(state: &SurveyState, f: FeatureId, answer: bool, profiles: &Profiles) -> Result<SurveyState> {
    if state.was_asked(f) {
        return Err(Error::RepeatedQuestion(f.number()));
    }
    let filtered: BTreeSet<String> = state
        .candidates
        .iter()
        .filter(|c| profiles.get(*c).is_some_and(|p| p.has(f)) == answer)
        .cloned()
        .collect();
    let mut next = state.clone();
    if !filtered.is_empty() {
        next.candidates = filtered;
    }
    next.asked.push((f, answer));
    Ok(next)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Question {
    pub feature: FeatureId,
    pub sentence: String,
    pub prompt: String,
}

/// What a client sees after each step: exactly one of `question` and
/// `result` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub question: Option<Question>,
    pub result: Option<Vec<String>>,
    pub progress: usize,
}

/// One respondent's survey.
#[derive(Debug, Clone)]
pub struct Session {
    state: SurveyState,
    profiles: Profiles,
    pending: Option<FeatureId>,
}

impl Session {
    pub fn new(profiles: Profiles, bank: BTreeMap<FeatureId, String>) -> Self {
        let state = SurveyState::new(&profiles, bank);
        let mut session = Session {
            state,
            profiles,
            pending: None,
        };
        session.advance();
        session
    }

    fn advance(&mut self) {
        self.pending = match select_feature(&self.state, &self.profiles) {
            Selection::Ask(f) => Some(f),
            Selection::Done => None,
        };
    }

    pub fn state(&self) -> &SurveyState {
        &self.state
    }

    pub fn view(&self) -> SessionView {
        match self.pending {
            Some(f) => SessionView {
                question: Some(Question {
                    feature: f,
                    sentence: self.state.question_bank[&f].clone(),
                    prompt: PROMPT.to_owned(),
                }),
                result: None,
                progress: self.state.asked.len(),
            },
            None => SessionView {
                question: None,
                result: Some(self.state.candidates.iter().cloned().collect()),
                progress: self.state.asked.len(),
            },
        }
    }

    /// Records the answer to the pending question.
    pub fn answer(&mut self, f: FeatureId, accept: bool) -> Result<SessionView> {
        if self.state.was_asked(f) {
            return Err(Error::RepeatedQuestion(f.number()));
        }
        if self.pending != Some(f) {
            return Err(Error::NotPending(f.number()));
        }
        self.state = update_candidates(&self.state, f, accept, &self.profiles)?;
        self.advance();
        Ok(self.view())
    }

    pub fn is_done(&self) -> bool {
        self.pending.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u16) -> FeatureId {
        FeatureId::of(n)
    }

    fn bp(name: &str, feats: &[(u16, bool)]) -> (String, BinaryProfile) {
        (
            name.to_owned(),
            BinaryProfile {
                dialect: name.to_owned(),
                has_feature: feats.iter().map(|&(n, b)| (f(n), b)).collect(),
            },
        )
    }

    fn bank(ns: &[u16]) -> BTreeMap<FeatureId, String> {
        ns.iter().map(|&n| (f(n), format!("sentence {n}"))).collect()
    }

    #[test]
    fn binarization() {
        let p = DialectProfile::new("d").with(153, Pervasiveness::A);
        assert!(binarize(&p).has(f(153)));
        let p = DialectProfile::new("d").with(153, Pervasiveness::C);
        assert!(!binarize(&p).has(f(153)));
        assert!(!binarize(&DialectProfile::new("d")).has(f(153)));
        let p = DialectProfile::new("d").with(153, Pervasiveness::C);
        assert!(binarize_at(&p, Pervasiveness::C).has(f(153)));
    }

    #[test]
    fn selection() {
        let profiles: Profiles = [bp("d1", &[(1, true)]), bp("d2", &[(1, false)])].into();
        let state = SurveyState::new(&profiles, bank(&[1]));
        assert_eq!(select_feature(&state, &profiles), Selection::Ask(f(1)));

        let single: Profiles = [bp("d1", &[(1, true)])].into();
        let state = SurveyState::new(&single, bank(&[1]));
        assert_eq!(select_feature(&state, &single), Selection::Done);

        let four: Profiles = [
            bp("a", &[(1, true), (2, true)]),
            bp("b", &[(1, true), (2, true)]),
            bp("c", &[(1, false), (2, true)]),
            bp("d", &[(1, false), (2, false)]),
        ]
        .into();
        let state = SurveyState::new(&four, bank(&[2, 1]));
        assert_eq!(select_feature(&state, &four), Selection::Ask(f(1)));
    }

    #[test]
    fn updates() {
        let profiles: Profiles = [bp("d1", &[(1, true)]), bp("d2", &[(1, false)])].into();
        let state = SurveyState::new(&profiles, bank(&[1]));
        let next = update_candidates(&state, f(1), true, &profiles).unwrap();
        assert_eq!(next.candidates, ["d1".to_owned()].into());
        assert_eq!(
            update_candidates(&next, f(1), true, &profiles),
            Err(Error::RepeatedQuestion(1))
        );

        let agree: Profiles = [bp("d1", &[(1, true)]), bp("d2", &[(1, true)])].into();
        let state = SurveyState::new(&agree, bank(&[1]));
        let next = update_candidates(&state, f(1), false, &agree).unwrap();
        assert_eq!(next.candidates, state.candidates);
        assert!(next.was_asked(f(1)));
    }

    #[test]
    fn session_flow() {
        let profiles: Profiles = [bp("d1", &[(1, true)]), bp("d2", &[(1, false)])].into();
        let mut s = Session::new(profiles, bank(&[1, 2]));
        let q = s.view().question.unwrap();
        assert_eq!(q.prompt, PROMPT);
        assert_eq!(s.answer(f(2), true), Err(Error::NotPending(2)));
        let v = s.answer(f(1), false).unwrap();
        assert_eq!(v.result, Some(vec!["d2".to_owned()]));
        assert_eq!(v.progress, 1);
        assert!(s.is_done());
        assert_eq!(s.answer(f(1), true), Err(Error::RepeatedQuestion(1)));
    }
}
