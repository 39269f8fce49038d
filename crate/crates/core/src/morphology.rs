//! String-level inflection used by the rules.
//!
//! Irregular forms are not generated here. They come from the parser's lemma
//! column and from the lexicon files loaded into [`Lexicon`].

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::data;
use crate::model::Token;
use crate::rules::Skip;

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn consonant_y(lower: &str) -> bool {
    let mut rev = lower.chars().rev();
    matches!((rev.next(), rev.next()), (Some('y'), Some(c)) if c.is_alphabetic() && !is_vowel(c))
}

/// Regular plural of a singular lemma, ignoring any irregular plural.
pub fn regular_plural(lemma: &str) -> String {
    let lower = lemma.to_lowercase();
    if ["s", "x", "z", "ch", "sh"].iter().any(|s| lower.ends_with(s)) {
        format!("{lemma}es")
    } else if consonant_y(&lower) {
        format!("{}ies", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}s")
    }
}

/// Regular `-ed` past of a verb lemma.
pub fn regular_past(lemma: &str) -> String {
    let lower = lemma.to_lowercase();
    if lower.ends_with('e') {
        format!("{lemma}d")
    } else if consonant_y(&lower) {
        format!("{}ied", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}ed")
    }
}

/// Bare verb form: the token's lemma.
pub fn base_form(token: &Token) -> Result<String, Skip> {
    token.lemma.clone().ok_or(Skip::MissingLemma)
}

/// Maps an `-ly` adverb to its adjective: `softly` → `soft`,
/// `happily` → `happy`, `terribly` → `terrible`.
pub fn adverb_to_adjective(form: &str) -> String {
    let lower = form.to_lowercase();
    if !lower.ends_with("ly") {
        return form.to_owned();
    }
    let stem = &form[..form.len() - 2];
    let adj = if lower.ends_with("ily") {
        format!("{}y", &stem[..stem.len() - 1])
    } else if lower.ends_with("bly") {
        format!("{stem}le")
    } else {
        stem.to_owned()
    };
    if adj.chars().count() < 2 || adj.to_lowercase().ends_with("ly") {
        form.to_owned()
    } else {
        adj
    }
}

/// Uppercases the first letter of `new` when `old` starts with an uppercase
/// letter; otherwise returns `new` unchanged.
pub fn transfer_capitalization(old: &str, new: &str) -> String {
    if old.chars().next().is_some_and(char::is_uppercase) {
        capitalize(new)
    } else {
        new.to_owned()
    }
}

pub fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Lowercases the first letter.
pub fn decapitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbForms {
    pub past: String,
    pub participle: String,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    mass_nouns: HashSet<String>,
    irregular: HashMap<String, VerbForms>,
}

impl Lexicon {
    pub fn parse(mass_nouns: &str, irregular_past: &str) -> Self {
        let mass_nouns = mass_nouns
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        let irregular = irregular_past
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .filter_map(|l| {
                let mut cols = l.split('\t').map(str::trim);
                let (lemma, past, participle) = (cols.next()?, cols.next()?, cols.next()?);
                Some((
                    lemma.to_lowercase(),
                    VerbForms {
                        past: past.to_owned(),
                        participle: participle.to_owned(),
                    },
                ))
            })
            .collect();
        Lexicon { mass_nouns, irregular }
    }

    /// The lexicon built from the shipped data files.
    pub fn shipped() -> &'static Lexicon {
        static LEXICON: OnceLock<Lexicon> = OnceLock::new();
        LEXICON.get_or_init(|| Lexicon::parse(data::MASS_NOUNS, data::IRREGULAR_PAST))
    }

    pub fn is_mass_noun(&self, lemma: &str) -> bool {
        self.mass_nouns.contains(&lemma.to_lowercase())
    }

    pub fn irregular(&self, lemma: &str) -> Option<&VerbForms> {
        self.irregular.get(&lemma.to_lowercase())
    }

    /// Simple past: the irregular form if listed, else the regular one.
    pub fn past(&self, lemma: &str) -> String {
        self.irregular(lemma)
            .map(|f| f.past.clone())
            .unwrap_or_else(|| regular_past(lemma))
    }

    pub fn participle(&self, lemma: &str) -> String {
        self.irregular(lemma)
            .map(|f| f.participle.clone())
            .unwrap_or_else(|| regular_past(lemma))
    }
}
