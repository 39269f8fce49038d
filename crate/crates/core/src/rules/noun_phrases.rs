use crate::model::{ParsedSentence, Token};
use crate::morphology::{capitalize, decapitalize, regular_plural, transfer_capitalization, Lexicon};

use super::{lower_is, HeadRef, NewToken, Rewrite, Site, Skip};

pub(super) fn match_regularized_plurals(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.xpos == "NNS")
        .filter(|t| {
            t.lemma.as_deref().is_some_and(|lemma| {
                let lower = t.lower();
                lemma.to_lowercase() != lower && regular_plural(lemma).to_lowercase() != lower
            })
        })
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_regularized_plurals(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let lemma = t.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let form = transfer_capitalization(&t.surface, &regular_plural(&lemma.to_lowercase()));
    Ok(Rewrite::new(*site, vec![NewToken::keep(t).surface(form)]))
}

pub(super) fn match_mass_noun_plurals(s: &ParsedSentence) -> Vec<Site> {
    let lex = Lexicon::shipped();
    s.tokens
        .iter()
        .filter(|t| t.xpos == "NN" && lex.is_mass_noun(&t.lower()))
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_mass_noun_plurals(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t).surface(regular_plural(&t.surface)).xpos("NNS");
    Ok(Rewrite::new(*site, vec![tok]))
}

const ANALYTIC: [&str; 6] = ["more", "less", "fewer", "lesser", "further", "farther"];

pub(super) fn match_double_comparative(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.xpos == "JJR" && !lower_is(t, &ANALYTIC))
        .filter(|t| t.index == 1 || s.token(t.index - 1).lower() != "more")
        .map(|t| Site::single(t.index))
        .collect()
}

/// `word` inserted before `t`, taking over sentence-initial capitalization.
pub(super) fn insert_before(t: &Token, word: NewToken) -> Vec<NewToken> {
    let mut kept = NewToken::keep(t);
    let mut word = word;
    if t.index == 1 && t.surface.chars().next().is_some_and(char::is_uppercase) {
        word.surface = capitalize(&word.surface);
        if !matches!(t.xpos.as_str(), "NNP" | "NNPS") && t.surface != "I" {
            kept.surface = decapitalize(&t.surface);
        }
    }
    vec![word, kept]
}

pub(super) fn rewrite_double_comparative(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let more = NewToken::insert("more", "more", "ADV", "RBR", HeadRef::New(1), "advmod");
    Ok(Rewrite::new(*site, insert_before(t, more)))
}
