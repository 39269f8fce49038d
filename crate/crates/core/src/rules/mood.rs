use crate::model::ParsedSentence;
use crate::morphology::transfer_capitalization;

use super::{lower_is, subject_of, HeadRef, NewToken, Rewrite, Site, Skip};

pub(super) fn match_double_modals(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|m| m.xpos == "MD" && m.deprel == "aux" && m.index > 1)
        .filter(|m| lower_is(m, &["can", "could", "will", "would", "should"]))
        .filter(|m| s.token(m.index - 1).xpos != "MD")
        .filter(|m| subject_of(s, m.head).is_some_and(|subj| subj.index < m.index))
        .map(|m| Site::single(m.index))
        .collect()
}

pub(super) fn rewrite_double_modals(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let m = s.token(site.anchor);
    let might = NewToken::insert("might", "might", "AUX", "MD", HeadRef::Old(m.head), "aux");
    Ok(Rewrite::new(*site, vec![might, NewToken::keep(m)]))
}

fn present_of(word: &str) -> Option<&'static str> {
    match word {
        "could" => Some("can"),
        "would" => Some("will"),
        "might" => Some("may"),
        _ => None,
    }
}

pub(super) fn match_present_modals(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|m| m.xpos == "MD" && m.deprel == "aux" && present_of(&m.lower()).is_some())
        .map(|m| Site::single(m.index))
        .collect()
}

pub(super) fn rewrite_present_modals(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let m = s.token(site.anchor);
    let present = present_of(&m.lower()).expect("matched modal");
    let tok = NewToken::keep(m)
        .surface(transfer_capitalization(&m.surface, present))
        .lemma(present);
    Ok(Rewrite::new(*site, vec![tok]))
}
