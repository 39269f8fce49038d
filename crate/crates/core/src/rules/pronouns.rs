use crate::model::ParsedSentence;
use crate::morphology::transfer_capitalization;

use super::{lower_is, NewToken, Rewrite, Site, Skip};

pub(super) fn match_yall(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.lower() == "you" && (t.xpos == "PRP" || t.upos == "PRON"))
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_yall(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t)
        .surface(transfer_capitalization(&t.surface, "y'all"))
        .lemma("y'all");
    Ok(Rewrite::new(*site, vec![tok]))
}

fn initial_wh(s: &ParsedSentence, words: &[&str]) -> Vec<Site> {
    if !s.is_question() {
        return Vec::new();
    }
    let t = s.token(1);
    if t.xpos.starts_with('W') && lower_is(t, words) {
        vec![Site::single(1)]
    } else {
        Vec::new()
    }
}

pub(super) fn match_plural_interrogative(s: &ParsedSentence) -> Vec<Site> {
    initial_wh(s, &["who", "what", "where"])
}

pub(super) fn rewrite_plural_interrogative(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t).surface(format!("{}-all", t.surface));
    Ok(Rewrite::new(*site, vec![tok]))
}

pub(super) fn match_reduplicate_interrogative(s: &ParsedSentence) -> Vec<Site> {
    initial_wh(s, &["who", "what", "where", "when", "why", "how"])
}

pub(super) fn rewrite_reduplicate_interrogative(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t).surface(format!("{}-{}", t.surface, t.lower()));
    Ok(Rewrite::new(*site, vec![tok]))
}
