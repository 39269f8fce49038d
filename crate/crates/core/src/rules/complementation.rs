use crate::model::ParsedSentence;

use super::{is_aux, HeadRef, NewToken, Rewrite, Site, Skip};

const SEMI_MODAL_HEADS: [&str; 6] = ["have", "ought", "use", "used", "go", "need"];

pub(super) fn match_drop_inf_to(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|to| to.xpos == "TO" && to.deprel == "aux" && to.head == to.index + 1)
        .filter(|to| {
            let v = s.token(to.head);
            v.xpos == "VB"
                && v.deprel == "xcomp"
                && v.head != 0
                && !s
                    .token(v.head)
                    .lemma
                    .as_deref()
                    .is_some_and(|l| SEMI_MODAL_HEADS.contains(&l))
        })
        .map(|to| Site::span(to.index, to.index, to.index + 1))
        .collect()
}

pub(super) fn rewrite_drop_inf_to(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.last);
    Ok(Rewrite::new(*site, vec![NewToken::keep(v)]))
}

const BARE_INFINITIVE_HEADS: [&str; 8] = ["make", "let", "help", "have", "see", "watch", "hear", "feel"];

pub(super) fn match_to_infinitive(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|v| v.xpos == "VB" && matches!(v.deprel.as_str(), "ccomp" | "xcomp") && v.head != 0)
        .filter(|v| {
            s.token(v.head)
                .lemma
                .as_deref()
                .is_some_and(|l| BARE_INFINITIVE_HEADS.contains(&l))
        })
        .filter(|v| !s.children(v.index).any(is_aux))
        .filter(|v| v.index > 1 && s.token(v.index - 1).lower() != "to")
        .map(|v| Site::single(v.index))
        .collect()
}

pub(super) fn rewrite_to_infinitive(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let to = NewToken::insert("to", "to", "PART", "TO", HeadRef::New(1), "aux");
    Ok(Rewrite::new(*site, vec![to, NewToken::keep(v)]))
}
