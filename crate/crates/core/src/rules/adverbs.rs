use crate::model::ParsedSentence;
use crate::morphology::{adverb_to_adjective, transfer_capitalization};

use super::{lower_is, HeadRef, NewToken, Rewrite, Site, Skip};

const MOTION_VERBS: [&str; 10] = [
    "go", "come", "walk", "run", "drive", "head", "travel", "move", "return", "get",
];

pub(super) fn match_null_prepositions(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|p| p.lower() == "to" && p.deprel == "prep" && p.head != 0)
        .filter(|p| {
            s.token(p.head)
                .lemma
                .as_deref()
                .is_some_and(|l| MOTION_VERBS.contains(&l))
        })
        .filter(|p| {
            s.get(p.index + 1).is_some_and(|obj| {
                obj.head == p.index
                    && obj.deprel == "pobj"
                    && matches!(obj.xpos.as_str(), "NN" | "NNP")
                    && s.children(obj.index).next().is_none()
            })
        })
        .map(|p| Site::span(p.index, p.index, p.index + 1))
        .collect()
}

pub(super) fn rewrite_null_prepositions(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let p = s.token(site.first);
    let obj = NewToken::keep(s.token(site.last)).attach(HeadRef::Old(p.head), "npadvmod");
    Ok(Rewrite::new(*site, vec![obj]))
}

const NOT_MANNER: [&str; 10] = [
    "only", "early", "daily", "weekly", "monthly", "yearly", "likely", "hourly", "nightly", "really",
];

pub(super) fn match_flat_adj_for_adv(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|a| a.xpos == "RB" && a.deprel == "advmod" && a.head != 0)
        .filter(|a| a.lower().ends_with("ly") && !lower_is(a, &NOT_MANNER))
        .filter(|a| {
            let h = s.token(a.head);
            h.upos == "VERB" || h.xpos.starts_with("VB") && h.deprel != "aux"
        })
        .filter(|a| adverb_to_adjective(&a.surface) != a.surface)
        .map(|a| Site::single(a.index))
        .collect()
}

pub(super) fn rewrite_flat_adj_for_adv(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let a = s.token(site.anchor);
    let adj = adverb_to_adjective(&a.lower());
    let tok = NewToken::keep(a)
        .surface(transfer_capitalization(&a.surface, &adj))
        .lemma(adj)
        .tags("ADJ", "JJ");
    Ok(Rewrite::new(*site, vec![tok]))
}
