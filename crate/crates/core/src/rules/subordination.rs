use crate::model::ParsedSentence;

use super::{lower_is, HeadRef, NewToken, Rewrite, Site, Skip};

/// Pairs of (first word of the main clause, main clause head).
fn main_clause_starts(s: &ParsedSentence) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for mark in s
        .tokens
        .iter()
        .filter(|m| m.deprel == "mark" && lower_is(m, &["although", "though"]))
    {
        let clause = s.token(mark.head);
        if clause.deprel != "advcl" || clause.head == 0 {
            continue;
        }
        let main = clause.head;
        let (_, clause_end) = s.subtree_bounds(clause.index);
        if clause_end >= main {
            continue;
        }
        if let Some(t) = s.tokens[clause_end..].iter().find(|t| !t.is_punct()) {
            if t.index <= main && s.dominates(main, t.index) && !lower_is(t, &["but", "yet"]) {
                out.push((t.index, main));
            }
        }
    }
    out
}

pub(super) fn match_subord_conjunction_doubling(s: &ParsedSentence) -> Vec<Site> {
    main_clause_starts(s)
        .into_iter()
        .map(|(first, _)| Site::single(first))
        .collect()
}

pub(super) fn rewrite_subord_conjunction_doubling(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let main = main_clause_starts(s)
        .into_iter()
        .find(|&(first, _)| first == t.index)
        .map_or(t.head, |(_, main)| main);
    let but = NewToken::insert("but", "but", "CCONJ", "CC", HeadRef::Old(main), "cc");
    Ok(Rewrite::new(*site, vec![but, NewToken::keep(t)]))
}
