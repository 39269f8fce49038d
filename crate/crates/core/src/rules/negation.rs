use crate::model::ParsedSentence;
use crate::morphology::{transfer_capitalization, Lexicon};

use super::{lower_is, subject_of, HeadRef, NewToken, Rewrite, Site, Skip};

const CLAUSE_BOUNDARIES: [&str; 7] = ["ccomp", "advcl", "relcl", "acl", "parataxis", "csubj", "conj"];

fn negative_of(word: &str, deprel: &str) -> Option<&'static str> {
    match word {
        "any" if deprel == "det" => Some("no"),
        "any" => Some("none"),
        "anything" => Some("nothing"),
        "anyone" | "anybody" => Some("nobody"),
        "anywhere" => Some("nowhere"),
        "ever" => Some("never"),
        _ => None,
    }
}

/// True when `index` sits inside the clause headed by `clause` without
/// crossing into an embedded finite or coordinated clause.
fn in_clause(s: &ParsedSentence, clause: usize, index: usize) -> bool {
    let mut cur = index;
    while cur != clause {
        let t = s.token(cur);
        if t.head == 0 {
            return false;
        }
        let clausal = CLAUSE_BOUNDARIES.contains(&t.deprel.as_str());
        if clausal && (t.deprel != "conj" || t.xpos.starts_with("VB")) {
            return false;
        }
        cur = t.head;
    }
    true
}

pub(super) fn match_negative_concord(s: &ParsedSentence) -> Vec<Site> {
    let mut sites = Vec::new();
    for neg in s.tokens.iter().filter(|t| t.deprel == "neg" && t.head != 0) {
        for t in &s.tokens[neg.index..] {
            if negative_of(&t.lower(), &t.deprel).is_some() && in_clause(s, neg.head, t.index) {
                sites.push(Site::single(t.index));
            }
        }
    }
    sites
}

pub(super) fn rewrite_negative_concord(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let neg = negative_of(&t.lower(), &t.deprel).ok_or(Skip::Conflict)?;
    let tok = NewToken::keep(t)
        .surface(transfer_capitalization(&t.surface, neg))
        .lemma(neg);
    Ok(Rewrite::new(*site, vec![tok]))
}

fn followed_by_neg(s: &ParsedSentence, index: usize) -> bool {
    s.get(index + 1)
        .is_some_and(|n| n.deprel == "neg" && lower_is(n, &["n't", "not"]))
}

pub(super) fn match_dont(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.lower() == "does" && t.deprel == "aux" && followed_by_neg(s, t.index))
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_dont(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t)
        .surface(transfer_capitalization(&t.surface, "do"))
        .xpos("VBP");
    Ok(Rewrite::new(*site, vec![tok]))
}

pub(super) fn match_never_negator(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|d| d.lower() == "did" && d.deprel == "aux" && followed_by_neg(s, d.index))
        .filter(|d| {
            let v = d.index + 2;
            s.get(v)
                .is_some_and(|verb| verb.xpos == "VB" && d.head == v && s.token(d.index + 1).head == v)
                && subject_of(s, v).is_some_and(|subj| subj.index < d.index)
        })
        .map(|d| Site::span(d.index, d.index, d.index + 2))
        .collect()
}

pub(super) fn rewrite_never_negator(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.last);
    let lemma = v.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let never = NewToken::insert("never", "never", "ADV", "RB", HeadRef::Old(v.index), "neg");
    let past = NewToken::keep(v).surface(Lexicon::shipped().past(lemma)).xpos("VBD");
    Ok(Rewrite::new(*site, vec![never, past]))
}
