use crate::model::ParsedSentence;
use crate::morphology::{base_form, capitalize, decapitalize, transfer_capitalization};

use super::{is_aux, lower_is, HeadRef, NewToken, Rewrite, Site, Skip};

pub(super) fn match_negative_inversion(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|q| lower_is(q, &["nobody", "nothing", "none"]) && q.deprel == "nsubj")
        .filter(|q| q.head == q.index + 1)
        .filter(|q| {
            let v = s.token(q.head);
            matches!(v.xpos.as_str(), "VBD" | "VBZ" | "VBP")
                && !v.has_lemma("be")
                && !is_aux(v)
                && !s.children(v.index).any(|c| is_aux(c) || c.deprel == "neg")
        })
        .map(|q| Site::span(q.index, q.index, q.index + 1))
        .collect()
}

pub(super) fn rewrite_negative_inversion(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let q = s.token(site.first);
    let v = s.token(site.last);
    let base = base_form(v)?;
    let (aux, xpos) = if v.xpos == "VBD" { ("did", "VBD") } else { ("do", "VBP") };
    let aux = NewToken::insert(
        &transfer_capitalization(&q.surface, aux),
        "do",
        "AUX",
        xpos,
        HeadRef::Old(v.index),
        "aux",
    )
    .spaced(false);
    let neg = NewToken::insert("n't", "not", "PART", "RB", HeadRef::Old(v.index), "neg");
    let mut subj = NewToken::keep(q);
    if q.index == 1 {
        subj = subj.surface(decapitalize(&q.surface));
    }
    let verb = NewToken::keep(v).surface(base).xpos("VB");
    Ok(Rewrite::new(*site, vec![aux, neg, subj, verb]))
}

pub(super) fn match_drop_aux_yn(s: &ParsedSentence) -> Vec<Site> {
    if !s.is_question() || s.len() < 3 {
        return Vec::new();
    }
    let aux = s.token(1);
    if !(aux.has_lemma("do") && aux.deprel == "aux" && aux.head != 0) {
        return Vec::new();
    }
    let subject_next = s
        .child_with(aux.head, "nsubj")
        .is_some_and(|subj| s.subtree_bounds(subj.index).0 == 2);
    if subject_next {
        vec![Site::span(1, 1, 2)]
    } else {
        Vec::new()
    }
}

pub(super) fn rewrite_drop_aux_yn(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let next = s.token(site.last);
    let tok = NewToken::keep(next).surface(capitalize(&next.surface));
    Ok(Rewrite::new(*site, vec![tok]))
}
