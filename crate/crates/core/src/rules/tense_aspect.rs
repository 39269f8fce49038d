use crate::model::{ParsedSentence, Token};
use crate::morphology::Lexicon;

use super::{is_aux, is_third_singular, lower_is, HeadRef, NewToken, Rewrite, Site, Skip};

pub(super) fn match_simple_past_for_present_perfect(s: &ParsedSentence) -> Vec<Site> {
    let mut sites = Vec::new();
    for v in s.tokens.iter().filter(|t| t.xpos == "VBN" && t.index > 1) {
        if v.has_lemma("be") || v.lemma.is_none() {
            continue;
        }
        let aux = s.token(v.index - 1);
        if !(aux.head == v.index && aux.deprel == "aux" && aux.has_lemma("have")) {
            continue;
        }
        let auxes = s.children(v.index).filter(|c| is_aux(c)).count();
        let negated = s.child_with(v.index, "neg").is_some();
        let subject_first = s
            .child_with(v.index, "nsubj")
            .is_some_and(|subj| subj.index < aux.index);
        if auxes == 1 && !negated && subject_first {
            sites.push(Site::span(v.index, aux.index, v.index));
        }
    }
    sites
}

pub(super) fn rewrite_simple_past_for_present_perfect(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let lemma = v.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let past = Lexicon::shipped().past(lemma);
    let tok = NewToken::keep(v).surface(past).xpos("VBD");
    Ok(Rewrite::new(*site, vec![tok]).space_before(true))
}

pub(super) fn participle_for(s: &ParsedSentence, index: usize) -> Option<String> {
    let v = s.token(index);
    let lemma = v.lemma.as_deref()?;
    match Lexicon::shipped().irregular(lemma) {
        Some(forms) => Some(forms.participle.clone()),
        None if v.lower().ends_with("ed") => Some(v.lower()),
        None => None,
    }
}

pub(super) fn match_present_perfect_for_past(s: &ParsedSentence) -> Vec<Site> {
    let mut sites = Vec::new();
    for v in s.tokens.iter().filter(|t| t.xpos == "VBD" && t.index > 1) {
        if is_aux(v) || v.has_lemma("have") {
            continue;
        }
        let has_aux_or_neg = s.children(v.index).any(|c| is_aux(c) || c.deprel == "neg");
        let subj = s.token(v.index - 1);
        let subject_adjacent = subj.head == v.index && subj.deprel == "nsubj";
        if !has_aux_or_neg && subject_adjacent && participle_for(s, v.index).is_some() {
            sites.push(Site::single(v.index));
        }
    }
    sites
}

/// Interrogative who/what agree in the singular; a relative pronoun agrees
/// with its antecedent.
fn takes_singular_verb(s: &ParsedSentence, subj: &Token) -> bool {
    if matches!(subj.xpos.as_str(), "WP" | "WDT") {
        let verb = s.token(subj.head);
        return match s.head_of(verb.index) {
            Some(antecedent) if verb.deprel == "relcl" => takes_singular_verb(s, antecedent),
            _ => true,
        };
    }
    is_third_singular(subj) && !lower_is(subj, &["i", "you", "we", "they"])
}

pub(super) fn rewrite_present_perfect_for_past(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let participle = participle_for(s, v.index).ok_or(Skip::MissingLemma)?;
    let subj = s.token(v.index - 1);
    let third = takes_singular_verb(s, subj);
    let pronoun = subj.xpos == "PRP";
    let (form, xpos) = match (pronoun, third) {
        (true, true) => ("'s", "VBZ"),
        (true, false) => ("'ve", "VBP"),
        (false, true) => ("has", "VBZ"),
        (false, false) => ("have", "VBP"),
    };
    let aux = NewToken::insert(form, "have", "AUX", xpos, HeadRef::New(1), "aux");
    let verb = NewToken::keep(v).surface(participle).xpos("VBN");
    let rewrite = Rewrite::new(*site, vec![aux, verb]);
    Ok(if pronoun { rewrite.space_before(false) } else { rewrite })
}
