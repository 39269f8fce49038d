use crate::model::ParsedSentence;
use crate::morphology::{base_form, regular_past, transfer_capitalization, Lexicon, VerbForms};

use super::{is_aux, HeadRef, NewToken, Rewrite, Site, Skip};

/// Lexicon entry for a non-auxiliary simple past whose surface is the
/// listed irregular past.
fn irregular_past<'a>(s: &ParsedSentence, index: usize, exclude: &[&str]) -> Option<&'a VerbForms> {
    let v = s.token(index);
    let lemma = v.lemma.as_deref()?;
    if v.xpos != "VBD" || is_aux(v) || exclude.contains(&lemma) {
        return None;
    }
    Lexicon::shipped()
        .irregular(lemma)
        .filter(|forms| forms.past.eq_ignore_ascii_case(&v.surface))
}

pub(super) fn match_regularized_past_tense(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|v| {
            irregular_past(s, v.index, &["be", "have", "do"]).is_some_and(|forms| {
                let lemma = v.lemma.as_deref().unwrap_or_default();
                !regular_past(lemma).eq_ignore_ascii_case(&forms.past)
            })
        })
        .map(|v| Site::single(v.index))
        .collect()
}

pub(super) fn rewrite_regularized_past_tense(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let lemma = v.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let form = transfer_capitalization(&v.surface, &regular_past(&lemma.to_lowercase()));
    Ok(Rewrite::new(*site, vec![NewToken::keep(v).surface(form)]))
}

pub(super) fn match_participle_past_tense(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|v| {
            irregular_past(s, v.index, &["be", "have"])
                .is_some_and(|forms| !forms.participle.eq_ignore_ascii_case(&forms.past))
        })
        .map(|v| Site::single(v.index))
        .collect()
}

pub(super) fn rewrite_participle_past_tense(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let lemma = v.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let forms = Lexicon::shipped().irregular(lemma).ok_or(Skip::MissingLemma)?;
    let form = transfer_capitalization(&v.surface, &forms.participle);
    Ok(Rewrite::new(*site, vec![NewToken::keep(v).surface(form).xpos("VBN")]))
}

struct Passive {
    hull_first: usize,
    agent: usize,
    hull_last: usize,
}

fn passive_frame(s: &ParsedSentence, v: usize) -> Option<Passive> {
    let verb = s.token(v);
    if verb.xpos != "VBN" || s.child_with(v, "neg").is_some() {
        return None;
    }
    let subj = s.child_with(v, "nsubjpass")?;
    s.child_with(v, "auxpass")?;
    let agent = s
        .children(v)
        .find(|c| c.deprel == "agent" && c.lower() == "by" && c.index > v)?;
    s.child_with(agent.index, "pobj")?;
    let (_, subj_end) = s.subtree_bounds(subj.index);
    let hull_first = s
        .children(v)
        .filter(|c| is_aux(c))
        .map(|c| c.index)
        .min()
        .unwrap_or(v)
        .min(v);
    let (_, hull_last) = s.subtree_bounds(agent.index);
    if subj_end >= hull_first {
        return None;
    }
    let inside = (hull_first..=hull_last).all(|i| {
        let t = s.token(i);
        i == v || (t.head == v && is_aux(t)) || s.dominates(agent.index, i)
    });
    inside.then_some(Passive {
        hull_first,
        agent: agent.index,
        hull_last,
    })
}

pub(super) fn match_give_passive(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter_map(|v| passive_frame(s, v.index).map(|p| Site::span(v.index, p.hull_first, p.hull_last)))
        .collect()
}

pub(super) fn rewrite_give_passive(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let v = s.token(site.anchor);
    let base = base_form(v)?;
    let frame = passive_frame(s, v.index).ok_or(Skip::Conflict)?;
    let give = NewToken::insert("give", "give", "VERB", "VB", HeadRef::Old(v.index), "aux");
    let mut tokens = vec![give];
    for i in frame.agent + 1..=frame.hull_last {
        let t = s.token(i);
        let mut tok = NewToken::keep(t);
        if t.head == frame.agent {
            tok = tok.attach(HeadRef::Old(v.index), "dobj");
        }
        if i == frame.hull_last {
            tok = tok.spaced(true);
        }
        tokens.push(tok);
    }
    tokens.push(NewToken::keep(v).surface(base).xpos("VB"));
    Ok(Rewrite::new(*site, tokens))
}
