use crate::model::ParsedSentence;
use crate::morphology::transfer_capitalization;

use super::{is_aux, lower_is, NewToken, Rewrite, Site, Skip};

pub(super) fn match_uninflect(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.xpos == "VBZ" && !is_aux(t) && !t.has_lemma("be"))
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_uninflect(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let lemma = t.lemma.as_deref().ok_or(Skip::MissingLemma)?;
    let tok = NewToken::keep(t)
        .surface(transfer_capitalization(&t.surface, lemma))
        .xpos("VBP");
    Ok(Rewrite::new(*site, vec![tok]))
}

fn after_expletive(s: &ParsedSentence, be: usize) -> bool {
    be > 1 && {
        let there = s.token(be - 1);
        there.lower() == "there" && there.head == be && (there.deprel == "expl" || there.xpos == "EX")
    }
}

pub(super) fn match_existential_there(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|t| t.has_lemma("be") && lower_is(t, &["are", "were"]) && after_expletive(s, t.index))
        .map(|t| Site::single(t.index))
        .collect()
}

pub(super) fn rewrite_existential_there(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    Ok(if t.lower() == "are" {
        Rewrite::new(*site, vec![NewToken::keep(t).surface("'s").xpos("VBZ")]).space_before(false)
    } else {
        Rewrite::new(*site, vec![NewToken::keep(t).surface("was")])
    })
}

pub(super) fn match_existential_it(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|be| be.has_lemma("be") && lower_is(be, &["'s", "is", "was"]) && after_expletive(s, be.index))
        .filter(|be| s.token(be.index - 1).xpos == "EX")
        .map(|be| Site::single(be.index - 1))
        .collect()
}

pub(super) fn rewrite_existential_it(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let t = s.token(site.anchor);
    let tok = NewToken::keep(t)
        .surface(transfer_capitalization(&t.surface, "it"))
        .lemma("it")
        .tags("PRON", "PRP");
    Ok(Rewrite::new(*site, vec![tok]))
}

pub(super) fn match_drop_aux_be_progressive(s: &ParsedSentence) -> Vec<Site> {
    s.tokens
        .iter()
        .filter(|a| a.has_lemma("be") && a.deprel == "aux" && a.head != 0)
        .filter(|a| s.token(a.head).xpos == "VBG")
        .filter(|a| s.get(a.index + 1).is_some_and(|next| next.deprel != "neg"))
        .map(|a| {
            if a.index == 1 {
                Site::span(1, 1, 2)
            } else {
                Site::single(a.index)
            }
        })
        .collect()
}

pub(super) fn rewrite_drop_aux_be_progressive(s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
    let a = s.token(site.anchor);
    if site.last > site.first {
        let next = s.token(site.last);
        let tok = NewToken::keep(next).surface(transfer_capitalization(&a.surface, &next.surface));
        return Ok(Rewrite::new(*site, vec![tok]));
    }
    let prev = s.token(a.index - 1);
    let rewrite = Rewrite::new(*site, vec![]);
    Ok(if prev.space_after {
        rewrite
    } else {
        rewrite.space_before(true)
    })
}
