//! Perturbation rules and the mandated catalog.
//!
//! A rule is a matcher that finds [`Site`]s in a parsed sentence plus a
//! rewriter that turns one site into a [`Rewrite`]: a replacement token list
//! for the contiguous extent of the site. Character-level [`Edit`]s are
//! derived from rewrites by [`crate::working::WorkingSentence`].
//!
//! Matchers key on Penn-style XPOS tags where the construction is defined by
//! inflection (VBN, VBZ, VBD, MD, JJR) and on ClearNLP-style dependency labels
//! (nsubjpass, agent, pobj, aux, neg, relcl, mark) elsewhere. Each rule
//! records its exact precondition in [`PerturbationRule::precondition`].

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::model::{ParsedSentence, Token};
use crate::profile::FeatureId;
use crate::provenance::Edit;
use crate::working::WorkingSentence;

mod adverbs;
mod agreement;
mod complementation;
mod mood;
mod negation;
mod noun_phrases;
mod pronouns;
mod relativization;
mod subordination;
mod tense_aspect;
mod verb_morphology;
mod word_order;

/// Why a matched site was not rewritten.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Skip {
    /// The rewrite needs a lemma the parser did not supply.
    MissingLemma,
    /// The site overlaps an earlier edit.
    Conflict,
}

impl fmt::Display for Skip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Skip::MissingLemma => write!(f, "missing lemma"),
            Skip::Conflict => write!(f, "overlaps an earlier edit"),
        }
    }
}

/// The twelve grammatical categories rules are grouped into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Category {
    Pronouns,
    NounPhrases,
    TenseAspect,
    Mood,
    VerbMorphology,
    Negation,
    Agreement,
    Relativization,
    Complementation,
    AdverbialSubordination,
    AdverbsPrepositions,
    DiscourseWordOrder,
}

impl Category {
    pub const ALL: [Category; 12] = [
        Category::Pronouns,
        Category::NounPhrases,
        Category::TenseAspect,
        Category::Mood,
        Category::VerbMorphology,
        Category::Negation,
        Category::Agreement,
        Category::Relativization,
        Category::Complementation,
        Category::AdverbialSubordination,
        Category::AdverbsPrepositions,
        Category::DiscourseWordOrder,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Category::Pronouns => "Pronouns",
            Category::NounPhrases => "Noun Phrases",
            Category::TenseAspect => "Tense and Aspect",
            Category::Mood => "Mood",
            Category::VerbMorphology => "Verb Morphology",
            Category::Negation => "Negation",
            Category::Agreement => "Agreement",
            Category::Relativization => "Relativization",
            Category::Complementation => "Complementation",
            Category::AdverbialSubordination => "Adverbial Subordination",
            Category::AdverbsPrepositions => "Adverbs and Prepositions",
            Category::DiscourseWordOrder => "Discourse and Word Order",
        }
    }
}

/// A place where a rule applies: `anchor` is the token the rule keys on and
/// `first..=last` is the contiguous run of tokens the rewrite replaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Site {
    pub anchor: usize,
    pub first: usize,
    pub last: usize,
}

impl Site {
    pub fn single(index: usize) -> Self {
        Site {
            anchor: index,
            first: index,
            last: index,
        }
    }

    pub fn span(anchor: usize, first: usize, last: usize) -> Self {
        debug_assert!(first <= anchor && anchor <= last);
        Site { anchor, first, last }
    }

    pub fn extent(&self) -> RangeInclusive<usize> {
        self.first..=self.last
    }

    pub fn overlaps(&self, other: &Site) -> bool {
        self.first <= other.last && other.first <= self.last
    }
}

/// Where a replacement token attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeadRef {
    Root,
    /// A token of the sentence being rewritten, by index. If that token does
    /// not survive the rewrite, the link climbs to its nearest surviving
    /// ancestor.
    Old(usize),
    /// Another token of the same replacement list, by position.
    New(usize),
}

/// One token of a replacement list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewToken {
    pub surface: String,
    pub lemma: Option<String>,
    pub upos: String,
    pub xpos: String,
    pub head: HeadRef,
    pub deprel: String,
    pub space_after: bool,
    /// The token this one stands in for, so dependents keep their head.
    pub origin: Option<usize>,
}

impl NewToken {
    /// A copy of `t` that keeps its annotations and dependents.
    pub fn keep(t: &Token) -> Self {
        NewToken {
            surface: t.surface.clone(),
            lemma: t.lemma.clone(),
            upos: t.upos.clone(),
            xpos: t.xpos.clone(),
            head: match t.head {
                0 => HeadRef::Root,
                h => HeadRef::Old(h),
            },
            deprel: t.deprel.clone(),
            space_after: t.space_after,
            origin: Some(t.index),
        }
    }

    /// A freshly inserted word.
    pub fn insert(surface: &str, lemma: &str, upos: &str, xpos: &str, head: HeadRef, deprel: &str) -> Self {
        NewToken {
            surface: surface.to_owned(),
            lemma: Some(lemma.to_owned()),
            upos: upos.to_owned(),
            xpos: xpos.to_owned(),
            head,
            deprel: deprel.to_owned(),
            space_after: true,
            origin: None,
        }
    }

    pub fn surface(mut self, surface: impl Into<String>) -> Self {
        self.surface = surface.into();
        self
    }

    pub fn lemma(mut self, lemma: impl Into<String>) -> Self {
        self.lemma = Some(lemma.into());
        self
    }

    pub fn tags(mut self, upos: &str, xpos: &str) -> Self {
        self.upos = upos.to_owned();
        self.xpos = xpos.to_owned();
        self
    }

    pub fn xpos(mut self, xpos: &str) -> Self {
        self.xpos = xpos.to_owned();
        self
    }

    pub fn attach(mut self, head: HeadRef, deprel: &str) -> Self {
        self.head = head;
        self.deprel = deprel.to_owned();
        self
    }

    pub fn spaced(mut self, space_after: bool) -> Self {
        self.space_after = space_after;
        self
    }
}

/// Replacement of the tokens `site.first..=site.last`.
///
/// The last replacement token inherits the spacing of `site.last`.
/// `space_before`, when set, overrides the spacing between the token before
/// the site and whatever follows it after the rewrite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub site: Site,
    pub tokens: Vec<NewToken>,
    pub space_before: Option<bool>,
}

impl Rewrite {
    pub fn new(site: Site, tokens: Vec<NewToken>) -> Self {
        Rewrite {
            site,
            tokens,
            space_before: None,
        }
    }

    pub fn space_before(mut self, space: bool) -> Self {
        self.space_before = Some(space);
        self
    }
}

type Matcher = fn(&ParsedSentence) -> Vec<Site>;
type Rewriter = fn(&ParsedSentence, &Site) -> Result<Rewrite, Skip>;

/// A feature-injecting rule: a site matcher plus a rewrite program.
#[derive(Clone, Copy)]
pub struct PerturbationRule {
    pub feature: FeatureId,
    pub name: &'static str,
    pub category: Category,
    /// The morphosyntactic condition the matcher checks.
    pub precondition: &'static str,
    matcher: Matcher,
    rewriter: Rewriter,
}

impl fmt::Debug for PerturbationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{} {}", self.feature, self.name)
    }
}

impl PerturbationRule {
    /// Sites in left-to-right order with non-overlapping extents.
    pub fn match_sites(&self, s: &ParsedSentence) -> Vec<Site> {
        let mut sites = (self.matcher)(s);
        sites.sort_by_key(|site| (site.first, site.anchor));
        sites.dedup();
        let mut out: Vec<Site> = Vec::with_capacity(sites.len());
        for site in sites {
            if out.last().is_none_or(|prev| !prev.overlaps(&site)) {
                out.push(site);
            }
        }
        out
    }

    pub fn rewrite(&self, s: &ParsedSentence, site: &Site) -> Result<Rewrite, Skip> {
        (self.rewriter)(s, site)
    }

    /// Rewrites one site of `s` and returns the resulting edit, with
    /// character spans over `s.text()`.
    pub fn apply_site(&self, s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
        let rewrite = self.rewrite(s, site)?;
        let mut working = WorkingSentence::new(s);
        let (mut edits, skipped) = working.apply(self.feature, vec![rewrite]);
        match edits.pop() {
            Some(edit) => Ok(edit),
            None => Err(skipped.into_iter().next().unwrap_or(Skip::Conflict)),
        }
    }
}

pub fn match_sites(rule: &PerturbationRule, s: &ParsedSentence) -> Vec<Site> {
    rule.match_sites(s)
}

const fn rule(
    feature: u16,
    name: &'static str,
    category: Category,
    precondition: &'static str,
    matcher: Matcher,
    rewriter: Rewriter,
) -> PerturbationRule {
    PerturbationRule {
        feature: FeatureId::of(feature),
        name,
        category,
        precondition,
        matcher,
        rewriter,
    }
}

static CATALOG: [PerturbationRule; 28] = [
    rule(34, "yall", Category::Pronouns,
        "second-person pronoun `you` (PRP) in any role",
        pronouns::match_yall, pronouns::rewrite_yall),
    rule(39, "plural_interrogative", Category::Pronouns,
        "sentence-initial who/what/where (WP/WRB) in a question ending in `?`",
        pronouns::match_plural_interrogative, pronouns::rewrite_plural_interrogative),
    rule(40, "reduplicate_interrogative", Category::Pronouns,
        "sentence-initial wh-word (W*) in a question ending in `?`",
        pronouns::match_reduplicate_interrogative, pronouns::rewrite_reduplicate_interrogative),
    rule(49, "regularized_plurals", Category::NounPhrases,
        "plural noun (NNS) whose surface differs from the regular plural of its lemma",
        noun_phrases::match_regularized_plurals, noun_phrases::rewrite_regularized_plurals),
    rule(55, "mass_noun_plurals", Category::NounPhrases,
        "singular noun (NN) listed in the mass-noun lexicon",
        noun_phrases::match_mass_noun_plurals, noun_phrases::rewrite_mass_noun_plurals),
    rule(78, "double_comparative", Category::NounPhrases,
        "synthetic comparative adjective (JJR) not already preceded by `more`",
        noun_phrases::match_double_comparative, noun_phrases::rewrite_double_comparative),
    rule(99, "simple_past_for_present_perfect", Category::TenseAspect,
        "past participle (VBN, not `been`) with an adjacent preceding aux `have`, a preceding subject, and no other auxiliary",
        tense_aspect::match_simple_past_for_present_perfect, tense_aspect::rewrite_simple_past_for_present_perfect),
    rule(100, "present_perfect_for_past", Category::TenseAspect,
        "non-auxiliary past verb (VBD) immediately after its subject, without aux or neg dependents, with a known participle",
        tense_aspect::match_present_perfect_for_past, tense_aspect::rewrite_present_perfect_for_past),
    rule(121, "double_modals", Category::Mood,
        "modal aux (can/could/will/would/should) after its clause's subject and not preceded by another modal",
        mood::match_double_modals, mood::rewrite_double_modals),
    rule(123, "present_modals", Category::Mood,
        "past-form modal aux could/would/might",
        mood::match_present_modals, mood::rewrite_present_modals),
    rule(128, "regularized_past_tense", Category::VerbMorphology,
        "irregular simple past (VBD) of a lexicon verb other than be/have/do",
        verb_morphology::match_regularized_past_tense, verb_morphology::rewrite_regularized_past_tense),
    rule(131, "participle_past_tense", Category::VerbMorphology,
        "simple past (VBD) of a lexicon verb whose participle differs from its past",
        verb_morphology::match_participle_past_tense, verb_morphology::rewrite_participle_past_tense),
    rule(153, "give_passive", Category::VerbMorphology,
        "past participle (VBN) with an nsubjpass before its auxpass and a following `by` agent with a pobj",
        verb_morphology::match_give_passive, verb_morphology::rewrite_give_passive),
    rule(154, "negative_concord", Category::Negation,
        "indefinite (any/anything/anyone/anybody/anywhere/ever) right of a neg dependent, inside the negated clause",
        negation::match_negative_concord, negation::rewrite_negative_concord),
    rule(158, "dont", Category::Negation,
        "aux `does` immediately followed by a neg dependent",
        negation::match_dont, negation::rewrite_dont),
    rule(159, "never_negator", Category::Negation,
        "declarative aux `did` + neg + bare verb (VB), adjacent",
        negation::match_never_negator, negation::rewrite_never_negator),
    rule(170, "uninflect", Category::Agreement,
        "non-auxiliary third-singular present verb (VBZ) other than be",
        agreement::match_uninflect, agreement::rewrite_uninflect),
    rule(172, "existential_there", Category::Agreement,
        "plural be `are`/`were` immediately after expletive `there`",
        agreement::match_existential_there, agreement::rewrite_existential_there),
    rule(173, "existential_it", Category::Agreement,
        "expletive `there` (EX) immediately before singular be ('s/is/was)",
        agreement::match_existential_it, agreement::rewrite_existential_it),
    rule(174, "drop_aux_be_progressive", Category::Agreement,
        "aux be attached to a present participle (VBG), not followed by negation",
        agreement::match_drop_aux_be_progressive, agreement::rewrite_drop_aux_be_progressive),
    rule(193, "null_relcl", Category::Relativization,
        "subject relativizer who/that/which (WP/WDT) of a relcl verb",
        relativization::match_null_relcl, relativization::rewrite_null_relcl),
    rule(208, "drop_inf_to", Category::Complementation,
        "infinitival `to` (TO, aux) right before its xcomp verb, outside have/ought/used/going to",
        complementation::match_drop_inf_to, complementation::rewrite_drop_inf_to),
    rule(209, "to_infinitive", Category::Complementation,
        "bare verb (VB) complement of make/let/help/have/see/watch/hear/feel without an aux",
        complementation::match_to_infinitive, complementation::rewrite_to_infinitive),
    rule(215, "subord_conjunction_doubling", Category::AdverbialSubordination,
        "fronted although/though adverbial clause; site is the first word of the main clause",
        subordination::match_subord_conjunction_doubling, subordination::rewrite_subord_conjunction_doubling),
    rule(216, "null_prepositions", Category::AdverbsPrepositions,
        "preposition `to` after a motion verb, followed by a bare singular noun object",
        adverbs::match_null_prepositions, adverbs::rewrite_null_prepositions),
    rule(221, "flat_adj_for_adv", Category::AdverbsPrepositions,
        "-ly manner adverb (RB, advmod) of a verb",
        adverbs::match_flat_adj_for_adv, adverbs::rewrite_flat_adj_for_adv),
    rule(226, "negative_inversion", Category::DiscourseWordOrder,
        "negative quantifier subject (nobody/nothing/none) right before a finite lexical verb without aux",
        word_order::match_negative_inversion, word_order::rewrite_negative_inversion),
    rule(229, "drop_aux_yn", Category::DiscourseWordOrder,
        "sentence-initial do-support aux in a `?` question, followed directly by its clause's subject",
        word_order::match_drop_aux_yn, word_order::rewrite_drop_aux_yn),
];

/// The mandated rules, sorted by feature number.
pub fn catalog() -> &'static [PerturbationRule] {
    &CATALOG
}

pub fn rule_for(feature: FeatureId) -> Option<&'static PerturbationRule> {
    CATALOG.iter().find(|r| r.feature == feature)
}

pub fn rule_named(name: &str) -> Option<&'static PerturbationRule> {
    CATALOG.iter().find(|r| r.name == name)
}

fn apply_named(name: &str, s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
    rule_named(name).expect("cataloged rule").apply_site(s, site)
}

pub fn rule_give_passive(s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
    apply_named("give_passive", s, site)
}

pub fn rule_negative_concord(s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
    apply_named("negative_concord", s, site)
}

pub fn rule_uninflect(s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
    apply_named("uninflect", s, site)
}

pub fn rule_drop_aux_yn(s: &ParsedSentence, site: &Site) -> Result<Edit, Skip> {
    apply_named("drop_aux_yn", s, site)
}

// Shared matcher helpers.

pub(crate) fn lower_is(t: &Token, words: &[&str]) -> bool {
    let lower = t.lower();
    words.iter().any(|w| *w == lower)
}

pub(crate) fn is_aux(t: &Token) -> bool {
    matches!(t.deprel.as_str(), "aux" | "auxpass")
}

pub(crate) fn subject_of(s: &ParsedSentence, head: usize) -> Option<&Token> {
    s.children(head)
        .find(|t| matches!(t.deprel.as_str(), "nsubj" | "nsubjpass" | "expl"))
}

/// Third-person singular subject for agreement purposes.
pub(crate) fn is_third_singular(t: &Token) -> bool {
    lower_is(t, &["he", "she", "it", "this", "that", "there"]) || matches!(t.xpos.as_str(), "NN" | "NNP")
}
