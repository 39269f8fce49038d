//! The sentence being rewritten, plus the bookkeeping needed to express every
//! rewrite as a character edit over the original source text.

use crate::model::{ParsedSentence, Token};
use crate::profile::FeatureId;
use crate::provenance::Edit;
use crate::rules::{HeadRef, Rewrite, Site, Skip};

#[derive(Debug, Clone)]
pub struct WorkingSentence {
    sentence: ParsedSentence,
    /// Source index of each working token; `None` for rewritten tokens.
    origin: Vec<Option<usize>>,
    /// Applied edits as `(source start, source end, replacement length)`,
    /// sorted by source position.
    applied: Vec<(usize, usize, usize)>,
}

struct Planned {
    rewrite: Rewrite,
    edit: Edit,
}

impl WorkingSentence {
    pub fn new(source: &ParsedSentence) -> Self {
        let mut sentence = source.clone();
        sentence.comments.clear();
        WorkingSentence {
            origin: (1..=sentence.len()).map(Some).collect(),
            sentence,
            applied: Vec::new(),
        }
    }

    pub fn sentence(&self) -> &ParsedSentence {
        &self.sentence
    }

    pub fn into_sentence(self) -> ParsedSentence {
        self.sentence
    }

    /// True when every token of the site is still an untouched source token
    /// and the tokens are contiguous in the source.
    pub fn is_free(&self, site: &Site) -> bool {
        if site.first == 0 || site.last > self.sentence.len() || site.first > site.last {
            return false;
        }
        let origins = &self.origin[site.first - 1..site.last];
        origins.iter().all(Option::is_some) && origins.windows(2).all(|w| w[1] == w[0].map(|i| i + 1))
    }

    /// Maps a character position in the working text back to the source.
    /// Positions inside replaced text have no source image. At a deleted
    /// (zero-width) region, starts resolve after it and ends before it.
    fn to_source(&self, pos: usize, is_end: bool) -> Option<usize> {
        let mut delta: isize = 0;
        for &(ss, se, len) in &self.applied {
            let ws = (ss as isize + delta) as usize;
            let we = ws + len;
            if is_end {
                if pos <= ws {
                    break;
                }
                if pos <= we {
                    return None;
                }
            } else {
                if pos < ws {
                    break;
                }
                if (pos == ws && len > 0) || pos < we {
                    return None;
                }
            }
            delta += len as isize - (se - ss) as isize;
        }
        Some((pos as isize - delta) as usize)
    }

    fn plan(&self, feature: FeatureId, rewrite: Rewrite, text: &[char], offsets: &[(usize, usize)]) -> Option<Planned> {
        let n = self.sentence.len();
        let Site { first: a, last: b, .. } = rewrite.site;
        if !self.is_free(&rewrite.site) || (rewrite.tokens.is_empty() && a == 1 && b == n) {
            return None;
        }
        let toks = &self.sentence.tokens;
        let start = if a > 1 { offsets[a - 2].1 } else { 0 };
        let end = if b < n { offsets[b].0 } else { text.len() };
        let lead = a > 1 && rewrite.space_before.unwrap_or(toks[a - 2].space_after);

        let mut new = String::new();
        if rewrite.tokens.is_empty() {
            if lead && b < n {
                new.push(' ');
            }
        } else {
            if lead {
                new.push(' ');
            }
            let last = rewrite.tokens.len() - 1;
            for (i, t) in rewrite.tokens.iter().enumerate() {
                new.push_str(&t.surface);
                let space = if i == last {
                    toks[b - 1].space_after && b < n
                } else {
                    t.space_after
                };
                if space {
                    new.push(' ');
                }
            }
        }

        let old = &text[start..end];
        let new: Vec<char> = new.chars().collect();
        let mut pre = 0;
        while pre < old.len() && pre < new.len() && old[pre] == new[pre] && old[pre].is_whitespace() {
            pre += 1;
        }
        let mut suf = 0;
        while suf < old.len() - pre
            && suf < new.len() - pre
            && old[old.len() - 1 - suf] == new[new.len() - 1 - suf]
            && new[new.len() - 1 - suf].is_whitespace()
        {
            suf += 1;
        }
        let src_start = self.to_source(start + pre, false)?;
        let src_end = self.to_source(end - suf, true)?;
        if src_start > src_end {
            return None;
        }
        let edit = Edit {
            feature,
            original_span: (src_start, src_end),
            replacement: new[pre..new.len() - suf].iter().collect(),
            site_token_indices: self.origin[a - 1..b].iter().map(|o| o.unwrap()).collect(),
        };
        Some(Planned { rewrite, edit })
    }

    /// Applies a batch of rewrites computed against the current sentence.
    /// Rewrites that clash with earlier edits or with each other are dropped
    /// and reported as [`Skip::Conflict`].
    pub fn apply(&mut self, feature: FeatureId, mut rewrites: Vec<Rewrite>) -> (Vec<Edit>, Vec<Skip>) {
        rewrites.sort_by_key(|r| r.site.first);
        let text: Vec<char> = self.sentence.text().chars().collect();
        let offsets = self.sentence.char_offsets();
        let mut skips = Vec::new();
        let mut plans: Vec<Planned> = Vec::new();
        for rewrite in rewrites {
            let clashes = |p: &Planned, q: &Planned| {
                let (s1, e1) = p.edit.original_span;
                let (s2, e2) = q.edit.original_span;
                p.rewrite.site.overlaps(&q.rewrite.site) || (s1 < e2 && s2 < e1) || (s1 == s2 && e1 == e2)
            };
            match self.plan(feature, rewrite, &text, &offsets) {
                Some(p) if !plans.iter().any(|q| clashes(q, &p)) => plans.push(p),
                _ => skips.push(Skip::Conflict),
            }
        }
        if plans.is_empty() {
            return (Vec::new(), skips);
        }
        match self.rebuild(&plans) {
            Some((sentence, origin)) => {
                self.sentence = sentence;
                self.origin = origin;
                for p in &plans {
                    let (s, e) = p.edit.original_span;
                    self.applied.push((s, e, p.edit.replacement.chars().count()));
                }
                self.applied.sort_by_key(|&(s, e, _)| (s, e));
                (plans.into_iter().map(|p| p.edit).collect(), skips)
            }
            None => {
                skips.extend(plans.iter().map(|_| Skip::Conflict));
                (Vec::new(), skips)
            }
        }
    }

    fn rebuild(&self, plans: &[Planned]) -> Option<(ParsedSentence, Vec<Option<usize>>)> {
        enum Slot<'a> {
            Kept(usize),
            New(&'a crate::rules::NewToken, usize),
        }
        let old = &self.sentence.tokens;
        let n = old.len();
        let mut slots: Vec<Slot> = Vec::with_capacity(n);
        let mut pos_of_old: Vec<Option<usize>> = vec![None; n + 1];
        // Position of the first new token of each plan, and of the token
        // right before the plan's hull.
        let mut plan_pos: Vec<(usize, usize)> = Vec::with_capacity(plans.len());
        let mut i = 1;
        let mut next = plans.iter().enumerate().peekable();
        while i <= n {
            if let Some(&(pi, p)) = next.peek() {
                let site = p.rewrite.site;
                if site.first == i {
                    plan_pos.push((slots.len() + 1, slots.len()));
                    for t in &p.rewrite.tokens {
                        if let Some(j) = t.origin.filter(|j| site.extent().contains(j)) {
                            pos_of_old[j] = Some(slots.len() + 1);
                        }
                        slots.push(Slot::New(t, pi));
                    }
                    i = site.last + 1;
                    next.next();
                    continue;
                }
            }
            pos_of_old[i] = Some(slots.len() + 1);
            slots.push(Slot::Kept(i));
            i += 1;
        }

        let resolve = |mut h: usize| -> usize {
            loop {
                if h == 0 {
                    return 0;
                }
                if let Some(p) = pos_of_old[h] {
                    return p;
                }
                h = old[h - 1].head;
            }
        };

        let mut tokens: Vec<Token> = Vec::with_capacity(slots.len());
        let mut origin = Vec::with_capacity(slots.len());
        for (pos, slot) in slots.iter().enumerate() {
            match *slot {
                Slot::Kept(i) => {
                    let mut t = old[i - 1].clone();
                    t.index = pos + 1;
                    t.head = resolve(t.head);
                    tokens.push(t);
                    origin.push(self.origin[i - 1]);
                }
                Slot::New(nt, pi) => {
                    let head = match nt.head {
                        HeadRef::Root => 0,
                        HeadRef::Old(j) if j <= n => resolve(j),
                        HeadRef::Old(_) => return None,
                        HeadRef::New(k) if k < plans[pi].rewrite.tokens.len() => plan_pos[pi].0 + k,
                        HeadRef::New(_) => return None,
                    };
                    let (morph, misc) = match nt.origin {
                        Some(j) if j <= n => (old[j - 1].morph_features.clone(), old[j - 1].misc.clone()),
                        _ => (Vec::new(), Vec::new()),
                    };
                    tokens.push(Token {
                        index: pos + 1,
                        surface: nt.surface.clone(),
                        lemma: nt.lemma.clone(),
                        upos: nt.upos.clone(),
                        xpos: nt.xpos.clone(),
                        head,
                        deprel: nt.deprel.clone(),
                        morph_features: morph,
                        space_after: nt.space_after,
                        misc,
                    });
                    origin.push(None);
                }
            }
        }

        for (p, &(first_new, before)) in plans.iter().zip(&plan_pos) {
            let Site { first: a, last: b, .. } = p.rewrite.site;
            if !p.rewrite.tokens.is_empty() {
                tokens[first_new - 1 + p.rewrite.tokens.len() - 1].space_after = old[b - 1].space_after;
            }
            if a > 1 && before > 0 {
                if let Some(space) = p.rewrite.space_before {
                    tokens[before - 1].space_after = space;
                }
            }
        }

        for t in tokens.iter_mut() {
            if t.head == t.index {
                return None;
            }
        }
        let roots: Vec<usize> = tokens.iter().filter(|t| t.head == 0).map(|t| t.index).collect();
        if let Some((&root, rest)) = roots.split_first() {
            for &r in rest {
                tokens[r - 1].head = root;
            }
        }
        let sentence = ParsedSentence {
            sent_id: self.sentence.sent_id.clone(),
            tokens,
            comments: Vec::new(),
        };
        sentence.validate().ok()?;
        Some((sentence, origin))
    }
}
