//! Tokens and dependency-parsed sentences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One token of a dependency-parsed sentence.
///
/// `index` is 1-based and `head` is either 0 (root) or the index of another
/// token in the same sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub index: usize,
    pub surface: String,
    /// `None` when the parser supplied no lemma (`_` in CoNLL-U).
    pub lemma: Option<String>,
    pub upos: String,
    pub xpos: String,
    pub head: usize,
    pub deprel: String,
    pub morph_features: Vec<(String, String)>,
    pub space_after: bool,
    /// MISC entries other than `SpaceAfter=No`, in file order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub misc: Vec<String>,
}

impl Token {
    pub fn new(index: usize, surface: &str, lemma: &str, upos: &str, xpos: &str) -> Self {
        Token {
            index,
            surface: surface.to_owned(),
            lemma: if lemma == "_" { None } else { Some(lemma.to_owned()) },
            upos: upos.to_owned(),
            xpos: xpos.to_owned(),
            head: 0,
            deprel: "root".to_owned(),
            morph_features: Vec::new(),
            space_after: true,
            misc: Vec::new(),
        }
    }

    pub fn with_head(mut self, head: usize, deprel: &str) -> Self {
        self.head = head;
        self.deprel = deprel.to_owned();
        self
    }

    pub fn no_space(mut self) -> Self {
        self.space_after = false;
        self
    }

    /// Lowercased surface form.
    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }

    pub fn lemma_or_surface(&self) -> &str {
        self.lemma.as_deref().unwrap_or(&self.surface)
    }

    pub fn has_lemma(&self, lemma: &str) -> bool {
        self.lemma.as_deref() == Some(lemma)
    }

    pub fn is_punct(&self) -> bool {
        self.upos == "PUNCT" || self.deprel == "punct"
    }
}

/// A sentence whose head links form a single tree rooted at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParsedSentence {
    pub sent_id: String,
    pub tokens: Vec<Token>,
    /// Comment lines other than `sent_id`, stored verbatim after the `#`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comments: Vec<String>,
}

impl ParsedSentence {
    /// Builds a sentence and checks index, head, and tree invariants.
    pub fn new(sent_id: impl Into<String>, tokens: Vec<Token>) -> Result<Self> {
        let sentence = ParsedSentence {
            sent_id: sent_id.into(),
            tokens,
            comments: Vec::new(),
        };
        sentence.validate()?;
        Ok(sentence)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |message: String| Error::InvalidSentence {
            sent_id: self.sent_id.clone(),
            message,
        };
        if self.tokens.is_empty() {
            return Err(fail("no tokens".into()));
        }
        let n = self.tokens.len();
        let mut roots = 0;
        for (pos, tok) in self.tokens.iter().enumerate() {
            if tok.index != pos + 1 {
                return Err(fail(format!("token {} found at position {}", tok.index, pos + 1)));
            }
            if tok.head > n {
                return Err(fail(format!("token {} has dangling head {}", tok.index, tok.head)));
            }
            if tok.head == tok.index {
                return Err(fail(format!("token {} heads itself", tok.index)));
            }
            if tok.head == 0 {
                roots += 1;
            }
        }
        if roots != 1 {
            return Err(fail(format!("expected exactly one root, found {roots}")));
        }
        for tok in &self.tokens {
            let mut cur = tok.index;
            let mut steps = 0;
            while cur != 0 {
                cur = self.tokens[cur - 1].head;
                steps += 1;
                if steps > n {
                    return Err(fail(format!("cycle through token {}", tok.index)));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Token by 1-based index.
    pub fn token(&self, index: usize) -> &Token {
        &self.tokens[index - 1]
    }

    pub fn get(&self, index: usize) -> Option<&Token> {
        index.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    pub fn root(&self) -> &Token {
        self.tokens
            .iter()
            .find(|t| t.head == 0)
            .expect("validated sentence has a root")
    }

    pub fn head_of(&self, index: usize) -> Option<&Token> {
        match self.token(index).head {
            0 => None,
            h => Some(self.token(h)),
        }
    }

    pub fn children(&self, index: usize) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(move |t| t.head == index)
    }

    pub fn child_with(&self, index: usize, deprel: &str) -> Option<&Token> {
        self.children(index).find(|t| t.deprel == deprel)
    }

    /// True when `index` lies in the subtree rooted at `ancestor`.
    pub fn dominates(&self, ancestor: usize, index: usize) -> bool {
        let mut cur = index;
        while cur != 0 {
            if cur == ancestor {
                return true;
            }
            cur = self.token(cur).head;
        }
        false
    }

    /// Smallest and largest token index in the subtree of `index`.
    pub fn subtree_bounds(&self, index: usize) -> (usize, usize) {
        let mut lo = index;
        let mut hi = index;
        for tok in &self.tokens {
            if self.dominates(index, tok.index) {
                lo = lo.min(tok.index);
                hi = hi.max(tok.index);
            }
        }
        (lo, hi)
    }

    pub fn is_question(&self) -> bool {
        self.tokens.last().is_some_and(|t| t.surface == "?")
    }

    /// Surface text of the sentence.
    pub fn text(&self) -> String {
        crate::conllu::detokenize(&self.tokens)
    }

    /// Character (Unicode scalar) offsets `(start, end)` of every token in
    /// [`ParsedSentence::text`].
    pub fn char_offsets(&self) -> Vec<(usize, usize)> {
        token_offsets(&self.tokens)
    }
}

pub(crate) fn token_offsets(tokens: &[Token]) -> Vec<(usize, usize)> {
    let mut offsets = Vec::with_capacity(tokens.len());
    let mut pos = 0;
    for (i, tok) in tokens.iter().enumerate() {
        let len = tok.surface.chars().count();
        offsets.push((pos, pos + len));
        pos += len;
        if tok.space_after && i + 1 < tokens.len() {
            pos += 1;
        }
    }
    offsets
}
