//! Alphabets and formal words over `X ∪ X⁻¹`.
//!
//! Words are immutable sequences of signed generator letters and are *not*
//! kept freely reduced: relation words in inverse monoid presentations carry
//! meaning letter by letter, so reduction only happens where a caller asks
//! for it.

use std::fmt;

use thiserror::Error;

/// A signed generator letter. `gen` indexes into the owning alphabet.
///
/// The derived `Ord` (generator index ascending, positive before inverse) is
/// the tie-breaking order used everywhere a deterministic letter order is
/// needed: BFS expansion, lexicographic path selection, DOT output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: u16,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: u16) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: u16) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Dense code in `0..2*alphabet_size`: generator index interleaved with sign.
    pub fn code(self) -> usize {
        (self.gen as usize) << 1 | (self.inverse as usize)
    }

    pub fn from_code(code: usize) -> Self {
        Letter {
            gen: (code >> 1) as u16,
            inverse: code & 1 == 1,
        }
    }
}

/// A formal word over an alphabet and its inverses. The empty word denotes 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Largest generator index occurring, if any.
    pub fn max_gen(&self) -> Option<u16> {
        self.0.iter().map(|l| l.gen).max()
    }
}

/// Formal inverse: reverse the word and flip every sign.
pub fn invert(w: &Word) -> Word {
    Word(w.0.iter().rev().map(|l| l.inv()).collect())
}

/// Delete adjacent cancelling pairs until none remain.
///
/// The result represents the same free group element; the operation is
/// idempotent and never lengthens the word.
pub fn free_reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if let Some(&top) = stack.last() {
            if top == l.inv() {
                stack.pop();
                continue;
            }
        }
        stack.push(l);
    }
    Word(stack)
}

/// Enumerate all words over `alphabet_size` generators of length `1..=max_len`
/// plus the empty word, shortest first, lexicographic within a length.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> impl Iterator<Item = Word> {
    let width = 2 * alphabet_size;
    let mut current: Vec<Word> = vec![Word::empty()];
    let mut next: Vec<Word> = Vec::new();
    let mut out: Vec<Word> = Vec::new();
    out.push(Word::empty());
    for _ in 0..max_len {
        for w in &current {
            for code in 0..width {
                let mut v = w.clone();
                v.push(Letter::from_code(code));
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        std::mem::swap(&mut current, &mut next);
        next.clear();
    }
    out.into_iter()
}

/// Generator names for one presentation; words index into it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    names: Vec<String>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word near `{0}`")]
    Malformed(String),
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Self {
        Alphabet { names }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: u16) -> &str {
        &self.names[gen as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    /// Parse a word. Tokens are whitespace separated; each token is either a
    /// declared generator name, a juxtaposition of single-character generator
    /// names, or `1` for the empty word. A letter may carry a trailing `^-1`.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            self.parse_token(token, &mut letters)?;
        }
        Ok(Word(letters))
    }

    fn parse_token(&self, token: &str, out: &mut Vec<Letter>) -> Result<(), WordParseError> {
        if token == "1" {
            return Ok(());
        }
        // Whole token as one (possibly inverted) generator name.
        let (base, inv) = match token.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (token, false),
        };
        if let Some(g) = self.index_of(base) {
            out.push(Letter {
                gen: g,
                inverse: inv,
            });
            return Ok(());
        }
        // Juxtaposed single-character names, each optionally followed by ^-1.
        let mut rest = token;
        while !rest.is_empty() {
            let ch = rest.chars().next().unwrap();
            let ch_len = ch.len_utf8();
            let g = self
                .index_of(&rest[..ch_len])
                .ok_or_else(|| WordParseError::UnknownGenerator(rest[..ch_len].to_string()))?;
            rest = &rest[ch_len..];
            let inv = if let Some(r) = rest.strip_prefix("^-1") {
                rest = r;
                true
            } else {
                false
            };
            out.push(Letter {
                gen: g,
                inverse: inv,
            });
        }
        Ok(())
    }

    /// Print a word in the whitespace-separated syntax; round-trips with
    /// [`Alphabet::parse_word`]. The empty word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(w.len());
        for l in w.letters() {
            if l.inverse {
                parts.push(format!("{}^-1", self.name(l.gen)));
            } else {
                parts.push(self.name(l.gen).to_string());
            }
        }
        parts.join(" ")
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> DisplayWord<'a> {
        DisplayWord {
            alphabet: self,
            word: w,
        }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}
