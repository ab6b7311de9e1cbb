//! Words over finite alphabets and r-fold Gauss words.
//!
//! A [`Word`] is any finite sequence of letters; letters are integer ids, so
//! alphabets are not limited to A..Z. A [`GaussWord`] is a word in which
//! every letter occurs exactly `r` times, stored in canonical form: letters
//! are renamed 0, 1, 2, ... in order of first occurrence. Two words that
//! differ only by a permutation of their letters have the same canonical
//! form.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matching::OrderedMatching;

/// A finite word. Letter ids are arbitrary; equality is literal, use
/// [`Word::canonical`] to compare up to renaming.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct letters.
    pub fn alphabet_size(&self) -> usize {
        let mut seen: Vec<u32> = self.letters.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// The word with letters renamed 0, 1, 2, ... in order of first
    /// occurrence.
    pub fn canonical(&self) -> Word {
        let mut names: HashMap<u32, u32> = HashMap::new();
        let mut next = 0u32;
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                *names.entry(l).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Word { letters }
    }

    /// The prefix consisting of the first `len` letters.
    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
        }
    }
}

impl fmt::Display for Word {
    /// Compact A..Z rendering when the alphabet allows it, whitespace-
    /// separated integer tokens otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l < 26) {
            for &l in &self.letters {
                write!(f, "{}", (b'A' + l as u8) as char)?;
            }
            Ok(())
        } else {
            let tokens: Vec<String> = self.letters.iter().map(|l| (l + 1).to_string()).collect();
            write!(f, "{}", tokens.join(" "))
        }
    }
}

/// A word in which every letter appears exactly `r` times, in canonical
/// form (letters renamed by order of first occurrence).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussWord {
    r: usize,
    word: Word,
}

impl GaussWord {
    /// Canonicalize `w` and check that every letter occurs the same number
    /// of times; that common multiplicity becomes `r`. Empty words are
    /// rejected because their multiplicity is ambiguous.
    pub fn from_word(w: &Word) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &l in w.letters() {
            *counts.entry(l).or_insert(0) += 1;
        }
        let r = counts[&w.letters()[0]];
        for (&letter, &c) in &counts {
            if c != r {
                return Err(Error::MalformedWord(format!(
                    "letter {letter} occurs {c} times, expected {r}"
                )));
            }
        }
        Ok(GaussWord {
            r,
            word: w.canonical(),
        })
    }

    /// Like [`GaussWord::from_word`] but with the multiplicity fixed up
    /// front, which also admits the empty word.
    pub fn with_multiplicity(w: &Word, r: usize) -> Result<Self> {
        if w.is_empty() {
            return Ok(GaussWord {
                r,
                word: Word::new(Vec::new()),
            });
        }
        let g = Self::from_word(w)?;
        if g.r != r {
            return Err(Error::MalformedWord(format!(
                "letters occur {} times, expected {r}",
                g.r
            )));
        }
        Ok(g)
    }

    /// Parse from text, auto-detecting the format: letters A..Z, or
    /// whitespace-separated positive integer tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let format = crate::wordio::detect_format(text);
        let w = crate::wordio::parse_word(text, format)?;
        Self::from_word(&w)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of distinct letters.
    pub fn n(&self) -> usize {
        self.word.len() / self.r.max(1)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        self.word.letters()
    }

    pub fn as_word(&self) -> &Word {
        &self.word
    }

    /// The ordered matching whose block for each letter is the set of
    /// positions (1-based) where that letter occurs.
    pub fn to_matching(&self) -> OrderedMatching {
        OrderedMatching::from_word(self)
    }

    pub(crate) fn from_parts_unchecked(r: usize, letters: Vec<u32>) -> Self {
        GaussWord {
            r,
            word: Word::new(letters),
        }
    }
}

impl fmt::Display for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}
