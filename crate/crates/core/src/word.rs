//! Words over the generators `x_1, ..., x_n`.
//!
//! A word is a finite sequence of 1-based generator indices; the empty word
//! is the monoid identity. Words serialize as space-separated indices
//! (`3 1 2`), with the empty word written `e`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A word in the free monoid on `x_1, ..., x_n`, used as an element
/// representative of a Hecke-Kiselman monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    /// The empty word (monoid identity).
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word from 1-based letter indices.
    ///
    /// Panics if any letter is 0; letters are otherwise unchecked here and
    /// validated against a graph where an operation requires it.
    pub fn new(letters: Vec<usize>) -> Self {
        assert!(
            letters.iter().all(|&l| l >= 1),
            "generator indices are 1-based"
        );
        Word { letters }
    }

    /// The single-letter word `x_i`.
    pub fn letter(i: usize) -> Self {
        Word::new(vec![i])
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter occurring in the word; 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }
}

/// Shortlex order: shorter words first, ties broken by the numeric letter
/// sequence. This is the order used for canonical forms.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad word `{0}`: expected `e` or space-separated indices >= 1")]
pub struct WordParseError(pub String);

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in t.split_whitespace() {
            match tok.parse::<usize>() {
                Ok(l) if l >= 1 => letters.push(l),
                _ => return Err(WordParseError(s.to_string())),
            }
        }
        Ok(Word { letters })
    }
}
