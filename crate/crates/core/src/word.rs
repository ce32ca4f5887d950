//! Binary words.
//!
//! A [`Word`] is a finite string over `{0,1}`. Index 0 is the leftmost
//! character; every place a word meets a circuit, input gate `j` reads
//! character `j` under this convention.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<bool>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("invalid character {0:?} in word (expected '0' or '1')")]
    BadChar(char),
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Word(bits)
    }

    /// The word `b^n` (all characters equal to `b`).
    pub fn repeated(bit: bool, n: usize) -> Self {
        Word(vec![bit; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit);
    }

    /// Nonempty prefixes, shortest first.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (1..=self.len()).map(|k| Word(self.0[..k].to_vec()))
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// All words of length `n` in lexicographic order ("000", "001", ...).
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 32, "exhaustive word enumeration is for small n only");
        (0u64..(1u64 << n)).map(move |r| {
            Word((0..n).map(|j| (r >> (n - 1 - j)) & 1 == 1).collect())
        })
    }

    /// All words of length at most `max_n`, shorter lengths first,
    /// lexicographic within a length.
    pub fn all_up_to_length(max_n: usize) -> impl Iterator<Item = Word> {
        (0..=max_n).flat_map(Word::all_of_length)
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(WordParseError::BadChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}
