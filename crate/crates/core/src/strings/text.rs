use std::cell::Cell;
use std::collections::HashMap;

use crate::error::{Error, Result};

/// A single symbol of an integer-coded alphabet.
pub type Symbol = u32;

/// Alphabet size used for UTF-8 input: every Unicode scalar value.
pub const UNICODE_ALPHABET: u64 = 0x11_0000;

/// Largest supported alphabet.
pub const MAX_ALPHABET: u64 = 1 << 32;

/// An immutable, non-empty input string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Text {
    chars: Vec<Symbol>,
    alphabet_size: u64,
    non_repetitive: bool,
}

impl Text {
    pub fn new(chars: Vec<Symbol>, alphabet_size: u64) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::EmptyText);
        }
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::BadAlphabet(alphabet_size));
        }
        if let Some((position, &s)) = chars
            .iter()
            .enumerate()
            .find(|(_, &s)| u64::from(s) >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                symbol: s.into(),
                position,
                alphabet: alphabet_size,
            });
        }
        Ok(Text {
            chars,
            alphabet_size,
            non_repetitive: false,
        })
    }

    /// Builds a text whose symbols are the code points of `s`.
    pub fn from_utf8(s: &str) -> Result<Self> {
        Text::new(s.chars().map(u32::from).collect(), UNICODE_ALPHABET)
    }

    /// Builds a text flagged non-repetitive, rejecting any repeated symbol.
    pub fn non_repetitive(chars: Vec<Symbol>, alphabet_size: u64) -> Result<Self> {
        Text::new(chars, alphabet_size)?.into_non_repetitive()
    }

    /// A permutation of `0..n`, alphabet size `n`.
    pub fn permutation(values: Vec<Symbol>) -> Result<Self> {
        let n = values.len() as u64;
        Text::non_repetitive(values, n.max(1))
    }

    /// Sets the non-repetitive flag after a full scan.
    pub fn into_non_repetitive(mut self) -> Result<Self> {
        let mut seen: HashMap<Symbol, usize> = HashMap::with_capacity(self.chars.len());
        for (i, &s) in self.chars.iter().enumerate() {
            if let Some(first) = seen.insert(s, i) {
                return Err(Error::Repetition {
                    symbol: s,
                    first,
                    second: i,
                });
            }
        }
        self.non_repetitive = true;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    /// Always false: empty texts cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn alphabet_size(&self) -> u64 {
        self.alphabet_size
    }

    pub fn is_non_repetitive(&self) -> bool {
        self.non_repetitive
    }

    /// Raw, uncounted access. Reserved for oracles and instance generators;
    /// algorithms read through a [`QueryReader`].
    pub fn symbols(&self) -> &[Symbol] {
        &self.chars
    }

    /// Renders the text as UTF-8 when every symbol is a scalar value.
    pub fn to_utf8(&self) -> Option<String> {
        self.chars.iter().map(|&c| char::from_u32(c)).collect()
    }
}

/// Character access that counts every read.
#[derive(Clone, Copy)]
pub struct QueryReader<'a> {
    text: &'a Text,
    reads: &'a Cell<u64>,
}

impl<'a> QueryReader<'a> {
    pub fn new(text: &'a Text, reads: &'a Cell<u64>) -> Self {
        QueryReader { text, reads }
    }

    /// Reads position `i` (0-based) and bumps the read counter.
    #[inline]
    pub fn get(&self, i: usize) -> Symbol {
        self.reads.set(self.reads.get() + 1);
        self.text.chars[i]
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// The underlying text, for uncharged side-channel checks.
    pub fn text(&self) -> &'a Text {
        self.text
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }
}
