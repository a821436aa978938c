//! Finite languages and the action of operators on tuples of them.
//!
//! A vector set acts on a tuple of languages by replacing each 0-position's
//! factor with `{ε}` in the catenation product and taking the union over all
//! vectors; a multitilde acts through its vector set.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::boolvec::{vectorize, BoolVectorSet};
use crate::error::{Error, Result};
use crate::tilde::{Multitilde, Pair};

/// A word: a sequence of symbols. The empty sequence is the empty word.
///
/// Symbols are non-empty strings without whitespace, so multi-character
/// names such as `a1` are usable. Words order by length, then
/// lexicographically; they serialize as arrays of symbol strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word {
    symbols: Vec<String>,
}

impl Word {
    pub fn new(symbols: impl IntoIterator<Item = String>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().collect();
        for s in &symbols {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::InvalidSymbol(s.clone()));
            }
        }
        Ok(Word { symbols })
    }

    /// The empty word.
    pub fn epsilon() -> Self {
        Word {
            symbols: Vec::new(),
        }
    }

    /// A word with one single-character symbol per character of `s`.
    pub fn from_chars(s: &str) -> Result<Self> {
        Word::new(s.chars().map(String::from))
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    fn from_validated(symbols: Vec<String>) -> Word {
        Word { symbols }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let symbols = Vec::<String>::deserialize(deserializer)?;
        Word::new(symbols).map_err(D::Error::custom)
    }
}

/// A finite set of words. `{}` is the empty language; `{ε}` is distinct
/// from it.
///
/// Serializes as `{"words": [...]}` sorted by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FiniteLanguage {
    words: BTreeSet<Word>,
}

impl FiniteLanguage {
    pub fn empty() -> Self {
        FiniteLanguage::default()
    }

    /// The language `{ε}`.
    pub fn epsilon() -> Self {
        FiniteLanguage::from_words([Word::epsilon()])
    }

    /// The singleton language of one one-symbol word.
    pub fn letter(symbol: &str) -> Result<Self> {
        let word = Word::new([symbol.to_string()])?;
        Ok(FiniteLanguage::from_words([word]))
    }

    pub fn from_words(words: impl IntoIterator<Item = Word>) -> Self {
        FiniteLanguage {
            words: words.into_iter().collect(),
        }
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn insert(&mut self, w: Word) {
        self.words.insert(w);
    }

    pub fn union(&self, other: &FiniteLanguage) -> FiniteLanguage {
        FiniteLanguage {
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    /// `{uv : u in self, v in other}`; empty if either operand is.
    pub fn catenate(&self, other: &FiniteLanguage) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for u in &self.words {
            for v in &other.words {
                words.insert(u.concat(v));
            }
        }
        FiniteLanguage { words }
    }

    /// The words of length at most `max_len`.
    pub fn truncate(&self, max_len: usize) -> FiniteLanguage {
        FiniteLanguage {
            words: self
                .words
                .iter()
                .filter(|w| w.len() <= max_len)
                .cloned()
                .collect(),
        }
    }

    /// Exactly the words of the Kleene closure with length at most
    /// `max_len`.
    pub fn star_bounded(&self, max_len: usize) -> FiniteLanguage {
        let step = self.truncate(max_len);
        let mut out = FiniteLanguage::epsilon();
        let mut frontier = out.clone();
        loop {
            let next: BTreeSet<Word> = frontier
                .catenate(&step)
                .truncate(max_len)
                .words
                .into_iter()
                .filter(|w| !out.words.contains(w))
                .collect();
            if next.is_empty() {
                return out;
            }
            out.words.extend(next.iter().cloned());
            frontier = FiniteLanguage { words: next };
        }
    }

    /// Closure under taking prefixes (ε included whenever the language is
    /// non-empty).
    pub fn prefixes(&self) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for w in &self.words {
            for i in 0..=w.len() {
                words.insert(Word::from_validated(w.symbols[..i].to_vec()));
            }
        }
        FiniteLanguage { words }
    }

    /// Closure under taking suffixes.
    pub fn suffixes(&self) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for w in &self.words {
            for i in 0..=w.len() {
                words.insert(Word::from_validated(w.symbols[i..].to_vec()));
            }
        }
        FiniteLanguage { words }
    }

    /// Closure under taking contiguous factors.
    pub fn factors(&self) -> FiniteLanguage {
        let mut words = BTreeSet::new();
        for w in &self.words {
            words.insert(Word::epsilon());
            for i in 0..w.len() {
                for j in i + 1..=w.len() {
                    words.insert(Word::from_validated(w.symbols[i..j].to_vec()));
                }
            }
        }
        FiniteLanguage { words }
    }
}

impl FromIterator<Word> for FiniteLanguage {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        FiniteLanguage::from_words(iter)
    }
}

impl fmt::Display for FiniteLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// Applies a vector set to a tuple of languages: the union over vectors of
/// the catenation product in which 0-positions contribute `{ε}`.
pub fn act_bool(e: &BoolVectorSet, langs: &[FiniteLanguage]) -> Result<FiniteLanguage> {
    if langs.len() != e.arity() {
        return Err(Error::ArityMismatch {
            expected: e.arity(),
            found: langs.len(),
        });
    }
    let mut out = FiniteLanguage::empty();
    for v in e.vectors() {
        let mut product = FiniteLanguage::epsilon();
        for (i, lang) in langs.iter().enumerate() {
            if v.get(i + 1) {
                product = product.catenate(lang);
                if product.is_empty() {
                    break;
                }
            }
        }
        out = out.union(&product);
    }
    Ok(out)
}

/// Applies a multitilde to a tuple of languages through its vector set.
pub fn act_tilde(t: &Multitilde, langs: &[FiniteLanguage]) -> Result<FiniteLanguage> {
    act_bool(&vectorize(t)?, langs)
}

/// The operator whose action on a tuple of letters yields all prefixes of
/// their product: pairs `(i, k)` for `1 <= i <= k`.
pub fn prefix_tilde(k: usize) -> Result<Multitilde> {
    Multitilde::new(k, (1..=k).map(|i| Pair::new(i, k).unwrap()))
}

/// The suffix analogue: pairs `(1, i)` for `1 <= i <= k`.
pub fn suffix_tilde(k: usize) -> Result<Multitilde> {
    Multitilde::new(k, (1..=k).map(|i| Pair::new(1, i).unwrap()))
}

/// The factor analogue: the union of the prefix and suffix operators.
pub fn factor_tilde(k: usize) -> Result<Multitilde> {
    prefix_tilde(k)?.union(&suffix_tilde(k)?)
}

/// The subword operator: pairs `(i, i)` for `1 <= i <= k`.
pub fn subword_tilde(k: usize) -> Result<Multitilde> {
    Multitilde::new(k, (1..=k).map(|i| Pair::new(i, i).unwrap()))
}
