//! Shared fixtures and independent oracles for the integration suites.

#![allow(dead_code)]

use multitilde::{FiniteLanguage, Multitilde, Pair, Relation, Word};

/// Deterministic xorshift generator so every run sees the same inputs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed | 1)
    }

    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

pub fn pair(x: usize, y: usize) -> Pair {
    Pair::new(x, y).unwrap()
}

pub fn mt(arity: usize, pairs: &[(usize, usize)]) -> Multitilde {
    Multitilde::new(arity, pairs.iter().map(|&(x, y)| pair(x, y))).unwrap()
}

/// All candidate pairs at the given arity, in lexicographic order.
pub fn all_pairs(arity: usize) -> Vec<Pair> {
    let mut out = Vec::new();
    for x in 1..=arity {
        for y in x..=arity {
            out.push(pair(x, y));
        }
    }
    out
}

/// Every multitilde of the given arity (one per subset of the candidate
/// pairs).
pub fn all_tildes(arity: usize) -> Vec<Multitilde> {
    let candidates = all_pairs(arity);
    let mut out = Vec::new();
    for mask in 0u64..(1 << candidates.len()) {
        let pairs = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p);
        out.push(Multitilde::new(arity, pairs).unwrap());
    }
    out
}

/// Every multitilde of arity 1 through `max_arity` inclusive.
pub fn all_tildes_up_to(max_arity: usize) -> Vec<Multitilde> {
    (1..=max_arity).flat_map(all_tildes).collect()
}

/// Every reflexive relation on `{1,...,size}` contained in `<=`.
pub fn all_relations(size: usize) -> Vec<Relation> {
    let mut off_diagonal = Vec::new();
    for x in 1..=size {
        for y in x + 1..=size {
            off_diagonal.push(pair(x, y));
        }
    }
    let diagonal: Vec<Pair> = (1..=size).map(|x| pair(x, x)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << off_diagonal.len()) {
        let pairs = diagonal.iter().copied().chain(
            off_diagonal
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| *p),
        );
        out.push(Relation::new(size, pairs).unwrap());
    }
    out
}

/// A multitilde of the given arity whose pairs are sampled with the given
/// inclusion chance out of 100.
pub fn random_tilde(rng: &mut Rng, arity: usize, percent: u64) -> Multitilde {
    let pairs = all_pairs(arity)
        .into_iter()
        .filter(|_| rng.below(100) < percent);
    Multitilde::new(arity, pairs).unwrap()
}

/// Like [`random_tilde`] with the arity itself drawn from `1..=max_arity`.
pub fn random_tilde_up_to(rng: &mut Rng, max_arity: usize, percent: u64) -> Multitilde {
    let arity = 1 + rng.below(max_arity as u64) as usize;
    random_tilde(rng, arity, percent)
}

pub fn word(s: &str) -> Word {
    Word::from_chars(s).unwrap()
}

pub fn lang(words: &[&str]) -> FiniteLanguage {
    FiniteLanguage::from_words(words.iter().map(|w| word(w)))
}

pub fn letter(s: &str) -> FiniteLanguage {
    FiniteLanguage::letter(s).unwrap()
}

/// Oracle: free subsets by filtering the full power set on pairwise
/// interval disjointness. Exponential, for small inputs only.
pub fn free_subsets_by_filter(t: &Multitilde) -> Vec<Vec<Pair>> {
    let pairs = t.pairs();
    assert!(pairs.len() <= 20, "oracle input too large");
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let subset: Vec<Pair> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p)
            .collect();
        let free = subset
            .iter()
            .enumerate()
            .all(|(i, a)| subset[..i].iter().all(|b| !a.overlaps(*b)));
        if free {
            out.push(subset);
        }
    }
    out.sort();
    out
}

/// Oracle: the pseudotransitive multitildes of arity `k` by closing every
/// pair subset and deduplicating. Exponential, for `k <= 4` only.
pub fn naive_ptt(k: usize) -> Vec<Multitilde> {
    assert!(k <= 4, "oracle input too large");
    let mut out: Vec<Multitilde> = all_tildes(k)
        .iter()
        .map(multitilde::pseudo_closure)
        .collect();
    out.sort_by(|a, b| a.pairs().cmp(b.pairs()));
    out.dedup();
    out
}

/// The four languages the module-law suite draws from.
pub fn small_languages() -> Vec<FiniteLanguage> {
    vec![
        FiniteLanguage::empty(),
        FiniteLanguage::epsilon(),
        letter("a"),
        letter("b"),
    ]
}
