//! Exhaustive generation and counting of pseudotransitive operators.
//!
//! At arity `k` the candidate pairs are bit-indexed in lexicographic order,
//! so a pair set is one machine word and closure checks are mask tests. The
//! generator walks a prefix tree: a node is a closed set, and a child adds
//! one pair with a higher index. Adding `(x, y)` to a closed set `S` keeps
//! it closed exactly when every `(i, x-1)` in `S` is matched by `(i, y)` in
//! `S` — nothing with a lower index can ever be forced, because every
//! member of `S` starts at or before `x`. Each closed set is therefore
//! reached exactly once, in lexicographic order of its sorted pair list.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::boolvec::vectorize;
use crate::error::{Error, Result};
use crate::lang::{act_tilde, FiniteLanguage};
use crate::tilde::{Multitilde, Pair};

/// Largest arity the generator accepts; the count at 7 is 2,800,472 and the
/// candidate space beyond that stops being desk-sized.
pub const MAX_ENUMERATION_ARITY: usize = 7;

const ACTION_ARITY_LIMIT: usize = 4;

struct PairTable {
    arity: usize,
    pairs: Vec<Pair>,
    // req[j] lists (mask of (i, x-1), mask of (i, y)) for pair j = (x, y):
    // extending a closed set by j is allowed iff every set bit on the left
    // has its partner on the right.
    req: Vec<Vec<(u64, u64)>>,
}

impl PairTable {
    fn new(arity: usize) -> PairTable {
        let mut pairs = Vec::new();
        for x in 1..=arity {
            for y in x..=arity {
                pairs.push(Pair::new(x, y).unwrap());
            }
        }
        let index = |x: usize, y: usize| -> usize {
            pairs
                .binary_search(&Pair::new(x, y).unwrap())
                .expect("pair in table")
        };
        let mut req = Vec::with_capacity(pairs.len());
        for p in &pairs {
            let (x, y) = (p.x(), p.y());
            let mut entries = Vec::new();
            for i in 1..x {
                entries.push((1u64 << index(i, x - 1), 1u64 << index(i, y)));
            }
            req.push(entries);
        }
        PairTable { arity, pairs, req }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    fn can_extend(&self, mask: u64, j: usize) -> bool {
        self.req[j]
            .iter()
            .all(|&(want, give)| mask & want == 0 || mask & give != 0)
    }

    fn decode(&self, mask: u64) -> Multitilde {
        let pairs = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, p)| *p)
            .collect();
        Multitilde::from_sorted_unchecked(self.arity, pairs)
    }
}

fn check_arity(k: usize, max: usize) -> Result<()> {
    if k < 1 || k > max {
        return Err(Error::UnsupportedArity { arity: k, max });
    }
    Ok(())
}

/// A stream of pseudotransitive multitildes in lexicographic order of their
/// canonical pair lists.
pub struct PttStream {
    table: PairTable,
    inner: StreamInner,
}

enum StreamInner {
    // Depth-first walk; children pushed in reverse so they pop in order.
    Lazy {
        stack: Vec<(u64, usize)>,
    },
    // Pre-collected subtree buffers, still in global order.
    Buffered {
        bufs: Vec<Vec<u64>>,
        next: (usize, usize),
    },
}

impl Iterator for PttStream {
    type Item = Multitilde;

    fn next(&mut self) -> Option<Multitilde> {
        let mask = match &mut self.inner {
            StreamInner::Lazy { stack } => {
                let (mask, from) = stack.pop()?;
                for j in (from..self.table.len()).rev() {
                    if self.table.can_extend(mask, j) {
                        stack.push((mask | 1 << j, j + 1));
                    }
                }
                mask
            }
            StreamInner::Buffered { bufs, next } => {
                let (mut b, mut i) = *next;
                while b < bufs.len() && i >= bufs[b].len() {
                    b += 1;
                    i = 0;
                }
                if b >= bufs.len() {
                    return None;
                }
                *next = (b, i + 1);
                bufs[b][i]
            }
        };
        Some(self.table.decode(mask))
    }
}

impl fmt::Debug for PttStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PttStream")
            .field("arity", &self.table.arity)
            .finish_non_exhaustive()
    }
}

/// Streams every pseudotransitive multitilde of arity `k` exactly once.
pub fn enumerate_ptt(k: usize) -> Result<PttStream> {
    check_arity(k, MAX_ENUMERATION_ARITY)?;
    Ok(PttStream {
        table: PairTable::new(k),
        inner: StreamInner::Lazy {
            stack: vec![(0, 0)],
        },
    })
}

/// Same stream as [`enumerate_ptt`], produced by splitting the top-level
/// subtrees across `workers` threads. The order does not depend on the
/// worker count.
pub fn enumerate_ptt_parallel(k: usize, workers: usize) -> Result<PttStream> {
    check_arity(k, MAX_ENUMERATION_ARITY)?;
    if workers == 0 {
        return Err(Error::ZeroWorkers);
    }
    let table = PairTable::new(k);
    // Task 0 is the root set alone; task j+1 is the subtree rooted at the
    // singleton {pair j}.
    let tasks = table.len() + 1;
    let results: Mutex<Vec<Option<Vec<u64>>>> = Mutex::new(vec![None; tasks]);
    let cursor = AtomicUsize::new(0);
    let workers = workers.min(tasks);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let task = cursor.fetch_add(1, Ordering::Relaxed);
                if task >= tasks {
                    return;
                }
                let mut buf = Vec::new();
                if task == 0 {
                    buf.push(0);
                } else {
                    collect_subtree(&table, 1 << (task - 1), task, &mut buf);
                }
                results.lock().unwrap()[task] = Some(buf);
            });
        }
    });
    let bufs = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|b| b.expect("every task ran"))
        .collect();
    Ok(PttStream {
        table,
        inner: StreamInner::Buffered { bufs, next: (0, 0) },
    })
}

fn collect_subtree(table: &PairTable, mask: u64, from: usize, out: &mut Vec<u64>) {
    out.push(mask);
    for j in from..table.len() {
        if table.can_extend(mask, j) {
            collect_subtree(table, mask | 1 << j, j + 1, out);
        }
    }
}

fn count_subtree(table: &PairTable, mask: u64, from: usize) -> u64 {
    let mut total = 1;
    for j in from..table.len() {
        if table.can_extend(mask, j) {
            total += count_subtree(table, mask | 1 << j, j + 1);
        }
    }
    total
}

/// The outcome of one counting run.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub arity: usize,
    pub ptt_count: u64,
    pub method: String,
    #[serde(rename = "elapsed_secs", serialize_with = "duration_as_secs")]
    pub elapsed: Duration,
}

fn duration_as_secs<S: Serializer>(
    d: &Duration,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_f64(d.as_secs_f64())
}

/// Counts the pseudotransitive multitildes of arity `k` without
/// materializing them.
pub fn count_ptt(k: usize) -> Result<CountReport> {
    check_arity(k, MAX_ENUMERATION_ARITY)?;
    let start = Instant::now();
    let table = PairTable::new(k);
    let ptt_count = count_subtree(&table, 0, 0);
    Ok(CountReport {
        arity: k,
        ptt_count,
        method: "recursive-extension".to_string(),
        elapsed: start.elapsed(),
    })
}

/// Parallel variant of [`count_ptt`]; the count is identical for every
/// worker count.
pub fn count_ptt_parallel(k: usize, workers: usize) -> Result<CountReport> {
    check_arity(k, MAX_ENUMERATION_ARITY)?;
    if workers == 0 {
        return Err(Error::ZeroWorkers);
    }
    let start = Instant::now();
    let table = PairTable::new(k);
    let tasks = table.len();
    let cursor = AtomicUsize::new(0);
    let workers = workers.min(tasks.max(1));
    let mut totals = vec![0u64; workers];
    std::thread::scope(|scope| {
        for slot in totals.iter_mut() {
            let table = &table;
            let cursor = &cursor;
            scope.spawn(move || loop {
                let j = cursor.fetch_add(1, Ordering::Relaxed);
                if j >= tasks {
                    return;
                }
                *slot += count_subtree(table, 1 << j, j + 1);
            });
        }
    });
    let ptt_count = 1 + totals.iter().sum::<u64>();
    Ok(CountReport {
        arity: k,
        ptt_count,
        method: format!("recursive-extension x{workers}"),
        elapsed: start.elapsed(),
    })
}

/// Checks that distinct pseudotransitive operators of arity `k` stay
/// distinct when applied to `k` distinct letters, both through the produced
/// languages and through the vector sets; the two counts must agree.
pub fn verify_distinct_actions(k: usize) -> Result<bool> {
    check_arity(k, ACTION_ARITY_LIMIT)?;
    let langs = distinct_letters(k)?;
    let mut total = 0u64;
    let mut languages = std::collections::HashSet::new();
    let mut vector_sets = std::collections::HashSet::new();
    for t in enumerate_ptt(k)? {
        total += 1;
        languages.insert(act_tilde(&t, &langs)?);
        vector_sets.insert(vectorize(&t)?);
    }
    let by_language = languages.len() as u64 == total;
    let by_vectors = vector_sets.len() as u64 == total;
    assert_eq!(
        by_language, by_vectors,
        "language and vector injectivity disagree at arity {k}"
    );
    Ok(by_language)
}

/// Number of distinct languages obtained by applying every pseudotransitive
/// operator of matching arity to the tuple. Never exceeds the operator
/// count.
pub fn count_distinct_languages(langs: &[FiniteLanguage]) -> Result<usize> {
    let k = langs.len();
    check_arity(k, ACTION_ARITY_LIMIT)?;
    let mut languages = std::collections::HashSet::new();
    for t in enumerate_ptt(k)? {
        languages.insert(act_tilde(&t, langs)?);
    }
    Ok(languages.len())
}

fn distinct_letters(k: usize) -> Result<Vec<FiniteLanguage>> {
    (1..=k)
        .map(|i| {
            let name = format!("a{i}");
            FiniteLanguage::letter(&name)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_ptt;

    #[test]
    fn arity_one_stream() {
        let got: Vec<Multitilde> = enumerate_ptt(1).unwrap().collect();
        assert_eq!(
            got,
            vec![
                Multitilde::new(1, []).unwrap(),
                Multitilde::new(1, [Pair::new(1, 1).unwrap()]).unwrap(),
            ]
        );
    }

    #[test]
    fn small_counts_match_known_values() {
        for (k, expected) in [(1, 2), (2, 7), (3, 40), (4, 357), (5, 4824)] {
            assert_eq!(count_ptt(k).unwrap().ptt_count, expected);
            assert_eq!(enumerate_ptt(k).unwrap().count() as u64, expected);
        }
    }

    #[test]
    fn stream_is_sorted_closed_and_duplicate_free() {
        for k in 1..=4 {
            let all: Vec<Multitilde> = enumerate_ptt(k).unwrap().collect();
            assert!(all.iter().all(is_ptt));
            for w in all.windows(2) {
                assert!(w[0].pairs() < w[1].pairs(), "{:?} !< {:?}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn parallel_stream_and_count_match_sequential() {
        for workers in 1..=4 {
            let seq: Vec<Multitilde> = enumerate_ptt(4).unwrap().collect();
            let par: Vec<Multitilde> = enumerate_ptt_parallel(4, workers).unwrap().collect();
            assert_eq!(seq, par);
            assert_eq!(count_ptt_parallel(5, workers).unwrap().ptt_count, 4824);
        }
    }

    #[test]
    fn range_guards() {
        assert!(matches!(
            enumerate_ptt(0),
            Err(Error::UnsupportedArity { .. })
        ));
        assert!(matches!(
            count_ptt(MAX_ENUMERATION_ARITY + 1),
            Err(Error::UnsupportedArity { .. })
        ));
        assert!(matches!(
            verify_distinct_actions(5),
            Err(Error::UnsupportedArity { .. })
        ));
        assert!(matches!(
            enumerate_ptt_parallel(3, 0),
            Err(Error::ZeroWorkers)
        ));
    }

    #[test]
    fn distinct_actions_at_small_arities() {
        assert!(verify_distinct_actions(1).unwrap());
        assert!(verify_distinct_actions(2).unwrap());
        assert!(verify_distinct_actions(3).unwrap());
    }

    #[test]
    fn distinct_language_counts() {
        let a = FiniteLanguage::letter("a").unwrap();
        let b = FiniteLanguage::letter("b").unwrap();
        assert_eq!(count_distinct_languages(&[a.clone(), b]).unwrap(), 7);
        // Repeated letters collapse some rows of the table.
        let repeated = count_distinct_languages(&[a.clone(), a]).unwrap();
        assert!(repeated <= 7);
        assert_eq!(repeated, 4);
        assert_eq!(
            count_distinct_languages(&[FiniteLanguage::empty()]).unwrap(),
            2
        );
    }

    #[test]
    fn report_serializes_elapsed_as_seconds() {
        let report = count_ptt(2).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["arity"], 2);
        assert_eq!(json["ptt_count"], 7);
        assert!(json["elapsed_secs"].is_f64());
    }
}
