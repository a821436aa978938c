//! Sets of fixed-length boolean vectors and the map from multitildes.
//!
//! A multitilde determines its action on languages entirely through its
//! *free subsets*: the subsets of its pair set whose intervals are pairwise
//! disjoint. [`vectorize`] sends each free subset to the vector that is 0
//! exactly on the covered positions; the resulting vector sets compose by
//! splicing one vector into a slot of another under AND, and this map turns
//! multitilde composition into vector-set composition.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tilde::{Multitilde, Pair};

/// Vectors are packed into a `u128`, so arities are capped here.
pub const MAX_VECTOR_LEN: usize = 128;

/// A fixed-length boolean vector, packed so that position 1 is the most
/// significant used bit. Same-length vectors order lexicographically with
/// `0 < 1`.
///
/// Serializes as an array of `0`/`1` integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoolVector {
    len: usize,
    bits: u128,
}

impl BoolVector {
    pub fn new(values: &[bool]) -> Result<Self> {
        let len = values.len();
        check_len(len)?;
        let mut bits = 0u128;
        for &v in values {
            bits = (bits << 1) | u128::from(v);
        }
        Ok(BoolVector { len, bits })
    }

    /// The all-ones vector of the given length.
    pub fn ones(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(BoolVector {
            len,
            bits: u128::MAX >> (128 - len),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// Value at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            (1..=self.len).contains(&i),
            "position {i} out of 1..={}",
            self.len
        );
        (self.bits >> (self.len - i)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |i| self.get(i))
    }

    fn from_raw(len: usize, bits: u128) -> Self {
        debug_assert!((1..=MAX_VECTOR_LEN).contains(&len));
        BoolVector { len, bits }
    }
}

fn check_len(len: usize) -> Result<()> {
    if !(1..=MAX_VECTOR_LEN).contains(&len) {
        return Err(Error::VectorLength {
            len,
            max: MAX_VECTOR_LEN,
        });
    }
    Ok(())
}

// Shifts that tolerate a full-width count.
fn shr_full(bits: u128, s: usize) -> u128 {
    if s >= 128 {
        0
    } else {
        bits >> s
    }
}

fn low_mask(len: usize) -> u128 {
    if len == 0 {
        0
    } else {
        u128::MAX >> (128 - len)
    }
}

impl fmt::Debug for BoolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, "]")
    }
}

impl Serialize for BoolVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len))?;
        for b in self.iter() {
            seq.serialize_element(&u8::from(b))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BoolVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u8>::deserialize(deserializer)?;
        let mut values = Vec::with_capacity(raw.len());
        for bit in raw {
            match bit {
                0 => values.push(false),
                1 => values.push(true),
                other => return Err(D::Error::custom(format!("bit must be 0 or 1, got {other}"))),
            }
        }
        BoolVector::new(&values).map_err(D::Error::custom)
    }
}

/// A set of boolean vectors of one common length, stored sorted.
///
/// Serializes as `{"arity": n, "vectors": [[0|1, ...], ...]}` with the
/// vectors in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBoolVectorSet")]
pub struct BoolVectorSet {
    arity: usize,
    vectors: Vec<BoolVector>,
}

#[derive(Deserialize)]
struct RawBoolVectorSet {
    arity: usize,
    vectors: Vec<BoolVector>,
}

impl TryFrom<RawBoolVectorSet> for BoolVectorSet {
    type Error = Error;

    fn try_from(raw: RawBoolVectorSet) -> Result<Self> {
        BoolVectorSet::new(raw.arity, raw.vectors)
    }
}

impl BoolVectorSet {
    pub fn new(arity: usize, vectors: impl IntoIterator<Item = BoolVector>) -> Result<Self> {
        check_len(arity)?;
        let mut vectors: Vec<BoolVector> = vectors.into_iter().collect();
        for v in &vectors {
            if v.len != arity {
                return Err(Error::VectorArityMismatch { arity, len: v.len });
            }
        }
        vectors.sort_unstable();
        vectors.dedup();
        Ok(BoolVectorSet { arity, vectors })
    }

    /// The identity of the operad: the singleton `{[1]}`.
    pub fn identity() -> Self {
        BoolVectorSet {
            arity: 1,
            vectors: vec![BoolVector::from_raw(1, 1)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vectors(&self) -> &[BoolVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &BoolVector) -> bool {
        self.vectors.binary_search(v).is_ok()
    }

    /// Splices every vector of `other` into slot `k` of every vector of
    /// `self`, ANDing the insert with the slot's value.
    pub fn compose_partial(&self, k: usize, other: &BoolVectorSet) -> Result<BoolVectorSet> {
        let m = self.arity;
        let n = other.arity;
        if k < 1 || k > m {
            return Err(Error::PositionOutOfRange {
                position: k,
                arity: m,
            });
        }
        check_len(m + n - 1)?;
        let suffix_len = m - k;
        let mut out = Vec::with_capacity(self.vectors.len() * other.vectors.len());
        for v in &self.vectors {
            let prefix = shr_full(v.bits, suffix_len + 1);
            let slot = (v.bits >> suffix_len) & 1;
            let suffix = v.bits & low_mask(suffix_len);
            for w in &other.vectors {
                let mid = if slot == 1 { w.bits } else { 0 };
                let bits = (((prefix << n) | mid) << suffix_len) | suffix;
                out.push(BoolVector::from_raw(m + n - 1, bits));
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(BoolVectorSet {
            arity: m + n - 1,
            vectors: out,
        })
    }
}

/// A subset of a multitilde's pairs whose intervals are pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeSubset {
    pairs: Vec<Pair>,
}

impl FreeSubset {
    pub fn new(pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let mut pairs: Vec<Pair> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        for w in pairs.windows(2) {
            if w[0].overlaps(w[1]) {
                return Err(Error::OverlappingPairs {
                    x1: w[0].x(),
                    y1: w[0].y(),
                    x2: w[1].x(),
                    y2: w[1].y(),
                });
            }
        }
        Ok(FreeSubset { pairs })
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The characteristic vector at the given arity: 0 exactly on the
    /// positions covered by some interval of the subset.
    pub fn vector(&self, arity: usize) -> Result<BoolVector> {
        let mut bits = BoolVector::ones(arity)?.bits;
        for p in &self.pairs {
            let width = p.y() - p.x() + 1;
            bits &= !(low_mask(width) << (arity - p.y()));
        }
        Ok(BoolVector::from_raw(arity, bits))
    }
}

/// Every free subset of `t`'s pairs, including the empty one, by
/// backtracking over the pairs in lexicographic order.
///
/// Chosen intervals end before any later candidate may start, so a single
/// high-water mark prunes every overlap.
pub fn free_subsets(t: &Multitilde) -> Vec<FreeSubset> {
    let pairs = t.pairs();
    let mut out = Vec::new();
    let mut chosen: Vec<Pair> = Vec::new();
    extend_free(pairs, 0, 0, &mut chosen, &mut out);
    out
}

fn extend_free(
    pairs: &[Pair],
    from: usize,
    max_y: usize,
    chosen: &mut Vec<Pair>,
    out: &mut Vec<FreeSubset>,
) {
    out.push(FreeSubset {
        pairs: chosen.clone(),
    });
    for j in from..pairs.len() {
        if pairs[j].x() > max_y {
            chosen.push(pairs[j]);
            extend_free(pairs, j + 1, pairs[j].y(), chosen, out);
            chosen.pop();
        }
    }
}

/// The vector set of a multitilde: one vector per free subset, duplicates
/// merged. Fails only when the arity exceeds [`MAX_VECTOR_LEN`].
pub fn vectorize(t: &Multitilde) -> Result<BoolVectorSet> {
    let arity = t.arity();
    check_len(arity)?;
    let mut vectors = Vec::new();
    for s in free_subsets(t) {
        vectors.push(s.vector(arity)?);
    }
    vectors.sort_unstable();
    vectors.dedup();
    Ok(BoolVectorSet { arity, vectors })
}
