//! Multitilde operators and their composition.
//!
//! A multitilde of arity `n` is a set of position pairs `(x, y)` with
//! `1 <= x <= y <= n`. Composition plugs one operator into an input slot of
//! another: the host's pairs are stretched around the inserted block
//! ([`Pair::shift`]) while the guest's pairs are translated into it
//! ([`Pair::dec`]). Together with the empty unary operator as identity this
//! satisfies the two associativity laws of an operad.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One interval of positions, `1 <= x <= y`.
///
/// Serializes as a two-element array `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    x: usize,
    y: usize,
}

impl Pair {
    pub fn new(x: usize, y: usize) -> Result<Self> {
        if x < 1 || x > y {
            return Err(Error::InvalidPair { x, y });
        }
        Ok(Pair { x, y })
    }

    pub fn x(self) -> usize {
        self.x
    }

    pub fn y(self) -> usize {
        self.y
    }

    /// Translates both coordinates by `k`.
    pub fn dec(self, k: usize) -> Pair {
        Pair {
            x: self.x + k,
            y: self.y + k,
        }
    }

    /// Records the insertion of `n` positions at position `k`: coordinates
    /// at or beyond the insertion point move up by `n - 1`, using the
    /// characteristic-function form
    /// `(x + [x >= k+1](n-1), y + [y >= k](n-1))`.
    pub fn shift(self, k: usize, n: usize) -> Pair {
        let d = n - 1;
        Pair {
            x: self.x + if self.x > k { d } else { 0 },
            y: self.y + if self.y >= k { d } else { 0 },
        }
    }

    /// True when `pos` lies in the closed interval `[x, y]`.
    pub fn covers(self, pos: usize) -> bool {
        self.x <= pos && pos <= self.y
    }

    /// True when the two closed intervals intersect.
    pub fn overlaps(self, other: Pair) -> bool {
        self.x <= other.y && other.x <= self.y
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Pair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(usize, usize)>::deserialize(deserializer)?;
        Pair::new(x, y).map_err(D::Error::custom)
    }
}

/// Elementwise [`Pair::dec`] on a set of pairs.
pub fn dec_set(k: usize, pairs: &[Pair]) -> Vec<Pair> {
    canonicalize(pairs.iter().map(|p| p.dec(k)).collect())
}

/// Elementwise [`Pair::shift`] on a set of pairs.
pub fn shift_set(k: usize, n: usize, pairs: &[Pair]) -> Vec<Pair> {
    canonicalize(pairs.iter().map(|p| p.shift(k, n)).collect())
}

fn canonicalize(mut pairs: Vec<Pair>) -> Vec<Pair> {
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// An n-ary operator given by its arity and a set of position intervals,
/// stored sorted and deduplicated.
///
/// Serializes as `{"arity": n, "pairs": [[x,y], ...]}` with the pairs in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMultitilde")]
pub struct Multitilde {
    arity: usize,
    pairs: Vec<Pair>,
}

#[derive(Deserialize)]
struct RawMultitilde {
    arity: usize,
    pairs: Vec<Pair>,
}

impl TryFrom<RawMultitilde> for Multitilde {
    type Error = Error;

    fn try_from(raw: RawMultitilde) -> Result<Self> {
        Multitilde::new(raw.arity, raw.pairs)
    }
}

impl Multitilde {
    pub fn new(arity: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let pairs = canonicalize(pairs.into_iter().collect());
        for p in &pairs {
            if p.y > arity {
                return Err(Error::PairOutOfRange {
                    x: p.x,
                    y: p.y,
                    arity,
                });
            }
        }
        Ok(Multitilde { arity, pairs })
    }

    /// The identity of the operad: the empty unary operator.
    pub fn identity() -> Self {
        Multitilde {
            arity: 1,
            pairs: Vec::new(),
        }
    }

    // Fast path for callers that already hold a sorted, deduplicated,
    // in-range pair list.
    pub(crate) fn from_sorted_unchecked(arity: usize, pairs: Vec<Pair>) -> Self {
        debug_assert!(arity >= 1);
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(pairs.iter().all(|p| p.y <= arity));
        Multitilde { arity, pairs }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn contains(&self, pair: Pair) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    /// Union of the pair sets of two operators of equal arity.
    pub fn union(&self, other: &Multitilde) -> Result<Multitilde> {
        if self.arity != other.arity {
            return Err(Error::ArityDiffers {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut pairs = self.pairs.clone();
        pairs.extend_from_slice(&other.pairs);
        Ok(Multitilde {
            arity: self.arity,
            pairs: canonicalize(pairs),
        })
    }

    /// Plugs `other` into input slot `k` of `self`. The result has arity
    /// `m + n - 1`; its pairs are the shifted pairs of `self` together with
    /// the translated pairs of `other`.
    pub fn compose_partial(&self, k: usize, other: &Multitilde) -> Result<Multitilde> {
        if k < 1 || k > self.arity {
            return Err(Error::PositionOutOfRange {
                position: k,
                arity: self.arity,
            });
        }
        let n = other.arity;
        let mut pairs = shift_set(k, n, &self.pairs);
        pairs.extend(dec_set(k - 1, &other.pairs));
        Ok(Multitilde {
            arity: self.arity + n - 1,
            pairs: canonicalize(pairs),
        })
    }

    /// Plugs one argument into every slot at once, by folding
    /// [`compose_partial`](Self::compose_partial) from the last slot down to
    /// the first.
    pub fn compose_full(&self, args: &[Multitilde]) -> Result<Multitilde> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        let mut acc = self.clone();
        for (i, arg) in args.iter().enumerate().rev() {
            acc = acc.compose_partial(i + 1, arg)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Multitilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{{[")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]}}@{}", self.arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: usize, y: usize) -> Pair {
        Pair::new(x, y).unwrap()
    }

    fn mt(arity: usize, pairs: &[(usize, usize)]) -> Multitilde {
        Multitilde::new(arity, pairs.iter().map(|&(x, y)| p(x, y))).unwrap()
    }

    // Case-split form of shift, used only to cross-check the
    // characteristic-function form.
    fn shift_by_cases(k: usize, n: usize, q: Pair) -> Pair {
        if q.y() < k {
            q
        } else if q.x() <= k && k <= q.y() {
            Pair::new(q.x(), q.y() + n - 1).unwrap()
        } else {
            q.dec(n - 1)
        }
    }

    #[test]
    fn dec_translates_both_coordinates() {
        assert_eq!(p(1, 2).dec(3), p(4, 5));
        assert_eq!(p(2, 7).dec(0), p(2, 7));
    }

    #[test]
    fn dec_commutes_with_itself() {
        assert_eq!(p(1, 1).dec(2).dec(5), p(8, 8));
        assert_eq!(p(1, 1).dec(5).dec(2), p(8, 8));
    }

    #[test]
    fn shift_insertion_of_six_at_five() {
        assert_eq!(p(1, 3).shift(5, 6), p(1, 3));
        assert_eq!(p(3, 7).shift(5, 6), p(3, 12));
        assert_eq!(p(7, 8).shift(5, 6), p(12, 13));
    }

    #[test]
    fn shift_by_one_is_identity() {
        for (k, x, y) in [(0, 1, 1), (3, 2, 5), (9, 4, 4)] {
            assert_eq!(p(x, y).shift(k, 1), p(x, y));
        }
    }

    #[test]
    fn shift_set_and_dec_set_examples() {
        assert_eq!(
            shift_set(5, 6, &[p(1, 3), p(3, 7), p(7, 8)]),
            vec![p(1, 3), p(3, 12), p(12, 13)]
        );
        assert_eq!(shift_set(2, 3, &[p(1, 1), p(2, 2)]), vec![p(1, 1), p(2, 4)]);
        assert_eq!(dec_set(1, &[]), Vec::<Pair>::new());
    }

    #[test]
    fn pair_rejects_bad_coordinates() {
        assert_eq!(Pair::new(0, 2), Err(Error::InvalidPair { x: 0, y: 2 }));
        assert_eq!(Pair::new(3, 2), Err(Error::InvalidPair { x: 3, y: 2 }));
    }

    #[test]
    fn multitilde_validates_on_construction() {
        assert_eq!(Multitilde::new(0, []), Err(Error::ZeroArity));
        assert_eq!(
            Multitilde::new(2, [p(1, 3)]),
            Err(Error::PairOutOfRange {
                x: 1,
                y: 3,
                arity: 2
            })
        );
        // Duplicates collapse and order is canonical.
        let t = Multitilde::new(3, [p(2, 3), p(1, 1), p(2, 3)]).unwrap();
        assert_eq!(t.pairs(), &[p(1, 1), p(2, 3)]);
    }

    #[test]
    fn compose_partial_example() {
        let t1 = mt(2, &[(1, 2)]);
        let t2 = mt(1, &[(1, 1)]);
        assert_eq!(
            t1.compose_partial(1, &t2).unwrap(),
            mt(2, &[(1, 1), (1, 2)])
        );
    }

    #[test]
    fn compose_position_out_of_range() {
        let t = mt(2, &[]);
        assert!(matches!(
            t.compose_partial(0, &Multitilde::identity()),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            t.compose_partial(3, &Multitilde::identity()),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn compose_full_example() {
        let t = mt(2, &[]);
        let one = mt(1, &[(1, 1)]);
        assert_eq!(
            t.compose_full(&[one.clone(), one]).unwrap(),
            mt(2, &[(1, 1), (2, 2)])
        );
    }

    #[test]
    fn compose_full_arity_mismatch() {
        let t = mt(2, &[]);
        assert_eq!(
            t.compose_full(&[Multitilde::identity()]),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn identity_laws_on_small_operators() {
        let id = Multitilde::identity();
        for t in [mt(1, &[(1, 1)]), mt(3, &[(1, 2), (2, 3)]), mt(4, &[])] {
            for k in 1..=t.arity() {
                assert_eq!(t.compose_partial(k, &id).unwrap(), t);
            }
            assert_eq!(id.compose_partial(1, &t).unwrap(), t);
            let ids = vec![id.clone(); t.arity()];
            assert_eq!(t.compose_full(&ids).unwrap(), t);
            assert_eq!(id.compose_full(std::slice::from_ref(&t)).unwrap(), t);
        }
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let t = mt(3, &[(2, 3), (1, 1)]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"arity":3,"pairs":[[1,1],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Multitilde>(&json).unwrap(), t);
        // Unsorted input canonicalizes; invalid input is rejected.
        let t2: Multitilde = serde_json::from_str(r#"{"arity":3,"pairs":[[2,3],[1,1]]}"#).unwrap();
        assert_eq!(t2, t);
        assert!(serde_json::from_str::<Multitilde>(r#"{"arity":2,"pairs":[[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<Multitilde>(r#"{"arity":0,"pairs":[]}"#).is_err());
    }

    proptest! {
        #[test]
        fn shift_formula_matches_case_split(x in 1usize..40, d in 0usize..40, k in 0usize..50, n in 1usize..20) {
            let q = p(x, x + d);
            prop_assert_eq!(q.shift(k, n), shift_by_cases(k, n, q));
        }

        #[test]
        fn dec_and_shift_commute(x in 1usize..30, d in 0usize..30, i in 0usize..30, m in 1usize..10, n in 0usize..30) {
            let q = p(x, x + d);
            prop_assert_eq!(q.shift(i, m).dec(n), q.dec(n).shift(i + n, m));
        }

        #[test]
        fn shifts_commute_below(x in 1usize..30, d in 0usize..30, k in 0usize..15, extra in 1usize..15, m in 1usize..10, n in 1usize..10) {
            // k < l
            let l = k + extra;
            let q = p(x, x + d);
            prop_assert_eq!(q.shift(l, n).shift(k, m), q.shift(k, m).shift(l + m - 1, n));
        }

        #[test]
        fn nested_shifts_absorb(x in 1usize..30, d in 0usize..30, k in 0usize..15, m in 1usize..10, n in 1usize..10, i_seed in 0usize..10) {
            // 0 <= i < n
            let i = i_seed % n;
            let q = p(x, x + d);
            prop_assert_eq!(q.shift(k, n).shift(k + i, m), q.shift(k, m + n - 1));
        }

        #[test]
        fn composition_arity_and_bounds(m in 1usize..6, n in 1usize..6, seed in any::<u64>()) {
            let mut s = seed | 1;
            let mut rnd = move || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
            let rand_tilde = |arity: usize, rnd: &mut dyn FnMut() -> u64| {
                let mut pairs = Vec::new();
                for x in 1..=arity {
                    for y in x..=arity {
                        if rnd().is_multiple_of(2) {
                            pairs.push(p(x, y));
                        }
                    }
                }
                Multitilde::new(arity, pairs).unwrap()
            };
            let t1 = rand_tilde(m, &mut rnd);
            let t2 = rand_tilde(n, &mut rnd);
            for k in 1..=m {
                let c = t1.compose_partial(k, &t2).unwrap();
                prop_assert_eq!(c.arity(), m + n - 1);
                prop_assert!(c.pairs().iter().all(|q| q.y() <= c.arity()));
            }
        }
    }
}
