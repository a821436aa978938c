//! Reflexive subrelations of the linear order, and operator equivalence.
//!
//! A multitilde of arity `k` corresponds to a reflexive relation on
//! `{1,...,k+1}` contained in `<=`: each pair `(x, y)` becomes `(x, y+1)` and
//! the diagonal is added ([`phi`]). Transitive closure on the relation side
//! pulls back to [`pseudo_closure`] on the operator side, and two operators
//! act identically on every language tuple exactly when their closures
//! coincide ([`equivalent`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tilde::{dec_set, Multitilde, Pair};

/// A reflexive relation on `{1,...,size}` contained in `<=`, stored as a
/// sorted pair list with the diagonal explicit.
///
/// Serializes as `{"size": n, "pairs": [[x,y], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRelation")]
pub struct Relation {
    size: usize,
    pairs: Vec<Pair>,
}

#[derive(Deserialize)]
struct RawRelation {
    size: usize,
    pairs: Vec<Pair>,
}

impl TryFrom<RawRelation> for Relation {
    type Error = Error;

    fn try_from(raw: RawRelation) -> Result<Self> {
        Relation::new(raw.size, raw.pairs)
    }
}

impl Relation {
    pub fn new(size: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut pairs: Vec<Pair> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        for p in &pairs {
            if p.y() > size {
                return Err(Error::RelationPairOutOfRange {
                    x: p.x(),
                    y: p.y(),
                    size,
                });
            }
        }
        let relation = Relation { size, pairs };
        for x in 1..=size {
            if !relation.contains(x, x) {
                return Err(Error::MissingDiagonal { size, x });
            }
        }
        Ok(relation)
    }

    fn from_parts(size: usize, mut pairs: Vec<Pair>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Relation { size, pairs }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        Pair::new(x, y)
            .map(|p| self.pairs.binary_search(&p).is_ok())
            .unwrap_or(false)
    }

    /// Composition mirroring multitilde composition through [`phi`]: the
    /// host relation is relabelled around the inserted block, the guest is
    /// translated into it.
    pub fn diamond(&self, k: usize, other: &Relation) -> Result<Relation> {
        let m = self.size - 1;
        if k < 1 || k > m {
            return Err(Error::PositionOutOfRange {
                position: k,
                arity: m,
            });
        }
        if other.size < 2 {
            return Err(Error::ZeroArity);
        }
        let n = other.size - 1;
        let mut pairs: Vec<Pair> = self.pairs.iter().map(|&p| shift_diamond(n, k, p)).collect();
        pairs.extend(dec_set(k - 1, &other.pairs));
        Ok(Relation::from_parts(self.size + other.size - 2, pairs))
    }

    /// Smallest transitive superset, by saturation; the ground sets here are
    /// tiny.
    pub fn transitive_closure(&self) -> Relation {
        let mut pairs = self.pairs.clone();
        let closed = saturate(&mut pairs, |a, b| {
            if a.y() == b.x() {
                Pair::new(a.x(), b.y()).ok()
            } else {
                None
            }
        });
        Relation {
            size: self.size,
            pairs: closed,
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive_closure() == *self
    }
}

/// Relabels a relation pair around an insertion of `n` positions at slot
/// `k`: untouched below the slot, stretched across it, translated above it.
pub fn shift_diamond(n: usize, k: usize, p: Pair) -> Pair {
    let d = n - 1;
    if p.y() <= k {
        p
    } else if p.x() <= k {
        Pair::new(p.x(), p.y() + d).unwrap()
    } else {
        p.dec(d)
    }
}

/// The relation of a multitilde: arity `k` maps onto ground set
/// `{1,...,k+1}`, pairs move up by one on the right, and the full diagonal
/// is added.
pub fn phi(t: &Multitilde) -> Relation {
    let size = t.arity() + 1;
    let mut pairs: Vec<Pair> = (1..=size).map(|x| Pair::new(x, x).unwrap()).collect();
    pairs.extend(
        t.pairs()
            .iter()
            .map(|p| Pair::new(p.x(), p.y() + 1).unwrap()),
    );
    Relation::from_parts(size, pairs)
}

/// Inverse of [`phi`]: strictly off-diagonal pairs `(x, z)` map back to
/// `(x, z-1)`; the diagonal is dropped.
pub fn phi_inv(r: &Relation) -> Result<Multitilde> {
    if r.size() < 2 {
        return Err(Error::ZeroArity);
    }
    let pairs = r
        .pairs()
        .iter()
        .filter(|p| p.x() < p.y())
        .map(|p| Pair::new(p.x(), p.y() - 1).unwrap());
    Multitilde::new(r.size() - 1, pairs)
}

/// Saturates the pair rule `(i,k),(k+1,j) => (i,j)` over the pair set; the
/// conjugate of transitive closure under [`phi`].
pub fn pseudo_closure(t: &Multitilde) -> Multitilde {
    let mut pairs = t.pairs().to_vec();
    let closed = saturate(&mut pairs, |a, b| {
        if a.y() + 1 == b.x() {
            Pair::new(a.x(), b.y()).ok()
        } else {
            None
        }
    });
    Multitilde::new(t.arity(), closed).expect("closure stays within the arity")
}

fn saturate(pairs: &mut Vec<Pair>, rule: impl Fn(Pair, Pair) -> Option<Pair>) -> Vec<Pair> {
    pairs.sort_unstable();
    pairs.dedup();
    let mut changed = true;
    while changed {
        changed = false;
        let mut additions = Vec::new();
        for &a in pairs.iter() {
            for &b in pairs.iter() {
                if let Some(c) = rule(a, b) {
                    if pairs.binary_search(&c).is_err() {
                        additions.push(c);
                    }
                }
            }
        }
        if !additions.is_empty() {
            pairs.extend(additions);
            pairs.sort_unstable();
            pairs.dedup();
            changed = true;
        }
    }
    std::mem::take(pairs)
}

/// True when a multitilde is fixed by [`pseudo_closure`].
pub fn is_ptt(t: &Multitilde) -> bool {
    pseudo_closure(t) == *t
}

/// Semantic equivalence: same arity and equal pseudotransitive closures.
/// Operators of different arity are never interchangeable.
pub fn equivalent(a: &Multitilde, b: &Multitilde) -> bool {
    a.arity() == b.arity() && pseudo_closure(a) == pseudo_closure(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::act_tilde;
    use crate::FiniteLanguage;
    use proptest::prelude::*;

    fn p(x: usize, y: usize) -> Pair {
        Pair::new(x, y).unwrap()
    }

    fn mt(arity: usize, pairs: &[(usize, usize)]) -> Multitilde {
        Multitilde::new(arity, pairs.iter().map(|&(x, y)| p(x, y))).unwrap()
    }

    fn rel(size: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::new(size, pairs.iter().map(|&(x, y)| p(x, y))).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi(&mt(2, &[(1, 2)])),
            rel(3, &[(1, 3), (1, 1), (2, 2), (3, 3)])
        );
        assert_eq!(phi(&Multitilde::identity()), rel(2, &[(1, 1), (2, 2)]));
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(
            phi_inv(&rel(3, &[(1, 1), (2, 2), (3, 3)])).unwrap(),
            mt(2, &[])
        );
        assert_eq!(
            phi_inv(&rel(3, &[(1, 3), (1, 1), (2, 2), (3, 3)])).unwrap(),
            mt(2, &[(1, 2)])
        );
    }

    #[test]
    fn relation_validation() {
        assert!(matches!(
            Relation::new(2, [p(1, 2)]),
            Err(Error::MissingDiagonal { .. })
        ));
        assert!(matches!(
            Relation::new(2, [p(1, 1), p(2, 2), p(1, 3)]),
            Err(Error::RelationPairOutOfRange { .. })
        ));
        assert!(matches!(Relation::new(0, []), Err(Error::EmptyGroundSet)));
    }

    #[test]
    fn shift_diamond_cases() {
        assert_eq!(shift_diamond(6, 5, p(1, 3)), p(1, 3));
        assert_eq!(shift_diamond(6, 5, p(3, 7)), p(3, 12));
        assert_eq!(shift_diamond(6, 5, p(7, 8)), p(12, 13));
    }

    #[test]
    fn diamond_identity_and_example() {
        let id = phi(&Multitilde::identity());
        let r = rel(3, &[(1, 1), (2, 2), (3, 3), (1, 3)]);
        assert_eq!(id.diamond(1, &r).unwrap(), r);
        assert_eq!(
            rel(2, &[(1, 1), (2, 2)]).diamond(1, &r).unwrap(),
            rel(3, &[(1, 1), (2, 2), (3, 3), (1, 3)])
        );
    }

    #[test]
    fn transitive_closure_examples() {
        let r = rel(3, &[(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)]);
        assert_eq!(
            r.transitive_closure(),
            rel(3, &[(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)])
        );
        let diag = rel(3, &[(1, 1), (2, 2), (3, 3)]);
        assert_eq!(diag.transitive_closure(), diag);
        assert!(diag.is_transitive());
        assert!(!r.is_transitive());
    }

    #[test]
    fn pseudo_closure_examples() {
        assert_eq!(
            pseudo_closure(&mt(4, &[(1, 2), (3, 4)])),
            mt(4, &[(1, 2), (3, 4), (1, 4)])
        );
        assert_eq!(
            pseudo_closure(&mt(2, &[(1, 1), (2, 2)])),
            mt(2, &[(1, 1), (2, 2), (1, 2)])
        );
        for k in 1..=4 {
            assert_eq!(pseudo_closure(&mt(k, &[])), mt(k, &[]));
        }
    }

    #[test]
    fn equivalence_examples() {
        let t = mt(4, &[(1, 2), (3, 4)]);
        assert!(equivalent(&t, &mt(4, &[(1, 2), (3, 4), (1, 4)])));
        assert!(equivalent(&t, &t));
        assert!(!equivalent(&mt(2, &[(1, 1)]), &mt(2, &[(2, 2)])));
        // Different arities never compare equivalent.
        assert!(!equivalent(&mt(1, &[]), &mt(2, &[])));
    }

    #[test]
    fn inequivalent_operators_act_differently() {
        let a = FiniteLanguage::letter("a").unwrap();
        let b = FiniteLanguage::letter("b").unwrap();
        let langs = [a, b];
        let left = act_tilde(&mt(2, &[(1, 1)]), &langs).unwrap();
        let right = act_tilde(&mt(2, &[(2, 2)]), &langs).unwrap();
        let w = |s: &str| Word::from_chars(s).unwrap();
        assert!(left.contains(&w("ab")) && left.contains(&w("b")) && left.len() == 2);
        assert!(right.contains(&w("ab")) && right.contains(&w("a")) && right.len() == 2);
        assert_ne!(left, right);
    }

    use crate::lang::Word;

    #[test]
    fn is_ptt_examples() {
        assert!(!is_ptt(&mt(4, &[(1, 2), (3, 4)])));
        for k in 1..=4 {
            assert!(is_ptt(&mt(k, &[])));
        }
        let t = mt(4, &[(1, 2), (3, 4)]);
        assert!(is_ptt(&pseudo_closure(&t)));
    }

    #[test]
    fn relation_json_round_trip() {
        let r = rel(3, &[(1, 1), (2, 2), (3, 3), (1, 3)]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"size":3,"pairs":[[1,1],[1,3],[2,2],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<Relation>(&json).unwrap(), r);
        assert!(serde_json::from_str::<Relation>(r#"{"size":2,"pairs":[[1,1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn closure_is_extensive_monotone_idempotent(arity in 1usize..6, seed in any::<u64>()) {
            let mut s = seed | 1;
            let mut rnd = move || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
            let mut big = Vec::new();
            let mut small = Vec::new();
            for x in 1..=arity {
                for y in x..=arity {
                    if rnd() % 2 == 0 {
                        big.push(p(x, y));
                        if rnd() % 2 == 0 {
                            small.push(p(x, y));
                        }
                    }
                }
            }
            let big = Multitilde::new(arity, big).unwrap();
            let small = Multitilde::new(arity, small).unwrap();
            let cb = pseudo_closure(&big);
            let cs = pseudo_closure(&small);
            // extensive
            prop_assert!(big.pairs().iter().all(|q| cb.contains(*q)));
            // monotone: small ⊆ big implies closure(small) ⊆ closure(big)
            prop_assert!(cs.pairs().iter().all(|q| cb.contains(*q)));
            // idempotent
            prop_assert_eq!(pseudo_closure(&cb), cb);
        }
    }
}
