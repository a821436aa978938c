//! Multitilde operators for language theory.
//!
//! A multitilde of arity `n` is a set of position pairs `(x, y)` with
//! `1 <= x <= y <= n`. Applied to `n` languages it unions the catenation
//! products in which the factors covered by one *free* (pairwise disjoint)
//! subset of its pairs are replaced by `{ε}`. This crate provides:
//!
//! * the operators themselves with partial and full composition
//!   ([`tilde`]);
//! * their action on finite languages through sets of boolean vectors
//!   ([`boolvec`], [`lang`]);
//! * semantic equivalence via a pseudotransitive closure, mirrored by
//!   transitive closure on relations ([`poset`]);
//! * exhaustive enumeration and counting of the inequivalent operators
//!   ([`enumeration`]);
//! * a parser for extended regular expressions, bounded evaluation, and the
//!   reduction of star-free expressions to a single operator ([`emtre`],
//!   [`star`]).
//!
//! ```
//! use multitilde::{act_tilde, FiniteLanguage, Multitilde, Pair};
//!
//! let t = Multitilde::new(2, [Pair::new(1, 2)?])?;
//! let langs = [FiniteLanguage::letter("a")?, FiniteLanguage::letter("b")?];
//! let result = act_tilde(&t, &langs)?;
//! assert_eq!(result.len(), 2); // {ab, ε}
//! # Ok::<(), multitilde::Error>(())
//! ```

pub mod boolvec;
pub mod emtre;
pub mod enumeration;
mod error;
pub mod lang;
pub mod poset;
pub mod star;
pub mod tilde;

pub use boolvec::{free_subsets, vectorize, BoolVector, BoolVectorSet, FreeSubset, MAX_VECTOR_LEN};
pub use emtre::{compile_star_free, eval_emtre, parse, CompiledTilde, Emtre};
pub use enumeration::{
    count_distinct_languages, count_ptt, count_ptt_parallel, enumerate_ptt, enumerate_ptt_parallel,
    verify_distinct_actions, CountReport, PttStream, MAX_ENUMERATION_ARITY,
};
pub use error::{Error, Result};
pub use lang::{
    act_bool, act_tilde, factor_tilde, prefix_tilde, subword_tilde, suffix_tilde, FiniteLanguage,
    Word,
};
pub use poset::{equivalent, is_ptt, phi, phi_inv, pseudo_closure, shift_diamond, Relation};
pub use star::{eval_star_tree, star_tree_normalize, StarTree};
pub use tilde::{dec_set, shift_set, Multitilde, Pair};
