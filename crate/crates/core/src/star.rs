//! Operator trees mixing multitildes with a unary Kleene star.
//!
//! These trees close the multitilde operators under `star`, which is what it
//! takes to reach every regular language from letter and empty-language
//! leaves. Two rewrites normalize a tree: nested stars collapse (`L**` and
//! `L*` denote the same language) and a tilde directly under a tilde is
//! folded into one operator via composition.

use crate::error::{Error, Result};
use crate::lang::{act_tilde, FiniteLanguage};
use crate::tilde::Multitilde;

/// An operator tree: numbered input slots, stars, and multitilde nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarTree {
    /// The 1-based index of an input slot.
    Leaf(usize),
    Star(Box<StarTree>),
    Tilde(Multitilde, Vec<StarTree>),
}

impl StarTree {
    pub fn leaf(index: usize) -> StarTree {
        StarTree::Leaf(index)
    }

    pub fn star(child: StarTree) -> StarTree {
        StarTree::Star(Box::new(child))
    }

    fn count_leaves(&self) -> usize {
        match self {
            StarTree::Leaf(_) => 1,
            StarTree::Star(c) => c.count_leaves(),
            StarTree::Tilde(_, children) => children.iter().map(StarTree::count_leaves).sum(),
        }
    }
}

/// Collapses `star(star(x))` to `star(x)` and folds every tilde-under-tilde
/// into a single composed operator, bottom-up. Idempotent, and evaluation
/// is unchanged at every bound.
pub fn star_tree_normalize(tree: &StarTree) -> Result<StarTree> {
    match tree {
        StarTree::Leaf(i) => Ok(StarTree::Leaf(*i)),
        StarTree::Star(child) => {
            let child = star_tree_normalize(child)?;
            if matches!(child, StarTree::Star(_)) {
                Ok(child)
            } else {
                Ok(StarTree::star(child))
            }
        }
        StarTree::Tilde(tilde, children) => {
            if children.len() != tilde.arity() {
                return Err(Error::ArityMismatch {
                    expected: tilde.arity(),
                    found: children.len(),
                });
            }
            let mut acc = tilde.clone();
            let mut flat = Vec::with_capacity(children.len());
            let mut slot = 1;
            for child in children {
                match star_tree_normalize(child)? {
                    StarTree::Tilde(inner, grandchildren) => {
                        acc = acc.compose_partial(slot, &inner)?;
                        slot += grandchildren.len();
                        flat.extend(grandchildren);
                    }
                    other => {
                        flat.push(other);
                        slot += 1;
                    }
                }
            }
            Ok(StarTree::Tilde(acc, flat))
        }
    }
}

/// Evaluates the tree on the given slot languages, keeping exactly the
/// words of length at most `max_len`: tilde nodes act on their children,
/// star nodes take the bounded Kleene closure.
pub fn eval_star_tree(
    tree: &StarTree,
    leaves: &[FiniteLanguage],
    max_len: usize,
) -> Result<FiniteLanguage> {
    let found = tree.count_leaves();
    if found != leaves.len() {
        return Err(Error::LeafCountMismatch {
            expected: leaves.len(),
            found,
        });
    }
    eval(tree, leaves, max_len)
}

fn eval(tree: &StarTree, leaves: &[FiniteLanguage], max_len: usize) -> Result<FiniteLanguage> {
    match tree {
        StarTree::Leaf(i) => {
            if *i < 1 || *i > leaves.len() {
                return Err(Error::LeafIndexOutOfRange {
                    index: *i,
                    max: leaves.len(),
                });
            }
            Ok(leaves[i - 1].truncate(max_len))
        }
        StarTree::Star(child) => Ok(eval(child, leaves, max_len)?.star_bounded(max_len)),
        StarTree::Tilde(tilde, children) => {
            let langs: Vec<FiniteLanguage> = children
                .iter()
                .map(|c| eval(c, leaves, max_len))
                .collect::<Result<_>>()?;
            Ok(act_tilde(tilde, &langs)?.truncate(max_len))
        }
    }
}
