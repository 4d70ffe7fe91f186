//! Permutations in one-line notation, linear extensions and sylvester
//! classes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::forest::{final_forest, initial_forest, Relation};
use crate::tree::BinaryTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("not a permutation: {values:?}")));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position of each value, indexed by value.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Pairs `(a, b)` with `a < b` and `b` written before `a`.
    pub fn coinversions(&self) -> BTreeSet<(usize, usize)> {
        let pos = self.positions();
        let n = self.0.len();
        let mut out = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if pos[b] < pos[a] {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    /// Right weak order: inclusion of coinversion sets.
    pub fn weak_leq(&self, other: &Permutation) -> bool {
        self.len() == other.len() && self.coinversions().is_subset(&other.coinversions())
    }

    /// Whether every relation `a ◁ b` has `a` written before `b`.
    pub fn is_extension_of(&self, relations: &[Relation]) -> bool {
        let pos = self.positions();
        relations.iter().all(|&(a, b)| pos[a] < pos[b])
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&v| v > 9) {
            " "
        } else {
            ""
        };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// All linear extensions of the poset on `1..=n` generated by `relations`,
/// in lexicographic order.
pub fn linear_extensions(n: usize, relations: &[Relation]) -> Vec<Permutation> {
    let mut preds = vec![Vec::new(); n + 1];
    for &(a, b) in relations {
        preds[b].push(a);
    }
    let mut placed = vec![false; n + 1];
    let mut current = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend(n, &preds, &mut placed, &mut current, &mut out);
    out
}

fn extend(
    n: usize,
    preds: &[Vec<usize>],
    placed: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    if current.len() == n {
        out.push(Permutation(current.clone()));
        return;
    }
    for v in 1..=n {
        if !placed[v] && preds[v].iter().all(|&p| placed[p]) {
            placed[v] = true;
            current.push(v);
            extend(n, preds, placed, current, out);
            current.pop();
            placed[v] = false;
        }
    }
}

/// Relations of the binary search tree poset: `x ◁ y` when `x` is a
/// descendant of `y`.
pub fn bst_relations(tree: &BinaryTree) -> Vec<Relation> {
    let mut rel = initial_forest(tree);
    rel.extend(final_forest(tree));
    rel.sort_unstable();
    rel
}

/// Linear extensions of the binary search tree of `tree`.
pub fn sylvester_class(tree: &BinaryTree) -> Result<Vec<Permutation>> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    Ok(linear_extensions(tree.size(), &bst_relations(tree)))
}

/// `α_T`: post-order reading (left, right, root) of the BST labels.
pub fn min_linear_extension(tree: &BinaryTree) -> Result<Permutation> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    let mut out = Vec::with_capacity(tree.size());
    post_order(tree, 0, false, &mut out);
    Ok(Permutation(out))
}

/// `ω_T`: post-order reading with the right subtree first.
pub fn max_linear_extension(tree: &BinaryTree) -> Result<Permutation> {
    if tree.is_empty() {
        return Err(Error::EmptyTree);
    }
    let mut out = Vec::with_capacity(tree.size());
    post_order(tree, 0, true, &mut out);
    Ok(Permutation(out))
}

fn post_order(tree: &BinaryTree, offset: usize, right_first: bool, out: &mut Vec<usize>) {
    let BinaryTree::Node(l, r) = tree else {
        return;
    };
    let k = offset + l.size() + 1;
    if right_first {
        post_order(r, k, right_first, out);
        post_order(l, offset, right_first, out);
    } else {
        post_order(l, offset, right_first, out);
        post_order(r, k, right_first, out);
    }
    out.push(k);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_tree() -> BinaryTree {
        BinaryTree::node(
            BinaryTree::node(BinaryTree::Empty, BinaryTree::leaf()),
            BinaryTree::leaf(),
        )
    }

    fn perm(s: &str) -> Permutation {
        Permutation::new(
            s.chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn extreme_extensions_of_example() {
        let t = example_tree();
        assert_eq!(min_linear_extension(&t).unwrap(), perm("2143"));
        assert_eq!(max_linear_extension(&t).unwrap(), perm("4213"));
        assert_eq!(
            min_linear_extension(&BinaryTree::leaf()).unwrap(),
            perm("1")
        );
        assert_eq!(
            max_linear_extension(&BinaryTree::leaf()).unwrap(),
            perm("1")
        );
        assert_eq!(
            min_linear_extension(&BinaryTree::Empty),
            Err(Error::EmptyTree)
        );
    }

    #[test]
    fn sylvester_class_of_example() {
        let class: BTreeSet<_> = sylvester_class(&example_tree())
            .unwrap()
            .into_iter()
            .collect();
        let expected: BTreeSet<_> = ["4213", "2413", "2143"].iter().map(|s| perm(s)).collect();
        assert_eq!(class, expected);
        assert_eq!(sylvester_class(&BinaryTree::left_comb(5)).unwrap().len(), 1);
        assert_eq!(sylvester_class(&BinaryTree::Empty), Err(Error::EmptyTree));
    }

    #[test]
    fn coinversions_and_weak_order() {
        assert_eq!(perm("4213").coinversions().len(), 4);
        assert!(perm("2143").weak_leq(&perm("4213")));
        assert!(!perm("4213").weak_leq(&perm("2143")));
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn free_poset_extensions() {
        assert_eq!(linear_extensions(4, &[]).len(), 24);
        assert_eq!(linear_extensions(0, &[]).len(), 1);
    }
}
