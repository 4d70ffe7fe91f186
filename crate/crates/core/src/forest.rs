//! Initial and final forests of a binary search tree.
//!
//! `x ◁ y` means that `x` lies in the subtree rooted at `y`. A relation is
//! the ordered pair `(x, y)`. Relation sets are kept transitively closed and
//! sorted.

use crate::error::{Error, Result};
use crate::tree::BinaryTree;

pub type Relation = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestKind {
    /// Increasing relations `a ◁ c` with `a < c`.
    Initial,
    /// Decreasing relations `b ◁ a` with `b > a`.
    Final,
}

impl ForestKind {
    fn name(self) -> &'static str {
        match self {
            ForestKind::Initial => "initial",
            ForestKind::Final => "final",
        }
    }
}

/// `inc(T)`: pairs `(a, c)` with `a < c` and `a` in the left subtree of `c`.
pub fn initial_forest(tree: &BinaryTree) -> Vec<Relation> {
    let mut out = Vec::new();
    collect(tree, 0, ForestKind::Initial, &mut out);
    out.sort_unstable();
    out
}

/// `dec(T)`: pairs `(b, a)` with `b > a` and `b` in the right subtree of `a`.
pub fn final_forest(tree: &BinaryTree) -> Vec<Relation> {
    let mut out = Vec::new();
    collect(tree, 0, ForestKind::Final, &mut out);
    out.sort_unstable();
    out
}

fn collect(tree: &BinaryTree, offset: usize, kind: ForestKind, out: &mut Vec<Relation>) {
    let BinaryTree::Node(l, r) = tree else {
        return;
    };
    let k = offset + l.size() + 1;
    match kind {
        ForestKind::Initial => out.extend((offset + 1..k).map(|a| (a, k))),
        ForestKind::Final => out.extend((k + 1..=k + r.size()).map(|b| (b, k))),
    }
    collect(l, offset, kind, out);
    collect(r, k, kind, out);
}

/// Whether `relations`, a closed acyclic relation set on `1..=n`, is the
/// initial (resp. final) forest of some binary tree.
pub fn forest_check(n: usize, relations: &[Relation], kind: ForestKind) -> bool {
    let mut matrix = vec![vec![false; n + 1]; n + 1];
    for &(a, b) in relations {
        if a == 0 || b == 0 || a > n || b > n {
            return false;
        }
        matrix[a][b] = true;
    }
    relations.iter().all(|&(x, y)| match kind {
        ForestKind::Initial => x < y && (x + 1..y).all(|b| matrix[b][y]),
        ForestKind::Final => x > y && (y + 1..x).all(|b| matrix[b][y]),
    })
}

/// Inverse of [`initial_forest`] / [`final_forest`].
pub fn forest_to_tree(n: usize, relations: &[Relation], kind: ForestKind) -> Result<BinaryTree> {
    if !forest_check(n, relations, kind) {
        return Err(Error::NotAForest(kind.name()));
    }
    let mut matrix = vec![vec![false; n + 2]; n + 2];
    for &(a, b) in relations {
        matrix[a][b] = true;
    }
    let tree = build(&matrix, 1, n, kind);
    let rebuilt = match kind {
        ForestKind::Initial => initial_forest(&tree),
        ForestKind::Final => final_forest(&tree),
    };
    let mut sorted = relations.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if rebuilt != sorted {
        return Err(Error::NotAForest(kind.name()));
    }
    Ok(tree)
}

fn build(matrix: &[Vec<bool>], lo: usize, hi: usize, kind: ForestKind) -> BinaryTree {
    if lo > hi {
        return BinaryTree::Empty;
    }
    let root = match kind {
        // The root is preceded by everything on its left.
        ForestKind::Initial => (lo..=hi)
            .rev()
            .find(|&k| (lo..k).all(|i| matrix[i][k]))
            .expect("k = lo always qualifies"),
        // The root is preceded by everything on its right.
        ForestKind::Final => (lo..=hi)
            .find(|&k| (k + 1..=hi).all(|j| matrix[j][k]))
            .expect("k = hi always qualifies"),
    };
    BinaryTree::node(
        build(matrix, lo, root - 1, kind),
        build(matrix, root + 1, hi, kind),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_tree() -> BinaryTree {
        // 3(1(∅, 2), 4)
        BinaryTree::node(
            BinaryTree::node(BinaryTree::Empty, BinaryTree::leaf()),
            BinaryTree::leaf(),
        )
    }

    #[test]
    fn forests_of_example() {
        let t = example_tree();
        assert_eq!(initial_forest(&t), vec![(1, 3), (2, 3)]);
        assert_eq!(final_forest(&t), vec![(2, 1), (4, 3)]);
        assert!(initial_forest(&BinaryTree::leaf()).is_empty());
        assert!(final_forest(&BinaryTree::leaf()).is_empty());
    }

    #[test]
    fn left_comb_forests() {
        let t = BinaryTree::left_comb(4);
        let inc = initial_forest(&t);
        assert_eq!(inc.len(), 6);
        assert!(inc.contains(&(1, 4)) && inc.contains(&(1, 2)));
        assert!(final_forest(&t).is_empty());
    }

    #[test]
    fn checks() {
        assert!(!forest_check(3, &[(1, 3)], ForestKind::Initial));
        assert!(forest_check(3, &[(2, 3), (1, 3)], ForestKind::Initial));
        assert!(forest_check(3, &[], ForestKind::Initial));
        assert!(forest_check(3, &[], ForestKind::Final));
        assert!(!forest_check(3, &[(3, 1)], ForestKind::Final));
    }

    #[test]
    fn empty_relations_give_combs() {
        assert_eq!(
            forest_to_tree(4, &[], ForestKind::Initial).unwrap(),
            BinaryTree::right_comb(4)
        );
        assert_eq!(
            forest_to_tree(4, &[], ForestKind::Final).unwrap(),
            BinaryTree::left_comb(4)
        );
        assert_eq!(
            forest_to_tree(3, &[(1, 3)], ForestKind::Initial),
            Err(Error::NotAForest("initial"))
        );
    }

    #[test]
    fn non_closed_input_rejected() {
        // (1,2),(2,3) satisfies the local check but is not closed.
        assert!(forest_to_tree(3, &[(1, 2), (2, 3)], ForestKind::Initial).is_err());
    }
}
