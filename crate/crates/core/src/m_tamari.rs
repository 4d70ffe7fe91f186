//! m-ballot paths, m-Dyck paths, m-binary trees and (m+1)-ary trees.
//!
//! The m-Tamari lattice is realised inside the Tamari lattice of size `nm`
//! as the upper ideal of the `(n, m)`-comb. All order computations run on
//! the binary-tree form; `m` is always passed explicitly.

use std::fmt;

use serde_json::Value;

use crate::dyck::{parse_steps, steps_to_string, DyckPath};
use crate::error::{Error, Result};
use crate::forest::final_forest;
use crate::interval_poset::IntervalPoset;
use crate::tree::BinaryTree;

/// Lattice path from `(0, 0)` to `(nm, n)` staying above `y = x / m`.
/// `1` is a vertical step, `0` a horizontal one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MBallotPath {
    steps: Vec<bool>,
    m: usize,
}

impl MBallotPath {
    pub fn new(steps: Vec<bool>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroArity);
        }
        let ones = steps.iter().filter(|&&s| s).count();
        let zeros = steps.len() - ones;
        if zeros != m * ones {
            return Err(Error::BadStepCounts {
                ones,
                zeros,
                expected_zeros: m * ones,
            });
        }
        let (mut up, mut across) = (0, 0);
        for (i, &s) in steps.iter().enumerate() {
            if s {
                up += 1;
            } else {
                across += 1;
            }
            if across > m * up {
                return Err(Error::PrefixViolation(i + 1));
            }
        }
        Ok(Self { steps, m })
    }

    pub fn parse(word: &str, m: usize) -> Result<Self> {
        Self::new(parse_steps(word)?, m)
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of vertical steps.
    pub fn size(&self) -> usize {
        self.steps.len() / (self.m + 1)
    }

    /// Contacts with `y = x / m` after the starting point.
    pub fn touch_points(&self) -> usize {
        let (mut up, mut across, mut touches) = (0, 0, 0);
        for &s in &self.steps {
            if s {
                up += 1;
            } else {
                across += 1;
            }
            if across == self.m * up {
                touches += 1;
            }
        }
        touches
    }

    /// Each vertical step becomes `m` up steps, each horizontal step a down
    /// step.
    pub fn to_mdyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.m * self.size());
        for &s in &self.steps {
            if s {
                steps.extend(std::iter::repeat_n(true, self.m));
            } else {
                steps.push(false);
            }
        }
        DyckPath::from_steps_unchecked(steps)
    }

    pub fn from_mdyck(path: &DyckPath, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroArity);
        }
        if !is_m_dyck(path, m) {
            return Err(Error::NotMDyck(m));
        }
        let mut steps = Vec::with_capacity(path.len() / 2 + path.size() / m);
        let mut pending = 0;
        for &s in path.steps() {
            if s {
                pending += 1;
                if pending == m {
                    steps.push(true);
                    pending = 0;
                }
            } else {
                steps.push(false);
            }
        }
        Self::new(steps, m)
    }
}

impl fmt::Display for MBallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_to_string(&self.steps))
    }
}

/// Every maximal run of up steps has a length divisible by `m`.
pub fn is_m_dyck(path: &DyckPath, m: usize) -> bool {
    m > 0 && path.up_runs().iter().all(|r| r % m == 0)
}

/// The `(n, m)`-comb: binary tree of the Dyck word `(1^m 0^m)^n`.
pub fn comb(n: usize, m: usize) -> BinaryTree {
    let block: Vec<bool> = std::iter::repeat_n(true, m)
        .chain(std::iter::repeat_n(false, m))
        .collect();
    let steps = block.repeat(n);
    BinaryTree::from_dyck(&DyckPath::from_steps_unchecked(steps))
}

/// Size is a multiple of `m` and the final forest contains the chains
/// `im ◁ im-1 ◁ … ◁ im-(m-1)`.
pub fn is_m_binary(tree: &BinaryTree, m: usize) -> bool {
    if m == 0 || !tree.size().is_multiple_of(m) {
        return false;
    }
    let dec = final_forest(tree);
    m_chains(tree.size(), m).all(|pair| dec.binary_search(&pair).is_ok())
}

/// The covering pairs `(im - j, im - j - 1)` of the m-chains.
fn m_chains(size: usize, m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=size / m).flat_map(move |i| (0..m - 1).map(move |j| (i * m - j, i * m - j - 1)))
}

pub fn is_m_interval_poset(ip: &IntervalPoset, m: usize) -> bool {
    m > 0 && ip.size().is_multiple_of(m) && m_chains(ip.size(), m).all(|(a, b)| ip.precedes(a, b))
}

/// Grafts `sub` as the left child of the leftmost node; an empty tree is
/// replaced by `sub`.
fn graft_leftmost(tree: &BinaryTree, sub: BinaryTree) -> BinaryTree {
    match tree {
        BinaryTree::Empty => sub,
        BinaryTree::Node(l, r) => BinaryTree::node(graft_leftmost(l, sub), (**r).clone()),
    }
}

/// Removes the leftmost node, returning the tree without it and the right
/// subtree it carried.
fn pop_leftmost(tree: &BinaryTree) -> Option<(BinaryTree, BinaryTree)> {
    match tree {
        BinaryTree::Empty => None,
        BinaryTree::Node(l, r) => match &**l {
            BinaryTree::Empty => Some((BinaryTree::Empty, (**r).clone())),
            _ => {
                let (rest, carried) = pop_leftmost(l)?;
                Some((BinaryTree::node(rest, (**r).clone()), carried))
            }
        },
    }
}

/// Builds the m-binary tree with left part `left` and right parts
/// `rights = [T_{R_1}, …, T_{R_m}]`.
pub fn m_binary_assemble(left: &BinaryTree, rights: &[BinaryTree], m: usize) -> Result<BinaryTree> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    if rights.len() != m {
        return Err(Error::ArityMismatch {
            expected: m,
            found: rights.len(),
        });
    }
    if !is_m_binary(left, m) || !rights.iter().all(|t| is_m_binary(t, m)) {
        return Err(Error::NotMBinary(m));
    }
    // Right subtree hanging below root node i, built from the innermost.
    let mut below = rights[m - 1].clone();
    for part in rights[..m - 1].iter().rev() {
        below = graft_leftmost(part, BinaryTree::node(BinaryTree::Empty, below));
    }
    Ok(BinaryTree::node(left.clone(), below))
}

/// Splits an m-binary tree into `(T_L, [T_{R_1}, …, T_{R_m}])`.
pub fn m_binary_components(tree: &BinaryTree, m: usize) -> Result<(BinaryTree, Vec<BinaryTree>)> {
    if tree.is_empty() || !is_m_binary(tree, m) {
        return Err(Error::NotMBinary(m));
    }
    let BinaryTree::Node(left, right) = tree else {
        unreachable!()
    };
    let mut rights = Vec::with_capacity(m);
    let mut below = (**right).clone();
    for _ in 1..m {
        let (part, rest) = pop_leftmost(&below).ok_or(Error::NotMBinary(m))?;
        rights.push(part);
        below = rest;
    }
    rights.push(below);
    Ok(((**left).clone(), rights))
}

/// Planar tree whose nodes all have exactly `arity` (possibly empty)
/// children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MAryTree {
    Empty,
    Node(Vec<MAryTree>),
}

impl MAryTree {
    pub fn size(&self) -> usize {
        match self {
            MAryTree::Empty => 0,
            MAryTree::Node(children) => 1 + children.iter().map(MAryTree::size).sum::<usize>(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, MAryTree::Empty)
    }

    fn check_arity(&self, arity: usize) -> Result<()> {
        match self {
            MAryTree::Empty => Ok(()),
            MAryTree::Node(children) => {
                if children.len() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: children.len(),
                    });
                }
                children.iter().try_for_each(|c| c.check_arity(arity))
            }
        }
    }

    /// `null` or `[child_0, …, child_m]` with children ordered
    /// `T_L, T_{R_1}, …, T_{R_m}`.
    pub fn to_json(&self) -> Value {
        match self {
            MAryTree::Empty => Value::Null,
            MAryTree::Node(children) => {
                Value::Array(children.iter().map(MAryTree::to_json).collect())
            }
        }
    }

    pub fn from_json(value: &Value, m: usize) -> Result<Self> {
        let tree = Self::from_json_any(value)?;
        tree.check_arity(m + 1)?;
        Ok(tree)
    }

    fn from_json_any(value: &Value) -> Result<Self> {
        match value {
            Value::Null => Ok(MAryTree::Empty),
            Value::Array(items) => Ok(MAryTree::Node(
                items
                    .iter()
                    .map(Self::from_json_any)
                    .collect::<Result<_>>()?,
            )),
            other => Err(Error::Parse(format!("not a tree: {other}"))),
        }
    }
}

pub fn m_binary_to_mary(tree: &BinaryTree, m: usize) -> Result<MAryTree> {
    if tree.is_empty() {
        return if m == 0 {
            Err(Error::ZeroArity)
        } else {
            Ok(MAryTree::Empty)
        };
    }
    let (left, rights) = m_binary_components(tree, m)?;
    let mut children = Vec::with_capacity(m + 1);
    children.push(m_binary_to_mary(&left, m)?);
    for r in &rights {
        children.push(m_binary_to_mary(r, m)?);
    }
    Ok(MAryTree::Node(children))
}

pub fn mary_to_m_binary(tree: &MAryTree, m: usize) -> Result<BinaryTree> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    tree.check_arity(m + 1)?;
    to_binary(tree, m)
}

fn to_binary(tree: &MAryTree, m: usize) -> Result<BinaryTree> {
    match tree {
        MAryTree::Empty => Ok(BinaryTree::Empty),
        MAryTree::Node(children) => {
            let left = to_binary(&children[0], m)?;
            let rights = children[1..]
                .iter()
                .map(|c| to_binary(c, m))
                .collect::<Result<Vec<_>>>()?;
            m_binary_assemble(&left, &rights, m)
        }
    }
}

/// `W = W_L 1 W_{R_m} 0 W_{R_{m-1}} 0 … 0 W_{R_1} 0`.
pub fn mary_to_ballot(tree: &MAryTree, m: usize) -> Result<MBallotPath> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    tree.check_arity(m + 1)?;
    let mut steps = Vec::new();
    push_ballot(tree, &mut steps);
    MBallotPath::new(steps, m)
}

fn push_ballot(tree: &MAryTree, out: &mut Vec<bool>) {
    if let MAryTree::Node(children) = tree {
        push_ballot(&children[0], out);
        out.push(true);
        for child in children[1..].iter().rev() {
            push_ballot(child, out);
            out.push(false);
        }
    }
}

pub fn ballot_to_mary(path: &MBallotPath) -> Result<MAryTree> {
    let tree = BinaryTree::from_dyck(&path.to_mdyck());
    m_binary_to_mary(&tree, path.m())
}

/// All m-binary trees of size `nm` reachable as binary trees of the
/// m-Dyck words; convenience for the ballot ↔ tree direction.
pub fn ballot_to_m_binary(path: &MBallotPath) -> BinaryTree {
    BinaryTree::from_dyck(&path.to_mdyck())
}

pub fn m_binary_to_ballot(tree: &BinaryTree, m: usize) -> Result<MBallotPath> {
    if !is_m_binary(tree, m) {
        return Err(Error::NotMBinary(m));
    }
    MBallotPath::from_mdyck(&tree.to_dyck(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_validation() {
        assert_eq!(MBallotPath::parse("100", 2).unwrap().size(), 1);
        assert_eq!(MBallotPath::parse("010", 2), Err(Error::PrefixViolation(1)));
        assert!(matches!(
            MBallotPath::parse("10", 2),
            Err(Error::BadStepCounts { .. })
        ));
        assert_eq!(MBallotPath::parse("", 2).unwrap().size(), 0);
    }

    #[test]
    fn replacement_rule() {
        let p = MBallotPath::parse("100100", 2).unwrap();
        assert_eq!(p.to_mdyck().to_string(), "11001100");
        let back = MBallotPath::from_mdyck(&"11001100".parse().unwrap(), 2).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            MBallotPath::from_mdyck(&"1010".parse().unwrap(), 2),
            Err(Error::NotMDyck(2))
        );
    }

    #[test]
    fn m_dyck_runs() {
        assert!(is_m_dyck(&"1100".parse().unwrap(), 2));
        assert!(!is_m_dyck(&"1010".parse().unwrap(), 2));
    }

    #[test]
    fn combs() {
        assert_eq!(comb(1, 2), BinaryTree::right_comb(2));
        assert_eq!(comb(4, 1), BinaryTree::left_comb(4));
        assert_eq!(comb(3, 2).to_dyck().to_string(), "110011001100");
        assert!(is_m_binary(&comb(3, 2), 2));
        assert!(!is_m_binary(&BinaryTree::left_comb(2), 2));
    }

    #[test]
    fn comb_components() {
        for m in 1..=3 {
            for n in 1..=3 {
                let (left, rights) = m_binary_components(&comb(n, m), m).unwrap();
                assert_eq!(left, comb(n - 1, m));
                assert!(rights.iter().all(BinaryTree::is_empty));
            }
        }
    }

    #[test]
    fn touch_points() {
        assert_eq!(
            MBallotPath::parse("100100100", 2).unwrap().touch_points(),
            3
        );
        assert_eq!(MBallotPath::parse("110000", 2).unwrap().touch_points(), 1);
    }

    #[test]
    fn mary_json() {
        let t = MAryTree::Node(vec![MAryTree::Empty, MAryTree::Empty, MAryTree::Empty]);
        assert_eq!(t.to_json().to_string(), "[null,null,null]");
        assert_eq!(MAryTree::from_json(&t.to_json(), 2).unwrap(), t);
        assert!(matches!(
            MAryTree::from_json(&t.to_json(), 1),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn m_interval_posets() {
        assert!(!is_m_interval_poset(&IntervalPoset::whole_lattice(2), 2));
        let whole = IntervalPoset::from_tree_pair(&comb(3, 2), &BinaryTree::right_comb(6)).unwrap();
        assert!(is_m_interval_poset(&whole, 2));
        assert!(is_m_interval_poset(&IntervalPoset::empty(), 2));
    }
}
