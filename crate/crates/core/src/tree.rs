//! Planar binary trees and their bijection with Dyck paths.
//!
//! Nodes carry no labels. Whenever a node has to be addressed it is
//! identified by its in-order index `1..=n`, which is also its label in the
//! binary search tree labelling of the shape.

use std::fmt;

use serde_json::Value;

use crate::dyck::DyckPath;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum BinaryTree {
    #[default]
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    /// Left comb: every node is the left child of its parent. Minimal element
    /// of the Tamari lattice.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(acc, BinaryTree::Empty)
        })
    }

    /// Right comb: maximal element of the Tamari lattice.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(BinaryTree::Empty, acc)
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, _) => Some(l),
        }
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(_, r) => Some(r),
        }
    }

    /// In-order label of the root.
    pub fn root_label(&self) -> Option<usize> {
        self.left().map(|l| l.size() + 1)
    }

    /// Number of nodes on the leftmost branch (root included).
    pub fn left_branch_len(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, _) => 1 + l.left_branch_len(),
        }
    }

    /// Number of nodes on the rightmost branch (root included).
    pub fn right_branch_len(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(_, r) => 1 + r.right_branch_len(),
        }
    }

    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => Self::node(r.mirror(), l.mirror()),
        }
    }

    /// `D = D(L) 1 D(R) 0`.
    pub fn to_dyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.size());
        self.push_steps(&mut steps);
        DyckPath::from_steps_unchecked(steps)
    }

    fn push_steps(&self, out: &mut Vec<bool>) {
        if let BinaryTree::Node(l, r) = self {
            l.push_steps(out);
            out.push(true);
            r.push_steps(out);
            out.push(false);
        }
    }

    /// Inverse of [`BinaryTree::to_dyck`]: the last up step that starts from
    /// the axis splits the word as `D₁ 1 D₂ 0`.
    pub fn from_dyck(path: &DyckPath) -> Self {
        Self::from_steps(path.steps())
    }

    fn from_steps(steps: &[bool]) -> Self {
        if steps.is_empty() {
            return BinaryTree::Empty;
        }
        // Last return to the axis before the end.
        let mut height = 0i64;
        let mut split = 0;
        for (i, &s) in steps[..steps.len() - 1].iter().enumerate() {
            height += if s { 1 } else { -1 };
            if height == 0 {
                split = i + 1;
            }
        }
        let left = Self::from_steps(&steps[..split]);
        let right = Self::from_steps(&steps[split + 1..steps.len() - 1]);
        Self::node(left, right)
    }

    /// Subtree whose root has in-order label `label`, with the label offset
    /// of that subtree.
    pub fn subtree_at(&self, label: usize) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, r) => {
                let k = l.size() + 1;
                match label.cmp(&k) {
                    std::cmp::Ordering::Less => l.subtree_at(label),
                    std::cmp::Ordering::Equal => Some(self),
                    std::cmp::Ordering::Greater => r.subtree_at(label - k),
                }
            }
        }
    }

    /// Right rotation at the node with in-order label `label`:
    /// `y(x(A, B), C) -> x(A, y(B, C))`.
    pub fn right_rotate(&self, label: usize) -> Result<Self> {
        let size = self.size();
        if label == 0 || label > size {
            return Err(Error::NoSuchNode { label, size });
        }
        self.rotate_at(label)
    }

    fn rotate_at(&self, label: usize) -> Result<Self> {
        let BinaryTree::Node(l, r) = self else {
            unreachable!("label checked against size");
        };
        let k = l.size() + 1;
        match label.cmp(&k) {
            std::cmp::Ordering::Less => Ok(Self::node(l.rotate_at(label)?, (**r).clone())),
            std::cmp::Ordering::Greater => Ok(Self::node((**l).clone(), r.rotate_at(label - k)?)),
            std::cmp::Ordering::Equal => match &**l {
                BinaryTree::Empty => Err(Error::NoLeftChild(label)),
                BinaryTree::Node(a, b) => Ok(Self::node(
                    (**a).clone(),
                    Self::node((**b).clone(), (**r).clone()),
                )),
            },
        }
    }

    /// Upper covers in the Tamari lattice: every right rotation that applies.
    pub fn tamari_covers(&self) -> Vec<BinaryTree> {
        (1..=self.size())
            .filter_map(|label| self.right_rotate(label).ok())
            .collect()
    }

    /// Parses the bracket notation `.` / `[left, right]`.
    pub fn from_bracket_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_bracket(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input at {pos}")));
        }
        Ok(tree)
    }

    /// JSON form: `null` for the empty tree, `[left, right]` for a node.
    pub fn to_json(&self) -> Value {
        match self {
            BinaryTree::Empty => Value::Null,
            BinaryTree::Node(l, r) => Value::Array(vec![l.to_json(), r.to_json()]),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::Null => Ok(BinaryTree::Empty),
            Value::Array(items) if items.len() == 2 => Ok(Self::node(
                Self::from_json(&items[0])?,
                Self::from_json(&items[1])?,
            )),
            other => Err(Error::Parse(format!("not a binary tree: {other}"))),
        }
    }
}

fn parse_bracket(chars: &[char], pos: &mut usize) -> Result<BinaryTree> {
    match chars.get(*pos) {
        Some('.') => {
            *pos += 1;
            Ok(BinaryTree::Empty)
        }
        Some('[') => {
            *pos += 1;
            let left = parse_bracket(chars, pos)?;
            expect(chars, pos, ',')?;
            let right = parse_bracket(chars, pos)?;
            expect(chars, pos, ']')?;
            Ok(BinaryTree::node(left, right))
        }
        _ => Err(Error::Parse(format!("unexpected input at {pos}"))),
    }
}

fn expect(chars: &[char], pos: &mut usize, c: char) -> Result<()> {
    if chars.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse(format!("expected {c:?} at {pos}")))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "[{l}, {r}]"),
        }
    }
}

impl From<&DyckPath> for BinaryTree {
    fn from(path: &DyckPath) -> Self {
        BinaryTree::from_dyck(path)
    }
}
