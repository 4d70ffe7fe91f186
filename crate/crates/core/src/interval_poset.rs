//! Interval-posets: labelled posets on `1..=n` encoding Tamari intervals.
//!
//! A poset is an interval-poset when
//! - `a ◁ c` with `a < c` implies `b ◁ c` for every `a < b < c`, and
//! - `c ◁ a` with `a < c` implies `b ◁ a` for every `a < b < c`.
//!
//! The increasing relations form the initial forest of the upper tree and
//! the decreasing relations the final forest of the lower tree.

use std::fmt::{self, Write as _};

use serde_json::{json, Value};

use crate::enumeration::gen_binary_trees;
use crate::error::{Error, Result};
use crate::forest::{final_forest, forest_to_tree, initial_forest, ForestKind, Relation};
use crate::permutation::{linear_extensions, Permutation};
use crate::tree::BinaryTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalPoset {
    size: usize,
    /// Transitively closed, sorted, without reflexive pairs.
    relations: Vec<Relation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntervalStats {
    pub size: usize,
    /// Connected components of the decreasing relations.
    pub trees: usize,
    /// Vertices `x` with some `y > x` such that `y ◁ x`.
    pub rises_b: usize,
}

/// Dense closure of a relation set; `Err` carries a vertex on a cycle.
fn close(size: usize, relations: impl IntoIterator<Item = Relation>) -> Result<Vec<Vec<bool>>> {
    let mut m = vec![vec![false; size + 1]; size + 1];
    for (a, b) in relations {
        if a == 0 || b == 0 || a > size || b > size {
            return Err(Error::LabelOutOfRange(a, b, size));
        }
        if a == b {
            return Err(Error::CycleDetected(a));
        }
        m[a][b] = true;
    }
    for k in 1..=size {
        let through = m[k].clone();
        for row in m.iter_mut().skip(1) {
            if row[k] {
                for (cell, &t) in row.iter_mut().zip(&through) {
                    *cell |= t;
                }
            }
        }
    }
    if let Some(v) = (1..=size).find(|&v| m[v][v]) {
        return Err(Error::CycleDetected(v));
    }
    Ok(m)
}

fn matrix_to_pairs(m: &[Vec<bool>]) -> Vec<Relation> {
    m.iter()
        .enumerate()
        .flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &r)| r)
                .map(move |(b, _)| (a, b))
        })
        .collect()
}

fn check_axioms(m: &[Vec<bool>]) -> Result<()> {
    let size = m.len() - 1;
    for a in 1..=size {
        for c in a + 1..=size {
            if m[a][c] {
                if let Some(b) = (a + 1..c).find(|&b| !m[b][c]) {
                    return Err(Error::IncreasingAxiomViolated(a, b, c));
                }
            }
            if m[c][a] {
                if let Some(b) = (a + 1..c).find(|&b| !m[b][a]) {
                    return Err(Error::DecreasingAxiomViolated(a, b, c));
                }
            }
        }
    }
    Ok(())
}

fn hasse(pairs: &[Relation], size: usize) -> Vec<Relation> {
    let mut m = vec![vec![false; size + 1]; size + 1];
    for &(a, b) in pairs {
        m[a][b] = true;
    }
    pairs
        .iter()
        .copied()
        .filter(|&(a, b)| !(1..=size).any(|c| m[a][c] && m[c][b]))
        .collect()
}

impl IntervalPoset {
    /// Closes `relations` transitively and checks acyclicity and both axioms.
    pub fn new(size: usize, relations: impl IntoIterator<Item = Relation>) -> Result<Self> {
        let m = close(size, relations)?;
        check_axioms(&m)?;
        Ok(Self {
            size,
            relations: matrix_to_pairs(&m),
        })
    }

    /// Closure without the axiom check, for constructions that preserve the
    /// axioms by design.
    pub(crate) fn closed_unchecked(
        size: usize,
        relations: impl IntoIterator<Item = Relation>,
    ) -> Self {
        let m = close(size, relations).expect("construction produced a cycle");
        debug_assert_eq!(check_axioms(&m), Ok(()));
        Self {
            size,
            relations: matrix_to_pairs(&m),
        }
    }

    pub fn empty() -> Self {
        Self {
            size: 0,
            relations: Vec::new(),
        }
    }

    /// The one-vertex interval-poset `u`.
    pub fn unit() -> Self {
        Self::whole_lattice(1)
    }

    /// No relations: the interval from the left comb to the right comb.
    pub fn whole_lattice(size: usize) -> Self {
        Self {
            size,
            relations: Vec::new(),
        }
    }

    /// `dec(lower) ∪ inc(upper)`; fails unless `lower ≤ upper`.
    pub fn from_tree_pair(lower: &BinaryTree, upper: &BinaryTree) -> Result<Self> {
        let (n1, n2) = (lower.size(), upper.size());
        if n1 != n2 {
            return Err(Error::SizeMismatch(n1, n2));
        }
        let rel = final_forest(lower).into_iter().chain(initial_forest(upper));
        let m = close(n1, rel).map_err(|_| Error::NotComparable)?;
        check_axioms(&m).map_err(|_| Error::NotComparable)?;
        Ok(Self {
            size: n1,
            relations: matrix_to_pairs(&m),
        })
    }

    /// The singleton interval `[T, T]`.
    pub fn from_tree(tree: &BinaryTree) -> Self {
        Self::from_tree_pair(tree, tree).expect("a tree is comparable with itself")
    }

    /// The initial interval `[left comb, T]`, i.e. `inc(T)`.
    pub fn initial_interval(tree: &BinaryTree) -> Self {
        Self::closed_unchecked(tree.size(), initial_forest(tree))
    }

    /// The final interval `[T, right comb]`, i.e. `dec(T)`.
    pub fn final_interval(tree: &BinaryTree) -> Self {
        Self::closed_unchecked(tree.size(), final_forest(tree))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.relations.binary_search(&(a, b)).is_ok()
    }

    pub fn increasing_relations(&self) -> Vec<Relation> {
        self.relations
            .iter()
            .copied()
            .filter(|&(a, b)| a < b)
            .collect()
    }

    pub fn decreasing_relations(&self) -> Vec<Relation> {
        self.relations
            .iter()
            .copied()
            .filter(|&(a, b)| a > b)
            .collect()
    }

    pub fn hasse_increasing(&self) -> Vec<Relation> {
        hasse(&self.increasing_relations(), self.size)
    }

    pub fn hasse_decreasing(&self) -> Vec<Relation> {
        hasse(&self.decreasing_relations(), self.size)
    }

    /// Tree roots of the decreasing forest, ascending: vertices that precede
    /// no smaller vertex.
    pub fn decreasing_roots(&self) -> Vec<usize> {
        let mut is_root = vec![true; self.size + 1];
        for &(a, b) in &self.relations {
            if a > b {
                is_root[a] = false;
            }
        }
        (1..=self.size).filter(|&v| is_root[v]).collect()
    }

    pub(crate) fn lower_tree_or_empty(&self) -> BinaryTree {
        forest_to_tree(self.size, &self.decreasing_relations(), ForestKind::Final)
            .expect("decreasing relations of an interval-poset form a final forest")
    }

    pub(crate) fn upper_tree_or_empty(&self) -> BinaryTree {
        forest_to_tree(self.size, &self.increasing_relations(), ForestKind::Initial)
            .expect("increasing relations of an interval-poset form an initial forest")
    }

    pub fn lower_tree(&self) -> Result<BinaryTree> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self.lower_tree_or_empty())
    }

    pub fn upper_tree(&self) -> Result<BinaryTree> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        Ok(self.upper_tree_or_empty())
    }

    /// Intersection of intervals: the union of relations, or `None` when the
    /// union is contradictory.
    pub fn intersect(&self, other: &IntervalPoset) -> Result<Option<IntervalPoset>> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        let rel = self.relations.iter().chain(&other.relations).copied();
        Ok(Self::new(self.size, rel).ok())
    }

    /// Whether `inner ⊆ self` as intervals, i.e. every relation of `self`
    /// holds in `inner`.
    pub fn contains(&self, inner: &IntervalPoset) -> Result<bool> {
        if self.size != inner.size {
            return Err(Error::SizeMismatch(self.size, inner.size));
        }
        Ok(self.relations.iter().all(|&(a, b)| inner.precedes(a, b)))
    }

    fn with_relation(&self, pair: Relation) -> Result<IntervalPoset> {
        let rel = self.relations.iter().copied().chain(std::iter::once(pair));
        Self::new(self.size, rel)
    }

    /// Adds `j ◁ i` with `j > i`; moves the lower tree up.
    pub fn add_decreasing_relation(&self, j: usize, i: usize) -> Result<IntervalPoset> {
        if j <= i {
            return Err(Error::WrongOrientation(j, i));
        }
        self.with_relation((j, i))
    }

    /// Adds `i ◁ j` with `i < j`; moves the upper tree down.
    pub fn add_increasing_relation(&self, i: usize, j: usize) -> Result<IntervalPoset> {
        if i >= j {
            return Err(Error::WrongOrientation(i, j));
        }
        self.with_relation((i, j))
    }

    /// All trees `T` with `lower ≤ T ≤ upper`, by filtering every tree of
    /// the same size.
    pub fn trees_in_interval(&self) -> Vec<BinaryTree> {
        gen_binary_trees(self.size)
            .into_iter()
            .filter(|t| {
                let single = IntervalPoset::from_tree(t);
                self.contains(&single).expect("same size")
            })
            .collect()
    }

    pub fn linear_extensions(&self) -> Vec<Permutation> {
        linear_extensions(self.size, &self.relations)
    }

    pub fn stats(&self) -> IntervalStats {
        let mut parent: Vec<usize> = (0..=self.size).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut trees = self.size;
        let mut has_rise = vec![false; self.size + 1];
        for &(a, b) in &self.relations {
            if a > b {
                has_rise[b] = true;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    trees -= 1;
                }
            }
        }
        IntervalStats {
            size: self.size,
            trees,
            rises_b: has_rise.iter().filter(|&&h| h).count(),
        }
    }

    /// Shifts all labels by `offset`.
    pub(crate) fn shifted_relations(&self, offset: usize) -> impl Iterator<Item = Relation> + '_ {
        self.relations
            .iter()
            .map(move |&(a, b)| (a + offset, b + offset))
    }

    /// Restriction to the labels `lo..=hi`, relabelled to start at 1.
    pub fn restrict(&self, lo: usize, hi: usize) -> IntervalPoset {
        if lo > hi {
            return Self::empty();
        }
        let relations = self
            .relations
            .iter()
            .filter(|&&(a, b)| (lo..=hi).contains(&a) && (lo..=hi).contains(&b))
            .map(|&(a, b)| (a - lo + 1, b - lo + 1))
            .collect();
        IntervalPoset {
            size: hi - lo + 1,
            relations,
        }
    }

    /// Generating relations: Hasse edges of the increasing and decreasing
    /// parts.
    pub fn generating_relations(&self) -> Vec<Relation> {
        let mut out = self.hasse_increasing();
        out.extend(self.hasse_decreasing());
        out
    }

    /// `{"size": n, "relations": [[a, b], ...]}` with the generating relations.
    pub fn to_json(&self) -> Value {
        let rel: Vec<Value> = self
            .generating_relations()
            .into_iter()
            .map(|(a, b)| json!([a, b]))
            .collect();
        json!({ "size": self.size, "relations": rel })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let size = value
            .get("size")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"size\"".into()))? as usize;
        let rel = match value.get("relations") {
            None => Vec::new(),
            Some(v) => parse_relation_list(v)?,
        };
        Self::new(size, rel)
    }

    /// DOT digraph of the Hasse edges, increasing in blue, decreasing in red.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph interval_poset {\n");
        for v in 1..=self.size {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in self.hasse_increasing() {
            let _ = writeln!(out, "  {a} -> {b} [kind=increasing, color=blue];");
        }
        for (a, b) in self.hasse_decreasing() {
            let _ = writeln!(out, "  {a} -> {b} [kind=decreasing, color=red];");
        }
        out.push_str("}\n");
        out
    }
}

/// Parses `[[a, b], ...]`.
pub fn parse_relation_list(value: &Value) -> Result<Vec<Relation>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse("relations must be an array".into()))?;
    items
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([a, b]) => match (a.as_u64(), b.as_u64()) {
                (Some(a), Some(b)) => Ok((a as usize, b as usize)),
                _ => Err(Error::Parse(format!("bad relation {pair}"))),
            },
            _ => Err(Error::Parse(format!("bad relation {pair}"))),
        })
        .collect()
}

/// Tamari order through interval-posets: `T1 ≤ T2` iff `dec(T1) ∪ inc(T2)`
/// is an interval-poset.
pub fn tamari_leq(t1: &BinaryTree, t2: &BinaryTree) -> Result<bool> {
    match IntervalPoset::from_tree_pair(t1, t2) {
        Ok(_) => Ok(true),
        Err(Error::NotComparable) => Ok(false),
        Err(e) => Err(e),
    }
}

impl fmt::Display for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "interval-poset of size {} with relations [", self.size)?;
        for (i, (a, b)) in self.generating_relations().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a}, {b})")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::DyckPath;

    fn tree(word: &str) -> BinaryTree {
        BinaryTree::from_dyck(&word.parse::<DyckPath>().unwrap())
    }

    fn appendix() -> IntervalPoset {
        IntervalPoset::new(4, [(2, 1), (3, 1), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            IntervalPoset::new(3, [(1, 3)]),
            Err(Error::IncreasingAxiomViolated(1, 2, 3))
        );
        assert_eq!(
            IntervalPoset::new(3, [(3, 1)]),
            Err(Error::DecreasingAxiomViolated(1, 2, 3))
        );
        assert_eq!(
            IntervalPoset::new(2, [(1, 2), (2, 1)]),
            Err(Error::CycleDetected(1))
        );
        assert_eq!(
            IntervalPoset::new(2, [(1, 1)]),
            Err(Error::CycleDetected(1))
        );
        assert_eq!(
            IntervalPoset::new(2, [(1, 3)]),
            Err(Error::LabelOutOfRange(1, 3, 2))
        );
        assert!(IntervalPoset::new(0, []).is_ok());
    }

    #[test]
    fn appendix_endpoints() {
        let ip = appendix();
        assert_eq!(ip.lower_tree().unwrap().to_dyck().to_string(), "11010010");
        assert_eq!(ip.upper_tree().unwrap().to_dyck().to_string(), "11100100");
        assert_eq!(
            ip.lower_tree().unwrap().to_string(),
            "[[., [[., .], .]], .]"
        );
        assert_eq!(
            ip.upper_tree().unwrap().to_string(),
            "[., [[., [., .]], .]]"
        );
        assert_eq!(IntervalPoset::empty().lower_tree(), Err(Error::EmptyPoset));
    }

    #[test]
    fn appendix_contents() {
        let words: Vec<String> = appendix()
            .trees_in_interval()
            .iter()
            .map(|t| t.to_dyck().to_string())
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, ["11010010", "11010100", "11100010", "11100100"]);
    }

    #[test]
    fn tree_pairs() {
        let whole =
            IntervalPoset::from_tree_pair(&BinaryTree::left_comb(3), &BinaryTree::right_comb(3))
                .unwrap();
        assert_eq!(whole, IntervalPoset::whole_lattice(3));
        assert_eq!(
            IntervalPoset::from_tree_pair(&BinaryTree::right_comb(2), &BinaryTree::left_comb(2)),
            Err(Error::NotComparable)
        );
        assert_eq!(
            IntervalPoset::from_tree_pair(&BinaryTree::leaf(), &BinaryTree::left_comb(2)),
            Err(Error::SizeMismatch(1, 2))
        );
        let whole2 = IntervalPoset::whole_lattice(2);
        assert_eq!(whole2.lower_tree().unwrap(), BinaryTree::left_comb(2));
        assert_eq!(whole2.upper_tree().unwrap(), BinaryTree::right_comb(2));
    }

    #[test]
    fn incomparable_size_three() {
        let short_chain = tree("101100");
        for long_chain in [tree("110010"), tree("110100")] {
            assert!(!tamari_leq(&short_chain, &long_chain).unwrap());
            assert!(!tamari_leq(&long_chain, &short_chain).unwrap());
        }
        assert!(tamari_leq(&tree("110010"), &tree("110100")).unwrap());
        assert!(tamari_leq(&short_chain, &short_chain).unwrap());
    }

    #[test]
    fn intersections() {
        let ip = appendix();
        assert_eq!(ip.intersect(&ip).unwrap(), Some(ip.clone()));
        assert_eq!(
            IntervalPoset::whole_lattice(4).intersect(&ip).unwrap(),
            Some(ip.clone())
        );
        let a = IntervalPoset::from_tree(&BinaryTree::left_comb(3));
        let b = IntervalPoset::from_tree(&BinaryTree::right_comb(3));
        assert_eq!(a.intersect(&b).unwrap(), None);
        assert!(a.intersect(&IntervalPoset::unit()).is_err());
    }

    #[test]
    fn containment() {
        let ip = appendix();
        assert!(IntervalPoset::whole_lattice(4).contains(&ip).unwrap());
        assert!(ip.contains(&ip).unwrap());
        assert!(!ip.contains(&IntervalPoset::whole_lattice(4)).unwrap());
    }

    #[test]
    fn adding_relations() {
        let whole = IntervalPoset::whole_lattice(2);
        let up = whole.add_decreasing_relation(2, 1).unwrap();
        assert_eq!(up.lower_tree().unwrap(), BinaryTree::right_comb(2));
        assert!(whole.contains(&up).unwrap());
        let down = whole.add_increasing_relation(1, 2).unwrap();
        assert_eq!(down.upper_tree().unwrap(), BinaryTree::left_comb(2));
        assert!(whole.contains(&down).unwrap());
        assert_eq!(
            whole.add_decreasing_relation(1, 2),
            Err(Error::WrongOrientation(1, 2))
        );
        assert!(up.add_increasing_relation(1, 2).is_err());
    }

    #[test]
    fn statistics() {
        let whole = IntervalPoset::whole_lattice(5).stats();
        assert_eq!((whole.trees, whole.rises_b), (5, 0));
        let i1 = IntervalPoset::new(3, [(1, 2), (3, 2)]).unwrap().stats();
        let i2 = IntervalPoset::new(4, [(2, 3), (4, 3)]).unwrap().stats();
        assert_eq!((i1.trees, i1.size, i1.rises_b), (2, 3, 1));
        assert_eq!((i2.trees, i2.size, i2.rises_b), (3, 4, 1));
    }

    #[test]
    fn linear_extension_views() {
        assert_eq!(
            IntervalPoset::whole_lattice(4).linear_extensions().len(),
            24
        );
        let t = tree("110100");
        let single = IntervalPoset::from_tree(&t);
        assert_eq!(
            single.linear_extensions(),
            crate::permutation::sylvester_class(&t).unwrap()
        );
    }

    #[test]
    fn json_and_dot() {
        let ip = appendix();
        let v = ip.to_json();
        assert_eq!(IntervalPoset::from_json(&v).unwrap(), ip);
        let dot = ip.to_dot();
        assert!(dot.contains("2 -> 4 [kind=increasing, color=blue];"));
        assert!(dot.contains("3 -> 1 [kind=decreasing, color=red];"));
        assert!(!dot.contains("kind=increasing, color=red"));
        assert!(IntervalPoset::from_json(&json!({"relations": []})).is_err());
    }
}
