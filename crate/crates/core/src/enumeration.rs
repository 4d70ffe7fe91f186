//! Generators for trees and interval-posets, refined counts, and
//! brute-force oracles over the rotation graph.
//!
//! The oracles never touch interval-posets: order is the reflexive
//! transitive closure of [`BinaryTree::tamari_covers`].

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::composition::{compose, m_compose};
use crate::error::{Error, Result};
use crate::interval_poset::IntervalPoset;
use crate::m_tamari::{is_m_binary, MAryTree};
use crate::poly::{Coefficient, Poly};
use crate::tree::BinaryTree;

/// Largest Catalan number accepted without forcing.
pub const DESK_SCALE_LIMIT: u64 = 100_000;

pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// All binary trees of size `n`, left subtree size ascending.
pub fn gen_binary_trees(n: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for size in 1..=n {
        let mut level = Vec::new();
        for k in 0..size {
            for l in &table[k] {
                for r in &table[size - 1 - k] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(n)
}

/// Compositions of `total` into `parts` non-negative parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Cartesian product of the given lists, last index varying fastest.
fn product<T: Clone>(lists: &[&[T]]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list.iter() {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All (m+1)-ary trees with `n` nodes.
pub fn gen_mary_trees(n: usize, m: usize) -> Vec<MAryTree> {
    let mut table: Vec<Vec<MAryTree>> = vec![vec![MAryTree::Empty]];
    for size in 1..=n {
        let mut level = Vec::new();
        for sizes in compositions(size - 1, m + 1) {
            let lists: Vec<&[MAryTree]> = sizes.iter().map(|&s| table[s].as_slice()).collect();
            level.extend(product(&lists).into_iter().map(MAryTree::Node));
        }
        table.push(level);
    }
    table.swap_remove(n)
}

/// Binary trees of size `nm` passing [`is_m_binary`].
pub fn gen_m_binary_trees(n: usize, m: usize) -> Vec<BinaryTree> {
    gen_binary_trees(n * m)
        .into_iter()
        .filter(|t| is_m_binary(t, m))
        .collect()
}

/// All interval-posets of size `n`, built by composing every pair of
/// smaller interval-posets around a new vertex.
pub fn gen_interval_posets(n: usize) -> Vec<IntervalPoset> {
    let mut table: Vec<Vec<IntervalPoset>> = vec![vec![IntervalPoset::empty()]];
    for size in 1..=n {
        let mut level = Vec::new();
        for k1 in 0..size {
            for i1 in &table[k1] {
                for i2 in &table[size - 1 - k1] {
                    level.extend(compose(i1, i2));
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(n)
}

/// All m-interval-posets of size `nm`, by m-composition over every split of
/// `n − 1` into `m + 1` parts.
pub fn gen_m_interval_posets(n: usize, m: usize) -> Result<Vec<IntervalPoset>> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    let mut table: Vec<Vec<IntervalPoset>> = vec![vec![IntervalPoset::empty()]];
    for size in 1..=n {
        let mut level = Vec::new();
        for sizes in compositions(size - 1, m + 1) {
            let lists: Vec<&[IntervalPoset]> = sizes.iter().map(|&s| table[s].as_slice()).collect();
            for operands in product(&lists) {
                level.extend(m_compose(&operands[0], &operands[1..])?);
            }
        }
        table.push(level);
    }
    Ok(table.swap_remove(n))
}

/// Rotation graph of all trees of one size.
struct RotationGraph {
    trees: Vec<BinaryTree>,
    index: HashMap<BinaryTree, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl RotationGraph {
    fn new(size: usize) -> Self {
        let trees = gen_binary_trees(size);
        let index: HashMap<_, _> = trees.iter().cloned().zip(0..).collect();
        let mut up = vec![Vec::new(); trees.len()];
        let mut down = vec![Vec::new(); trees.len()];
        for (i, t) in trees.iter().enumerate() {
            for cover in t.tamari_covers() {
                let j = index[&cover];
                up[i].push(j);
                down[j].push(i);
            }
        }
        Self {
            trees,
            index,
            up,
            down,
        }
    }

    /// Indices reachable from `start` along `edges`, `start` included.
    fn reach(&self, start: usize, edges: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; self.trees.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(i) = queue.pop_front() {
            out.push(i);
            for &j in &edges[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        out
    }
}

/// Entry point carrying the desk-scale policy.
#[derive(Clone, Copy, Debug, Default)]
pub struct Enumerator {
    force: bool,
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Skips the desk-scale guard.
    pub fn forced() -> Self {
        Self { force: true }
    }

    pub fn check_scale(&self, n: usize, m: usize) -> Result<()> {
        if !self.force && catalan(n * m) > BigUint::from(DESK_SCALE_LIMIT) {
            return Err(Error::ScaleGuard { n, m });
        }
        Ok(())
    }

    pub fn count_interval_posets(&self, n: usize) -> Result<usize> {
        self.check_scale(n, 1)?;
        Ok(gen_interval_posets(n).len())
    }

    pub fn count_m_interval_posets(&self, n: usize, m: usize) -> Result<usize> {
        self.check_scale(n, m)?;
        Ok(gen_m_interval_posets(n, m)?.len())
    }

    /// Pairs `T1 ≤ T2` of trees of size `n`.
    pub fn oracle_count_pairs(&self, n: usize) -> Result<usize> {
        self.check_scale(n, 1)?;
        let g = RotationGraph::new(n);
        Ok((0..g.trees.len()).map(|i| g.reach(i, &g.up).len()).sum())
    }

    /// Pairs `T1 ≤ T2` of m-binary trees of size `nm`.
    pub fn oracle_count_pairs_m(&self, n: usize, m: usize) -> Result<usize> {
        if m == 0 {
            return Err(Error::ZeroArity);
        }
        self.check_scale(n, m)?;
        let g = RotationGraph::new(n * m);
        let member: Vec<bool> = g.trees.iter().map(|t| is_m_binary(t, m)).collect();
        Ok((0..g.trees.len())
            .filter(|&i| member[i])
            .map(|i| g.reach(i, &g.up).into_iter().filter(|&j| member[j]).count())
            .sum())
    }

    fn oracle_reach(&self, tree: &BinaryTree, m: usize, upward: bool) -> Result<usize> {
        if m == 0 {
            return Err(Error::ZeroArity);
        }
        if m > 1 && !is_m_binary(tree, m) {
            return Err(Error::NotMBinary(m));
        }
        let size = tree.size();
        self.check_scale(size.div_ceil(m), m)?;
        let g = RotationGraph::new(size);
        let start = g.index[tree];
        let edges = if upward { &g.up } else { &g.down };
        Ok(g.reach(start, edges)
            .into_iter()
            .filter(|&j| m == 1 || is_m_binary(&g.trees[j], m))
            .count())
    }

    /// `|{T' : T' ≤ T}|`.
    pub fn oracle_smaller(&self, tree: &BinaryTree) -> Result<usize> {
        self.oracle_reach(tree, 1, false)
    }

    /// `|{T' : T' ≥ T}|`.
    pub fn oracle_greater(&self, tree: &BinaryTree) -> Result<usize> {
        self.oracle_reach(tree, 1, true)
    }

    /// m-binary trees `T' ≤ T`.
    pub fn oracle_smaller_m(&self, tree: &BinaryTree, m: usize) -> Result<usize> {
        self.oracle_reach(tree, m, false)
    }

    /// m-binary trees `T' ≥ T`.
    pub fn oracle_greater_m(&self, tree: &BinaryTree, m: usize) -> Result<usize> {
        self.oracle_reach(tree, m, true)
    }

    /// `Σ x^trees` over interval-posets of size `n`.
    pub fn refined_count<C: Coefficient>(&self, n: usize) -> Result<Poly<C>> {
        self.check_scale(n, 1)?;
        Ok(refine(&gen_interval_posets(n)))
    }

    /// `Σ x^trees` over m-interval-posets of size `nm`.
    pub fn refined_count_m<C: Coefficient>(&self, n: usize, m: usize) -> Result<Poly<C>> {
        self.check_scale(n, m)?;
        Ok(refine(&gen_m_interval_posets(n, m)?))
    }
}

fn refine<C: Coefficient>(posets: &[IntervalPoset]) -> Poly<C> {
    let mut p = Poly::zero();
    for ip in posets {
        p.add_term(crate::poly::Monomial::new(ip.stats().trees, 0, 0), C::one());
    }
    p
}

pub fn oracle_count_pairs(n: usize) -> Result<usize> {
    Enumerator::new().oracle_count_pairs(n)
}

pub fn oracle_count_pairs_m(n: usize, m: usize) -> Result<usize> {
    Enumerator::new().oracle_count_pairs_m(n, m)
}

pub fn oracle_smaller(tree: &BinaryTree) -> Result<usize> {
    Enumerator::new().oracle_smaller(tree)
}

pub fn oracle_greater(tree: &BinaryTree) -> Result<usize> {
    Enumerator::new().oracle_greater(tree)
}

pub fn oracle_smaller_m(tree: &BinaryTree, m: usize) -> Result<usize> {
    Enumerator::new().oracle_smaller_m(tree, m)
}

pub fn oracle_greater_m(tree: &BinaryTree, m: usize) -> Result<usize> {
    Enumerator::new().oracle_greater_m(tree, m)
}

pub fn refined_count<C: Coefficient>(n: usize) -> Result<Poly<C>> {
    Enumerator::new().refined_count(n)
}

pub fn refined_count_m<C: Coefficient>(n: usize, m: usize) -> Result<Poly<C>> {
    Enumerator::new().refined_count_m(n, m)
}
