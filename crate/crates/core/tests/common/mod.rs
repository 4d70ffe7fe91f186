//! Helpers shared by the integration suites. Order relations here are
//! computed from rotations alone, independently of interval-posets.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamari::{BinaryTree, DyckPath, IntervalPoset};

/// Seed for every randomized test, overridable through `TAMARI_TEST_SEED`.
pub fn seed() -> u64 {
    std::env::var("TAMARI_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5EED_7A3A)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

pub fn proptest_config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> BinaryTree {
    if n == 0 {
        return BinaryTree::Empty;
    }
    let k = rng.gen_range(0..n);
    BinaryTree::node(random_tree(rng, k), random_tree(rng, n - 1 - k))
}

pub fn tree_strategy(max: usize) -> impl Strategy<Value = BinaryTree> {
    (0..=max, any::<u64>()).prop_map(|(n, s)| random_tree(&mut ChaCha8Rng::seed_from_u64(s), n))
}

pub fn dyck(word: &str) -> DyckPath {
    word.parse().unwrap()
}

pub fn tree(word: &str) -> BinaryTree {
    BinaryTree::from_dyck(&dyck(word))
}

fn closure(
    start: &BinaryTree,
    step: impl Fn(&BinaryTree) -> Vec<BinaryTree>,
) -> BTreeSet<BinaryTree> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        for s in step(&t) {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

/// `{T' : T ≤ T'}` by repeated right rotation.
pub fn up_set(t: &BinaryTree) -> BTreeSet<BinaryTree> {
    closure(t, BinaryTree::tamari_covers)
}

/// `{T' : T' ≤ T}` by repeated left rotation, realised as right rotation
/// of mirrored trees.
pub fn down_set(t: &BinaryTree) -> BTreeSet<BinaryTree> {
    closure(&t.mirror(), BinaryTree::tamari_covers)
        .into_iter()
        .map(|s| s.mirror())
        .collect()
}

/// Every `(T1, T2)` with `T1 ≤ T2`, both of size `n`.
pub fn comparable_pairs(n: usize) -> Vec<(BinaryTree, BinaryTree)> {
    tamari::gen_binary_trees(n)
        .into_iter()
        .flat_map(|t| {
            let ups = up_set(&t);
            ups.into_iter().map(move |u| (t.clone(), u))
        })
        .collect()
}

/// Intervals of size `n` obtained from comparable pairs of trees.
pub fn intervals_from_pairs(n: usize) -> BTreeSet<IntervalPoset> {
    comparable_pairs(n)
        .iter()
        .map(|(a, b)| IntervalPoset::from_tree_pair(a, b).unwrap())
        .collect()
}

pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}
