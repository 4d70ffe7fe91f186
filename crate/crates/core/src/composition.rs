//! Left and right products of interval-posets, the composition `B`, and the
//! `m`-composition, with their unique decompositions.

use crate::error::{Error, Result};
use crate::interval_poset::IntervalPoset;
use crate::m_tamari::is_m_interval_poset;

/// A formal sum of distinct interval-posets of equal size, kept in
/// generation order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntervalSum {
    terms: Vec<IntervalPoset>,
}

impl IntervalSum {
    pub fn new(terms: Vec<IntervalPoset>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].size() == w[1].size()));
        debug_assert!({
            let mut sorted = terms.clone();
            sorted.sort();
            sorted.dedup();
            sorted.len() == terms.len()
        });
        Self { terms }
    }

    pub fn single(term: IntervalPoset) -> Self {
        Self { terms: vec![term] }
    }

    pub fn terms(&self) -> &[IntervalPoset] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntervalPoset> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> Vec<IntervalPoset> {
        self.terms
    }
}

impl IntoIterator for IntervalSum {
    type Item = IntervalPoset;
    type IntoIter = std::vec::IntoIter<IntervalPoset>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a> IntoIterator for &'a IntervalSum {
    type Item = &'a IntervalPoset;
    type IntoIter = std::slice::Iter<'a, IntervalPoset>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// `I1 ◁ I2`: shifted concatenation plus `y ◁ α` for every `y` of `I1`,
/// where `α` is the smallest label of the shifted `I2`. With `I2` empty
/// there is no pivot and `I1` is returned unchanged.
pub fn left_product(i1: &IntervalPoset, i2: &IntervalPoset) -> IntervalPoset {
    if i2.is_empty() {
        return i1.clone();
    }
    let k1 = i1.size();
    let alpha = k1 + 1;
    let rel = i1
        .relations()
        .iter()
        .copied()
        .chain(i2.shifted_relations(k1))
        .chain((1..=k1).map(|y| (y, alpha)));
    IntervalPoset::closed_unchecked(k1 + i2.size(), rel)
}

/// Shifted concatenation with the decreasing relations `x_j ◁ ω` added for
/// `j` in each prefix of the decreasing roots of `I2`, prefix lengths taken
/// from `counts`.
fn right_terms(
    i1: &IntervalPoset,
    i2: &IntervalPoset,
    counts: std::ops::RangeInclusive<usize>,
) -> IntervalSum {
    let k1 = i1.size();
    let omega = k1;
    let roots: Vec<usize> = i2.decreasing_roots().into_iter().map(|x| x + k1).collect();
    let size = k1 + i2.size();
    let terms = counts
        .map(|i| {
            let rel = i1
                .relations()
                .iter()
                .copied()
                .chain(i2.shifted_relations(k1))
                .chain(roots[..i].iter().map(|&x| (x, omega)));
            IntervalPoset::closed_unchecked(size, rel)
        })
        .collect();
    IntervalSum::new(terms)
}

/// `I1 ▷ I2`: `trees(I2) + 1` terms `P_0..P_m`. With `I1` empty there is no
/// `ω` and the single term is `I2`.
pub fn right_product(i1: &IntervalPoset, i2: &IntervalPoset) -> IntervalSum {
    if i1.is_empty() {
        return IntervalSum::single(i2.clone());
    }
    let m = i2.stats().trees;
    right_terms(i1, i2, 0..=m)
}

/// `I1 ▷/x I2`: the right product without the term that adds no relation.
pub fn right_product_x(i1: &IntervalPoset, i2: &IntervalPoset) -> Result<IntervalSum> {
    if i1.is_empty() || i2.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let k = i2.stats().trees;
    Ok(right_terms(i1, i2, 1..=k))
}

/// `B(I1, I2) = I1 ◁ u ▷ I2`.
pub fn compose(i1: &IntervalPoset, i2: &IntervalPoset) -> IntervalSum {
    let pivot = left_product(i1, &IntervalPoset::unit());
    right_product(&pivot, i2)
}

/// The unique pair `(I1, I2)` with `I ∈ B(I1, I2)`.
pub fn decompose(ip: &IntervalPoset) -> Result<(IntervalPoset, IntervalPoset)> {
    if ip.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let k = pivot_label(ip);
    Ok((ip.restrict(1, k - 1), ip.restrict(k + 1, ip.size())))
}

/// Largest label `k` such that `i ◁ k` for all `i < k`.
fn pivot_label(ip: &IntervalPoset) -> usize {
    (1..=ip.size())
        .rev()
        .find(|&k| (1..k).all(|i| ip.precedes(i, k)))
        .expect("label 1 always qualifies")
}

fn extend_left(sum: IntervalSum, right: &IntervalPoset) -> IntervalSum {
    IntervalSum::new(sum.iter().map(|p| left_product(p, right)).collect())
}

/// `BR(I_1, …, I_k)`: `u ▷ I_k` for a single operand, otherwise
/// `u ▷/x (BR(I_2, …, I_k) ◁ I_1)`.
fn right_branch(parts: &[IntervalPoset]) -> IntervalSum {
    let unit = IntervalPoset::unit();
    match parts {
        [] => IntervalSum::single(unit),
        [last] => right_product(&unit, last),
        [first, rest @ ..] => {
            let inner = extend_left(right_branch(rest), first);
            let mut terms = Vec::new();
            for p in inner {
                terms.extend(right_product_x(&unit, &p).expect("operands are non-empty"));
            }
            IntervalSum::new(terms)
        }
    }
}

/// The `m`-composition `I_L ◁ BR(I_{R_1}, …, I_{R_m})`, with `m = rights.len()`.
pub fn m_compose(left: &IntervalPoset, rights: &[IntervalPoset]) -> Result<IntervalSum> {
    let m = rights.len();
    if m == 0 {
        return Err(Error::EmptyList);
    }
    for (index, operand) in std::iter::once(left).chain(rights).enumerate() {
        if !is_m_interval_poset(operand, m) {
            return Err(Error::NotMIntervalPoset(index));
        }
    }
    let branch = right_branch(rights);
    Ok(IntervalSum::new(
        branch.iter().map(|p| left_product(left, p)).collect(),
    ))
}

/// The unique list `(I_L, [I_{R_1}, …, I_{R_m}])` with `I` in their
/// `m`-composition.
pub fn m_decompose(ip: &IntervalPoset, m: usize) -> Result<(IntervalPoset, Vec<IntervalPoset>)> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    if ip.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if !is_m_interval_poset(ip, m) {
        return Err(Error::NotMIntervalPoset(0));
    }
    let n = ip.size();
    let k = pivot_label(ip);
    // Start label of each right part, `None` when the part is empty.
    let mut starts: Vec<Option<usize>> = vec![None; m + 1];
    for (j, start) in starts.iter_mut().enumerate().take(m).skip(1) {
        // Root `k + j` precedes the first vertex of part `j`, root
        // `k + j - 1` does not.
        *start = (k + m..=n).find(|&a| ip.precedes(k + j, a) && !ip.precedes(k + j - 1, a));
    }
    if k + m <= n && !ip.precedes(k + m - 1, k + m) {
        starts[m] = Some(k + m);
    }
    // Parts appear as R_m, R_{m-1}, …, R_1 after the root chain.
    let mut rights = vec![IntervalPoset::empty(); m];
    let mut end = n;
    for j in 1..=m {
        if let Some(a) = starts[j] {
            rights[j - 1] = ip.restrict(a, end);
            end = a - 1;
        }
    }
    debug_assert_eq!(end, k + m - 1);
    Ok((ip.restrict(1, k - 1), rights))
}
