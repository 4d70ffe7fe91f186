//! The Δ operator, the bilinear and (m+1)-linear operators on polynomials,
//! interval weights, Tamari polynomials, interval generating series and the
//! closed interval counts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval_poset::IntervalPoset;
use crate::m_tamari::{is_m_binary, m_binary_components, MAryTree};
use crate::poly::{Coefficient, Monomial, Poly};
use crate::tree::BinaryTree;

/// `(x·g − g|_{x=1}) / (x − 1)`: within each `(y, b)` slice, the coefficient
/// of `x^j` becomes the suffix sum `Σ_{k≥j} c_k`.
pub fn delta<C: Coefficient>(g: &Poly<C>) -> Poly<C> {
    let mut slices: BTreeMap<(usize, usize), BTreeMap<usize, C>> = BTreeMap::new();
    for (m, c) in g.terms() {
        slices.entry((m.y, m.b)).or_default().insert(m.x, c.clone());
    }
    let mut out = Poly::zero();
    for ((y, b), coeffs) in slices {
        let top = *coeffs.keys().next_back().expect("slices are non-empty");
        let mut acc = C::zero();
        for j in (0..=top).rev() {
            if let Some(c) = coeffs.get(&j) {
                acc = acc + c.clone();
            }
            out.add_term(Monomial::new(j, y, b), acc.clone());
        }
    }
    out
}

/// `xy · f · Δ(g)`.
pub fn op_b<C: Coefficient>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    op_b_truncated(f, g, None)
}

fn op_b_truncated<C: Coefficient>(f: &Poly<C>, g: &Poly<C>, max_y: Option<usize>) -> Poly<C> {
    let head = f.shift(1, 1, 0);
    head.mul_truncated(&delta(g), max_y)
}

/// `xy · f · Δ(g_1 Δ(g_2 … Δ(g_m)))`.
pub fn op_bm<C: Coefficient>(f: &Poly<C>, gs: &[Poly<C>]) -> Result<Poly<C>> {
    op_bm_truncated(f, gs, None)
}

fn op_bm_truncated<C: Coefficient>(
    f: &Poly<C>,
    gs: &[Poly<C>],
    max_y: Option<usize>,
) -> Result<Poly<C>> {
    let (last, rest) = gs.split_last().ok_or(Error::EmptyList)?;
    let mut inner = last.clone();
    for g in rest.iter().rev() {
        inner = g.mul_truncated(&delta(&inner), max_y);
    }
    Ok(op_b_truncated(f, &inner, max_y))
}

/// `y (x b f Δ(g) − b x f g + x f g)`; at `b = 1` this is [`op_b`].
pub fn op_b_b<C: Coefficient>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let xf = f.shift(1, 0, 0);
    let fg = &xf * g;
    let with_delta = (&xf * &delta(g)).shift(0, 0, 1);
    (with_delta - fg.shift(0, 0, 1) + fg).shift(0, 1, 0)
}

/// `x^trees · y^size`.
pub fn weight_pi<C: Coefficient>(ip: &IntervalPoset) -> Poly<C> {
    let s = ip.stats();
    Poly::monomial(s.trees, s.size, 0)
}

/// `x^trees · y^size · b^rises`.
pub fn weight_pi_b<C: Coefficient>(ip: &IntervalPoset) -> Poly<C> {
    let s = ip.stats();
    Poly::monomial(s.trees, s.size, s.rises_b)
}

/// `x^trees · y^(size / m)`.
pub fn weight_pim<C: Coefficient>(ip: &IntervalPoset, m: usize) -> Result<Poly<C>> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    let s = ip.stats();
    if !s.size.is_multiple_of(m) {
        return Err(Error::SizeNotDivisible { size: s.size, m });
    }
    Ok(Poly::monomial(s.trees, s.size / m, 0))
}

/// Sum of the weights of a formal sum of interval-posets.
pub fn weight_sum<'a, C: Coefficient>(
    terms: impl IntoIterator<Item = &'a IntervalPoset>,
) -> Poly<C> {
    terms
        .into_iter()
        .fold(Poly::zero(), |acc, ip| acc + weight_pi(ip))
}

/// `B_T(x)`: counts trees `T' ≤ T` by the trees statistic of `[T', T]`.
pub fn tamari_poly<C: Coefficient>(tree: &BinaryTree) -> Poly<C> {
    match tree {
        BinaryTree::Empty => Poly::one(),
        BinaryTree::Node(l, r) => op_b(&tamari_poly(l), &tamari_poly(r)).at_y_one(),
    }
}

/// Counts trees `T' ≥ T`; mirroring reverses the Tamari order.
pub fn tamari_poly_mirror<C: Coefficient>(tree: &BinaryTree) -> Poly<C> {
    match tree {
        BinaryTree::Empty => Poly::one(),
        BinaryTree::Node(l, r) => op_b(&tamari_poly_mirror(r), &tamari_poly_mirror(l)).at_y_one(),
    }
}

/// b-refined Tamari polynomial, built with [`op_b_b`].
pub fn tamari_poly_b<C: Coefficient>(tree: &BinaryTree) -> Poly<C> {
    match tree {
        BinaryTree::Empty => Poly::one(),
        BinaryTree::Node(l, r) => op_b_b(&tamari_poly_b(l), &tamari_poly_b(r)).at_y_one(),
    }
}

/// `B^(m)_T(x)` for an m-binary tree.
pub fn m_tamari_poly<C: Coefficient>(tree: &BinaryTree, m: usize) -> Result<Poly<C>> {
    if tree.is_empty() {
        return if m == 0 {
            Err(Error::ZeroArity)
        } else {
            Ok(Poly::one())
        };
    }
    if !is_m_binary(tree, m) {
        return Err(Error::NotMBinary(m));
    }
    let (left, rights) = m_binary_components(tree, m)?;
    let f = m_tamari_poly(&left, m)?;
    let gs = rights
        .iter()
        .map(|t| m_tamari_poly(t, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(op_bm(&f, &gs)?.at_y_one())
}

/// `B^(m)_T(x)` for an (m+1)-ary tree with children `T_L, T_{R_1}, …, T_{R_m}`.
pub fn m_tamari_poly_mary<C: Coefficient>(tree: &MAryTree, m: usize) -> Result<Poly<C>> {
    match tree {
        MAryTree::Empty => Ok(Poly::one()),
        MAryTree::Node(children) => {
            if children.len() != m + 1 {
                return Err(Error::ArityMismatch {
                    expected: m + 1,
                    found: children.len(),
                });
            }
            let polys = children
                .iter()
                .map(|c| m_tamari_poly_mary(c, m))
                .collect::<Result<Vec<_>>>()?;
            Ok(op_bm(&polys[0], &polys[1..])?.at_y_one())
        }
    }
}

/// `Φ = 1 + B(Φ, Φ)` truncated at `y`-degree `n`.
pub fn phi_series<C: Coefficient>(n: usize) -> Poly<C> {
    fixed_point(n, |phi| op_b_truncated(phi, phi, Some(n)))
}

/// `Φ = 1 + B^(m)(Φ, …, Φ)` truncated at `y`-degree `n`.
pub fn phi_m_series<C: Coefficient>(n: usize, m: usize) -> Result<Poly<C>> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    let mut err = None;
    let phi = fixed_point(n, |phi| {
        let gs = vec![phi.clone(); m];
        op_bm_truncated(phi, &gs, Some(n)).unwrap_or_else(|e| {
            err = Some(e);
            Poly::zero()
        })
    });
    err.map_or(Ok(phi), Err)
}

/// Each step fixes at least one more `y`-degree, so `n + 1` rounds suffice.
fn fixed_point<C: Coefficient>(n: usize, mut step: impl FnMut(&Poly<C>) -> Poly<C>) -> Poly<C> {
    let mut phi = Poly::one();
    for _ in 0..=n {
        let next = Poly::one() + step(&phi);
        if next == phi {
            break;
        }
        phi = next;
    }
    phi
}

fn exact_div(num: BigUint, den: BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonExactDivision)
    }
}

/// Number of Tamari intervals of size `n`: `2 / (n(n+1)) · C(4n+1, n−1)`.
pub fn formula_in(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    let n_big = BigUint::from(n);
    let num = BigUint::from(2u32) * binomial(BigUint::from(4 * n + 1), BigUint::from(n - 1));
    exact_div(num, &n_big * (&n_big + 1u32))
}

/// Number of m-Tamari intervals of size `n`:
/// `(m+1) / (n(mn+1)) · C((m+1)²n + m, n−1)`.
pub fn formula_inm(n: usize, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let top = BigUint::from((m + 1) * (m + 1) * n + m);
    let num = BigUint::from(m + 1) * binomial(top, BigUint::from(n - 1));
    exact_div(num, BigUint::from(n) * BigUint::from(m * n + 1))
}
