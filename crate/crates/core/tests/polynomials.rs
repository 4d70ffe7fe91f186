mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use tamari::enumeration::{gen_m_binary_trees, refined_count, refined_count_m};
use tamari::m_tamari::m_binary_to_mary;
use tamari::polynomials::{
    delta, formula_in, formula_inm, m_tamari_poly, m_tamari_poly_mary, op_b, op_b_b, op_bm,
    phi_m_series, phi_series, tamari_poly, tamari_poly_mirror,
};
use tamari::{gen_binary_trees, is_m_binary, BinaryTree, Monomial, XYPoly};

fn xs(coeffs: &[i64]) -> XYPoly {
    XYPoly::from_x_coeffs(coeffs.iter().map(|&c| BigInt::from(c)))
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn poly_strategy() -> impl Strategy<Value = XYPoly> {
    prop::collection::vec((0usize..6, 0usize..4, 0usize..3, -5i64..=5), 0..8).prop_map(|terms| {
        let mut p = XYPoly::zero();
        for (x, y, b, c) in terms {
            p.add_term(Monomial::new(x, y, b), BigInt::from(c));
        }
        p
    })
}

fn x_pow_sum(exps: impl IntoIterator<Item = usize>) -> XYPoly {
    let mut p = XYPoly::zero();
    for e in exps {
        p.add_term(Monomial::new(e, 0, 0), big(1));
    }
    p
}

#[test]
fn tamari_polynomials_count_the_down_set_by_left_branch() {
    for n in 0..=6 {
        for t in gen_binary_trees(n) {
            let below = down_set(&t);
            let expected = x_pow_sum(below.iter().map(BinaryTree::left_branch_len));
            let p = tamari_poly::<BigInt>(&t);
            assert_eq!(p, expected, "{t}");
            assert_eq!(p.eval_one(), big(below.len() as u64));
            if n > 0 {
                assert_eq!(p.max_x(), Some(n));
                assert_eq!(p.coeff(n, 0, 0), big(1));
                assert_eq!(p.min_x(), Some(t.left_branch_len()));
            }
        }
    }
}

#[test]
fn mirror_polynomials_count_the_up_set_by_right_branch() {
    for n in 0..=6 {
        for t in gen_binary_trees(n) {
            let above = up_set(&t);
            let expected = x_pow_sum(above.iter().map(BinaryTree::right_branch_len));
            assert_eq!(tamari_poly_mirror::<BigInt>(&t), expected, "{t}");
            assert_eq!(tamari_poly_mirror::<BigInt>(&t), tamari_poly(&t.mirror()));
        }
    }
}

#[test]
fn slices_of_the_series_sum_tamari_polynomials() {
    let phi = phi_series::<BigInt>(5);
    for n in 0..=5 {
        let total = gen_binary_trees(n)
            .iter()
            .fold(XYPoly::zero(), |acc, t| acc + tamari_poly(t));
        assert_eq!(phi.y_slice(n), total, "size {n}");
    }
}

#[test]
fn series_match_closed_formulas() {
    let phi = phi_series::<BigInt>(7).at_x_one();
    for n in 0..=7 {
        assert_eq!(phi.coeff(0, n, 0), BigInt::from(formula_in(n).unwrap()));
    }
    for m in 1..=3 {
        let phi = phi_m_series::<BigInt>(4, m).unwrap().at_x_one();
        for n in 0..=4 {
            assert_eq!(
                phi.coeff(0, n, 0),
                BigInt::from(formula_inm(n, m).unwrap()),
                "({n}, {m})"
            );
        }
    }
}

#[test]
fn refined_counts_match_series_slices() {
    let phi = phi_series::<BigInt>(4);
    for n in 0..=4 {
        assert_eq!(refined_count::<BigInt>(n).unwrap(), phi.y_slice(n));
    }
    for m in 2..=3 {
        let phi = phi_m_series::<BigInt>(3, m).unwrap();
        for n in 0..=3 {
            if n * m <= 9 {
                assert_eq!(
                    refined_count_m::<BigInt>(n, m).unwrap(),
                    phi.y_slice(n),
                    "({n}, {m})"
                );
            }
        }
    }
}

#[test]
fn m_polynomials_count_m_binary_down_sets() {
    for (m, max_n) in [(2, 4), (3, 2), (4, 2)] {
        for n in 0..=max_n {
            for t in gen_m_binary_trees(n, m) {
                let below: Vec<_> = down_set(&t)
                    .into_iter()
                    .filter(|s| is_m_binary(s, m))
                    .collect();
                let p = m_tamari_poly::<BigInt>(&t, m).unwrap();
                assert_eq!(p.eval_one(), big(below.len() as u64), "{t}");
                assert_eq!(
                    p,
                    x_pow_sum(below.iter().map(BinaryTree::left_branch_len)),
                    "{t}"
                );
                let mary = m_binary_to_mary(&t, m).unwrap();
                assert_eq!(m_tamari_poly_mary::<BigInt>(&mary, m).unwrap(), p);
            }
        }
    }
}

#[test]
fn m_polynomials_at_one_are_tamari_polynomials() {
    for n in 0..=5 {
        for t in gen_binary_trees(n) {
            assert_eq!(m_tamari_poly::<BigInt>(&t, 1).unwrap(), tamari_poly(&t));
        }
    }
}

#[test]
fn small_trees_give_the_reference_multiset() {
    let reference: [&[i64]; 21] = [
        &[0, 0, 1],
        &[0, 1, 1],
        &[0, 0, 0, 1],
        &[0, 0, 1, 1],
        &[0, 1, 1, 1],
        &[0, 0, 1, 1],
        &[0, 2, 2, 1],
        &[0, 0, 0, 0, 1],
        &[0, 0, 0, 1, 1],
        &[0, 0, 0, 1, 1],
        &[0, 0, 1, 1, 1],
        &[0, 0, 2, 2, 1],
        &[0, 0, 0, 1, 1],
        &[0, 0, 1, 2, 1],
        &[0, 0, 1, 1, 1],
        &[0, 0, 2, 2, 1],
        &[0, 1, 1, 1, 1],
        &[0, 2, 2, 2, 1],
        &[0, 2, 2, 2, 1],
        &[0, 3, 3, 2, 1],
        &[0, 5, 5, 3, 1],
    ];
    let mut expected: Vec<String> = reference.iter().map(|c| xs(c).to_string()).collect();
    let mut got: Vec<String> = (2..=4)
        .flat_map(gen_binary_trees)
        .map(|t| tamari_poly::<BigInt>(&t).to_string())
        .collect();
    expected.sort();
    got.sort();
    assert_eq!(got, expected);
}

#[test]
fn reference_trees() {
    let t = tree("110010110100");
    assert_eq!(tamari_poly::<BigInt>(&t), xs(&[0, 0, 0, 1, 2, 2, 1]));
    assert_eq!(
        tamari_poly::<BigInt>(&t).to_string(),
        "x^3 + 2x^4 + 2x^5 + x^6"
    );
    assert_eq!(tamari_poly::<BigInt>(&BinaryTree::leaf()), xs(&[0, 1]));
    let fig = tamari::MBallotPath::parse("100110001000", 2).unwrap();
    let ternary = tamari::m_tamari::ballot_to_m_binary(&fig);
    let p = m_tamari_poly::<BigInt>(&ternary, 2).unwrap();
    assert_eq!(p, xs(&[0, 0, 2, 2, 1]));
    assert_eq!(p.eval_one(), big(5));
}

proptest! {
    #![proptest_config(proptest_config(256))]

    #[test]
    fn delta_is_the_divided_difference(g in poly_strategy()) {
        let lhs = &(XYPoly::x() - XYPoly::one()) * &delta(&g);
        let rhs = g.shift(1, 0, 0) - g.at_x_one();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn b_operator_specialises(f in poly_strategy(), g in poly_strategy()) {
        prop_assert_eq!(op_b_b(&f, &g).at_b_one(), op_b(&f.at_b_one(), &g.at_b_one()));
    }

    #[test]
    fn single_argument_m_operator_is_b(f in poly_strategy(), g in poly_strategy()) {
        prop_assert_eq!(op_bm(&f, std::slice::from_ref(&g)).unwrap(), op_b(&f, &g));
    }

    #[test]
    fn operators_are_multilinear(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        prop_assert_eq!(op_b(&(&f + &h), &g), op_b(&f, &g) + op_b(&h, &g));
        prop_assert_eq!(op_b(&f, &(&g + &h)), op_b(&f, &g) + op_b(&f, &h));
        prop_assert_eq!(delta(&(&g + &h)), delta(&g) + delta(&h));
    }

    #[test]
    fn json_round_trips(p in poly_strategy()) {
        prop_assert_eq!(XYPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
