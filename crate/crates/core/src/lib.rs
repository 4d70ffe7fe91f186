//! Interval-posets of the Tamari and m-Tamari lattices.
//!
//! Trees, Dyck paths and m-ballot paths are linked by explicit bijections.
//! Tamari intervals are encoded as interval-posets, built and split by the
//! composition operators, and counted through the matching polynomial
//! operators. All arithmetic is exact; polynomial code is generic over its
//! coefficient ring.

pub mod composition;
pub mod dyck;
pub mod enumeration;
pub mod error;
pub mod forest;
pub mod interval_poset;
pub mod m_tamari;
pub mod permutation;
pub mod poly;
pub mod polynomials;
pub mod tree;

pub use composition::{
    compose, decompose, left_product, m_compose, m_decompose, right_product, right_product_x,
    IntervalSum,
};
pub use dyck::DyckPath;
pub use enumeration::{gen_binary_trees, gen_interval_posets, gen_m_interval_posets, Enumerator};
pub use error::{Error, Result};
pub use forest::{final_forest, forest_to_tree, initial_forest, ForestKind, Relation};
pub use interval_poset::{tamari_leq, IntervalPoset, IntervalStats};
pub use m_tamari::{is_m_binary, is_m_interval_poset, MAryTree, MBallotPath};
pub use permutation::Permutation;
pub use poly::{Coefficient, Monomial, Poly};
pub use tree::BinaryTree;

/// Polynomials with arbitrary-precision coefficients.
pub type XYPoly = Poly<num_bigint::BigInt>;

/// Polynomials with machine-word coefficients, for small computations.
pub type XYPolyI64 = Poly<i64>;
