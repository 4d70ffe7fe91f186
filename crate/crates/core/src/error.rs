use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unbalanced word: {ups} up steps and {downs} down steps")]
    UnbalancedWord { ups: usize, downs: usize },
    #[error("prefix of length {0} goes below the axis")]
    PrefixViolation(usize),
    #[error("invalid step character {0:?}")]
    BadStep(char),
    #[error("position {0} is not a down step")]
    NotADownStep(usize),
    #[error("down step at position {0} is not followed by a primitive path")]
    NoFollowingPrimitive(usize),
    #[error("node {0} has no left child")]
    NoLeftChild(usize),
    #[error("node {label} does not exist in a tree of size {size}")]
    NoSuchNode { label: usize, size: usize },
    #[error("operation needs a non-empty tree")]
    EmptyTree,
    #[error("relation set is not a {0} forest of a binary tree")]
    NotAForest(&'static str),

    #[error("relation ({0}, {1}) is out of range for size {2}")]
    LabelOutOfRange(usize, usize, usize),
    #[error("relations contain a cycle through {0}")]
    CycleDetected(usize),
    #[error("increasing axiom violated: {0} precedes {2} but {1} does not")]
    IncreasingAxiomViolated(usize, usize, usize),
    #[error("decreasing axiom violated: {2} precedes {0} but {1} does not")]
    DecreasingAxiomViolated(usize, usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("trees are not comparable in the Tamari order")]
    NotComparable,
    #[error("operation needs a non-empty interval-poset")]
    EmptyPoset,
    #[error("operand must be non-empty")]
    EmptyOperand,
    #[error("relation ({0}, {1}) has the wrong orientation")]
    WrongOrientation(usize, usize),

    #[error("operator needs at least one argument")]
    EmptyList,
    #[error("size {size} is not divisible by {m}")]
    SizeNotDivisible { size: usize, m: usize },
    #[error("exact division failed while evaluating a closed formula")]
    NonExactDivision,

    #[error("ballot word needs {expected_zeros} horizontal steps for {ones} vertical steps, found {zeros}")]
    BadStepCounts {
        ones: usize,
        zeros: usize,
        expected_zeros: usize,
    },
    #[error("path is not a {0}-Dyck path")]
    NotMDyck(usize),
    #[error("tree is not a {0}-binary tree")]
    NotMBinary(usize),
    #[error("operand {0} is not an m-interval-poset")]
    NotMIntervalPoset(usize),
    #[error("expected arity {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("m must be at least 1")]
    ZeroArity,

    #[error("size {n} with m = {m} exceeds the desk-scale guard")]
    ScaleGuard { n: usize, m: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
