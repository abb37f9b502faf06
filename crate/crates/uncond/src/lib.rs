//! Analysis of matrix support sets `I ⊆ R×C` viewed as bipartite graphs.
//!
//! The library answers, for a given support, for which Schatten exponents `p`
//! the elementary matrices `{e_rc : (r,c) ∈ I}` form a 1-unconditional basic
//! sequence in `S^p`, and produces combinatorial certificates (cycles, density
//! violations, bisections, sign factorizations) plus exact constants where
//! closed forms exist. Two independent numeric routes — a closed-walk
//! expansion and a singular-value computation — back every claim.

pub mod classifier;
pub mod extremal;
pub mod multiplier;
pub mod numeric;
pub mod support;
pub mod walks;

use support::Cycle;
use thiserror::Error;

/// Default ceiling on the number of closed walks any single enumeration may
/// visit before aborting with [`Error::BudgetExceeded`].
pub const DEFAULT_WALK_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("edge #{index} = ({row}, {col}) out of range for a {n_rows}×{n_cols} support")]
    EdgeOutOfRange {
        index: usize,
        row: usize,
        col: usize,
        n_rows: usize,
        n_cols: usize,
    },
    #[error("edge #{index} = ({row}, {col}) duplicates an earlier edge")]
    DuplicateEdge { index: usize, row: usize, col: usize },
    #[error("{which} has {got} entries, expected {expected}")]
    LabelCardinality {
        which: String,
        expected: usize,
        got: usize,
    },
    #[error("support contains a cycle of length {}", .0.len())]
    NotAForest(Cycle),
    #[error("walk enumeration exceeded the budget of {budget} walks")]
    BudgetExceeded { budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue} below tolerance {tolerance}")]
    NotPositiveSemidefinite { eigenvalue: f64, tolerance: f64 },
    #[error("sign at ({row}, {col}) has modulus {modulus}, expected 1")]
    NotUnimodular { row: usize, col: usize, modulus: f64 },
    #[error("sign at ({row}, {col}) is not ±1 in real mode")]
    NotRealSign { row: usize, col: usize },
    #[error("no sign provided for support edge ({row}, {col})")]
    MissingSign { row: usize, col: usize },
    #[error("sign given at ({row}, {col}) which is not a support edge")]
    SignOffSupport { row: usize, col: usize },
    #[error("Fourier multiplier norms are only computed for exponent 1 or ∞, got {0}")]
    UnsupportedExponent(f64),
    #[error("relative Fourier multipliers (proper spectral subsets) are not supported")]
    RelativeSpectrum,
    #[error("non-finite value encountered in {0}")]
    NonFinite(String),
    #[error("family is not monotone: level {level} drops edge ({row}, {col}) present at level {prev}")]
    NonMonotoneFamily {
        level: usize,
        prev: usize,
        row: usize,
        col: usize,
    },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
