//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error enum.
///
/// Anything that can go wrong while building Fock spaces, running programs,
/// restricting to the code space, or synthesizing gates ends up here. The
/// variants carry enough context to print a useful one-line message; callers
/// that need to branch can match on the variant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Fock spaces need an even number of Majorana operators (two per fermion mode).
    #[error("number of Majorana operators must be even, got {0}")]
    OddMajoranaCount(usize),

    /// Requested system size exceeds the dense-matrix cap.
    #[error(
        "requested {requested} Majorana operators but the cap is {cap} (set MAJORANA_CAP to raise)"
    )]
    CapExceeded { requested: usize, cap: usize },

    /// Majorana / qubit / basis index out of range.
    #[error("index {index} out of range for {what} (valid: 1..={max})")]
    IndexOutOfRange {
        index: usize,
        what: &'static str,
        max: usize,
    },

    /// Rotations need distinct Majorana indices.
    #[error("Majorana indices must be strictly increasing, repeated index {0}")]
    EqualIndices(usize),

    /// Many-body rotations act on an even number of Majorana operators.
    #[error("rotation index set must have even cardinality, got {0} indices")]
    OddCardinality(usize),

    /// A physical operator mapped some code-space vector outside the code space.
    #[error(
        "operator does not preserve the code space (leakage {leakage:.3e} > tolerance {tol:.1e})"
    )]
    NotCodeSpacePreserving { leakage: f64, tol: f64 },

    /// Matrix/vector shapes do not line up.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation that needs a nonempty support got an empty one.
    #[error("empty index/support set where a nonempty one is required")]
    EmptySupport,

    /// Catalog lookup failed.
    #[error("unknown gate {0:?}")]
    UnknownGate(String),

    /// Wrong number or range of gate parameters.
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },

    /// Diagonal-impossibility certificates require a commuting generator set.
    #[error("generators do not commute (pair {a}, {b}; commutator norm {norm:.3e})")]
    NonCommutingGenerators { a: usize, b: usize, norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
