use num::BigUint;
use thiserror::Error;

use crate::Rational;

/// Errors reported by the table, cone, and hypergraph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence must be nonempty")]
    EmptySequence,

    #[error("degree sequence {0:?} is not strictly increasing")]
    NotStrictlyIncreasing(Vec<i64>),

    #[error("normalized pure diagram requires d_0 = 0, got d_0 = {0}")]
    NormalizedBaseNotZero(i64),

    #[error("not greedily decomposable: table is empty")]
    EmptyTable,

    #[error("not greedily decomposable: column {0} is zero below the maximal nonzero column")]
    ColumnGap(usize),

    #[error("not greedily decomposable: column minima {0:?} are not strictly increasing")]
    NonIncreasingStrand(Vec<i64>),

    #[error("not greedily decomposable: entry ({i}, {j}) = {value} is negative")]
    NegativeEntry { i: usize, j: i64, value: Rational },

    #[error("coefficient of pi{sequence:?} must be positive, got {coefficient}")]
    NonpositiveCoefficient {
        sequence: Vec<i64>,
        coefficient: Rational,
    },

    #[error("sequences {0:?} and {1:?} are incomparable; terms do not form a chain")]
    NotAChain(Vec<i64>, Vec<i64>),

    #[error("sequence {0:?} appears twice in a decomposition")]
    DuplicateSequence(Vec<i64>),

    #[error("expected {expected} coefficients, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("macaulay representation requires a >= 1 and d >= 1, got a = {a}, d = {d}")]
    MacaulayDomain { a: u64, d: u32 },

    #[error("lex growth oracle is limited to 1 <= a <= 60 and 1 <= d <= 5, got a = {a}, d = {d}")]
    OracleRange { a: u64, d: u32 },

    #[error("O-sequence must be nonempty")]
    EmptyOSequence,

    #[error("O-sequence must start with h_0 = 1, got {0}")]
    LeadingEntryNotOne(u64),

    #[error("O-sequence entry {0} does not fit in 64 bits")]
    EntryTooLarge(BigUint),

    #[error("d must be a positive integer")]
    NonpositiveDegree,

    #[error("alpha_1 = {alpha1} exceeds d = {d}")]
    AlphaOneExceedsD { alpha1: Rational, d: u32 },

    #[error("cone point must start with alpha_0 = 1, got {0}")]
    ConeBaseNotOne(Rational),

    #[error("cone point entry alpha_{index} = {value} is negative")]
    NegativeConeEntry { index: usize, value: Rational },

    #[error("{values:?} is not an O-sequence: {reason}")]
    NotAnOSequence { values: Vec<u64>, reason: String },

    #[error("quotient coefficient q_{index} = {value} is negative; a half-space is violated")]
    NegativeQuotientCoefficient { index: usize, value: Rational },

    #[error("tuple {tuple:?} has the wrong arity for a {dimension}-uniform hypergraph")]
    WrongArity { tuple: Vec<u32>, dimension: usize },

    #[error("tuple {0:?} has a coordinate < 1")]
    NonpositiveCoordinate(Vec<u32>),

    #[error("ferrers hypergraph is empty")]
    EmptyFerrers,

    #[error("quotient decomposition of a ferrers hypergraph requires d >= 2, got d = {0}")]
    FerrersDimensionTooSmall(usize),

    #[error("tuple set is not downward closed: contains {present:?} but not {missing:?}")]
    NotDownwardClosed { present: Vec<u32>, missing: Vec<u32> },

    #[error("enumeration is limited to 1 <= d <= 3 and 1 <= bound <= 4, got d = {dimension}, bound = {bound}")]
    EnumerationRange { dimension: usize, bound: u32 },
}
