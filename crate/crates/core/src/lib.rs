//! Exact-arithmetic Boij-Soderberg decompositions of Betti tables and the
//! simplicial cone of finite O-sequences.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. The main entry points are:
//!
//! - [`tables`]: sparse Betti tables, degree sequences, pure diagrams, and
//!   the diagram partial order.
//! - [`decompose`]: the greedy chain decomposition of a module table into
//!   positive multiples of pure diagrams, and its inverse.
//! - [`purelift`]: coefficient transforms between the decomposition of a
//!   pure-resolution table and the decomposition of its truncation.
//! - [`oseq`]: Macaulay representations, the growth bound `a^<d>`,
//!   O-sequence validation, half-space slacks, and the decomposition of a
//!   cone point into extremal rays.
//! - [`linear`]: d-linear Betti tables synthesized from O-sequences, and
//!   the quotient-ring decompositions they induce.
//! - [`ferrers`]: the independent route to quotient decompositions through
//!   d-uniform Ferrers hypergraphs, used to cross-check [`linear`].

pub mod combinatorics;
pub mod decompose;
mod error;
pub mod ferrers;
pub mod linear;
pub mod oseq;
pub mod purelift;
pub mod tables;

pub use error::Error;
pub use num::BigInt;
pub use num::BigRational as Rational;
pub use num::BigUint;

pub use decompose::{bs_decompose, is_chain, recompose};
pub use ferrers::{enumerate_ferrers, ferrers_alpha, ferrers_quotient_decomposition, FerrersHypergraph};
pub use linear::{
    linear_ideal_table, quotient_decomposition, quotient_decomposition_normalized, quotient_table,
};
pub use oseq::{
    halfspace_slacks, in_cone, is_o_sequence, lex_growth_oracle, macaulay_bound,
    macaulay_representation, max_ideal_power_oseq, oseq_decompose, oseq_recompose, MacaulayRep,
    OSequence,
};
pub use purelift::{extend_decomposition, truncate_decomposition, truncate_table};
pub use tables::{
    diagram_cmp, diagram_leq, normalized_pure_diagram, pure_diagram, table_linear_combination,
    top_strand, BettiTable, Decomposition, DegreeSequence, Position, PureDiagram,
};

/// Result type used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact rational `numer/denom` in lowest terms. Panics if `denom` is zero.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
