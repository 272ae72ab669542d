//! Greedy chain decomposition of module tables into pure diagrams.
//!
//! Each step takes the top strand d of the remaining table, subtracts
//! c * pi(d) with c = min_i beta_{i,d_i} / pi(d)_{i,d_i}, and repeats.
//! The minimizing entry is zeroed exactly, so the loop runs at most once
//! per stored entry and successive strands grow strictly in the diagram
//! order. Tables that are not Betti tables of modules can fail the strand
//! conditions mid-run; the failure is reported rather than repaired.

use num::{One, Signed};

use crate::tables::{
    diagram_leq, pure_diagram, table_linear_combination, top_strand, BettiTable, Decomposition,
    DegreeSequence,
};
use crate::{Error, Rational, Result};

/// Decompose a module table into the unique chain of pure diagrams with
/// positive coefficients. The empty table yields the empty decomposition.
pub fn bs_decompose(table: &BettiTable) -> Result<Decomposition> {
    if table.is_empty() {
        return Ok(Decomposition::empty());
    }
    check_nonnegative(table)?;

    let budget = table.len();
    let mut rest = table.clone();
    let mut terms = Vec::new();
    let mut steps = 0usize;
    while !rest.is_empty() {
        assert!(steps < budget, "greedy step failed to zero an entry");
        steps += 1;

        let strand = top_strand(&rest)?;
        let diagram = pure_diagram(&strand);
        let coefficient = strand
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &di)| rest.entry(i, di) / diagram.entry(i))
            .min()
            .expect("strand is nonempty");
        rest = table_linear_combination([
            (Rational::one(), &rest),
            (-coefficient.clone(), diagram.table()),
        ]);
        check_nonnegative(&rest)?;
        terms.push((strand, coefficient));
    }
    Decomposition::new(terms)
}

fn check_nonnegative(table: &BettiTable) -> Result<()> {
    match table.iter().find(|(_, value)| value.is_negative()) {
        Some(((i, j), value)) => Err(Error::NegativeEntry {
            i,
            j,
            value: value.clone(),
        }),
        None => Ok(()),
    }
}

/// The exact sum of coefficient * pure diagram over all terms.
pub fn recompose(decomposition: &Decomposition) -> BettiTable {
    let diagrams: Vec<_> = decomposition
        .terms()
        .iter()
        .map(|(d, _)| pure_diagram(d))
        .collect();
    table_linear_combination(
        decomposition
            .terms()
            .iter()
            .zip(&diagrams)
            .map(|((_, c), pi)| (c.clone(), pi.table())),
    )
}

/// True when the sequences, in the given order, form a weakly increasing
/// chain in the diagram order (hence are pairwise comparable).
pub fn is_chain(sequences: &[DegreeSequence]) -> bool {
    sequences
        .windows(2)
        .all(|pair| diagram_leq(&pair[0], &pair[1]))
}
