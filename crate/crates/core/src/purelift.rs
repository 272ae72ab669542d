//! Coefficient transforms between the chain decomposition of a table with a
//! pure resolution and the chain decomposition of its truncation.
//!
//! Coefficient lists here are positional: index j corresponds to the prefix
//! sequence (d_0, ..., d_j) on the extended side and to (d_1, ..., d_j) on
//! the truncated side. Explicit zeros are retained until a finalizer builds
//! a `Decomposition`, because the index bookkeeping is the chief bug risk
//! and positional lists make the round-trip checks exact.

use num::Zero;

use crate::tables::{BettiTable, Decomposition, DegreeSequence};
use crate::{Error, Rational, Result};

/// Extend a truncated decomposition across homological index 0.
///
/// Given alpha_1..alpha_t on the sequences (d_1), (d_1,d_2), ..., and the
/// degree-zero entry `beta0` of the extended table, returns c_0..c_t with
/// c_0 = beta0 - alpha_1 and c_j = (d_j - d_0) * alpha_j - alpha_{j+1},
/// taking alpha_{t+1} = 0.
pub fn extend_decomposition(
    alphas: &[Rational],
    d: &DegreeSequence,
    beta0: &Rational,
) -> Result<Vec<Rational>> {
    let t = check_truncated_len(alphas.len(), d)?;
    let mut coefficients = Vec::with_capacity(t + 1);
    coefficients.push(beta0 - &alphas[0]);
    for j in 1..=t {
        let gap = crate::rat(d.get(j) - d.get(0));
        let next = if j == t { Rational::zero() } else { alphas[j].clone() };
        coefficients.push(gap * &alphas[j - 1] - next);
    }
    Ok(coefficients)
}

/// Truncate a decomposition, dropping homological index 0.
///
/// Given delta_0..delta_t on the prefixes (d_0), (d_0,d_1), ..., returns
/// alpha_1..alpha_t with alpha_j = sum_{k=j..t} delta_k / prod_{p=j..k}
/// (d_p - d_0). delta_0 does not influence the result: pi(d_0) truncates
/// away.
pub fn truncate_decomposition(deltas: &[Rational], d: &DegreeSequence) -> Result<Vec<Rational>> {
    if deltas.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            actual: deltas.len(),
        });
    }
    let t = check_truncated_len(d.len() - 1, d)?;
    let mut alphas = Vec::with_capacity(t);
    for j in 1..=t {
        let mut sum = Rational::zero();
        let mut product = Rational::from_integer(1.into());
        for k in j..=t {
            product *= crate::rat(d.get(k) - d.get(0));
            sum += &deltas[k] / &product;
        }
        alphas.push(sum);
    }
    Ok(alphas)
}

fn check_truncated_len(alphas_len: usize, d: &DegreeSequence) -> Result<usize> {
    let t = d.len() - 1;
    if t < 1 || alphas_len != t {
        return Err(Error::LengthMismatch {
            expected: t.max(1),
            actual: alphas_len,
        });
    }
    Ok(t)
}

/// Build the decomposition over the prefixes (d_0), (d_0,d_1), ... from a
/// positional coefficient list, dropping zero terms.
pub fn finalize_extension(coefficients: &[Rational], d: &DegreeSequence) -> Result<Decomposition> {
    if coefficients.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            actual: coefficients.len(),
        });
    }
    let terms = coefficients
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (d.prefix(j + 1), c.clone()))
        .collect();
    Decomposition::new(terms)
}

/// Build the decomposition over (d_1), (d_1,d_2), ... from a positional
/// coefficient list alpha_1..alpha_t, dropping zero terms.
pub fn finalize_truncation(alphas: &[Rational], d: &DegreeSequence) -> Result<Decomposition> {
    check_truncated_len(alphas.len(), d)?;
    let terms = alphas
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| (d.segment(1, idx + 2), c.clone()))
        .collect();
    Decomposition::new(terms)
}

/// Drop homological index 0 and reindex (i, j) -> (i - 1, j).
pub fn truncate_table(table: &BettiTable) -> BettiTable {
    BettiTable::from_entries(
        table
            .iter()
            .filter(|((i, _), _)| *i >= 1)
            .map(|((i, j), value)| (i - 1, j, value.clone())),
    )
}
