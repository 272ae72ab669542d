//! d-linear Betti tables synthesized from O-sequences, and the chain
//! decompositions of the corresponding quotient tables.
//!
//! An O-sequence alpha with alpha_1 <= d determines the ideal table
//! sum_j alpha_j j! pi(d, d+1, ..., d+j). Extending across homological
//! index 0 gives the quotient table, whose chain coefficients are
//! q_j = ((d+j) alpha_j - (j+1) alpha_{j+1}) j! on pi(0, d, ..., d+j);
//! rescaling to normalized diagrams gives coefficients that sum to 1 and
//! agree positionally with the extremal-ray coefficients of the cone of
//! O-sequences.

use num::{BigInt, Signed, Zero};

use crate::combinatorics::{binomial_rat, factorial_rat};
use crate::decompose::recompose;
use crate::oseq::{o_sequence_violation, OSequence};
use crate::tables::{pure_diagram, table_linear_combination, BettiTable, Decomposition, DegreeSequence};
use crate::{Error, Rational, Result};

/// The table sum_j alpha_j j! pi(d, d+1, ..., d+j) of an ideal with a
/// d-linear resolution. Requires alpha to be an O-sequence with
/// alpha_1 <= d; entries are nonnegative integers concentrated in degrees
/// j = i + d.
pub fn linear_ideal_table(alpha: &OSequence, d: u32) -> Result<BettiTable> {
    validate_linear_input(alpha, d)?;
    let diagrams: Vec<_> = (0..=alpha.socle_degree())
        .map(|j| pure_diagram(&linear_sequence(d, j, false)))
        .collect();
    Ok(table_linear_combination(diagrams.iter().enumerate().map(
        |(j, pi)| {
            let coefficient = rational_u64(alpha.get(j)) * factorial_rat(j as u64);
            (coefficient, pi.table())
        },
    )))
}

/// Raw quotient coefficients q_j = ((d+j) alpha_j - (j+1) alpha_{j+1}) j!
/// for j = 0..t, over arbitrary rationals. Negative values are returned,
/// not rejected; they flag a violated half-space.
pub fn quotient_coefficients_raw(alpha: &[Rational], d: u32) -> Vec<Rational> {
    assert!(d >= 1, "d must be a positive integer");
    (0..alpha.len())
        .map(|j| {
            let next = alpha.get(j + 1).cloned().unwrap_or_else(Rational::zero);
            let slack = crate::rat(d as i64 + j as i64) * &alpha[j] - crate::rat(j as i64 + 1) * next;
            slack * factorial_rat(j as u64)
        })
        .collect()
}

/// Raw normalized coefficients n_j = alpha_j / C(d+j-1, j)
/// - alpha_{j+1} / C(d+j, j+1) for j = 0..t, over arbitrary rationals.
pub fn normalized_coefficients_raw(alpha: &[Rational], d: u32) -> Vec<Rational> {
    assert!(d >= 1, "d must be a positive integer");
    (0..alpha.len())
        .map(|j| {
            let current = &alpha[j] / binomial_rat(d as u64 + j as u64 - 1, j as u64);
            let next = alpha.get(j + 1).cloned().unwrap_or_else(Rational::zero)
                / binomial_rat(d as u64 + j as u64, j as u64 + 1);
            current - next
        })
        .collect()
}

/// The chain decomposition of the quotient table: q_j on pi(0, d, ..., d+j)
/// with zero terms dropped. Errors when some q_j is negative, which happens
/// exactly when alpha violates a half-space.
pub fn quotient_decomposition(alpha: &OSequence, d: u32) -> Result<Decomposition> {
    check_alpha1(alpha, d)?;
    let raw = quotient_coefficients_raw(&alpha.to_rationals(), d);
    if let Some((index, value)) = raw.iter().enumerate().find(|(_, q)| q.is_negative()) {
        return Err(Error::NegativeQuotientCoefficient {
            index,
            value: value.clone(),
        });
    }
    let terms = raw
        .into_iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(j, q)| (linear_sequence(d, j, true), q))
        .collect();
    Decomposition::new(terms)
}

/// The quotient table itself: the recomposition of
/// [`quotient_decomposition`]. Its (0, 0) entry is exactly 1 and its
/// truncation is [`linear_ideal_table`].
pub fn quotient_table(alpha: &OSequence, d: u32) -> Result<BettiTable> {
    Ok(recompose(&quotient_decomposition(alpha, d)?))
}

/// The quotient decomposition over normalized pure diagrams: pairs
/// (sequence (0, d, ..., d+j), n_j) in increasing j with zero terms
/// dropped. The coefficients sum to exactly 1 and agree positionally with
/// the extremal-ray coefficients of `oseq::oseq_decompose`.
pub fn quotient_decomposition_normalized(
    alpha: &OSequence,
    d: u32,
) -> Result<Vec<(DegreeSequence, Rational)>> {
    check_alpha1(alpha, d)?;
    let raw = normalized_coefficients_raw(&alpha.to_rationals(), d);
    if let Some((index, value)) = raw.iter().enumerate().find(|(_, n)| n.is_negative()) {
        return Err(Error::NegativeQuotientCoefficient {
            index,
            value: value.clone(),
        });
    }
    Ok(raw
        .into_iter()
        .enumerate()
        .filter(|(_, n)| !n.is_zero())
        .map(|(j, n)| (linear_sequence(d, j, true), n))
        .collect())
}

/// The sequence (d, d+1, ..., d+j), optionally prefixed by 0.
fn linear_sequence(d: u32, j: usize, with_zero: bool) -> DegreeSequence {
    let mut degrees = Vec::with_capacity(j + 2);
    if with_zero {
        degrees.push(0);
    }
    degrees.extend((0..=j).map(|k| d as i64 + k as i64));
    DegreeSequence::new(degrees).expect("consecutive degrees are strictly increasing")
}

fn validate_linear_input(alpha: &OSequence, d: u32) -> Result<()> {
    if let Some(violation) = o_sequence_violation(alpha.values()) {
        return Err(Error::NotAnOSequence {
            values: alpha.values().to_vec(),
            reason: violation.to_string(),
        });
    }
    check_alpha1(alpha, d)
}

fn check_alpha1(alpha: &OSequence, d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::NonpositiveDegree);
    }
    if alpha.alpha1() > d as u64 {
        return Err(Error::AlphaOneExceedsD {
            alpha1: rational_u64(alpha.alpha1()),
            d,
        });
    }
    Ok(())
}

fn rational_u64(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::factorial;
    use crate::decompose::bs_decompose;
    use crate::oseq::max_ideal_power_oseq;
    use crate::purelift::truncate_table;
    use crate::{frac, rat};

    fn oseq(values: &[u64]) -> OSequence {
        OSequence::new(values.to_vec()).unwrap()
    }

    fn seq(degrees: &[i64]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    fn table(entries: &[(usize, i64, i64)]) -> BettiTable {
        BettiTable::from_entries(entries.iter().map(|&(i, j, v)| (i, j, rat(v))))
    }

    #[test]
    fn ideal_table_132() {
        let betti = linear_ideal_table(&oseq(&[1, 3, 2]), 3).unwrap();
        assert_eq!(betti, table(&[(0, 3, 6), (1, 4, 7), (2, 5, 2)]));
    }

    #[test]
    fn ideal_table_principal() {
        let betti = linear_ideal_table(&oseq(&[1]), 7).unwrap();
        assert_eq!(betti, table(&[(0, 7, 1)]));
    }

    #[test]
    fn ideal_table_12() {
        let betti = linear_ideal_table(&oseq(&[1, 2]), 2).unwrap();
        assert_eq!(betti, table(&[(0, 2, 3), (1, 3, 2)]));
    }

    #[test]
    fn ideal_table_rejects_bad_input() {
        assert!(matches!(
            linear_ideal_table(&oseq(&[1, 3, 5, 8]), 3),
            Err(Error::NotAnOSequence { .. })
        ));
        assert!(matches!(
            linear_ideal_table(&oseq(&[1, 4]), 3),
            Err(Error::AlphaOneExceedsD { .. })
        ));
    }

    #[test]
    fn ideal_decomposition_recovers_theorem_coefficients() {
        let alpha = oseq(&[1, 3, 2]);
        let betti = linear_ideal_table(&alpha, 3).unwrap();
        let dec = bs_decompose(&betti).unwrap();
        assert_eq!(
            dec.terms(),
            &[
                (seq(&[3, 4, 5]), rat(4)),
                (seq(&[3, 4]), rat(3)),
                (seq(&[3]), rat(1)),
            ]
        );
    }

    #[test]
    fn quotient_decomposition_132() {
        let dec = quotient_decomposition(&oseq(&[1, 3, 2]), 3).unwrap();
        assert_eq!(
            dec.terms(),
            &[(seq(&[0, 3, 4, 5]), rat(20)), (seq(&[0, 3, 4]), rat(8))]
        );
    }

    #[test]
    fn quotient_decomposition_12() {
        let dec = quotient_decomposition(&oseq(&[1, 2]), 2).unwrap();
        assert_eq!(dec.terms(), &[(seq(&[0, 2, 3]), rat(6))]);
        assert_eq!(
            recompose(&dec),
            table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)])
        );
    }

    #[test]
    fn quotient_decomposition_of_max_ideal_powers() {
        for d in 1..=5u32 {
            for t in 0..=5usize {
                let alpha = max_ideal_power_oseq(d, t).unwrap();
                let dec = quotient_decomposition(&alpha, d).unwrap();
                let expected_coefficient = Rational::from_integer(BigInt::from(
                    factorial(d as u64 + t as u64) / factorial(d as u64 - 1),
                ));
                let mut degrees = vec![0i64];
                degrees.extend((0..=t).map(|k| d as i64 + k as i64));
                assert_eq!(dec.terms(), &[(seq(&degrees), expected_coefficient)]);
            }
        }
    }

    #[test]
    fn quotient_decomposition_rejects_half_space_violations() {
        assert!(matches!(
            quotient_decomposition(&oseq(&[1, 2, 5]), 2),
            Err(Error::NegativeQuotientCoefficient { .. })
        ));
    }

    #[test]
    fn quotient_table_examples() {
        assert_eq!(
            quotient_table(&oseq(&[1, 3, 2]), 3).unwrap(),
            table(&[(0, 0, 1), (1, 3, 6), (2, 4, 7), (3, 5, 2)])
        );
        assert_eq!(
            quotient_table(&oseq(&[1]), 4).unwrap(),
            table(&[(0, 0, 1), (1, 4, 1)])
        );
        assert_eq!(
            quotient_table(&oseq(&[1, 2]), 2).unwrap(),
            table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)])
        );
    }

    #[test]
    fn quotient_extends_ideal_table() {
        for (values, d) in [(&[1u64, 3, 2][..], 3u32), (&[1, 2], 2), (&[1, 4, 9], 4)] {
            let alpha = oseq(values);
            let quotient = quotient_table(&alpha, d).unwrap();
            assert!(quotient.entry(0, 0).is_one());
            assert_eq!(
                truncate_table(&quotient),
                linear_ideal_table(&alpha, d).unwrap()
            );
        }
    }

    #[test]
    fn normalized_132() {
        let terms = quotient_decomposition_normalized(&oseq(&[1, 3, 2]), 3).unwrap();
        assert_eq!(
            terms,
            vec![(seq(&[0, 3, 4]), frac(2, 3)), (seq(&[0, 3, 4, 5]), frac(1, 3))]
        );
    }

    #[test]
    fn normalized_12() {
        let terms = quotient_decomposition_normalized(&oseq(&[1, 2]), 2).unwrap();
        assert_eq!(terms, vec![(seq(&[0, 2, 3]), rat(1))]);
    }

    #[test]
    fn normalized_max_ideal_power() {
        for (d, t) in [(2u32, 2usize), (3, 1), (4, 3)] {
            let alpha = max_ideal_power_oseq(d, t).unwrap();
            let terms = quotient_decomposition_normalized(&alpha, d).unwrap();
            let mut degrees = vec![0i64];
            degrees.extend((0..=t).map(|k| d as i64 + k as i64));
            assert_eq!(terms, vec![(seq(&degrees), rat(1))]);
        }
    }

    #[test]
    fn normalized_recomposes_through_normalized_diagrams() {
        use crate::tables::normalized_pure_diagram;
        let alpha = oseq(&[1, 3, 2]);
        let terms = quotient_decomposition_normalized(&alpha, 3).unwrap();
        let diagrams: Vec<_> = terms
            .iter()
            .map(|(d, _)| normalized_pure_diagram(d).unwrap())
            .collect();
        let combined = table_linear_combination(
            terms
                .iter()
                .zip(&diagrams)
                .map(|((_, n), pi)| (n.clone(), pi.table())),
        );
        assert_eq!(combined, quotient_table(&alpha, 3).unwrap());
        let total: Rational = terms.iter().map(|(_, n)| n.clone()).fold(rat(0), |a, b| a + b);
        assert!(total.is_one());
    }
}
