//! Sparse Betti tables, degree sequences, pure diagrams, and chain
//! decompositions.
//!
//! Invariants:
//! - `BettiTable` stores only nonzero values; an absent key reads as exactly
//!   zero, so table equality is map equality.
//! - `DegreeSequence` is strictly increasing.
//! - `PureDiagram` has exactly one entry per homological index 0..=s, at
//!   (i, d_i), and every stored value is strictly positive: the sign (-1)^i
//!   cancels the sign of the product of degree differences.
//! - `Decomposition` terms are pairwise distinct, totally ordered by the
//!   diagram partial order, stored in increasing order, with strictly
//!   positive coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::{Error, Rational, Result};

/// (homological index, internal degree) of a table entry.
pub type Position = (usize, i64);

/// Sparse map from (i, j) to a nonzero exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<Position, Rational>,
}

impl BettiTable {
    /// The empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Accumulate `(i, j, value)` triples; keys whose sum is zero are dropped.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut table = Self::new();
        for (i, j, value) in entries {
            table.add(i, j, &value);
        }
        table
    }

    /// Entry at (i, j); absent keys read as exactly zero.
    pub fn entry(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Set entry (i, j), removing the key when `value` is zero.
    pub fn set(&mut self, i: usize, j: i64, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    /// Add `value` to entry (i, j); entries that cancel to zero are removed.
    pub fn add(&mut self, i: usize, j: i64, value: &Rational) {
        let sum = self.entry(i, j) + value;
        self.set(i, j, sum);
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero entries stored.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Iterate over nonzero entries in (i, j) order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, &Rational)> + '_ {
        self.entries.iter().map(|(&pos, value)| (pos, value))
    }

    /// Module-table predicate: every stored entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| v.is_positive())
    }

    /// Total Betti number in homological index i: the sum over all degrees.
    pub fn total_betti(&self, i: usize) -> Rational {
        self.column(i).fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    /// Largest homological index carrying a nonzero entry.
    pub fn max_column(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Smallest degree with a nonzero entry in homological index i.
    pub fn column_min_degree(&self, i: usize) -> Option<i64> {
        self.column(i).map(|((_, j), _)| j).next()
    }

    fn column(&self, i: usize) -> impl Iterator<Item = (Position, &Rational)> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&pos, value)| (pos, value))
    }
}

/// Strictly increasing integer degrees (d_0, ..., d_s), s >= 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<i64>,
}

impl DegreeSequence {
    pub fn new<V: Into<Vec<i64>>>(degrees: V) -> Result<Self> {
        let degrees = degrees.into();
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        if !degrees.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotStrictlyIncreasing(degrees));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Number of entries, s + 1; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    /// The index s of the last degree.
    pub fn top_index(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn first(&self) -> i64 {
        self.degrees[0]
    }

    pub fn last(&self) -> i64 {
        *self.degrees.last().expect("sequence is nonempty")
    }

    pub fn get(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// The contiguous subsequence `start..end`; still strictly increasing.
    pub fn segment(&self, start: usize, end: usize) -> DegreeSequence {
        debug_assert!(start < end && end <= self.degrees.len());
        DegreeSequence {
            degrees: self.degrees[start..end].to_vec(),
        }
    }

    /// The first `count` degrees.
    pub fn prefix(&self, count: usize) -> DegreeSequence {
        self.segment(0, count)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.degrees.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Partial order on pure diagrams: pi(d_0..d_s) <= pi(d'_0..d'_t) iff
/// s >= t and d_i <= d'_i for 0 <= i <= t.
pub fn diagram_leq(a: &DegreeSequence, b: &DegreeSequence) -> bool {
    a.len() >= b.len() && a.degrees().iter().zip(b.degrees()).all(|(x, y)| x <= y)
}

/// Comparison in the diagram order; `None` when incomparable.
pub fn diagram_cmp(a: &DegreeSequence, b: &DegreeSequence) -> Option<Ordering> {
    match (diagram_leq(a, b), diagram_leq(b, a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// A pure diagram: the table supported exactly on (i, d_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureDiagram {
    sequence: DegreeSequence,
    table: BettiTable,
}

impl PureDiagram {
    pub fn sequence(&self) -> &DegreeSequence {
        &self.sequence
    }

    pub fn table(&self) -> &BettiTable {
        &self.table
    }

    pub fn into_table(self) -> BettiTable {
        self.table
    }

    /// The (necessarily positive) entry at (i, d_i).
    pub fn entry(&self, i: usize) -> Rational {
        self.table.entry(i, self.sequence.get(i))
    }
}

/// The pure diagram pi(d), with entry (-1)^i prod_{k != i} 1/(d_k - d_i)
/// at position (i, d_i). Every entry is strictly positive.
pub fn pure_diagram(d: &DegreeSequence) -> PureDiagram {
    let degrees = d.degrees();
    let mut table = BettiTable::new();
    for (i, &di) in degrees.iter().enumerate() {
        let mut product = BigInt::one();
        for (k, &dk) in degrees.iter().enumerate() {
            if k != i {
                product *= BigInt::from(dk - di);
            }
        }
        let numer = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let value = Rational::new(numer, product);
        debug_assert!(value.is_positive());
        table.set(i, di, value);
    }
    PureDiagram {
        sequence: d.clone(),
        table,
    }
}

/// The normalized pure diagram d_1 * ... * d_s * pi(d); requires d_0 = 0,
/// and then has entry exactly 1 at (0, 0).
pub fn normalized_pure_diagram(d: &DegreeSequence) -> Result<PureDiagram> {
    if d.first() != 0 {
        return Err(Error::NormalizedBaseNotZero(d.first()));
    }
    let diagram = pure_diagram(d);
    let scale: BigInt = d.degrees()[1..].iter().map(|&k| BigInt::from(k)).product();
    let table = table_linear_combination([(Rational::from_integer(scale), diagram.table())]);
    debug_assert!(table.entry(0, 0).is_one());
    Ok(PureDiagram {
        sequence: diagram.sequence,
        table,
    })
}

/// Entrywise exact linear combination; entries that cancel to zero are
/// removed from storage.
pub fn table_linear_combination<'a, I>(terms: I) -> BettiTable
where
    I: IntoIterator<Item = (Rational, &'a BettiTable)>,
{
    let mut out = BettiTable::new();
    for (coefficient, table) in terms {
        if coefficient.is_zero() {
            continue;
        }
        for ((i, j), value) in table.iter() {
            out.add(i, j, &(&coefficient * value));
        }
    }
    out
}

/// The column-wise minimal degrees (min{j : beta_{0,j} != 0}, ...,
/// min{j : beta_{p,j} != 0}) up to the maximal nonzero column p, validated
/// strictly increasing.
pub fn top_strand(table: &BettiTable) -> Result<DegreeSequence> {
    let top = table.max_column().ok_or(Error::EmptyTable)?;
    let mut minima = Vec::with_capacity(top + 1);
    for i in 0..=top {
        minima.push(table.column_min_degree(i).ok_or(Error::ColumnGap(i))?);
    }
    if !minima.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NonIncreasingStrand(minima));
    }
    DegreeSequence::new(minima)
}

/// An ordered chain of pure diagrams with positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    terms: Vec<(DegreeSequence, Rational)>,
}

impl Decomposition {
    /// Validate coefficients (> 0), pairwise comparability, and distinctness;
    /// terms are stored sorted in increasing diagram order.
    pub fn new(mut terms: Vec<(DegreeSequence, Rational)>) -> Result<Self> {
        for (d, c) in &terms {
            if !c.is_positive() {
                return Err(Error::NonpositiveCoefficient {
                    sequence: d.degrees().to_vec(),
                    coefficient: c.clone(),
                });
            }
        }
        for x in 0..terms.len() {
            for y in (x + 1)..terms.len() {
                match diagram_cmp(&terms[x].0, &terms[y].0) {
                    None => {
                        return Err(Error::NotAChain(
                            terms[x].0.degrees().to_vec(),
                            terms[y].0.degrees().to_vec(),
                        ))
                    }
                    Some(Ordering::Equal) => {
                        return Err(Error::DuplicateSequence(terms[x].0.degrees().to_vec()))
                    }
                    _ => {}
                }
            }
        }
        terms.sort_by(|(a, _), (b, _)| diagram_cmp(a, b).expect("validated chain"));
        Ok(Self { terms })
    }

    pub fn empty() -> Self {
        Self { terms: Vec::new() }
    }

    /// Terms in increasing diagram order.
    pub fn terms(&self) -> &[(DegreeSequence, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &DegreeSequence) -> Option<&Rational> {
        self.terms.iter().find(|(s, _)| s == d).map(|(_, c)| c)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    fn seq(degrees: &[i64]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    fn table(entries: &[(usize, i64, Rational)]) -> BettiTable {
        BettiTable::from_entries(entries.iter().cloned())
    }

    #[test]
    fn degree_sequence_rejects_non_increasing() {
        assert!(matches!(
            DegreeSequence::new(vec![3, 3]),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(matches!(
            DegreeSequence::new(vec![4, 2]),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(matches!(DegreeSequence::new(vec![]), Err(Error::EmptySequence)));
    }

    #[test]
    fn pure_diagram_345() {
        let pi = pure_diagram(&seq(&[3, 4, 5]));
        assert_eq!(
            pi.table(),
            &table(&[(0, 3, frac(1, 2)), (1, 4, rat(1)), (2, 5, frac(1, 2))])
        );
    }

    #[test]
    fn pure_diagram_singleton() {
        let pi = pure_diagram(&seq(&[7]));
        assert_eq!(pi.table(), &table(&[(0, 7, rat(1))]));
    }

    #[test]
    fn pure_diagram_023() {
        let pi = pure_diagram(&seq(&[0, 2, 3]));
        assert_eq!(
            pi.table(),
            &table(&[(0, 0, frac(1, 6)), (1, 2, frac(1, 2)), (2, 3, frac(1, 3))])
        );
    }

    #[test]
    fn pure_diagram_0345() {
        let pi = pure_diagram(&seq(&[0, 3, 4, 5]));
        assert_eq!(
            pi.table(),
            &table(&[
                (0, 0, frac(1, 60)),
                (1, 3, frac(1, 6)),
                (2, 4, frac(1, 4)),
                (3, 5, frac(1, 10)),
            ])
        );
    }

    #[test]
    fn normalized_034() {
        let pi = normalized_pure_diagram(&seq(&[0, 3, 4])).unwrap();
        assert_eq!(
            pi.table(),
            &table(&[(0, 0, rat(1)), (1, 3, rat(4)), (2, 4, rat(3))])
        );
    }

    #[test]
    fn normalized_0345() {
        let pi = normalized_pure_diagram(&seq(&[0, 3, 4, 5])).unwrap();
        assert_eq!(
            pi.table(),
            &table(&[(0, 0, rat(1)), (1, 3, rat(10)), (2, 4, rat(15)), (3, 5, rat(6))])
        );
    }

    #[test]
    fn normalized_singleton_zero() {
        let pi = normalized_pure_diagram(&seq(&[0])).unwrap();
        assert_eq!(pi.table(), &table(&[(0, 0, rat(1))]));
    }

    #[test]
    fn normalized_requires_zero_base() {
        assert_eq!(
            normalized_pure_diagram(&seq(&[1, 2])),
            Err(Error::NormalizedBaseNotZero(1))
        );
    }

    #[test]
    fn diagram_order_examples() {
        assert!(diagram_leq(&seq(&[0, 2, 3, 5]), &seq(&[0, 3, 4])));
        assert!(!diagram_leq(&seq(&[0, 3]), &seq(&[0, 2, 3])));
        assert!(diagram_leq(&seq(&[0, 2, 3]), &seq(&[0, 2, 3])));
    }

    #[test]
    fn diagram_order_is_a_partial_order() {
        // all strictly increasing sequences inside [0, 4] of length <= 3
        let mut all = Vec::new();
        for a in 0i64..=4 {
            all.push(seq(&[a]));
            for b in (a + 1)..=4 {
                all.push(seq(&[a, b]));
                for c in (b + 1)..=4 {
                    all.push(seq(&[a, b, c]));
                }
            }
        }
        for x in &all {
            assert!(diagram_leq(x, x));
            for y in &all {
                if diagram_leq(x, y) && diagram_leq(y, x) {
                    assert_eq!(x, y);
                }
                for z in &all {
                    if diagram_leq(x, y) && diagram_leq(y, z) {
                        assert!(diagram_leq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn linear_combination_bsd_example() {
        let combined = table_linear_combination([
            (rat(4), pure_diagram(&seq(&[3, 4, 5])).table()),
            (rat(3), pure_diagram(&seq(&[3, 4])).table()),
            (rat(1), pure_diagram(&seq(&[3])).table()),
        ]);
        assert_eq!(
            combined,
            table(&[(0, 3, rat(6)), (1, 4, rat(7)), (2, 5, rat(2))])
        );
    }

    #[test]
    fn linear_combination_cancels() {
        let t = table(&[(0, 3, rat(6)), (1, 4, rat(7))]);
        let zero = table_linear_combination([(rat(1), &t), (rat(-1), &t)]);
        assert!(zero.is_empty());
    }

    #[test]
    fn linear_combination_quotient_example() {
        let combined = table_linear_combination([
            (rat(20), pure_diagram(&seq(&[0, 3, 4, 5])).table()),
            (rat(8), pure_diagram(&seq(&[0, 3, 4])).table()),
        ]);
        assert_eq!(
            combined,
            table(&[(0, 0, rat(1)), (1, 3, rat(6)), (2, 4, rat(7)), (3, 5, rat(2))])
        );
    }

    #[test]
    fn top_strand_examples() {
        let five_cycle = table(&[(0, 0, rat(1)), (1, 2, rat(5)), (2, 3, rat(5)), (3, 5, rat(1))]);
        assert_eq!(top_strand(&five_cycle).unwrap(), seq(&[0, 2, 3, 5]));

        let ideal = table(&[(0, 3, rat(6)), (1, 4, rat(7)), (2, 5, rat(2))]);
        assert_eq!(top_strand(&ideal).unwrap(), seq(&[3, 4, 5]));

        assert_eq!(top_strand(&table(&[(0, 0, rat(1))])).unwrap(), seq(&[0]));
    }

    #[test]
    fn top_strand_errors() {
        assert_eq!(top_strand(&BettiTable::new()), Err(Error::EmptyTable));

        let gap = table(&[(0, 0, rat(1)), (2, 3, rat(5))]);
        assert_eq!(top_strand(&gap), Err(Error::ColumnGap(1)));

        let flat = table(&[(0, 2, rat(1)), (1, 2, rat(1))]);
        assert_eq!(top_strand(&flat), Err(Error::NonIncreasingStrand(vec![2, 2])));
    }

    #[test]
    fn table_lookup_and_totals() {
        let t = table(&[(0, 3, rat(6)), (1, 4, rat(7)), (1, 5, frac(1, 2))]);
        assert_eq!(t.entry(0, 3), rat(6));
        assert_eq!(t.entry(5, 5), rat(0));
        assert_eq!(t.total_betti(1), frac(15, 2));
        assert_eq!(t.total_betti(2), rat(0));
        assert_eq!(t.max_column(), Some(1));
        assert_eq!(t.column_min_degree(1), Some(4));
    }

    #[test]
    fn decomposition_validates_and_sorts() {
        // given in decreasing order; stored increasing (longest first)
        let dec = Decomposition::new(vec![
            (seq(&[3]), rat(1)),
            (seq(&[3, 4, 5]), rat(4)),
            (seq(&[3, 4]), rat(3)),
        ])
        .unwrap();
        let order: Vec<_> = dec.terms().iter().map(|(d, _)| d.len()).collect();
        assert_eq!(order, vec![3, 2, 1]);
        assert!(dec.is_integral());

        assert!(matches!(
            Decomposition::new(vec![(seq(&[3]), rat(0))]),
            Err(Error::NonpositiveCoefficient { .. })
        ));
        assert!(matches!(
            Decomposition::new(vec![(seq(&[0, 2, 5]), rat(1)), (seq(&[0, 3, 4]), rat(1))]),
            Err(Error::NotAChain(..))
        ));
        assert!(matches!(
            Decomposition::new(vec![(seq(&[3]), rat(1)), (seq(&[3]), rat(2))]),
            Err(Error::DuplicateSequence(_))
        ));
    }

    #[test]
    fn herzog_kuhl_moments_vanish() {
        for degrees in [&[3i64, 4, 5][..], &[0, 2, 3, 5], &[-3, 1, 2, 8], &[0, 3, 4, 5]] {
            let d = seq(degrees);
            let pi = pure_diagram(&d);
            for m in 0..d.top_index() {
                let mut sum = rat(0);
                for (i, &di) in d.degrees().iter().enumerate() {
                    let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
                    let power = Rational::from_integer(num::BigInt::from(di).pow(m as u32));
                    sum += sign * power * pi.entry(i);
                }
                assert!(sum.is_zero(), "moment {m} of pi{degrees:?} = {sum}");
            }
        }
    }
}
