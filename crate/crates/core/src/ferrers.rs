//! d-uniform Ferrers hypergraphs: downward-closed sets of d-tuples of
//! positive integers. They give a second, independent route to the quotient
//! decompositions of the `linear` module, which the test suite uses as a
//! cross-check: uniqueness of the chain decomposition forces the two paths
//! to agree term by term.

use std::collections::{BTreeMap, BTreeSet};

use num::BigInt;

use crate::combinatorics::factorial;
use crate::oseq::OSequence;
use crate::tables::{Decomposition, DegreeSequence};
use crate::{Error, Rational, Result};

/// A downward-closed finite set of d-tuples of positive integers.
/// Nonempty sets always contain (1, ..., 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersHypergraph {
    dimension: usize,
    tuples: BTreeSet<Vec<u32>>,
}

impl FerrersHypergraph {
    /// Smallest downward-closed superset of the generators.
    pub fn closure<I>(generators: I, dimension: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut tuples = BTreeSet::new();
        let mut pending: Vec<Vec<u32>> = Vec::new();
        for tuple in generators {
            validate_tuple(&tuple, dimension)?;
            pending.push(tuple);
        }
        while let Some(tuple) = pending.pop() {
            if !tuples.insert(tuple.clone()) {
                continue;
            }
            for position in 0..dimension {
                if tuple[position] >= 2 {
                    let mut smaller = tuple.clone();
                    smaller[position] -= 1;
                    if !tuples.contains(&smaller) {
                        pending.push(smaller);
                    }
                }
            }
        }
        Ok(Self { dimension, tuples })
    }

    /// Adopt a set that is already downward closed; errors with a witness
    /// pair when it is not.
    pub fn from_closed_tuples<I>(tuples: I, dimension: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut set = BTreeSet::new();
        for tuple in tuples {
            validate_tuple(&tuple, dimension)?;
            set.insert(tuple);
        }
        for tuple in &set {
            for position in 0..dimension {
                if tuple[position] >= 2 {
                    let mut smaller = tuple.clone();
                    smaller[position] -= 1;
                    if !set.contains(&smaller) {
                        return Err(Error::NotDownwardClosed {
                            present: tuple.clone(),
                            missing: smaller,
                        });
                    }
                }
            }
        }
        Ok(Self {
            dimension,
            tuples: set,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn tuples(&self) -> &BTreeSet<Vec<u32>> {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[u32]) -> bool {
        self.tuples.contains(tuple)
    }
}

fn validate_tuple(tuple: &[u32], dimension: usize) -> Result<()> {
    if tuple.len() != dimension {
        return Err(Error::WrongArity {
            tuple: tuple.to_vec(),
            dimension,
        });
    }
    if tuple.iter().any(|&coordinate| coordinate == 0) {
        return Err(Error::NonpositiveCoordinate(tuple.to_vec()));
    }
    Ok(())
}

/// The O-sequence of a nonempty hypergraph: alpha_j counts the tuples of
/// coordinate sum j + d. alpha_0 = 1 because only (1, ..., 1) has sum d.
pub fn ferrers_alpha(hypergraph: &FerrersHypergraph) -> Result<OSequence> {
    if hypergraph.is_empty() {
        return Err(Error::EmptyFerrers);
    }
    let d = hypergraph.dimension() as u64;
    let max_sum = hypergraph
        .tuples()
        .iter()
        .map(|t| t.iter().map(|&c| c as u64).sum::<u64>())
        .max()
        .expect("nonempty");
    let mut counts = vec![0u64; (max_sum - d + 1) as usize];
    for tuple in hypergraph.tuples() {
        let sum: u64 = tuple.iter().map(|&c| c as u64).sum();
        counts[(sum - d) as usize] += 1;
    }
    OSequence::new(counts)
}

/// The quotient decomposition read off the hypergraph: for each coordinate
/// position j and each projected (d-1)-tuple S, the completing coordinate
/// ranges over 1..=n_S, and the term n_S * k_S! lands on the degree
/// sequence (0, d, ..., d + k_S) with k_S = n_S - d + sum(S). Contributions
/// on the same sequence are aggregated before the chain is built.
pub fn ferrers_quotient_decomposition(hypergraph: &FerrersHypergraph) -> Result<Decomposition> {
    let d = hypergraph.dimension();
    if d < 2 {
        return Err(Error::FerrersDimensionTooSmall(d));
    }
    if hypergraph.is_empty() {
        return Err(Error::EmptyFerrers);
    }

    let mut aggregated: BTreeMap<usize, Rational> = BTreeMap::new();
    for position in 0..d {
        let mut projection: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        for tuple in hypergraph.tuples() {
            let mut rest = tuple.clone();
            let coordinate = rest.remove(position);
            let max = projection.entry(rest).or_insert(0);
            *max = (*max).max(coordinate);
        }
        for (rest, n_s) in projection {
            let rest_sum: u64 = rest.iter().map(|&c| c as u64).sum();
            let k_s = (n_s as u64 + rest_sum - d as u64) as usize;
            let weight = Rational::from_integer(
                BigInt::from(n_s) * BigInt::from(factorial(k_s as u64)),
            );
            *aggregated.entry(k_s).or_insert_with(|| crate::rat(0)) += weight;
        }
    }

    let terms = aggregated
        .into_iter()
        .map(|(k, coefficient)| {
            let mut degrees = vec![0i64];
            degrees.extend((0..=k).map(|step| d as i64 + step as i64));
            let sequence = DegreeSequence::new(degrees).expect("strictly increasing");
            (sequence, coefficient)
        })
        .collect();
    Decomposition::new(terms)
}

/// Every nonempty downward-closed subset of [bound]^dimension, streamed
/// exactly once in a deterministic order. Limited to dimension <= 3 and
/// bound <= 4.
pub fn enumerate_ferrers(dimension: usize, bound: u32) -> Result<FerrersEnumeration> {
    if !(1..=3).contains(&dimension) || !(1..=4).contains(&bound) {
        return Err(Error::EnumerationRange { dimension, bound });
    }
    let cells = (bound as usize).pow(dimension as u32 - 1);
    Ok(FerrersEnumeration {
        dimension,
        bound,
        heights: vec![0; cells],
        exhausted: false,
    })
}

/// Lazy enumerator over order ideals, represented as height arrays: the
/// ideal contains (x_1, ..., x_{d-1}, v) iff v <= height(x_1, ..., x_{d-1}),
/// with heights weakly decreasing along every coordinate direction. Each
/// `next` advances the array to its lexicographic successor among valid
/// arrays, so every ideal appears exactly once.
#[derive(Debug, Clone)]
pub struct FerrersEnumeration {
    dimension: usize,
    bound: u32,
    heights: Vec<u32>,
    exhausted: bool,
}

impl FerrersEnumeration {
    /// Directly preceding cells (one coordinate decremented) of `cell`.
    fn predecessors(&self, cell: usize) -> Vec<usize> {
        let axes = self.dimension - 1;
        let base = self.bound as usize;
        let mut out = Vec::with_capacity(axes);
        let mut stride = 1usize;
        for _ in 0..axes {
            let digit = (cell / stride) % base;
            if digit > 0 {
                out.push(cell - stride);
            }
            stride *= base;
        }
        out
    }

    fn upper_bound(&self, cell: usize) -> u32 {
        self.predecessors(cell)
            .into_iter()
            .map(|p| self.heights[p])
            .min()
            .unwrap_or(self.bound)
    }

    fn advance(&mut self) -> bool {
        for cell in (0..self.heights.len()).rev() {
            if self.heights[cell] < self.upper_bound(cell) {
                self.heights[cell] += 1;
                for later in (cell + 1)..self.heights.len() {
                    self.heights[later] = 0;
                }
                return true;
            }
        }
        false
    }

    fn materialize(&self) -> FerrersHypergraph {
        let axes = self.dimension - 1;
        let base = self.bound as usize;
        let mut tuples = BTreeSet::new();
        for (cell, &height) in self.heights.iter().enumerate() {
            if height == 0 {
                continue;
            }
            let mut prefix = Vec::with_capacity(self.dimension);
            let mut rest = cell;
            for _ in 0..axes {
                prefix.push((rest % base) as u32 + 1);
                rest /= base;
            }
            prefix.reverse();
            for value in 1..=height {
                let mut tuple = prefix.clone();
                tuple.push(value);
                tuples.insert(tuple);
            }
        }
        FerrersHypergraph {
            dimension: self.dimension,
            tuples,
        }
    }
}

impl Iterator for FerrersEnumeration {
    type Item = FerrersHypergraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        if !self.advance() {
            self.exhausted = true;
            return None;
        }
        Some(self.materialize())
    }
}
