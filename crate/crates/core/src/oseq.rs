//! Macaulay representations, the growth bound a^<d>, O-sequence validation,
//! half-space slacks, and the extremal-ray decomposition of the cone of
//! finite O-sequences.
//!
//! The cone is parameterized by the number of variables d; the tight choice
//! d = alpha_1 recovers the inequality (alpha_1 + j) alpha_j >= (j + 1)
//! alpha_{j+1}. Bounds are computed in arbitrary precision so that 64-bit
//! inputs can never overflow them.

use std::collections::HashSet;
use std::fmt;

use num::{BigInt, BigUint, One, Signed, Zero};

use crate::combinatorics::{binomial, binomial_rat};
use crate::{Error, Rational, Result};

/// Upper limits for the enumerative growth oracle.
pub const ORACLE_MAX_A: u64 = 60;
pub const ORACLE_MAX_D: u32 = 5;

/// A finite candidate O-sequence: nonnegative integers with leading entry 1
/// and trailing zeros trimmed. Macaulay growth is a separate predicate
/// ([`is_o_sequence`]), checked by the operations that require it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OSequence {
    values: Vec<u64>,
}

impl OSequence {
    pub fn new(mut values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyOSequence);
        }
        if values[0] != 1 {
            return Err(Error::LeadingEntryNotOne(values[0]));
        }
        while values.len() > 1 && *values.last().expect("nonempty") == 0 {
            values.pop();
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The socle degree t: the last index with a nonzero entry.
    pub fn socle_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// Entry at index j, reading absent indices as zero.
    pub fn get(&self, j: usize) -> u64 {
        self.values.get(j).copied().unwrap_or(0)
    }

    /// The degree-one entry alpha_1 (zero for the sequence (1)).
    pub fn alpha1(&self) -> u64 {
        self.get(1)
    }

    /// True when the Macaulay growth bounds hold.
    pub fn is_valid(&self) -> bool {
        is_o_sequence(&self.values)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.values.iter().map(|&v| rational_from_u64(v)).collect()
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, value) in self.values.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{value}")?;
        }
        Ok(())
    }
}

/// The unique expansion a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_t, t)
/// with a_d > a_{d-1} > ... > a_t >= t >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    /// The (top, bottom) pairs in decreasing bottom order.
    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Evaluate the expansion back to the represented integer.
    pub fn value(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(top, bottom)| binomial(top, bottom as u64))
            .sum()
    }

    /// The growth bound: shift every binomial up by one in both parameters.
    pub fn bound(&self) -> BigUint {
        self.terms
            .iter()
            .map(|&(top, bottom)| binomial(top + 1, bottom as u64 + 1))
            .sum()
    }
}

/// Greedy Macaulay representation of a in degree d.
pub fn macaulay_representation(a: u64, d: u32) -> Result<MacaulayRep> {
    if a == 0 || d == 0 {
        return Err(Error::MacaulayDomain { a, d });
    }
    let mut terms = Vec::new();
    let mut remainder = BigUint::from(a);
    let mut degree = d;
    while !remainder.is_zero() {
        debug_assert!(degree >= 1, "remainder is absorbed by degree 1 at the latest");
        let top = if degree == 1 {
            u64::try_from(&remainder).expect("remainder <= a fits in u64")
        } else {
            max_binomial_top(&remainder, degree)
        };
        remainder -= binomial(top, degree as u64);
        terms.push((top, degree));
        degree -= 1;
    }
    debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
    debug_assert!(terms.iter().all(|&(top, bottom)| top >= bottom as u64 && bottom >= 1));
    Ok(MacaulayRep { terms })
}

/// Largest m with C(m, degree) <= remainder, found by galloping then
/// bisecting; degree >= 2 here, so the search range is tiny.
fn max_binomial_top(remainder: &BigUint, degree: u32) -> u64 {
    let k = degree as u64;
    let mut hi = k + 1;
    while binomial(hi, k) <= *remainder {
        hi *= 2;
    }
    let mut lo = k; // C(k, k) = 1 <= remainder
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k) <= *remainder {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay's growth bound a^<d>, with 0^<d> = 0.
pub fn macaulay_bound(a: u64, d: u32) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::MacaulayDomain { a, d });
    }
    if a == 0 {
        return Ok(BigUint::zero());
    }
    Ok(macaulay_representation(a, d)?.bound())
}

/// Brute-force growth oracle, independent of the binomial expansion.
///
/// Take L to be the a lexicographically smallest degree-d monomials in a
/// variables (larger exponent on an earlier variable wins); count the
/// degree-(d+1) monomials all of whose degree-d divisors lie in L. Equals
/// `macaulay_bound(a, d)` on its domain (1 <= a <= 60, 1 <= d <= 5).
pub fn lex_growth_oracle(a: u64, d: u32) -> Result<u64> {
    if a < 1 || d < 1 || a > ORACLE_MAX_A || d > ORACLE_MAX_D {
        return Err(Error::OracleRange { a, d });
    }
    // The a smallest monomials only touch the trailing block of variables:
    // any monomial with a positive exponent on an earlier variable is larger
    // than every monomial supported on the block. A degree-(d+1) monomial
    // touching a variable outside the block always has a degree-d divisor
    // outside L, so the count within the block is the full count.
    let mut width = 1usize;
    while binomial(width as u64 + d as u64 - 1, d as u64) < BigUint::from(a) {
        width += 1;
    }

    let mut degree_d = enumerate_exponents(width, d);
    degree_d.sort();
    let lex_smallest: HashSet<Vec<u32>> = degree_d.into_iter().take(a as usize).collect();

    let mut count = 0u64;
    for candidate in enumerate_exponents(width, d + 1) {
        let all_divisors_in = (0..width).all(|p| {
            if candidate[p] == 0 {
                return true;
            }
            let mut divisor = candidate.clone();
            divisor[p] -= 1;
            lex_smallest.contains(&divisor)
        });
        if all_divisors_in {
            count += 1;
        }
    }
    Ok(count)
}

/// All exponent vectors of total degree `degree` over `width` variables.
fn enumerate_exponents(width: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; width];
    fill_exponents(&mut out, &mut current, 0, degree);
    out
}

fn fill_exponents(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, position: usize, remaining: u32) {
    if position + 1 == current.len() {
        current[position] = remaining;
        out.push(current.clone());
        current[position] = 0;
        return;
    }
    for value in 0..=remaining {
        current[position] = value;
        fill_exponents(out, current, position + 1, remaining - value);
    }
    current[position] = 0;
}

/// First violated Macaulay condition of a raw integer list, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OViolation {
    Empty,
    LeadingEntry(u64),
    Growth {
        /// Index j + 1 of the offending entry.
        index: usize,
        /// The base h_j and its degree j.
        base: u64,
        degree: u32,
        bound: BigUint,
        actual: u64,
    },
}

impl fmt::Display for OViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OViolation::Empty => write!(f, "sequence is empty"),
            OViolation::LeadingEntry(h0) => write!(f, "h_0 = {h0}, expected 1"),
            OViolation::Growth {
                index,
                base,
                degree,
                bound,
                actual,
            } => write!(f, "h_{index} = {actual} exceeds {base}^<{degree}> = {bound}"),
        }
    }
}

/// Locate the first violated growth bound; `None` means the list is an
/// O-sequence. h_1 is unconstrained: the bounds apply for j >= 1 only.
pub fn o_sequence_violation(h: &[u64]) -> Option<OViolation> {
    if h.is_empty() {
        return Some(OViolation::Empty);
    }
    if h[0] != 1 {
        return Some(OViolation::LeadingEntry(h[0]));
    }
    for j in 1..h.len().saturating_sub(1) {
        let bound = macaulay_bound(h[j], j as u32).expect("j >= 1");
        if BigUint::from(h[j + 1]) > bound {
            return Some(OViolation::Growth {
                index: j + 1,
                base: h[j],
                degree: j as u32,
                bound,
                actual: h[j + 1],
            });
        }
    }
    None
}

/// True iff h_0 = 1 and h_{j+1} <= h_j^<j> for every j >= 1 within the list.
pub fn is_o_sequence(h: &[u64]) -> bool {
    o_sequence_violation(h).is_none()
}

/// The O-sequence (C(d+j-1, j))_{j=0..t} of the quotient by the (t+1)-st
/// power of the maximal ideal in d variables.
pub fn max_ideal_power_oseq(d: u32, t: usize) -> Result<OSequence> {
    if d == 0 {
        return Err(Error::NonpositiveDegree);
    }
    let values = (0..=t)
        .map(|j| {
            let entry = binomial(d as u64 + j as u64 - 1, j as u64);
            u64::try_from(&entry).map_err(|_| Error::EntryTooLarge(entry.clone()))
        })
        .collect::<Result<Vec<u64>>>()?;
    OSequence::new(values)
}

/// Half-space slacks s_j = (d + j) alpha_j - (j + 1) alpha_{j+1} for
/// j = 0..t, over an arbitrary rational cone point with alpha_0 = 1.
pub fn halfspace_slacks_rat(alpha: &[Rational], d: u32) -> Result<Vec<Rational>> {
    if d == 0 {
        return Err(Error::NonpositiveDegree);
    }
    match alpha.first() {
        Some(first) if first.is_one() => {}
        Some(first) => return Err(Error::ConeBaseNotOne(first.clone())),
        None => return Err(Error::EmptyOSequence),
    }
    if let Some((index, value)) = alpha.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeConeEntry {
            index,
            value: value.clone(),
        });
    }
    let alpha1 = alpha.get(1).cloned().unwrap_or_else(Rational::zero);
    if crate::rat(d as i64) < alpha1 {
        return Err(Error::AlphaOneExceedsD { alpha1, d });
    }
    let slacks = (0..alpha.len())
        .map(|j| {
            let current = &alpha[j];
            let next = alpha.get(j + 1).cloned().unwrap_or_else(Rational::zero);
            crate::rat(d as i64 + j as i64) * current - crate::rat(j as i64 + 1) * next
        })
        .collect();
    Ok(slacks)
}

/// Half-space slacks of an integer O-sequence; see [`halfspace_slacks_rat`].
pub fn halfspace_slacks(alpha: &OSequence, d: u32) -> Result<Vec<Rational>> {
    halfspace_slacks_rat(&alpha.to_rationals(), d)
}

/// Membership in the closed simplicial cone: every slack is nonnegative.
pub fn in_cone(alpha: &[Rational], d: u32) -> Result<bool> {
    Ok(halfspace_slacks_rat(alpha, d)?
        .iter()
        .all(|s| !s.is_negative()))
}

/// Coefficients of alpha over the extremal rays e(j) = h of the quotient by
/// the (j+1)-st power of the maximal ideal:
/// c_j = alpha_j / C(d+j-1, j) - alpha_{j+1} / C(d+j, j+1), j = 0..t.
///
/// The coefficients sum to exactly 1 and are all nonnegative precisely when
/// alpha lies in the cone.
pub fn oseq_decompose(alpha: &OSequence, d: u32) -> Result<Vec<Rational>> {
    if d == 0 {
        return Err(Error::NonpositiveDegree);
    }
    if alpha.alpha1() > d as u64 {
        return Err(Error::AlphaOneExceedsD {
            alpha1: rational_from_u64(alpha.alpha1()),
            d,
        });
    }
    let t = alpha.socle_degree();
    let coefficients = (0..=t)
        .map(|j| {
            let current = rational_from_u64(alpha.get(j)) / binomial_rat(d as u64 + j as u64 - 1, j as u64);
            let next = rational_from_u64(alpha.get(j + 1))
                / binomial_rat(d as u64 + j as u64, j as u64 + 1);
            current - next
        })
        .collect();
    Ok(coefficients)
}

/// Entrywise sum of coefficient_j * e(j); the inverse of [`oseq_decompose`]
/// on cone points. The result has one entry per coefficient.
pub fn oseq_recompose(coefficients: &[Rational], d: u32) -> Vec<Rational> {
    assert!(d >= 1, "d must be a positive integer");
    let mut values = vec![Rational::zero(); coefficients.len()];
    for (j, coefficient) in coefficients.iter().enumerate() {
        if coefficient.is_zero() {
            continue;
        }
        for (entry, value) in values.iter_mut().enumerate().take(j + 1) {
            *value += coefficient * binomial_rat(d as u64 + entry as u64 - 1, entry as u64);
        }
    }
    values
}

fn rational_from_u64(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
