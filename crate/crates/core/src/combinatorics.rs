//! Exact binomial coefficients and factorials.

use num::{BigInt, BigUint, One};

use crate::Rational;

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |acc, k| acc * k)
}

/// Binomial coefficient as a rational, for entrywise table arithmetic.
pub fn binomial_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k)))
}

/// n! as a rational.
pub fn factorial_rat(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}
