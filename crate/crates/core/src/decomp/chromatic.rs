use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::search::{enumerate_decompositions, SearchOptions};
use super::Decomposition;
use crate::error::Result;
use crate::poly::Poly;
use crate::polymatroid::Polymatroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChromaticNumber {
    Finite(usize),
    /// No decomposition exists.
    Infinite,
}

impl fmt::Display for ChromaticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChromaticNumber::Finite(k) => write!(f, "{k}"),
            ChromaticNumber::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for ChromaticNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ChromaticNumber::Finite(k) => s.serialize_u64(*k as u64),
            ChromaticNumber::Infinite => s.serialize_str("infinity"),
        }
    }
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `Σ_D (x)_{i(D)} / Π_j a_j(D)!` over the given decompositions.
pub fn chromatic_polynomial_of(ds: &[Decomposition]) -> Poly {
    ds.iter()
        .map(|d| {
            let denom: BigUint = d
                .multiplicities()
                .iter()
                .map(|&(_, a)| factorial(a))
                .product();
            let c = BigRational::new(1.into(), denom.into());
            Poly::falling_factorial(d.len()).scale(&c)
        })
        .sum()
}

pub fn chromatic_polynomial(rho: &Polymatroid, opts: &SearchOptions) -> Result<Poly> {
    Ok(chromatic_polynomial_of(&enumerate_decompositions(rho, opts)?))
}

/// Number of ordered `k`-tuples of matroids summing to the decomposed
/// polymatroid: each multiset with `i ≤ k` positive parts and
/// multiplicities `a_j` yields `k! / ((k − i)! Π a_j!)` tuples.
pub fn count_ordered_of(ds: &[Decomposition], k: usize) -> BigUint {
    ds.iter()
        .filter(|d| d.len() <= k)
        .map(|d| {
            let denom: BigUint = factorial(k - d.len())
                * d.multiplicities()
                    .iter()
                    .map(|&(_, a)| factorial(a))
                    .product::<BigUint>();
            factorial(k) / denom
        })
        .fold(BigUint::zero(), |acc, c| acc + c)
}

pub fn count_ordered(rho: &Polymatroid, k: usize, opts: &SearchOptions) -> Result<BigUint> {
    Ok(count_ordered_of(&enumerate_decompositions(rho, opts)?, k))
}

/// Least number of parts over all decompositions, at least 1.
pub fn chromatic_number(rho: &Polymatroid, opts: &SearchOptions) -> Result<ChromaticNumber> {
    let ds = enumerate_decompositions(rho, opts)?;
    Ok(ds
        .iter()
        .map(|d| d.len().max(1))
        .min()
        .map_or(ChromaticNumber::Infinite, ChromaticNumber::Finite))
}
