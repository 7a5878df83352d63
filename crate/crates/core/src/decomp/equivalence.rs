use super::{check_same_sum, Decomposition};
use crate::bits::{self, Subset};
use crate::error::Result;
use crate::matroid::Matroid;

/// Split every part into the restrictions to its connected components
/// (padded with loops), drop rank-0 pieces and sort.
pub fn equivalence_canonical(d: &Decomposition) -> Decomposition {
    let parts: Vec<Matroid> = d
        .parts()
        .iter()
        .flat_map(|m| {
            m.components()
                .into_iter()
                .map(move |c| m.restriction_padded(c))
        })
        .collect();
    Decomposition::new(d.n(), parts).expect("pieces keep the ground set")
}

pub fn are_equivalent(d1: &Decomposition, d2: &Decomposition) -> Result<bool> {
    check_same_sum(d1, d2)?;
    Ok(equivalence_canonical(d1) == equivalence_canonical(d2))
}

/// Every set with at least two elements is a circuit of equally many parts
/// in both decompositions.
pub fn is_preserving_pair(d1: &Decomposition, d2: &Decomposition) -> Result<bool> {
    check_same_sum(d1, d2)?;
    let circuit_multiset = |d: &Decomposition| {
        let mut all: Vec<Subset> = d
            .parts()
            .iter()
            .flat_map(|m| m.circuits())
            .filter(|&c| bits::size(c) > 1)
            .collect();
        all.sort_unstable();
        all
    };
    Ok(circuit_multiset(d1) == circuit_multiset(d2))
}
