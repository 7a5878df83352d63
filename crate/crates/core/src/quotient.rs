//! `k`-quotient polymatroids: sums `r_{M_1} + ⋯ + r_{M_k}` in which each
//! `M_{i+1}` is a quotient of `M_i`.

use serde::Serialize;

use crate::bits::{self, Subset};
use crate::error::{Error, Result};
use crate::matroid::{is_quotient, Matroid};
use crate::polymatroid::Polymatroid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientChain {
    parts: Vec<Matroid>,
}

impl QuotientChain {
    pub fn parts(&self) -> &[Matroid] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Why the recurrence does not produce a quotient chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainFailure {
    /// Reaching `set` from `set − {e, f}` gives level `level` different
    /// ranks depending on whether `e` or `f` is added first.
    IllDefined {
        level: usize,
        set: Subset,
        e: usize,
        f: usize,
        e_first: u32,
        f_first: u32,
    },
    NotMatroid { level: usize },
    NotQuotient { level: usize },
    SumMismatch { set: Subset },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainOutcome {
    Chain(QuotientChain),
    Failure(ChainFailure),
}

fn require_k_polymatroid(rho: &Polymatroid, k: usize) -> Result<()> {
    match (0..rho.n()).find(|&e| rho.singleton_rank(e) as usize > k) {
        Some(e) => Err(Error::NotKPolymatroid {
            k: k as u32,
            element: e,
            rank: rho.singleton_rank(e),
        }),
        None => Ok(()),
    }
}

/// Level `i` of the recurrence: adding `y` to `X` raises the rank exactly
/// when `ρ(X ∪ y) ≥ ρ(X) + i`. Each set is reached through its lowest
/// element and compared against every other last step.
fn level_table(rho: &Polymatroid, i: u32) -> std::result::Result<Vec<u32>, (Subset, usize, usize, u32, u32)> {
    let full = rho.full();
    let mut r = vec![0u32; full as usize + 1];
    let step = |r: &[u32], z: Subset, last: usize| {
        let x = z & !bits::singleton(last);
        r[x as usize] + u32::from(rho.rank(z) >= rho.rank(x) + i)
    };
    for z in 1..=full {
        let e = z.trailing_zeros() as usize;
        // `e` added last, so anything else in `z` came first.
        let value = step(&r, z, e);
        for f in bits::elements(z & !bits::singleton(e)) {
            let other = step(&r, z, f);
            if other != value {
                return Err((z, e, f, other, value));
            }
        }
        r[z as usize] = value;
    }
    Ok(r)
}

/// Run the recurrence for levels `1..=k` and check the result is a
/// quotient chain summing to `ρ`.
pub fn recover_chain(rho: &Polymatroid, k: usize) -> Result<ChainOutcome> {
    require_k_polymatroid(rho, k)?;
    // Levels are scanned from the top so that a conflict is reported at
    // the highest level where it occurs.
    let mut parts = Vec::with_capacity(k);
    for level in (1..=k).rev() {
        let table = match level_table(rho, level as u32) {
            Ok(t) => t,
            Err((set, e, f, e_first, f_first)) => {
                return Ok(ChainOutcome::Failure(ChainFailure::IllDefined {
                    level,
                    set,
                    e,
                    f,
                    e_first,
                    f_first,
                }))
            }
        };
        let m = Polymatroid::new(rho.ground().clone(), table)
            .ok()
            .and_then(|p| Matroid::new(p).ok());
        match m {
            Some(m) => parts.push(m),
            None => return Ok(ChainOutcome::Failure(ChainFailure::NotMatroid { level })),
        }
    }
    parts.reverse();
    for level in 1..k {
        if !is_quotient(&parts[level], &parts[level - 1])? {
            return Ok(ChainOutcome::Failure(ChainFailure::NotQuotient { level: level + 1 }));
        }
    }
    if let Some(set) = (0..=rho.full()).find(|&s| parts.iter().map(|m| m.rank(s)).sum::<u32>() != rho.rank(s)) {
        return Ok(ChainOutcome::Failure(ChainFailure::SumMismatch { set }));
    }
    Ok(ChainOutcome::Chain(QuotientChain { parts }))
}

pub fn is_k_quotient(rho: &Polymatroid, k: usize) -> bool {
    matches!(recover_chain(rho, k), Ok(ChainOutcome::Chain(_)))
}

/// The least `k ≤ k_max` with `ρ` a `k`-quotient polymatroid.
pub fn minimal_quotient_order(rho: &Polymatroid, k_max: usize) -> Option<usize> {
    (0..=k_max).find(|&k| is_k_quotient(rho, k))
}

/// A two-element minor isomorphic to `ρ_{a,b,c}`, where `ρ(e) = b`,
/// `ρ(f) = c` and `ρ({e, f}) = a + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExcludedMinor {
    pub deleted: Subset,
    pub contracted: Subset,
    pub e: usize,
    pub f: usize,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

/// Match a two-element table against the excluded minors for `𝒬_k`.
pub fn as_excluded_minor(table: &[u32], k: usize) -> Option<(u32, u32, u32, bool)> {
    let [_, x, y, z] = *table else { return None };
    let (b, c, swapped) = if x < y { (x, y, false) } else { (y, x, true) };
    let a = z.checked_sub(c)?;
    (a < b && b < c && c as usize <= k).then_some((a, b, c, swapped))
}

/// First minor on two elements isomorphic to some `ρ_A` with
/// `A ⊆ {0, …, k}`; one exists exactly when `ρ ∉ 𝒬_k`.
pub fn excluded_minor_search(rho: &Polymatroid, k: usize) -> Result<Option<ExcludedMinor>> {
    require_k_polymatroid(rho, k)?;
    for keep in bits::subsets_of_size(rho.full(), 2) {
        let lo = keep.trailing_zeros() as usize;
        let hi = 31 - keep.leading_zeros() as usize;
        for (deleted, contracted) in rho.minors_onto(keep) {
            let minor = rho.minor(deleted, contracted)?;
            if let Some((a, b, c, swapped)) = as_excluded_minor(minor.table(), k) {
                let (e, f) = if swapped { (hi, lo) } else { (lo, hi) };
                return Ok(Some(ExcludedMinor {
                    deleted,
                    contracted,
                    e,
                    f,
                    a,
                    b,
                    c,
                }));
            }
        }
    }
    Ok(None)
}

/// `r(M_1) − r(M_2)` for a chain of length two.
pub fn rank_difference(chain: &QuotientChain) -> Result<u32> {
    match chain.parts() {
        [m1, m2] => Ok(m1.total_rank() - m2.total_rank()),
        parts => Err(Error::Precondition(format!(
            "rank difference needs a chain of length 2, got {}",
            parts.len()
        ))),
    }
}

/// Whether some minor of `ρ` equals the free matroid `U_{m,m}`.
pub fn has_free_minor(rho: &Polymatroid, m: usize) -> bool {
    bits::subsets_of_size(rho.full(), m).any(|keep| {
        rho.minors_onto(keep).any(|(_, contracted)| {
            let base = rho.rank(contracted);
            bits::subsets_of(keep).all(|x| rho.rank(x | contracted) - base == bits::size(x) as u32)
        })
    })
}
