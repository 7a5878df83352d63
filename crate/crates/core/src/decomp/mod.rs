//! Matroid-sum decompositions and everything derived from them.

mod certificate;
mod chromatic;
mod equivalence;
mod search;
mod witness;

pub use certificate::{
    indecomposability_certificate, k_decomposability_certificate, incidence_sets, IncidenceSet,
};
pub use chromatic::{
    chromatic_number, chromatic_polynomial, chromatic_polynomial_of, count_ordered,
    count_ordered_of, ChromaticNumber,
};
pub use equivalence::{are_equivalent, equivalence_canonical, is_preserving_pair};
pub use search::{enumerate_decompositions, SearchOptions, DEFAULT_BUDGET};
pub use witness::{graph_multiple_witness, polymatroid_graph_witness};

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::polymatroid::Polymatroid;

/// A multiset of positive-rank matroids on a common ground set, stored
/// sorted in ascending table order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    n: usize,
    parts: Vec<Matroid>,
}

impl Decomposition {
    /// Rank-0 parts are dropped; the rest are sorted.
    pub fn new(n: usize, parts: Vec<Matroid>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|p| p.n() != n) {
            return Err(Error::GroundMismatch {
                left: n,
                right: p.n(),
            });
        }
        let mut parts: Vec<Matroid> = parts.into_iter().filter(|p| !p.is_zero()).collect();
        parts.sort();
        Ok(Decomposition { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Matroid] {
        &self.parts
    }

    /// Number of positive-rank parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts with their multiplicities, in ascending order.
    pub fn multiplicities(&self) -> Vec<(&Matroid, usize)> {
        let mut out: Vec<(&Matroid, usize)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The pointwise sum of the parts.
    pub fn sum(&self) -> Polymatroid {
        let mut table = vec![0u32; 1 << self.n];
        for p in &self.parts {
            for (t, r) in table.iter_mut().zip(p.table()) {
                *t += r;
            }
        }
        Polymatroid::from_parts_unchecked(GroundSet::new(self.n), table)
    }

    pub fn decomposes(&self, rho: &Polymatroid) -> bool {
        rho.n() == self.n && rho.table() == self.sum().table()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", p.table())?;
        }
        f.write_str("}")
    }
}

/// Outcome of a sound but incomplete indecomposability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Indecomposable(String),
    Unknown,
}

impl Verdict {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Verdict::Indecomposable(_))
    }
}

fn check_same_sum(d1: &Decomposition, d2: &Decomposition) -> Result<()> {
    if d1.n != d2.n {
        return Err(Error::GroundMismatch {
            left: d1.n,
            right: d2.n,
        });
    }
    if d1.sum() != d2.sum() {
        return Err(Error::Precondition(
            "the decompositions sum to different polymatroids".into(),
        ));
    }
    Ok(())
}

/// Check that `rho` satisfies `ρ(E − e) = ρ(E)` and `ρ(e) = i` for every
/// element, the hypotheses under which [`dual_transport`] is a bijection.
pub fn check_dual_bijection_conditions(rho: &Polymatroid, i: u32) -> Result<()> {
    let full = rho.full();
    for e in 0..rho.n() {
        if rho.singleton_rank(e) != i {
            return Err(Error::Precondition(format!(
                "element {e} has rank {} rather than {i}",
                rho.singleton_rank(e)
            )));
        }
        if rho.rank(full & !bits::singleton(e)) != rho.total_rank() {
            return Err(Error::Precondition(format!(
                "deleting element {e} lowers the total rank"
            )));
        }
    }
    Ok(())
}

/// Map each part `M` with loop set `L` to `(M \ L)* ⊕ U_{0,L}`.
///
/// Under [`check_dual_bijection_conditions`] the result decomposes the
/// `i`-dual of the decomposed polymatroid.
pub fn dual_transport(d: &Decomposition) -> Result<Decomposition> {
    let parts = d
        .parts
        .iter()
        .map(|m| {
            let loops = m.loops();
            let keep = m.full() & !loops;
            m.delete(loops)?.dual().pad_with_loops(keep, d.n)
        })
        .collect::<Result<Vec<_>>>()?;
    Decomposition::new(d.n, parts)
}
