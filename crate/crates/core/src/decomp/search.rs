//! Exhaustive search for all multisets of positive-rank matroids summing to
//! a polymatroid.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::certificate::incidence_sets;
use super::Decomposition;
use crate::bits::{self, Subset};
use crate::error::{Error, Result};
use crate::matroid::{matroid_summands, Matroid};
use crate::polymatroid::{is_valid_table, Polymatroid};

/// Default node budget for a single search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop extending a partial multiset at this many parts. `None` means
    /// unbounded; `ρ(E)` parts always suffice.
    pub max_parts: Option<usize>,
    /// Search nodes allowed before giving up with [`Error::Incomplete`].
    pub budget: u64,
    /// Use incidence sets to force parallel classes.
    pub accelerate: bool,
    /// Fan out over the choice of the first part.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_parts: None,
            budget: DEFAULT_BUDGET,
            accelerate: false,
            parallel: true,
        }
    }
}

impl SearchOptions {
    pub fn accelerated() -> Self {
        SearchOptions {
            accelerate: true,
            ..Self::default()
        }
    }
}

struct Engine {
    n: usize,
    /// Positive-rank candidate parts in descending table order.
    cands: Vec<Matroid>,
    /// Per candidate, the incidence sets it claims (all elements parallel).
    claims: Vec<u64>,
    /// Bitmask of all incidence sets that must be claimed.
    required: u64,
    max_parts: usize,
    budget: u64,
    nodes: AtomicU64,
}

/// How a candidate part meets an incidence set `x`: `Some(true)` if all of
/// `x` is parallel in it, `Some(false)` if no two elements of `x` are
/// parallel (and, for a full set, `x` minus loops is independent), and
/// `None` if neither holds, which rules the candidate out.
fn incidence_role(m: &Matroid, x: Subset, full: bool) -> Option<bool> {
    let loops_in_x = x & m.loops();
    if loops_in_x == 0 && m.rank(x) == 1 {
        return Some(true);
    }
    let live = x & !loops_in_x;
    let parallel_pair = bits::elements(live).any(|e| {
        bits::elements(live & !bits::full(e + 1))
            .any(|f| m.rank(bits::singleton(e) | bits::singleton(f)) == 1)
    });
    if parallel_pair || (full && m.rank(live) as usize != bits::size(live)) {
        None
    } else {
        Some(false)
    }
}

impl Engine {
    fn new(rho: &Polymatroid, opts: &SearchOptions) -> Result<Engine> {
        let mut cands: Vec<Matroid> = matroid_summands(rho)?
            .into_iter()
            .filter(|m| !m.is_zero())
            .collect();
        cands.reverse();
        let mut claims = vec![0u64; cands.len()];
        let mut required = 0u64;
        if opts.accelerate {
            let sets = incidence_sets(rho);
            if sets.len() <= 64 {
                let mut keep = vec![true; cands.len()];
                for (i, set) in sets.iter().enumerate() {
                    required |= 1 << i;
                    for (j, m) in cands.iter().enumerate() {
                        match incidence_role(m, set.set, set.full) {
                            Some(true) => claims[j] |= 1 << i,
                            Some(false) => {}
                            None => keep[j] = false,
                        }
                    }
                }
                let mut it = keep.iter();
                cands.retain(|_| *it.next().unwrap());
                let mut it = keep.iter();
                claims.retain(|_| *it.next().unwrap());
            }
        }
        Ok(Engine {
            n: rho.n(),
            cands,
            claims,
            required,
            max_parts: opts.max_parts.unwrap_or(usize::MAX),
            budget: opts.budget,
            nodes: AtomicU64::new(0),
        })
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            Err(Error::Incomplete {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// `residual − cands[j]` if it is again a polymatroid.
    fn subtract(&self, residual: &[u32], j: usize) -> Option<Vec<u32>> {
        let c = self.cands[j].table();
        if c[c.len() - 1] > residual[residual.len() - 1] {
            return None;
        }
        let mut out = Vec::with_capacity(residual.len());
        for (r, x) in residual.iter().zip(c) {
            out.push(r.checked_sub(*x)?);
        }
        is_valid_table(&out, self.n).then_some(out)
    }

    fn dfs(
        &self,
        residual: &[u32],
        start: usize,
        claimed: u64,
        parts: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        self.tick()?;
        if residual[residual.len() - 1] == 0 {
            if claimed == self.required {
                out.push(parts.clone());
            }
            return Ok(());
        }
        if parts.len() >= self.max_parts {
            return Ok(());
        }
        for j in start..self.cands.len() {
            if self.claims[j] & claimed != 0 {
                continue;
            }
            if let Some(next) = self.subtract(residual, j) {
                parts.push(j);
                self.dfs(&next, j, claimed | self.claims[j], parts, out)?;
                parts.pop();
            }
        }
        Ok(())
    }

    fn run(&self, rho: &Polymatroid, parallel: bool) -> Result<Vec<Vec<usize>>> {
        let root = rho.table();
        if !parallel {
            let mut out = Vec::new();
            self.dfs(root, 0, 0, &mut Vec::new(), &mut out)?;
            return Ok(out);
        }
        self.tick()?;
        if rho.is_zero() {
            return Ok(if self.required == 0 { vec![vec![]] } else { vec![] });
        }
        if self.max_parts == 0 {
            return Ok(Vec::new());
        }
        let branches: Vec<Result<Vec<Vec<usize>>>> = (0..self.cands.len())
            .into_par_iter()
            .map(|j| {
                let mut out = Vec::new();
                if let Some(next) = self.subtract(root, j) {
                    self.dfs(&next, j, self.claims[j], &mut vec![j], &mut out)?;
                }
                Ok(out)
            })
            .collect();
        let mut out = Vec::new();
        for b in branches {
            out.extend(b?);
        }
        Ok(out)
    }
}

/// Every multiset of positive-rank matroids summing to `rho`, each once,
/// sorted. Fails with [`Error::Incomplete`] if the node budget runs out.
pub fn enumerate_decompositions(
    rho: &Polymatroid,
    opts: &SearchOptions,
) -> Result<Vec<Decomposition>> {
    let engine = Engine::new(rho, opts)?;
    let raw = engine.run(rho, opts.parallel)?;
    let mut out: Vec<Decomposition> = raw
        .into_iter()
        .map(|idx| {
            let parts = idx.iter().map(|&j| engine.cands[j].clone()).collect();
            let d = Decomposition::new(rho.n(), parts).expect("candidates share the ground set");
            assert!(d.decomposes(rho), "emitted decomposition does not re-sum");
            d
        })
        .collect();
    out.sort();
    Ok(out)
}
