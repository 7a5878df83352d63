//! Incidence sets and the indecomposability certificates built on them.
//!
//! In any decomposition, each incidence set `X` lies inside a parallel
//! class of exactly one part ("`X` is claimed by that part"). Two incidence
//! sets meeting in two or more elements are claimed by the same part. If
//! `ρ(ab) = ρ(a) + ρ(b)` for some `a ∈ X`, `b ∈ Y` (written `S(X, Y)`), then
//! `a` and `b` are parallel in no part, so intersecting `X` and `Y` must be
//! claimed by different parts, and a part claiming both has rank at least 2.

use serde::{Deserialize, Serialize};

use super::Verdict;
use crate::bits::{self, Subset};
use crate::polymatroid::Polymatroid;

/// More merged incidence-set groups than this and the certificate gives up.
const MAX_GROUPS: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceSet {
    pub set: Subset,
    /// The defining equation also holds for `Y = X` itself.
    pub full: bool,
}

fn excess(rho: &Polymatroid, y: Subset) -> i64 {
    // ρ(Y) − 1 − Σ (ρ(e) − 1); zero exactly when the defining equation holds.
    rho.rank(y) as i64 - 1 - bits::elements(y).map(|e| rho.singleton_rank(e) as i64 - 1).sum::<i64>()
}

/// All inclusion-maximal incidence sets, by increasing bitmask.
pub fn incidence_sets(rho: &Polymatroid) -> Vec<IncidenceSet> {
    let full = rho.full();
    let n = rho.n();
    let mut good_pair = vec![0u32; n];
    for e in 0..n {
        for f in 0..n {
            if e != f && excess(rho, bits::singleton(e) | bits::singleton(f)) == 0 {
                good_pair[e] |= bits::singleton(f);
            }
        }
    }
    // valid[X]: every 2- and 3-subset of X satisfies the equation.
    let mut valid = vec![false; full as usize + 1];
    for x in 0..=full {
        valid[x as usize] = match bits::size(x) {
            0 | 1 => true,
            _ => {
                let top = 31 - x.leading_zeros() as usize;
                let rest = x & !bits::singleton(top);
                valid[rest as usize]
                    && bits::is_subset(rest, good_pair[top])
                    && bits::elements(rest).all(|e| {
                        bits::elements(rest & !bits::full(e + 1)).all(|f| {
                            excess(
                                rho,
                                bits::singleton(top) | bits::singleton(e) | bits::singleton(f),
                            ) == 0
                        })
                    })
            }
        };
    }
    (0..=full)
        .filter(|&x| {
            bits::size(x) >= 2
                && valid[x as usize]
                && bits::elements(full & !x).all(|e| !valid[(x | bits::singleton(e)) as usize])
        })
        .map(|x| IncidenceSet {
            set: x,
            full: excess(rho, x) == 0,
        })
        .collect()
}

fn s_related(rho: &Polymatroid, x: Subset, y: Subset) -> bool {
    bits::elements(x).any(|a| {
        bits::elements(y).any(|b| {
            a != b
                && rho.rank(bits::singleton(a) | bits::singleton(b))
                    == rho.singleton_rank(a) + rho.singleton_rank(b)
        })
    })
}

struct Groups {
    /// The incidence sets in each group.
    sets: Vec<Vec<Subset>>,
    /// conflict[g]: groups that must go to a different part than g.
    conflict: Vec<u32>,
    /// related[g]: groups with an `S` relation to g.
    related: Vec<u32>,
}

/// Merge incidence sets that must share a part; `Err` carries a reason
/// when the forced structure is already contradictory.
fn build_groups(rho: &Polymatroid, sets: &[IncidenceSet]) -> Result<Groups, String> {
    let m = sets.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..m {
        for j in i + 1..m {
            let (x, y) = (sets[i].set, sets[j].set);
            let shared = bits::size(x & y);
            if shared >= 2 {
                if s_related(rho, x, y) {
                    return Err(format!(
                        "incidence sets {} and {} share {} elements but contain a rank-additive pair",
                        bits::fmt_subset(x),
                        bits::fmt_subset(y),
                        shared
                    ));
                }
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut group_of = vec![0; m];
    for i in 0..m {
        let r = find(&mut parent, i);
        group_of[i] = match roots.iter().position(|&q| q == r) {
            Some(g) => g,
            None => {
                roots.push(r);
                roots.len() - 1
            }
        };
    }
    let g = roots.len();
    let mut groups = Groups {
        sets: vec![Vec::new(); g],
        conflict: vec![0; g],
        related: vec![0; g],
    };
    for i in 0..m {
        groups.sets[group_of[i]].push(sets[i].set);
    }
    for i in 0..m {
        for j in i + 1..m {
            let (x, y) = (sets[i].set, sets[j].set);
            if !s_related(rho, x, y) {
                continue;
            }
            let (gi, gj) = (group_of[i], group_of[j]);
            if gi == gj {
                return Err(format!(
                    "incidence sets {} and {} are forced into one parallel class yet contain a rank-additive pair",
                    bits::fmt_subset(x),
                    bits::fmt_subset(y)
                ));
            }
            groups.related[gi] |= 1 << gj;
            groups.related[gj] |= 1 << gi;
            if x & y != 0 {
                groups.conflict[gi] |= 1 << gj;
                groups.conflict[gj] |= 1 << gi;
            }
        }
    }
    Ok(groups)
}

/// Lower bound on the rank of a part claiming the groups in `mask`.
fn part_cost(groups: &Groups, mask: u32) -> u32 {
    if mask == 0 {
        0
    } else if bits::elements(mask).any(|g| groups.related[g] & mask != 0) {
        2
    } else {
        1
    }
}

struct Assign<'a> {
    rho: &'a Polymatroid,
    groups: &'a Groups,
    parts: usize,
    /// The caller bounded the decomposition at two parts, so a part not
    /// claiming `X` carries everything of `ρ(X)` beyond the other part.
    two_part: bool,
    best: u32,
}

impl Assign<'_> {
    /// Sum of part lower bounds, with the extra two-part bound: if the
    /// other part claims `X`, this part has rank at least `ρ(X) − 1`.
    fn bound(&self, labels: &[u32]) -> u32 {
        let costs: Vec<u32> = labels.iter().map(|&m| part_cost(self.groups, m)).collect();
        if !self.two_part || labels.len() != 2 {
            return costs.iter().sum();
        }
        let claimed_rank = |mask: u32| {
            bits::elements(mask)
                .flat_map(|g| self.groups.sets[g].iter())
                .map(|&x| self.rho.rank(x))
                .max()
                .unwrap_or(0)
        };
        let lift = |own: u32, other: u32| own.max(claimed_rank(other).saturating_sub(1));
        lift(costs[0], labels[1]) + lift(costs[1], labels[0])
    }

    fn search(&mut self, g: usize, labels: &mut Vec<u32>) {
        let count = self.groups.sets.len();
        // The bound only grows as groups are added.
        let bound = self.bound(labels);
        if bound >= self.best {
            return;
        }
        if g == count {
            self.best = bound;
            return;
        }
        let bit = 1u32 << g;
        for l in 0..labels.len() {
            if labels[l] & self.groups.conflict[g] == 0 {
                labels[l] |= bit;
                self.search(g + 1, labels);
                labels[l] &= !bit;
            }
        }
        if labels.len() < self.parts {
            labels.push(bit);
            self.search(g + 1, labels);
            labels.pop();
        }
    }
}

fn certificate(rho: &Polymatroid, parts: Option<usize>) -> Verdict {
    let sets = incidence_sets(rho);
    if sets.is_empty() {
        return Verdict::Unknown;
    }
    let groups = match build_groups(rho, &sets) {
        Ok(g) => g,
        Err(reason) => return Verdict::Indecomposable(reason),
    };
    if groups.sets.len() > MAX_GROUPS {
        return Verdict::Unknown;
    }
    let limit = parts.unwrap_or(groups.sets.len());
    let mut a = Assign {
        rho,
        groups: &groups,
        parts: limit,
        two_part: parts == Some(2),
        best: u32::MAX,
    };
    a.search(0, &mut Vec::new());
    let total = rho.total_rank();
    if a.best == u32::MAX {
        Verdict::Indecomposable(format!(
            "the incidence sets cannot be distributed over {limit} parts"
        ))
    } else if a.best > total {
        Verdict::Indecomposable(format!(
            "every admissible assignment of incidence sets forces total part rank at least {} > {}",
            a.best, total
        ))
    } else {
        Verdict::Unknown
    }
}

/// A sound test that `rho` is not a sum of matroid rank functions.
pub fn indecomposability_certificate(rho: &Polymatroid) -> Verdict {
    certificate(rho, None)
}

/// A sound test that `rho` is not a sum of `k` matroid rank functions.
pub fn k_decomposability_certificate(rho: &Polymatroid, k: usize) -> Verdict {
    certificate(rho, Some(k))
}
