//! Hypergraphs with thresholds, the polymatroid `ρ(A) = Σ min{|A ∩ X_i|, t_i}`
//! they define, and both directions of the coloring/decomposition
//! correspondence.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Subset, MAX_TABLE_ELEMENTS};
use crate::decomp::Verdict;
use crate::error::{Error, Result};
use crate::graph::{coloring_stats, ColoringStats, Graph};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::polymatroid::Polymatroid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<Subset>,
    strict: bool,
}

/// Which of the structural properties a hypergraph has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    /// Every vertex lies in at least two hyperedges.
    pub h1: bool,
    /// Distinct hyperedges share at most one vertex.
    pub h2: bool,
    /// No three hyperedges are `{a,b}, {a,c}, {b,c}`.
    pub h3: bool,
}

impl Hypergraph {
    /// A hypergraph on `n` vertices. In strict mode hyperedges must be
    /// pairwise distinct; otherwise they form a multiset.
    pub fn new(n: usize, edges: Vec<Subset>, strict: bool) -> Result<Self> {
        if n > 32 {
            return Err(Error::CapExceeded {
                what: "hypergraph vertex count",
                size: n,
                cap: 32,
            });
        }
        let ground = GroundSet::new(n);
        for (i, &x) in edges.iter().enumerate() {
            if x == 0 {
                return Err(Error::Format(format!("hyperedge {i} is empty")));
            }
            ground.check_subset(x)?;
            if strict && edges[..i].contains(&x) {
                return Err(Error::Format(format!(
                    "hyperedge {} repeated in a strict hypergraph",
                    bits::fmt_subset(x)
                )));
            }
        }
        Ok(Hypergraph {
            ground,
            edges,
            strict,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.ground.len() {
            return Err(Error::InvalidNames(format!(
                "{} names for {} vertices",
                names.len(),
                self.ground.len()
            )));
        }
        self.ground = GroundSet::with_names(names)?;
        Ok(self)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn edges(&self) -> &[Subset] {
        &self.edges
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// `w(e)`: the number of hyperedges containing `e`.
    pub fn weight(&self, e: usize) -> usize {
        self.edges.iter().filter(|&&x| bits::contains(x, e)).count()
    }

    /// `w(A) = Σ_i |A ∩ X_i|`.
    pub fn weight_of(&self, a: Subset) -> usize {
        self.edges.iter().map(|&x| bits::size(a & x)).sum()
    }

    pub fn properties(&self) -> Properties {
        let m = self.edges.len();
        let h1 = (0..self.n()).all(|e| self.weight(e) >= 2);
        let h2 = (0..m).all(|i| (i + 1..m).all(|j| bits::size(self.edges[i] & self.edges[j]) <= 1));
        let pairs: Vec<Subset> = self.edges.iter().copied().filter(|&x| bits::size(x) == 2).collect();
        let h3 = !pairs.iter().enumerate().any(|(i, &x)| {
            pairs[i + 1..].iter().enumerate().any(|(j, &y)| {
                bits::size(x & y) == 1
                    && pairs[i + j + 2..].contains(&(x ^ y))
            })
        });
        Properties { h1, h2, h3 }
    }

    pub fn check_thresholds(&self, t: &[u32]) -> Result<()> {
        if t.len() != self.edges.len() {
            return Err(Error::Format(format!(
                "{} thresholds for {} hyperedges",
                t.len(),
                self.edges.len()
            )));
        }
        for (i, (&ti, &x)) in t.iter().zip(&self.edges).enumerate() {
            if ti as usize > bits::size(x) {
                return Err(Error::OutOfRange(format!(
                    "threshold t_{i} = {ti} exceeds |X_{i}| = {}",
                    bits::size(x)
                )));
            }
        }
        Ok(())
    }

    /// For each hyperedge, either `t_i = 1` or `min w(e) ≤ t_i < |X_i|`.
    pub fn check_t(&self, t: &[u32]) -> bool {
        self.check_thresholds(t).is_ok()
            && self.edges.iter().zip(t).all(|(&x, &ti)| {
                let min_w = bits::elements(x).map(|e| self.weight(e)).min().unwrap_or(0);
                ti == 1 || (min_w <= ti as usize && (ti as usize) < bits::size(x))
            })
    }

    /// `ρ(A) = Σ_i min{|A ∩ X_i|, t_i}`.
    pub fn build_polymatroid(&self, t: &[u32]) -> Result<Polymatroid> {
        self.check_thresholds(t)?;
        if self.n() > MAX_TABLE_ELEMENTS {
            return Err(Error::CapExceeded {
                what: "rank table ground set",
                size: self.n(),
                cap: MAX_TABLE_ELEMENTS,
            });
        }
        let table = (0..=self.ground.full())
            .map(|a| {
                self.edges
                    .iter()
                    .zip(t)
                    .map(|(&x, &ti)| (bits::size(a & x) as u32).min(ti))
                    .sum()
            })
            .collect();
        Polymatroid::new(self.ground.clone(), table)
    }

    /// Vertices are hyperedge indices, adjacent when the hyperedges meet.
    pub fn line_graph(&self) -> Result<Graph> {
        let m = self.edges.len();
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.edges[i] & self.edges[j] != 0 {
                    pairs.push((i, j));
                }
            }
        }
        Graph::new(m, &pairs)
    }

    fn require_bijection_hypotheses(&self, t: &[u32]) -> Result<()> {
        if !self.strict {
            return Err(Error::Precondition(
                "the coloring correspondence needs a strict hypergraph".into(),
            ));
        }
        let p = self.properties();
        if !p.h2 {
            return Err(Error::Precondition("property H2 fails".into()));
        }
        if !p.h3 {
            return Err(Error::Precondition("property H3 fails".into()));
        }
        if !self.check_t(t) {
            return Err(Error::Precondition("property T fails".into()));
        }
        Ok(())
    }

    /// `φ(c)`: part `i` is the direct sum of `U_{t_h, X_h}` over the
    /// hyperedges `h` of color `i`, with loops elsewhere. Colors are
    /// `0..k`.
    pub fn coloring_to_decomposition(&self, t: &[u32], c: &[usize], k: usize) -> Result<Vec<Matroid>> {
        self.check_thresholds(t)?;
        let g = self.line_graph()?;
        if c.len() != self.edges.len() || c.iter().any(|&ci| ci >= k) {
            return Err(Error::Precondition(format!("{c:?} is not a map into 0..{k}")));
        }
        if !g.is_proper_coloring(c) {
            return Err(Error::Precondition(format!("{c:?} is not a proper coloring")));
        }
        Ok((0..k)
            .map(|i| {
                let members: Vec<usize> = (0..c.len()).filter(|&h| c[h] == i).collect();
                let table = (0..=self.ground.full())
                    .map(|a| {
                        members
                            .iter()
                            .map(|&h| (bits::size(a & self.edges[h]) as u32).min(t[h]))
                            .sum()
                    })
                    .collect();
                Matroid::new_unchecked(Polymatroid::from_parts_unchecked(
                    GroundSet::new(self.n()),
                    table,
                ))
            })
            .collect::<Vec<_>>())
    }

    /// Subsets on which a polymatroid must agree with `ρ` for colorings to
    /// be extracted from its decompositions.
    pub fn agreement_sets(&self, t: &[u32]) -> Vec<Subset> {
        let full = self.ground.full();
        let mut wanted = vec![false; full as usize + 1];
        for a in 0..=full {
            if bits::size(a) <= 3 {
                wanted[a as usize] = true;
            }
        }
        let ones: Vec<Subset> = self
            .edges
            .iter()
            .zip(t)
            .filter(|&(_, &ti)| ti == 1)
            .map(|(&x, _)| x)
            .collect();
        for i in 0..ones.len() {
            for j in i + 1..ones.len() {
                for l in j + 1..ones.len() {
                    let (x, y, z) = (ones[i], ones[j], ones[l]);
                    let once = (x ^ y ^ z) & !(x & y & z);
                    let twice = (x & y | x & z | y & z) & !(x & y & z);
                    for a in bits::subsets_of_size(once | twice, 4) {
                        if bits::size(a & once) == 1 && bits::size(a & twice) == 3 {
                            wanted[a as usize] = true;
                        }
                    }
                }
            }
        }
        for (&x, &ti) in self.edges.iter().zip(t) {
            for a in bits::subsets_of(x) {
                if bits::size(a) <= ti as usize + 1 {
                    wanted[a as usize] = true;
                }
            }
        }
        for (i, (&x, &ti)) in self.edges.iter().zip(t).enumerate() {
            for (&y, &tj) in self.edges.iter().zip(t).skip(i + 1) {
                if x & y == 0 {
                    continue;
                }
                for a in bits::subsets_of(x ^ y) {
                    if bits::size(a & x) <= ti as usize && bits::size(a & y) <= tj as usize {
                        wanted[a as usize] = true;
                    }
                }
            }
        }
        (0..=full).filter(|&a| wanted[a as usize]).collect()
    }

    /// Extract a proper coloring of the line graph from an ordered tuple of
    /// matroids whose sum agrees with `ρ` on [`Hypergraph::agreement_sets`].
    pub fn decomposition_to_coloring(
        &self,
        t: &[u32],
        tuple: &[Matroid],
    ) -> Result<(Vec<usize>, ColoringStats)> {
        self.require_bijection_hypotheses(t)?;
        let rho = self.build_polymatroid(t)?;
        if let Some(m) = tuple.iter().find(|m| m.n() != self.n()) {
            return Err(Error::GroundMismatch {
                left: self.n(),
                right: m.n(),
            });
        }
        let sigma = |a: Subset| tuple.iter().map(|m| m.rank(a)).sum::<u32>();
        for a in self.agreement_sets(t) {
            if sigma(a) != rho.rank(a) {
                return Err(Error::Precondition(format!(
                    "the tuple sums to {} on {} where the hypergraph polymatroid has {}",
                    sigma(a),
                    bits::fmt_subset(a),
                    rho.rank(a)
                )));
            }
        }
        let mut c = vec![usize::MAX; self.edges.len()];
        for (h, (&x, &th)) in self.edges.iter().zip(t).enumerate() {
            if bits::size(x) < 2 {
                continue;
            }
            let uniform_here = |m: &Matroid| {
                bits::subsets_of(x).all(|a| m.rank(a) == (bits::size(a) as u32).min(th))
            };
            let hits: Vec<usize> = (0..tuple.len()).filter(|&i| uniform_here(&tuple[i])).collect();
            match hits.as_slice() {
                [i] => c[h] = *i,
                _ => {
                    return Err(Error::Precondition(format!(
                        "{} parts restrict to U_{{{th},{}}} on hyperedge {h}",
                        hits.len(),
                        bits::size(x)
                    )))
                }
            }
        }
        for (h, &x) in self.edges.iter().enumerate() {
            if bits::size(x) != 1 {
                continue;
            }
            let e = x.trailing_zeros() as usize;
            let taken: Vec<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|&(_, &y)| bits::contains(y, e) && bits::size(y) > 1)
                .map(|(s, _)| c[s])
                .collect();
            let free: Vec<usize> = (0..tuple.len())
                .filter(|&j| tuple[j].singleton_rank(e) == 1 && !taken.contains(&j))
                .collect();
            match free.as_slice() {
                [j] => c[h] = *j,
                _ => {
                    return Err(Error::Precondition(format!(
                        "no unique color for the singleton hyperedge {h}"
                    )))
                }
            }
        }
        if !self.line_graph()?.is_proper_coloring(&c) {
            return Err(Error::Precondition(format!(
                "extracted map {c:?} is not a proper coloring"
            )));
        }
        let stats = coloring_stats(&c);
        assert!(
            sigma(self.ground.full()) as usize >= stats.c1 + 2 * stats.c2plus,
            "rank bound violated by extracted coloring"
        );
        Ok((c, stats))
    }

    /// Whether this is the star hypergraph of a simple graph: every vertex
    /// in exactly two hyperedges, all thresholds 1, and no component of the
    /// graph (whose vertices are the hyperedges) a triangle.
    fn is_boolean_graph(&self, t: &[u32]) -> bool {
        let p = self.properties();
        t.iter().all(|&ti| ti == 1) && (0..self.n()).all(|e| self.weight(e) == 2) && p.h2 && p.h3
    }

    /// A sound test that `T(ρ, s)` is indecomposable, for `ρ` built with all
    /// thresholds 1: any decomposition yields a coloring of the line graph
    /// with `c_1 + 2c_2^+ ≤ s`, so if colorings with at most `k_max` colors
    /// have none and no larger coloring can qualify, the truncation is
    /// indecomposable.
    ///
    /// `s` must satisfy `max{ρ(A) : |A| ≤ 4} ≤ s`, or `4 ≤ s` when the
    /// hypergraph is the star hypergraph of a simple graph.
    pub fn truncation_coloring_bound(&self, s: u32, k_max: usize) -> Result<Verdict> {
        let t = vec![1u32; self.edges.len()];
        let p = self.properties();
        if !(p.h2 && p.h3) {
            return Err(Error::Precondition("properties H2 and H3 are required".into()));
        }
        let rho = self.build_polymatroid(&t)?;
        if s >= rho.total_rank() {
            return Ok(Verdict::Unknown);
        }
        let small_max = (0..=rho.full())
            .filter(|&a| bits::size(a) <= 4)
            .map(|a| rho.rank(a))
            .max()
            .unwrap_or(0);
        let in_range = small_max <= s || (self.is_boolean_graph(&t) && s >= 4);
        if !in_range {
            return Err(Error::OutOfRange(format!(
                "truncation rank {s} is below the supported range (needs {small_max}{})",
                if self.is_boolean_graph(&t) { " or at least 4" } else { "" }
            )));
        }
        let g = self.line_graph()?;
        let best = min_coloring_cost(&g, k_max);
        let exhaustive = k_max >= (s as usize).min(self.edges.len());
        Ok(match best {
            Some(cost) if cost <= s as usize => Verdict::Unknown,
            _ if exhaustive => Verdict::Indecomposable(format!(
                "every coloring of the line graph has c1 + 2c2+ > {s}"
            )),
            _ => Verdict::Unknown,
        })
    }
}

/// Minimum of `c_1 + 2c_2^+` over proper colorings with at most `k_max`
/// color classes, via set partitions into independent sets.
fn min_coloring_cost(g: &Graph, k_max: usize) -> Option<usize> {
    fn go(g: &Graph, v: usize, classes: &mut Vec<(u64, usize)>, k_max: usize, best: &mut Option<usize>) {
        let cost: usize = classes.iter().map(|&(_, size)| if size == 1 { 1 } else { 2 }).sum();
        // Partial costs never decrease as vertices are added.
        if best.is_some_and(|b| cost >= b) {
            return;
        }
        if v == g.vertex_count() {
            *best = Some(cost);
            return;
        }
        for i in 0..classes.len() {
            if classes[i].0 & g.neighbors(v) == 0 {
                classes[i].0 |= 1 << v;
                classes[i].1 += 1;
                go(g, v + 1, classes, k_max, best);
                classes[i].0 &= !(1 << v);
                classes[i].1 -= 1;
            }
        }
        if classes.len() < k_max {
            classes.push((1 << v, 1));
            go(g, v + 1, classes, k_max, best);
            classes.pop();
        }
    }
    let mut best = None;
    go(g, 0, &mut Vec::new(), k_max, &mut best);
    best
}

/// Recover hyperedges from a decomposition: the ground sets of the
/// connected components of each part with its loops deleted.
pub fn recover_hypergraph(parts: &[Matroid]) -> Result<Hypergraph> {
    let n = parts.first().map_or(0, |m| m.n());
    let mut edges = Vec::new();
    for m in parts {
        if m.n() != n {
            return Err(Error::GroundMismatch {
                left: n,
                right: m.n(),
            });
        }
        edges.extend(m.components().into_iter().filter(|&c| m.rank(c) > 0));
    }
    edges.sort_unstable();
    let strict = edges.windows(2).all(|w| w[0] != w[1]);
    Hypergraph::new(n, edges, strict)
}
