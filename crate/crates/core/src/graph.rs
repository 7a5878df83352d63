//! Simple graphs, proper colorings and graph chromatic polynomials.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest vertex count for [`Graph::chromatic_polynomial`].
pub const MAX_POLY_VERTICES: usize = 12;

/// Largest vertex count for [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// A simple graph on vertices `0..v` as adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

/// Class-size counts of a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringStats {
    /// Color classes with exactly one member.
    pub c1: usize,
    /// Color classes with two or more members.
    pub c2plus: usize,
}

impl Graph {
    pub fn new(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if v > 64 {
            return Err(Error::CapExceeded {
                what: "graph vertex count",
                size: v,
                cap: 64,
            });
        }
        let mut g = Graph::empty(v);
        for &(a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::Format(format!("edge ({a},{b}) outside 0..{v}")));
            }
            if a == b {
                return Err(Error::Format(format!("loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::Format(format!("duplicate edge ({a},{b})")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn empty(v: usize) -> Self {
        Graph { adj: vec![0; v] }
    }

    pub fn complete(v: usize) -> Self {
        let mut g = Graph::empty(v);
        for a in 0..v {
            for b in a + 1..v {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn cycle(v: usize) -> Self {
        let mut g = Graph::path(v);
        if v >= 3 {
            g.add_edge(0, v - 1);
        }
        g
    }

    /// The path `0 − 1 − ⋯ − (v−1)`.
    pub fn path(v: usize) -> Self {
        let mut g = Graph::empty(v);
        for a in 1..v {
            g.add_edge(a - 1, a);
        }
        g
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].count_ones() as usize
    }

    pub fn neighbors(&self, a: usize) -> u64 {
        self.adj[a]
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            let mut higher = self.adj[a] >> a >> 1;
            let mut b = a + 1;
            while higher != 0 {
                if higher & 1 == 1 {
                    out.push((a, b));
                }
                higher >>= 1;
                b += 1;
            }
        }
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .iter()
            .map(|&(a, b)| (self.adj[a] & self.adj[b]).count_ones() as usize)
            .sum::<usize>()
            / 3
    }

    pub fn delete_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
        g
    }

    /// `self` followed by `other`, with `other`'s vertices shifted.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.vertex_count();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(a, b)| (a + shift, b + shift)))
            .collect();
        Graph::new(shift + other.vertex_count(), &edges)
    }

    /// Connected components as vertex bitmasks, by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let v = self.vertex_count();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..v {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let a = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[a] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `c` (one color per vertex) gives adjacent vertices distinct
    /// colors.
    pub fn is_proper_coloring(&self, c: &[usize]) -> bool {
        c.len() == self.vertex_count()
            && self.edges().iter().all(|&(a, b)| c[a] != c[b])
    }

    /// All proper colorings with colors `0..k`, in lexicographic order.
    pub fn colorings(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut c = Vec::with_capacity(self.vertex_count());
        self.extend_colorings(k, &mut c, &mut |c| {
            out.push(c.to_vec());
            true
        });
        out
    }

    /// Visit proper colorings in lexicographic order until `visit` returns
    /// false. Returns false if stopped early.
    fn extend_colorings(
        &self,
        k: usize,
        c: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let a = c.len();
        if a == self.vertex_count() {
            return visit(c);
        }
        for color in 0..k {
            if (0..a).any(|b| c[b] == color && self.has_edge(a, b)) {
                continue;
            }
            c.push(color);
            let go_on = self.extend_colorings(k, c, visit);
            c.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    pub fn is_k_colorable(&self, k: usize) -> bool {
        let mut found = false;
        self.extend_colorings(k, &mut Vec::new(), &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Least `k` admitting a proper coloring; 0 for the empty graph.
    pub fn chromatic_number(&self) -> usize {
        (0..=self.vertex_count())
            .find(|&k| self.is_k_colorable(k))
            .unwrap_or(self.vertex_count())
    }

    /// Every single-edge deletion lowers the chromatic number.
    pub fn is_critical(&self) -> bool {
        let chi = self.chromatic_number();
        self.edges()
            .iter()
            .all(|&(a, b)| self.delete_edge(a, b).chromatic_number() < chi)
    }

    /// The chromatic polynomial by deletion–contraction.
    pub fn chromatic_polynomial(&self) -> Result<Poly> {
        if self.vertex_count() > MAX_POLY_VERTICES {
            return Err(Error::CapExceeded {
                what: "graph chromatic polynomial vertex count",
                size: self.vertex_count(),
                cap: MAX_POLY_VERTICES,
            });
        }
        let mut memo = HashMap::new();
        let ints = chrom(&self.adj, &mut memo);
        Ok(Poly::from_coeffs(
            ints.iter()
                .map(|&c| num_rational::BigRational::from_integer(c.into()))
                .collect(),
        ))
    }
}

/// Counts of singleton and larger color classes among used colors.
pub fn coloring_stats(c: &[usize]) -> ColoringStats {
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for &color in c {
        *sizes.entry(color).or_default() += 1;
    }
    let c1 = sizes.values().filter(|&&s| s == 1).count();
    ColoringStats {
        c1,
        c2plus: sizes.len() - c1,
    }
}

type IntPoly = Vec<i128>;

fn int_mul(a: &[i128], b: &[i128]) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_sub(a: &[i128], b: &[i128]) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn int_falling(v: usize) -> IntPoly {
    (0..v as i128).fold(vec![1], |acc, j| int_mul(&acc, &[-j, 1]))
}

fn int_power_of_x(v: usize) -> IntPoly {
    let mut p = vec![0; v + 1];
    p[v] = 1;
    p
}

fn remove_vertex(adj: &[u64], w: usize) -> Vec<u64> {
    let low = (1u64 << w) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(a, _)| a != w)
        .map(|(_, &row)| (row & low) | ((row >> 1) & !low))
        .collect()
}

fn induced(adj: &[u64], comp: u64) -> Vec<u64> {
    let members: Vec<usize> = (0..adj.len()).filter(|&a| comp >> a & 1 == 1).collect();
    members
        .iter()
        .map(|&a| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &b)| adj[a] >> b & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

/// Relabel vertices by decreasing degree (ties by index) so that graphs
/// differing by such a relabeling share a memo entry.
fn canonical_key(adj: &[u64]) -> Vec<u64> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&a| (std::cmp::Reverse(adj[a].count_ones()), a));
    let mut pos = vec![0; adj.len()];
    for (i, &a) in order.iter().enumerate() {
        pos[a] = i;
    }
    order
        .iter()
        .map(|&a| {
            (0..adj.len())
                .filter(|&b| adj[a] >> b & 1 == 1)
                .fold(0u64, |acc, b| acc | 1 << pos[b])
        })
        .collect()
}

fn chrom(adj: &[u64], memo: &mut HashMap<Vec<u64>, IntPoly>) -> IntPoly {
    let v = adj.len();
    let m: usize = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    if m == 0 {
        return int_power_of_x(v);
    }
    if m == v * (v - 1) / 2 {
        return int_falling(v);
    }
    let g = Graph { adj: adj.to_vec() };
    let comps = g.components();
    if comps.len() > 1 {
        return comps
            .iter()
            .map(|&c| chrom(&induced(adj, c), memo))
            .fold(vec![1], |acc, p| int_mul(&acc, &p));
    }
    if m == v - 1 {
        // A tree: x(x−1)^{v−1}.
        return (1..v).fold(vec![0, 1], |acc, _| int_mul(&acc, &[-1, 1]));
    }
    let key = canonical_key(adj);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    // Branch on an edge at a vertex of maximum degree.
    let u = (0..v).max_by_key(|&a| (adj[a].count_ones(), std::cmp::Reverse(a))).unwrap();
    let w = adj[u].trailing_zeros() as usize;
    let mut deleted = adj.to_vec();
    deleted[u] &= !(1 << w);
    deleted[w] &= !(1 << u);
    let mut merged = deleted.clone();
    let moved = merged[w];
    merged[u] |= moved;
    for x in 0..v {
        if moved >> x & 1 == 1 {
            merged[x] |= 1 << u;
        }
    }
    merged[u] &= !(1 << u);
    let contracted = remove_vertex(&merged, w);
    let p = int_sub(&chrom(&deleted, memo), &chrom(&contracted, memo));
    memo.insert(key, p.clone());
    p
}

/// All simple graphs on `v` labeled vertices, in canonical order: graph `i`
/// has edge `j` (of the lexicographic pair list) iff bit `j` of `i` is set.
pub fn enumerate_graphs(v: usize) -> Result<impl Iterator<Item = Graph>> {
    if v > MAX_ENUMERATION_VERTICES {
        return Err(Error::CapExceeded {
            what: "graph enumeration vertex count",
            size: v,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    let pairs = pair_list(v);
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| graph_from_mask(v, &pairs, mask)))
}

/// The graphs of [`enumerate_graphs`] that have exactly `m` edges, in the
/// same relative order.
pub fn enumerate_graphs_with_edges(v: usize, m: usize) -> Result<impl Iterator<Item = Graph>> {
    if v > MAX_ENUMERATION_VERTICES {
        return Err(Error::CapExceeded {
            what: "graph enumeration vertex count",
            size: v,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    let pairs = pair_list(v);
    let p = pairs.len();
    let limit = 1u64 << p;
    // Gosper's hack walks the m-bit masks in increasing order.
    let mut next = (m <= p).then(|| if m == 0 { 0 } else { (1u64 << m) - 1 });
    Ok(std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(graph_from_mask(v, &pairs, cur))
    }))
}

fn pair_list(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect()
}

fn graph_from_mask(v: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(v);
    for (j, &(a, b)) in pairs.iter().enumerate() {
        if mask >> j & 1 == 1 {
            g.add_edge(a, b);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_chromatic_polynomials() {
        let c3 = Graph::cycle(3).chromatic_polynomial().unwrap();
        assert_eq!(c3, Poly::falling_factorial(3));
        let k4 = Graph::complete(4).chromatic_polynomial().unwrap();
        assert_eq!(k4, Poly::falling_factorial(4));
        let xm1 = Poly::linear(1);
        let c5 = &xm1.pow(5) - &xm1;
        assert_eq!(Graph::cycle(5).chromatic_polynomial().unwrap(), c5);
        assert_eq!(Graph::empty(0).chromatic_polynomial().unwrap(), Poly::one());
        assert!(Graph::empty(13).chromatic_polynomial().is_err());
    }

    #[test]
    fn colorings_examples() {
        assert!(Graph::cycle(3).colorings(2).is_empty());
        assert_eq!(Graph::complete(2).colorings(2), vec![vec![0, 1], vec![1, 0]]);
        let stats = coloring_stats(&[0, 1, 2]);
        assert_eq!(stats, ColoringStats { c1: 3, c2plus: 0 });
        assert_eq!(coloring_stats(&[0, 1, 0]), ColoringStats { c1: 1, c2plus: 1 });
    }

    #[test]
    fn criticality() {
        assert!(Graph::cycle(5).is_critical());
        assert!(Graph::complete(4).is_critical());
        assert!(!Graph::path(3).is_critical());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert!(enumerate_graphs(8).is_err());
        for m in 0..=6 {
            let direct: Vec<Graph> = enumerate_graphs(4)
                .unwrap()
                .filter(|g| g.edge_count() == m)
                .collect();
            let fast: Vec<Graph> = enumerate_graphs_with_edges(4, m).unwrap().collect();
            assert_eq!(direct, fast);
        }
        assert_eq!(enumerate_graphs_with_edges(3, 4).unwrap().count(), 0);
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        let g = Graph::new(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(g.components(), vec![0b0011, 0b1100]);
    }
}
