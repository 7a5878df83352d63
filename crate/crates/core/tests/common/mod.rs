//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's search, enumeration or validation code.

#![allow(dead_code)]

use polychrome::decomp::Decomposition;
use polychrome::graph::Graph;

pub type Table = Vec<u32>;

fn is_sub(a: usize, b: usize) -> bool {
    a & !b == 0
}

/// Normalized, monotone over every nested pair, submodular over every pair.
pub fn satisfies_axioms(t: &[i64], n: usize) -> bool {
    let len = 1usize << n;
    if t.len() != len || t[0] != 0 {
        return false;
    }
    for a in 0..len {
        if t[a] < 0 {
            return false;
        }
        for b in 0..len {
            if is_sub(a, b) && t[a] > t[b] {
                return false;
            }
            if t[a | b] + t[a & b] > t[a] + t[b] {
                return false;
            }
        }
    }
    true
}

pub fn is_matroid_table(t: &[u32], n: usize) -> bool {
    let wide: Vec<i64> = t.iter().map(|&r| r.into()).collect();
    satisfies_axioms(&wide, n) && (0..t.len()).all(|a| t[a] as usize <= (a as u32).count_ones() as usize)
}

/// Every matroid rank table on `n ≤ 4` labeled elements, ascending, found
/// by scanning all unit-increase fillings and keeping the submodular ones.
pub fn oracle_matroids(n: usize) -> Vec<Table> {
    assert!(n <= 4, "brute-force matroid scan is limited to 4 elements");
    let len = 1usize << n;
    let mut out = Vec::new();
    let free = len - 1;
    for choice in 0u64..1 << free {
        let mut t = vec![0u32; len];
        for a in 1..len {
            let top = usize::BITS - 1 - a.leading_zeros();
            t[a] = t[a & !(1 << top)] + (choice >> (a - 1) & 1) as u32;
        }
        if is_matroid_table(&t, n) {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// Every polymatroid on `n` elements with total rank at most `max_rank`.
pub fn all_polymatroids(n: usize, max_rank: u32) -> Vec<Table> {
    let mut out = Vec::new();
    let mut t = vec![0i64; 1 << n];
    fn fill(a: usize, t: &mut Vec<i64>, n: usize, max_rank: u32, out: &mut Vec<Table>) {
        if a == t.len() {
            if satisfies_axioms(t, n) {
                out.push(t.iter().map(|&r| r as u32).collect());
            }
            return;
        }
        for v in 0..=max_rank as i64 {
            t[a] = v;
            fill(a + 1, t, n, max_rank, out);
        }
    }
    fill(1, &mut t, n, max_rank, &mut out);
    out.sort();
    out
}

/// Every multiset of positive-rank tables from `pool` summing to `rho`,
/// parts ascending, list ascending.
pub fn naive_decompositions(rho: &[u32], pool: &[Table]) -> Vec<Vec<Table>> {
    let cands: Vec<&Table> = pool
        .iter()
        .filter(|m| m.iter().any(|&r| r > 0) && m.iter().zip(rho).all(|(a, b)| a <= b))
        .collect();
    let mut out = Vec::new();
    fn go<'a>(
        start: usize,
        residual: &mut Vec<u32>,
        cands: &[&'a Table],
        chosen: &mut Vec<&'a Table>,
        out: &mut Vec<Vec<Table>>,
    ) {
        if residual.iter().all(|&r| r == 0) {
            let mut parts: Vec<Table> = chosen.iter().map(|t| (*t).clone()).collect();
            parts.sort();
            out.push(parts);
            return;
        }
        for i in start..cands.len() {
            let m = cands[i];
            if m.iter().zip(residual.iter()).all(|(a, b)| a <= b) {
                for (r, a) in residual.iter_mut().zip(m) {
                    *r -= a;
                }
                chosen.push(m);
                go(i, residual, cands, chosen, out);
                chosen.pop();
                for (r, a) in residual.iter_mut().zip(m) {
                    *r += a;
                }
            }
        }
    }
    go(0, &mut rho.to_vec(), &cands, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn as_tables(ds: &[Decomposition]) -> Vec<Vec<Table>> {
    let mut out: Vec<Vec<Table>> = ds
        .iter()
        .map(|d| {
            let mut parts: Vec<Table> = d.parts().iter().map(|m| m.table().to_vec()).collect();
            parts.sort();
            parts
        })
        .collect();
    out.sort();
    out
}

/// Proper colorings of `g` with colors `0..k`, counted by trying every map.
pub fn brute_coloring_count(g: &Graph, k: usize) -> u64 {
    let v = g.vertex_count();
    let edges = g.edges();
    if k == 0 {
        return u64::from(v == 0);
    }
    let total = (k as u64).pow(v as u32);
    (0..total)
        .filter(|&code| {
            let color = |i: usize| code / (k as u64).pow(i as u32) % k as u64;
            edges.iter().all(|&(a, b)| color(a) != color(b))
        })
        .count() as u64
}

/// Ordered `k`-tuples from a multiset list: `k! / ((k − i)! Π a_j!)` each.
pub fn ordered_count(multisets: &[Vec<Table>], k: usize) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    multisets
        .iter()
        .filter(|d| d.len() <= k)
        .map(|d| {
            let mut denom = fact(k - d.len());
            let mut i = 0;
            while i < d.len() {
                let j = (i..d.len()).find(|&j| d[j] != d[i]).unwrap_or(d.len());
                denom *= fact(j - i);
                i = j;
            }
            fact(k) / denom
        })
        .sum()
}

/// Number of connected components of a matroid: its minimal nonempty
/// separators, found by scanning every subset.
pub fn matroid_component_count(t: &[u32], n: usize) -> usize {
    let full = (1usize << n) - 1;
    let seps: Vec<usize> = (1..=full)
        .filter(|&s| t[s] + t[full & !s] == t[full])
        .collect();
    seps.iter()
        .filter(|&&s| !seps.iter().any(|&r| r != s && is_sub(r, s)))
        .count()
}
