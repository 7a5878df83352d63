//! Mixing graphs of matroid pairs and the decompositions of `r_{M1} + r_{M2}`
//! into two matroids they generate.

use crate::bits::{self, Subset};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, MAX_ENUMERATION_ELEMENTS};
use crate::polymatroid::Polymatroid;

/// Component counts above this are refused by [`all_pair_decompositions`].
const MAX_COMPONENTS: usize = 20;

/// The graph on `𝒳 = {A : r_{M1}(A) ≠ r_{M2}(A)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingGraph {
    vertices: Vec<Subset>,
    edges: Vec<(usize, usize)>,
    component: Vec<usize>,
    component_count: usize,
    augmented: bool,
}

impl MixingGraph {
    /// The vertex sets, ascending.
    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    /// Edges as index pairs into [`MixingGraph::vertices`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Component label of each vertex, numbered by first appearance.
    pub fn component_labels(&self) -> &[usize] {
        &self.component
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Whether every pair with `|A △ B| = 2` was joined.
    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// The vertex sets of each component.
    pub fn components(&self) -> Vec<Vec<Subset>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (i, &a) in self.vertices.iter().enumerate() {
            out[self.component[i]].push(a);
        }
        out
    }

    fn component_of(&self, a: Subset) -> Option<usize> {
        self.vertices.binary_search(&a).ok().map(|i| self.component[i])
    }
}

fn check_pair(m1: &Matroid, m2: &Matroid) -> Result<()> {
    if m1.n() != m2.n() {
        return Err(Error::GroundMismatch {
            left: m1.n(),
            right: m2.n(),
        });
    }
    if m1.n() > MAX_ENUMERATION_ELEMENTS {
        return Err(Error::CapExceeded {
            what: "mixing graph ground set",
            size: m1.n(),
            cap: MAX_ENUMERATION_ELEMENTS,
        });
    }
    Ok(())
}

fn build(m1: &Matroid, m2: &Matroid, augmented: bool) -> Result<MixingGraph> {
    check_pair(m1, m2)?;
    let differs = |a: Subset| m1.rank(a) != m2.rank(a);
    let vertices: Vec<Subset> = (0..=m1.full()).filter(|&a| differs(a)).collect();
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            let nested = a != b && (bits::is_subset(a, b) || bits::is_subset(b, a));
            let two_apart = bits::size(a ^ b) == 2;
            let exchange = two_apart && !differs(a & b) && !differs(a | b);
            if nested || exchange || (augmented && two_apart) {
                edges.push((i, j));
            }
        }
    }
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for &(i, j) in &edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        parent[a.max(b)] = a.min(b);
    }
    let mut label_of_root = vec![usize::MAX; vertices.len()];
    let mut component = vec![0; vertices.len()];
    let mut count = 0;
    for i in 0..vertices.len() {
        let r = find(&mut parent, i);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = count;
            count += 1;
        }
        component[i] = label_of_root[r];
    }
    Ok(MixingGraph {
        vertices,
        edges,
        component,
        component_count: count,
        augmented,
    })
}

/// The mixing graph with every pair at symmetric-difference distance two
/// joined; this leaves the components unchanged.
pub fn mixing_graph(m1: &Matroid, m2: &Matroid) -> Result<MixingGraph> {
    build(m1, m2, true)
}

/// The mixing graph with only the containment and exchange edges.
pub fn mixing_graph_unaugmented(m1: &Matroid, m2: &Matroid) -> Result<MixingGraph> {
    build(m1, m2, false)
}

fn mix_with(m1: &Matroid, m2: &Matroid, keep: impl Fn(Subset) -> bool) -> Result<(Matroid, Matroid)> {
    let table = |first: &Matroid, second: &Matroid| -> Vec<u32> {
        (0..=m1.full())
            .map(|a| if keep(a) { first.rank(a) } else { second.rank(a) })
            .collect()
    };
    let n1 = Matroid::new(Polymatroid::new(m1.ground().clone(), table(m1, m2))?)?;
    let n2 = Matroid::new(Polymatroid::new(m1.ground().clone(), table(m2, m1))?)?;
    for a in 0..=m1.full() {
        assert_eq!(
            n1.rank(a) + n2.rank(a),
            m1.rank(a) + m2.rank(a),
            "mixing changed the sum on {}",
            bits::fmt_subset(a)
        );
    }
    Ok((n1, n2))
}

/// `N_i` agrees with `M_i` on `R` and with the other matroid elsewhere.
/// `R` must be a union of vertex sets of components of the mixing graph.
pub fn mix(m1: &Matroid, m2: &Matroid, r: &[Subset]) -> Result<(Matroid, Matroid)> {
    let g = mixing_graph(m1, m2)?;
    let mut chosen = vec![false; g.component_count()];
    for &a in r {
        match g.component_of(a) {
            Some(c) => chosen[c] = true,
            None => {
                return Err(Error::Precondition(format!(
                    "{} is not a vertex of the mixing graph",
                    bits::fmt_subset(a)
                )))
            }
        }
    }
    for (i, &a) in g.vertices().iter().enumerate() {
        if chosen[g.component[i]] && !r.contains(&a) {
            return Err(Error::Precondition(format!(
                "R is not a union of components: it misses {}",
                bits::fmt_subset(a)
            )));
        }
    }
    mix_with(m1, m2, |a| match g.component_of(a) {
        Some(c) => chosen[c],
        None => true,
    })
}

/// Every unordered pair `{N1, N2}` of matroids with `r_{N1} + r_{N2} =
/// r_{M1} + r_{M2}`: one per set of components up to complementation,
/// represented by the set containing component 0. Each pair is ordered
/// with the smaller matroid first and the list is sorted.
pub fn all_pair_decompositions(m1: &Matroid, m2: &Matroid) -> Result<Vec<(Matroid, Matroid)>> {
    let g = mixing_graph(m1, m2)?;
    let c = g.component_count();
    if c > MAX_COMPONENTS {
        return Err(Error::CapExceeded {
            what: "mixing graph components",
            size: c,
            cap: MAX_COMPONENTS,
        });
    }
    let masks: Vec<u32> = if c == 0 {
        vec![0]
    } else {
        (0..1u32 << c).filter(|m| m & 1 == 1).collect()
    };
    let mut out = Vec::with_capacity(masks.len());
    for mask in masks {
        let (a, b) = mix_with(m1, m2, |s| match g.component_of(s) {
            Some(i) => mask >> i & 1 == 1,
            None => true,
        })?;
        out.push(if a <= b { (a, b) } else { (b, a) });
    }
    out.sort();
    out.dedup();
    Ok(out)
}
