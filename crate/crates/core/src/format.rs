//! JSON interchange types. Every type rejects unknown fields, and
//! converting to the in-memory type validates the contents.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Subset};
use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hyper::Hypergraph;
use crate::matroid::Matroid;
use crate::poly::Poly;
use crate::polymatroid::{validate, Polymatroid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolymatroidJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// Indexed by subset bitmask: element `i` is bit `i`.
    pub rank: Vec<i64>,
}

impl PolymatroidJson {
    pub fn to_polymatroid(&self) -> Result<Polymatroid> {
        let p = validate(&self.rank, self.n)?;
        match &self.names {
            Some(names) => p.with_names(names.clone()),
            None => Ok(p),
        }
    }
}

impl From<&Polymatroid> for PolymatroidJson {
    fn from(p: &Polymatroid) -> Self {
        PolymatroidJson {
            n: p.n(),
            names: p.ground().names().map(<[String]>::to_vec),
            rank: p.table().iter().map(|&r| r.into()).collect(),
        }
    }
}

/// Coefficients in ascending degree as `"num/den"` strings; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

impl PolynomialJson {
    pub fn to_poly(&self) -> Result<Poly> {
        Poly::from_fraction_strings(&self.coeffs)
    }
}

impl From<&Poly> for PolynomialJson {
    fn from(p: &Poly) -> Self {
        PolynomialJson {
            coeffs: p.to_fraction_strings(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub v: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::new(self.v, &pairs)
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            v: g.vertex_count(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<u32>>,
    pub strict: bool,
}

impl HypergraphJson {
    pub fn to_hypergraph(&self) -> Result<(Hypergraph, Option<Vec<u32>>)> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if let Some(&bad) = e.iter().find(|&&v| v >= self.n) {
                return Err(Error::Format(format!(
                    "vertex {bad} outside a hypergraph on {} vertices",
                    self.n
                )));
            }
            let set = bits::from_elements(e.iter().copied());
            if bits::size(set) != e.len() {
                return Err(Error::Format(format!("hyperedge {e:?} repeats a vertex")));
            }
            edges.push(set);
        }
        let h = Hypergraph::new(self.n, edges, self.strict)?;
        if let Some(t) = &self.t {
            h.check_thresholds(t)?;
        }
        Ok((h, self.t.clone()))
    }

    pub fn from_hypergraph(h: &Hypergraph, t: Option<&[u32]>) -> Self {
        HypergraphJson {
            n: h.n(),
            edges: h.edges().iter().map(|&x| bits::elements(x).collect()).collect(),
            t: t.map(<[u32]>::to_vec),
            strict: h.is_strict(),
        }
    }
}

/// A list of matroid rank tables on a common ground set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub n: usize,
    pub parts: Vec<Vec<u32>>,
}

impl DecompositionJson {
    pub fn to_matroids(&self) -> Result<Vec<Matroid>> {
        self.parts
            .iter()
            .map(|t| Matroid::from_table(self.n, t.clone()))
            .collect()
    }
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            n: d.n(),
            parts: d.parts().iter().map(|m| m.table().to_vec()).collect(),
        }
    }
}

/// Elements of a subset as a sorted list.
pub fn subset_to_list(s: Subset) -> Vec<usize> {
    bits::elements(s).collect()
}
