//! Searching for a graph whose chromatic polynomial is a rational multiple
//! of a given polynomial.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::chromatic::chromatic_polynomial;
use super::search::SearchOptions;
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs_with_edges, Graph, MAX_ENUMERATION_VERTICES};
use crate::poly::Poly;
use crate::polymatroid::Polymatroid;

fn as_count(q: &BigRational) -> Option<usize> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().try_into().ok()
    } else {
        None
    }
}

/// The first graph `G` in canonical order on `deg(p)` vertices with
/// `p = s·χ(G; x)`, together with `s`.
///
/// Graph chromatic polynomials are monic, so `s` is the leading
/// coefficient. The zero polynomial is `0·χ(K_0)`.
pub fn graph_multiple_witness(p: &Poly, v_max: usize) -> Result<Option<(Graph, BigRational)>> {
    if v_max > MAX_ENUMERATION_VERTICES {
        return Err(Error::CapExceeded {
            what: "witness vertex bound",
            size: v_max,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    let Some(d) = p.degree() else {
        return Ok(Some((Graph::empty(0), BigRational::zero())));
    };
    if d > v_max {
        return Err(Error::CapExceeded {
            what: "witness polynomial degree",
            size: d,
            cap: v_max,
        });
    }
    let s = p.leading();
    let monic = p.scale(&(BigRational::one() / &s));
    if d == 0 {
        return Ok(Some((Graph::empty(0), s)));
    }
    // χ(G) = x^v − m x^{v−1} + (C(m,2) − triangles) x^{v−2} − ⋯, and the
    // lowest nonzero power counts components.
    let Some(m) = as_count(&-monic.coeff(d - 1)) else {
        return Ok(None);
    };
    if m > d * (d - 1) / 2 {
        return Ok(None);
    }
    let triangles = if d >= 2 {
        let pairs = BigRational::from_integer((m * m.saturating_sub(1) / 2).into());
        match as_count(&(pairs - monic.coeff(d - 2))) {
            Some(t) => Some(t),
            None => return Ok(None),
        }
    } else {
        None
    };
    let components = (0..=d).find(|&i| !monic.coeff(i).is_zero()).unwrap_or(0);
    for g in enumerate_graphs_with_edges(d, m)? {
        if triangles.is_some_and(|t| g.triangle_count() != t)
            || g.components().len() != components
        {
            continue;
        }
        if g.chromatic_polynomial()? == monic {
            return Ok(Some((g, s)));
        }
    }
    Ok(None)
}

/// A witness for `χ(ρ; x)` assembled blockwise: each connected block gets
/// its own witness and the graphs are joined by disjoint union, so the
/// vertex bound applies per block.
pub fn polymatroid_graph_witness(
    rho: &Polymatroid,
    v_max: usize,
    opts: &SearchOptions,
) -> Result<Option<(Graph, BigRational)>> {
    let mut graph = Graph::empty(0);
    let mut scale = BigRational::one();
    for block in rho.connectivity_split() {
        let p = chromatic_polynomial(&rho.restrict(block)?, opts)?;
        if p.is_zero() {
            return Ok(Some((Graph::empty(0), BigRational::zero())));
        }
        match graph_multiple_witness(&p, v_max)? {
            Some((g, s)) => {
                graph = graph.disjoint_union(&g)?;
                scale *= s;
            }
            None => return Ok(None),
        }
    }
    Ok(Some((graph, scale)))
}
