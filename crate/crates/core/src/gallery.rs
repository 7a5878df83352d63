//! Named example polymatroids with known chromatic behavior.

use num_rational::BigRational;

use crate::bits::{self, Subset, MAX_TABLE_ELEMENTS};
use crate::decomp::ChromaticNumber;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hyper::Hypergraph;
use crate::matroid::Matroid;
use crate::poly::Poly;
use crate::polymatroid::Polymatroid;

/// Facts known in advance about an item.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub chromatic_number: Option<ChromaticNumber>,
    pub polynomial: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryItem {
    pub name: String,
    pub params: Vec<i64>,
    pub polymatroid: Polymatroid,
    /// The hypergraph and thresholds the polymatroid was built from.
    pub hypergraph: Option<(Hypergraph, Vec<u32>)>,
    pub expected: Expected,
}

impl GalleryItem {
    fn from_table(name: &str, params: Vec<i64>, rho: Polymatroid, expected: Expected) -> Self {
        GalleryItem {
            name: name.to_string(),
            params,
            polymatroid: rho,
            hypergraph: None,
            expected,
        }
    }

    fn from_hypergraph(name: &str, params: Vec<i64>, h: Hypergraph, t: Vec<u32>) -> Result<Self> {
        let rho = h.build_polymatroid(&t)?;
        // With H2, H3 and T the ordered decomposition counts are the
        // chromatic polynomial of the line graph.
        let p = h.properties();
        let polynomial = if h.is_strict() && p.h2 && p.h3 && h.check_t(&t) {
            let g = h.line_graph()?;
            if g.vertex_count() <= crate::graph::MAX_POLY_VERTICES {
                Some(g.chromatic_polynomial()?)
            } else {
                None
            }
        } else {
            None
        };
        Ok(GalleryItem {
            name: name.to_string(),
            params,
            polymatroid: rho,
            hypergraph: Some((h, t)),
            expected: Expected {
                chromatic_number: None,
                polynomial,
            },
        })
    }
}

/// The Boolean 2-polymatroid `ρ_G(X) = |V(X)|` on the edges of `G`, in the
/// order of [`Graph::edges`], built from the vertex stars.
pub fn boolean_of_graph(g: &Graph) -> Result<GalleryItem> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let edges = g.edges();
    let stars = (0..g.vertex_count())
        .map(|v| bits::from_elements((0..edges.len()).filter(|&i| edges[i].0 == v || edges[i].1 == v)))
        .collect::<Vec<_>>();
    // Only an isolated edge gives two equal stars; keep those as a multiset.
    let strict = (1..stars.len()).all(|i| !stars[..i].contains(&stars[i]));
    let h = Hypergraph::new(edges.len(), stars, strict)?;
    let t = vec![1; g.vertex_count()];
    GalleryItem::from_hypergraph("boolean", vec![g.vertex_count() as i64], h, t)
}

pub fn boolean_cycle(v: usize) -> Result<GalleryItem> {
    if v < 3 {
        return Err(Error::OutOfRange(format!("a cycle needs at least 3 vertices, got {v}")));
    }
    let mut item = boolean_of_graph(&Graph::cycle(v))?;
    item.name = "boolean-cycle".into();
    if v == 3 {
        // The star hypergraph of a triangle violates H3; the polynomial is
        // x(x − 1)² rather than that of the triangle.
        item.expected.polynomial = Some(&Poly::x() * &Poly::linear(1).pow(2));
        item.expected.chromatic_number = Some(ChromaticNumber::Finite(2));
    }
    Ok(item)
}

pub fn boolean_path(v: usize) -> Result<GalleryItem> {
    if v < 2 {
        return Err(Error::OutOfRange(format!("a path needs at least 2 vertices, got {v}")));
    }
    let mut item = boolean_of_graph(&Graph::path(v))?;
    item.name = "boolean-path".into();
    Ok(item)
}

fn check_plane_order(q: usize, points: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("plane order {q} is below 2")));
    }
    if (2..q).any(|d| q % d == 0) {
        return Err(Error::OutOfRange(format!(
            "plane order {q} is not prime; prime-power fields are not supported"
        )));
    }
    if points > MAX_TABLE_ELEMENTS {
        return Err(Error::CapExceeded {
            what: "plane ground set",
            size: points,
            cap: MAX_TABLE_ELEMENTS,
        });
    }
    Ok(())
}

/// Sort each line's points, then the lines themselves.
fn sorted_lines(mut lines: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for l in &mut lines {
        l.sort_unstable();
    }
    lines.sort();
    lines.dedup();
    lines
}

/// The affine plane `AG(2, q)` with its roles swapped: the ground set is
/// the `q² + q` lines (sorted by their point lists) and each of the `q²`
/// points, in lexicographic order, is the hyperedge of lines through it.
pub fn affine_plane(q: usize) -> Result<GalleryItem> {
    check_plane_order(q, q * q + q)?;
    let point = |x: usize, y: usize| x * q + y;
    let mut lines = Vec::new();
    for m in 0..q {
        for b in 0..q {
            lines.push((0..q).map(|x| point(x, (m * x + b) % q)).collect());
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| point(c, y)).collect());
    }
    let lines = sorted_lines(lines);
    let hyperedges = (0..q * q)
        .map(|p| bits::from_elements((0..lines.len()).filter(|&l| lines[l].contains(&p))))
        .collect();
    let h = Hypergraph::new(lines.len(), hyperedges, true)?;
    let t = vec![1; q * q];
    GalleryItem::from_hypergraph("affine", vec![q as i64], h, t)
}

fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The projective plane `PG(2, q)`: ground set the points (normalized
/// homogeneous triples in lexicographic order), hyperedges the lines.
pub fn projective_plane(q: usize) -> Result<GalleryItem> {
    check_plane_order(q, q * q + q + 1)?;
    let points = normalized_triples(q);
    let hyperedges: Vec<Subset> = points
        .iter()
        .map(|l| {
            bits::from_elements(
                (0..points.len()).filter(|&p| (0..3).map(|i| l[i] * points[p][i]).sum::<usize>() % q == 0),
            )
        })
        .collect();
    let h = Hypergraph::new(points.len(), hyperedges, true)?;
    let t = vec![1; points.len()];
    GalleryItem::from_hypergraph("projective", vec![q as i64], h, t)
}

/// The 4-element `k`-polymatroid with `ρ({a,d}) = 2k`, other pairs
/// `2k − 1`, triples `3k − 2` and `ρ(E) = s`; `a, b, c, d` are `0..4`.
pub fn vamos_like(k: u32, s: u32) -> Result<GalleryItem> {
    if k < 2 || s + 2 < 3 * k || s + 4 > 4 * k {
        return Err(Error::OutOfRange(format!(
            "need k ≥ 2 and 3k − 2 ≤ s ≤ 4k − 4, got k = {k}, s = {s}"
        )));
    }
    let rho = Polymatroid::from_fn(4, |x| match bits::size(x) {
        0 => 0,
        1 => k,
        2 if x == 0b1001 => 2 * k,
        2 => 2 * k - 1,
        3 => 3 * k - 2,
        _ => s,
    })?;
    Ok(GalleryItem::from_table(
        "vamos",
        vec![k.into(), s.into()],
        rho,
        Expected {
            chromatic_number: Some(ChromaticNumber::Infinite),
            polynomial: Some(Poly::zero()),
        },
    ))
}

/// `ρ = r_M + r_{U_{r,E}}` for a paving matroid `M` of rank `r` with `s ≥ 1`
/// cyclic hyperplanes. When `M` is connected, `χ(ρ; x) = 2^{s−1} x(x − 1)`;
/// a disconnected `M` also splits into more parts, so no polynomial is
/// attached.
pub fn paving_pair(m: &Matroid) -> Result<GalleryItem> {
    let r = m.total_rank();
    if m.circuits().iter().any(|&c| (bits::size(c) as u32) < r) {
        return Err(Error::Precondition("the matroid is not paving".into()));
    }
    let s = m.cyclic_hyperplanes().len();
    if s == 0 {
        return Err(Error::Precondition("the matroid has no cyclic hyperplane".into()));
    }
    let u = Matroid::uniform(r as usize, m.full(), m.n())?;
    let rho = m.sum(&u)?;
    let polynomial = m.is_connected().then(|| {
        let scale = BigRational::from_integer((1u64 << (s - 1)).into());
        (&Poly::x() * &Poly::linear(1)).scale(&scale)
    });
    Ok(GalleryItem::from_table(
        "paving",
        vec![s as i64],
        rho,
        Expected {
            chromatic_number: Some(ChromaticNumber::Finite(2)),
            polynomial,
        },
    ))
}

/// The rank-2 matroid on four elements with parallel pairs `{0,1}` and
/// `{2,3}`.
pub fn two_parallel_pairs() -> Matroid {
    Matroid::from_table(4, (0..16).map(|x: Subset| bits::size(x & 0b0011).min(1) as u32 + bits::size(x & 0b1100).min(1) as u32).collect())
        .expect("two parallel classes form a matroid")
}

pub fn paving_two_pairs() -> Result<GalleryItem> {
    let mut item = paving_pair(&two_parallel_pairs())?;
    item.name = "paving-2pairs".into();
    Ok(item)
}

/// Singletons 3, pairs 5, triples 6, whole set 6.
pub fn three_poly_example() -> GalleryItem {
    let rho = Polymatroid::from_fn(4, |x| match bits::size(x) {
        0 => 0,
        1 => 3,
        2 => 5,
        _ => 6,
    })
    .expect("the table is a polymatroid");
    GalleryItem::from_table(
        "three-poly",
        Vec::new(),
        rho,
        Expected {
            chromatic_number: None,
            polynomial: Some(Poly::from_integers(&[0, 34, -49, 4, 18, -8, 1])),
        },
    )
}

/// With `A = 0..nA`, `B` the next `nB` elements and `C` the last one,
/// `ρ = r_{U_{1,A∪C}} + r_{U_{1,B∪C}} + r_{U_{n−2,A∪B}}`.
pub fn tree_example(na: usize, nb: usize) -> Result<GalleryItem> {
    let n = na + nb + 1;
    if na == 0 || nb == 0 || n < 4 {
        return Err(Error::OutOfRange(format!(
            "need nA, nB ≥ 1 and nA + nB + 1 ≥ 4, got {na}, {nb}"
        )));
    }
    if n > MAX_TABLE_ELEMENTS {
        return Err(Error::CapExceeded {
            what: "tree example ground set",
            size: n,
            cap: MAX_TABLE_ELEMENTS,
        });
    }
    let a = bits::full(na);
    let b = bits::full(na + nb) & !a;
    let c = bits::singleton(n - 1);
    let rho = Matroid::uniform(1, a | c, n)?
        .sum(Matroid::uniform(1, b | c, n)?.polymatroid())?
        .sum(Matroid::uniform(n - 2, a | b, n)?.polymatroid())?;
    Ok(GalleryItem::from_table(
        "tree",
        vec![na as i64, nb as i64],
        rho,
        Expected {
            chromatic_number: Some(ChromaticNumber::Finite(3)),
            polynomial: None,
        },
    ))
}

/// `ρ(e) = b`, `ρ(f) = c`, `ρ({e,f}) = a + c` on two elements, a minimal
/// obstruction to being a `k`-quotient polymatroid.
pub fn quotient_excluded(a: u32, b: u32, c: u32, k: u32) -> Result<GalleryItem> {
    if !(a < b && b < c && c <= k) {
        return Err(Error::OutOfRange(format!(
            "need 0 ≤ a < b < c ≤ k, got {a}, {b}, {c}, {k}"
        )));
    }
    let rho = Polymatroid::from_table(2, vec![0, b, c, a + c])?;
    Ok(GalleryItem::from_table(
        "rho-a",
        vec![a.into(), b.into(), c.into(), k.into()],
        rho,
        Expected::default(),
    ))
}

/// Look up an item by its command-line name.
pub fn by_name(name: &str, params: &[i64]) -> Result<GalleryItem> {
    let arity = |want: usize| {
        if params.len() == want {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "{name} takes {want} parameters, got {}",
                params.len()
            )))
        }
    };
    let nonneg = |i: usize| {
        usize::try_from(params[i])
            .map_err(|_| Error::OutOfRange(format!("parameter {} must be nonnegative", params[i])))
    };
    let small = |i: usize| nonneg(i).map(|v| v.min(u32::MAX as usize) as u32);
    match name {
        "boolean-cycle" => {
            arity(1)?;
            boolean_cycle(nonneg(0)?)
        }
        "boolean-path" => {
            arity(1)?;
            boolean_path(nonneg(0)?)
        }
        "affine" => {
            arity(1)?;
            affine_plane(nonneg(0)?)
        }
        "projective" => {
            arity(1)?;
            projective_plane(nonneg(0)?)
        }
        "vamos" => {
            arity(2)?;
            vamos_like(small(0)?, small(1)?)
        }
        "paving-2pairs" => {
            arity(0)?;
            paving_two_pairs()
        }
        "three-poly" => {
            arity(0)?;
            Ok(three_poly_example())
        }
        "tree" => {
            arity(2)?;
            tree_example(nonneg(0)?, nonneg(1)?)
        }
        "rho-a" => {
            if params.len() == 3 {
                let c = small(2)?;
                quotient_excluded(small(0)?, small(1)?, c, c)
            } else {
                arity(4)?;
                quotient_excluded(small(0)?, small(1)?, small(2)?, small(3)?)
            }
        }
        _ => Err(Error::OutOfRange(format!("unknown gallery item {name:?}"))),
    }
}

/// Command-line names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "boolean-cycle",
    "boolean-path",
    "affine",
    "projective",
    "vamos",
    "paving-2pairs",
    "three-poly",
    "tree",
    "rho-a",
];
