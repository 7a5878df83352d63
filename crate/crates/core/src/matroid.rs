//! Matroids as unit-increase polymatroids, plus the exhaustive enumerator
//! that serves as the oracle for decomposition search.

use std::ops::Deref;

use crate::bits::{self, Subset};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::polymatroid::Polymatroid;

/// Largest ground set [`enumerate_matroids`] accepts.
pub const MAX_ENUMERATION_ELEMENTS: usize = 6;

/// Largest ground set [`matroid_summands`] accepts.
pub const MAX_SUMMAND_ELEMENTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid(Polymatroid);

impl Deref for Matroid {
    type Target = Polymatroid;

    fn deref(&self) -> &Polymatroid {
        &self.0
    }
}

impl From<Matroid> for Polymatroid {
    fn from(m: Matroid) -> Polymatroid {
        m.0
    }
}

impl TryFrom<Polymatroid> for Matroid {
    type Error = Error;

    fn try_from(p: Polymatroid) -> Result<Matroid> {
        Matroid::new(p)
    }
}

impl Matroid {
    pub fn new(p: Polymatroid) -> Result<Self> {
        if p.is_matroid() {
            Ok(Matroid(p))
        } else {
            Err(Error::NotMatroid(format!("{p}")))
        }
    }

    pub(crate) fn new_unchecked(p: Polymatroid) -> Self {
        debug_assert!(p.is_matroid());
        Matroid(p)
    }

    pub fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        Self::new(Polymatroid::from_table(n, table)?)
    }

    /// `U_{r,S} ⊕ U_{0,[n]−S}`: rank `min(|A ∩ S|, r)`.
    pub fn uniform(r: usize, s: Subset, n: usize) -> Result<Self> {
        GroundSet::new(n).check_subset(s)?;
        if r > bits::size(s) {
            return Err(Error::OutOfRange(format!(
                "uniform rank {r} exceeds |S| = {}",
                bits::size(s)
            )));
        }
        Polymatroid::from_fn(n, |a| bits::size(a & s).min(r) as u32).map(Matroid)
    }

    /// The matroid in which every element is a loop.
    pub fn zero(n: usize) -> Result<Self> {
        Polymatroid::zero(n).map(Matroid)
    }

    /// The free matroid `U_{n,n}`.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, bits::full(n), n)
    }

    pub fn polymatroid(&self) -> &Polymatroid {
        &self.0
    }

    pub fn loops(&self) -> Subset {
        bits::from_elements((0..self.n()).filter(|&e| self.singleton_rank(e) == 0))
    }

    pub fn coloops(&self) -> Subset {
        let full = self.full();
        let r = self.total_rank();
        bits::from_elements(
            (0..self.n()).filter(|&e| self.rank(full & !bits::singleton(e)) < r),
        )
    }

    /// Minimal dependent sets, in increasing bitmask order.
    pub fn circuits(&self) -> Vec<Subset> {
        (1..=self.full())
            .filter(|&c| self.is_circuit(c))
            .collect()
    }

    pub fn is_circuit(&self, c: Subset) -> bool {
        let k = bits::size(c) as u32;
        c != 0
            && self.rank(c) + 1 == k
            && bits::elements(c).all(|e| self.rank(c & !bits::singleton(e)) + 1 == k)
    }

    /// Classes of the parallel relation on non-loops, ordered by least
    /// element.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let mut rest = self.full() & !self.loops();
        let mut classes = Vec::new();
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            let class = bits::singleton(e)
                | bits::from_elements(
                    bits::elements(rest)
                        .filter(|&f| f != e && self.rank(bits::singleton(e) | bits::singleton(f)) == 1),
                );
            classes.push(class);
            rest &= !class;
        }
        classes
    }

    pub fn components(&self) -> Vec<Subset> {
        self.connectivity_split()
    }

    /// `r*(X) = |X| − r(E) + r(E − X)`.
    pub fn dual(&self) -> Matroid {
        Matroid(self.i_dual(1).expect("matroids are 1-polymatroids"))
    }

    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        x | bits::from_elements(
            bits::elements(self.full() & !x).filter(|&e| self.rank(x | bits::singleton(e)) == r),
        )
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        self.closure(x) == x
    }

    pub fn is_hyperplane(&self, x: Subset) -> bool {
        self.is_flat(x) && self.rank(x) + 1 == self.total_rank()
    }

    /// A set is cyclic when it is a union of circuits, that is when
    /// no element of it is a coloop of the restriction.
    pub fn is_cyclic(&self, x: Subset) -> bool {
        let r = self.rank(x);
        bits::elements(x).all(|e| self.rank(x & !bits::singleton(e)) == r)
    }

    pub fn cyclic_hyperplanes(&self) -> Vec<Subset> {
        if self.total_rank() == 0 {
            return Vec::new();
        }
        (0..=self.full())
            .filter(|&h| self.is_hyperplane(h) && self.is_cyclic(h))
            .collect()
    }

    /// Relax the given cyclic hyperplanes: every subset of a relaxed
    /// hyperplane with at least `r(E)` elements becomes spanning.
    pub fn relax(&self, hyperplanes: &[Subset]) -> Result<Matroid> {
        for &h in hyperplanes {
            self.ground().check_subset(h)?;
            if !(self.is_hyperplane(h) && self.is_cyclic(h)) {
                return Err(Error::Precondition(format!(
                    "{} is not a cyclic hyperplane",
                    bits::fmt_subset(h)
                )));
            }
        }
        let r = self.total_rank();
        let table = (0..=self.full())
            .map(|x| {
                let raised = bits::size(x) as u32 >= r
                    && hyperplanes.iter().any(|&h| bits::is_subset(x, h));
                if raised {
                    r
                } else {
                    self.rank(x)
                }
            })
            .collect();
        let relaxed = Polymatroid::new(self.ground().clone(), table)
            .map_err(|e| Error::Precondition(format!("relaxation is not a matroid: {e}")))?;
        Matroid::new(relaxed)
            .map_err(|e| Error::Precondition(format!("relaxation is not a matroid: {e}")))
    }

    pub fn delete(&self, a: Subset) -> Result<Matroid> {
        self.0.delete(a).map(Matroid)
    }

    pub fn contract(&self, a: Subset) -> Result<Matroid> {
        self.0.contract(a).map(Matroid)
    }

    pub fn restrict(&self, x: Subset) -> Result<Matroid> {
        self.0.restrict(x).map(Matroid)
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        self.0.direct_sum(&other.0).map(Matroid)
    }

    /// Embed into a ground set of size `n`: this matroid's elements land on
    /// `keep` (in order) and every other element is a loop.
    pub fn pad_with_loops(&self, keep: Subset, n: usize) -> Result<Matroid> {
        if bits::size(keep) != self.n() {
            return Err(Error::GroundMismatch {
                left: self.n(),
                right: bits::size(keep),
            });
        }
        GroundSet::new(n).check_subset(keep)?;
        Polymatroid::from_fn(n, |x| self.rank(bits::compact(x, keep))).map(Matroid)
    }

    /// The restriction to `x`, re-embedded with loops on `E − x`.
    pub fn restriction_padded(&self, x: Subset) -> Matroid {
        let table = (0..=self.full()).map(|a| self.rank(a & x)).collect();
        Matroid(Polymatroid::from_parts_unchecked(
            GroundSet::new(self.n()),
            table,
        ))
    }
}

impl std::fmt::Display for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, rank={:?})", self.n(), self.table())
    }
}

/// Whether `q` is a quotient of `l`: `r_L − r_Q` never decreases along a
/// single-element step.
pub fn is_quotient(q: &Matroid, l: &Matroid) -> Result<bool> {
    if q.n() != l.n() {
        return Err(Error::GroundMismatch {
            left: q.n(),
            right: l.n(),
        });
    }
    let full = q.full();
    let diff = |x: Subset| l.rank(x) as i64 - q.rank(x) as i64;
    Ok((0..=full).all(|x| {
        bits::elements(full & !x).all(|e| diff(x | bits::singleton(e)) >= diff(x))
    }))
}

/// Depth-first table builder shared by the enumerators.
///
/// Entries are filled in increasing index order; entry `S` is chosen from
/// `{r(S − top), r(S − top) + 1}` (smaller first) where `top` is the highest
/// element of `S`, so emitted tables are in lexicographic order.
struct Builder<'a> {
    n: usize,
    r_max: u32,
    bound: Option<&'a [u32]>,
    table: Vec<u32>,
}

impl Builder<'_> {
    fn admissible(&self, s: Subset) -> bool {
        let t = &self.table;
        let v = t[s as usize];
        if v > self.r_max {
            return false;
        }
        if let Some(b) = self.bound {
            if v > b[s as usize] {
                return false;
            }
        }
        for e in bits::elements(s) {
            let se = s & !bits::singleton(e);
            let w = t[se as usize];
            if v < w || v > w + 1 {
                return false;
            }
            if let Some(b) = self.bound {
                // The residual bound − table must stay non-decreasing.
                if b[s as usize] - v < b[se as usize] - w {
                    return false;
                }
            }
            for f in bits::elements(s & !bits::full(e + 1)) {
                let sf = s & !bits::singleton(f);
                let sef = se & !bits::singleton(f);
                if v + t[sef as usize] > w + t[sf as usize] {
                    return false;
                }
                if let Some(b) = self.bound {
                    let res = |x: Subset| b[x as usize] as i64 - t[x as usize] as i64;
                    if res(s) + res(sef) > res(se) + res(sf) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, s: Subset, emit: &mut dyn FnMut(&[u32])) {
        let full = bits::full(self.n);
        if s > full {
            emit(&self.table);
            return;
        }
        let top = 31 - s.leading_zeros() as usize;
        let base = self.table[(s & !bits::singleton(top)) as usize];
        for v in [base, base + 1] {
            self.table[s as usize] = v;
            if self.admissible(s) {
                self.run(s + 1, emit);
            }
        }
    }
}

fn build(n: usize, r_max: u32, bound: Option<&[u32]>, emit: &mut dyn FnMut(&[u32])) {
    let mut b = Builder {
        n,
        r_max,
        bound,
        table: vec![0; 1 << n],
    };
    if n == 0 {
        emit(&b.table);
    } else {
        b.run(1, emit);
    }
}

/// Every matroid on `[n]` of rank at most `r_max`, each exactly once, in
/// lexicographic table order.
pub fn enumerate_matroids(n: usize, r_max: usize) -> Result<Vec<Matroid>> {
    if n > MAX_ENUMERATION_ELEMENTS {
        return Err(Error::CapExceeded {
            what: "matroid enumeration ground set",
            size: n,
            cap: MAX_ENUMERATION_ELEMENTS,
        });
    }
    let mut out = Vec::new();
    build(n, r_max.min(n) as u32, None, &mut |t| {
        out.push(Matroid(Polymatroid::from_parts_unchecked(
            GroundSet::new(n),
            t.to_vec(),
        )))
    });
    Ok(out)
}

/// Every matroid `M` on the ground set of `rho` such that `rho − r_M` is a
/// polymatroid, in lexicographic table order (the zero matroid first).
///
/// If `rho = r_M + σ` for polymatroids, then `M` is in this list; and any
/// `M` with `σ − r_M` a polymatroid for a summand `σ` of `rho` is too, since
/// `rho − r_M = (σ − r_M) + (rho − σ)`.
pub fn matroid_summands(rho: &Polymatroid) -> Result<Vec<Matroid>> {
    let n = rho.n();
    if n > MAX_SUMMAND_ELEMENTS {
        return Err(Error::CapExceeded {
            what: "decomposition ground set",
            size: n,
            cap: MAX_SUMMAND_ELEMENTS,
        });
    }
    let mut out = Vec::new();
    build(n, n as u32, Some(rho.table()), &mut |t| {
        out.push(Matroid(Polymatroid::from_parts_unchecked(
            GroundSet::new(n),
            t.to_vec(),
        )))
    });
    Ok(out)
}
