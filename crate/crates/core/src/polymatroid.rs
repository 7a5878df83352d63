//! Integer polymatroids stored as exact rank tables.
//!
//! The rank of subset `S` lives at index `S` of the table (see [`crate::bits`]).
//! Every constructor validates the three axioms (normalized, non-decreasing,
//! submodular), so a `Polymatroid` value is always valid.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bits::{self, Subset, MAX_TABLE_ELEMENTS};
use crate::error::{AxiomViolation, Error, Result};
use crate::ground::{GroundSet, Permutation};

#[derive(Debug, Clone)]
pub struct Polymatroid {
    ground: GroundSet,
    rank: Vec<u32>,
}

/// Equality, ordering and hashing look at the rank table only; element
/// names are display metadata.
impl PartialEq for Polymatroid {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
    }
}

impl Eq for Polymatroid {}

impl Hash for Polymatroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
    }
}

impl PartialOrd for Polymatroid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Tables of different sizes order by size first, then lexicographically.
impl Ord for Polymatroid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .len()
            .cmp(&other.rank.len())
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_TABLE_ELEMENTS {
        Err(Error::CapExceeded {
            what: "rank table ground set",
            size: n,
            cap: MAX_TABLE_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

/// Check the polymatroid axioms on a raw table, reporting the first violation.
///
/// Axioms are checked in order: table length, normalization, nonnegativity,
/// monotonicity over single-element steps, then submodularity in its local
/// form `ρ(S∪e) + ρ(S∪f) ≥ ρ(S∪{e,f}) + ρ(S)`, which is equivalent to the
/// all-pairs form. Witnesses are `(A, B)` pairs of the violated inequality.
pub fn check_axioms(table: &[i64], n: usize) -> std::result::Result<(), AxiomViolation> {
    if n >= usize::BITS as usize || table.len() != 1usize << n {
        return Err(AxiomViolation::TableLength {
            n,
            len: table.len(),
        });
    }
    if table[0] != 0 {
        return Err(AxiomViolation::NotNormalized(table[0]));
    }
    if let Some(s) = table.iter().position(|&r| r < 0) {
        return Err(AxiomViolation::NegativeRank(s as Subset));
    }
    let full = bits::full(n);
    for s in 0..=full {
        for e in bits::elements(full & !s) {
            let b = s | bits::singleton(e);
            if table[s as usize] > table[b as usize] {
                return Err(AxiomViolation::NotMonotone { a: s, b });
            }
        }
    }
    for s in 0..=full {
        let out = full & !s;
        for e in bits::elements(out) {
            for f in bits::elements(out & !bits::full(e + 1)) {
                let se = s | bits::singleton(e);
                let sf = s | bits::singleton(f);
                let sef = se | sf;
                if table[se as usize] + table[sf as usize]
                    < table[sef as usize] + table[s as usize]
                {
                    return Err(AxiomViolation::NotSubmodular { a: se, b: sf });
                }
            }
        }
    }
    Ok(())
}

/// Fast validity test for tables produced internally (already nonnegative).
pub(crate) fn is_valid_table(table: &[u32], n: usize) -> bool {
    if table[0] != 0 {
        return false;
    }
    let full = bits::full(n);
    for s in 0..=full {
        let rs = table[s as usize];
        let out = full & !s;
        for e in bits::elements(out) {
            let se = s | bits::singleton(e);
            let rse = table[se as usize];
            if rs > rse {
                return false;
            }
            for f in bits::elements(out & !bits::full(e + 1)) {
                let sf = s | bits::singleton(f);
                if rse + table[sf as usize] < table[(se | sf) as usize] + rs {
                    return false;
                }
            }
        }
    }
    true
}

/// Validate a rank table on `n` elements.
pub fn validate(table: &[i64], n: usize) -> Result<Polymatroid> {
    check_size(n)?;
    check_axioms(table, n)?;
    Ok(Polymatroid {
        ground: GroundSet::new(n),
        rank: table.iter().map(|&r| r as u32).collect(),
    })
}

impl Polymatroid {
    /// Validate `table` as a polymatroid on `ground`.
    pub fn new(ground: GroundSet, table: Vec<u32>) -> Result<Self> {
        let n = ground.len();
        check_size(n)?;
        let wide: Vec<i64> = table.iter().map(|&r| r as i64).collect();
        check_axioms(&wide, n)?;
        Ok(Polymatroid { ground, rank: table })
    }

    pub fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        Self::new(GroundSet::new(n), table)
    }

    /// Build a table by evaluating `f` on every subset, then validate it.
    pub fn from_fn(n: usize, f: impl Fn(Subset) -> u32) -> Result<Self> {
        check_size(n)?;
        Self::from_table(n, (0..=bits::full(n)).map(f).collect())
    }

    /// The caller guarantees validity.
    pub(crate) fn from_parts_unchecked(ground: GroundSet, rank: Vec<u32>) -> Self {
        debug_assert_eq!(rank.len(), 1 << ground.len());
        debug_assert!(is_valid_table(&rank, ground.len()));
        Polymatroid { ground, rank }
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Polymatroid {
            ground: GroundSet::new(n),
            rank: vec![0; 1 << n],
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n() {
            return Err(Error::InvalidNames(format!(
                "{} names for {} elements",
                names.len(),
                self.n()
            )));
        }
        self.ground = GroundSet::with_names(names)?;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    #[inline]
    pub fn rank(&self, s: Subset) -> u32 {
        self.rank[s as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.rank
    }

    pub fn into_table(self) -> Vec<u32> {
        self.rank
    }

    pub fn total_rank(&self) -> u32 {
        self.rank[self.full() as usize]
    }

    pub fn singleton_rank(&self, e: usize) -> u32 {
        self.rank(bits::singleton(e))
    }

    pub fn max_singleton_rank(&self) -> u32 {
        (0..self.n()).map(|e| self.singleton_rank(e)).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.total_rank() == 0
    }

    /// Every singleton has rank at most `k`.
    pub fn is_k_polymatroid(&self, k: u32) -> bool {
        self.max_singleton_rank() <= k
    }

    /// Unit increase: adding an element raises the rank by at most one.
    pub fn is_matroid(&self) -> bool {
        let full = self.full();
        (0..=full).all(|s| {
            bits::elements(full & !s)
                .all(|e| self.rank(s | bits::singleton(e)) - self.rank(s) <= 1)
        })
    }

    fn check_k(&self, k: u32) -> Result<()> {
        match (0..self.n()).find(|&e| self.singleton_rank(e) > k) {
            Some(e) => Err(Error::NotKPolymatroid {
                k,
                element: e,
                rank: self.singleton_rank(e),
            }),
            None => Ok(()),
        }
    }

    /// The minor `(ρ \ deleted) / contracted` on the remaining elements,
    /// compacted in their original relative order.
    pub fn minor(&self, deleted: Subset, contracted: Subset) -> Result<Polymatroid> {
        self.ground.check_subset(deleted)?;
        self.ground.check_subset(contracted)?;
        if deleted & contracted != 0 {
            return Err(Error::Precondition(format!(
                "deleted {} and contracted {} overlap",
                bits::fmt_subset(deleted),
                bits::fmt_subset(contracted)
            )));
        }
        let keep = self.full() & !deleted & !contracted;
        let base = self.rank(contracted);
        let m = bits::size(keep);
        let rank = (0..=bits::full(m))
            .map(|x| self.rank(bits::expand(x, keep) | contracted) - base)
            .collect();
        Ok(Polymatroid {
            ground: self.ground.restrict(keep),
            rank,
        })
    }

    /// `ρ\A(X) = ρ(X)` on `E − A`.
    pub fn delete(&self, a: Subset) -> Result<Polymatroid> {
        self.minor(a, 0)
    }

    /// `ρ/A(X) = ρ(X ∪ A) − ρ(A)` on `E − A`.
    pub fn contract(&self, a: Subset) -> Result<Polymatroid> {
        self.minor(0, a)
    }

    /// The restriction `ρ|X`, i.e. deletion of `E − X`.
    pub fn restrict(&self, x: Subset) -> Result<Polymatroid> {
        self.ground.check_subset(x)?;
        self.minor(self.full() & !x, 0)
    }

    /// `(ρ1 ⊕ ρ2)(X) = ρ1(X∩E1) + ρ2(X∩E2)`; `other`'s elements are shifted
    /// past this one's.
    pub fn direct_sum(&self, other: &Polymatroid) -> Result<Polymatroid> {
        let n1 = self.n();
        check_size(n1 + other.n())?;
        let low = bits::full(n1);
        let rank = (0..=bits::full(n1 + other.n()))
            .map(|x| self.rank(x & low) + other.rank(x >> n1))
            .collect();
        Ok(Polymatroid {
            ground: self.ground.concat(&other.ground),
            rank,
        })
    }

    /// Pointwise sum of two polymatroids on the same ground set.
    pub fn sum(&self, other: &Polymatroid) -> Result<Polymatroid> {
        if self.n() != other.n() {
            return Err(Error::GroundMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let rank = self.rank.iter().zip(&other.rank).map(|(a, b)| a + b).collect();
        Ok(Polymatroid {
            ground: self.ground.clone(),
            rank,
        })
    }

    /// `self − other` when every entry stays nonnegative and the difference
    /// is again a polymatroid.
    pub fn checked_sub(&self, other: &Polymatroid) -> Option<Polymatroid> {
        if self.n() != other.n() {
            return None;
        }
        let mut rank = Vec::with_capacity(self.rank.len());
        for (a, b) in self.rank.iter().zip(&other.rank) {
            rank.push(a.checked_sub(*b)?);
        }
        is_valid_table(&rank, self.n()).then(|| Polymatroid {
            ground: self.ground.clone(),
            rank,
        })
    }

    /// `T(ρ, s)(X) = min{ρ(X), s}` for `0 ≤ s ≤ ρ(E)`.
    pub fn truncate(&self, s: u32) -> Result<Polymatroid> {
        if s > self.total_rank() {
            return Err(Error::OutOfRange(format!(
                "truncation rank {s} exceeds total rank {}",
                self.total_rank()
            )));
        }
        Ok(Polymatroid {
            ground: self.ground.clone(),
            rank: self.rank.iter().map(|&r| r.min(s)).collect(),
        })
    }

    /// The `i`-dual `ρ*(X) = i|X| − ρ(E) + ρ(E − X)` of an `i`-polymatroid.
    pub fn i_dual(&self, i: u32) -> Result<Polymatroid> {
        self.check_k(i)?;
        let full = self.full();
        let total = self.total_rank();
        let rank = (0..=full)
            .map(|x| i * bits::size(x) as u32 + self.rank(full & !x) - total)
            .collect();
        Ok(Polymatroid {
            ground: self.ground.clone(),
            rank,
        })
    }

    /// `ρ^j(X) = ρ(X) + (j − i)|X|` for an `i`-polymatroid and `j ≥ i`.
    pub fn inflate(&self, i: u32, j: u32) -> Result<Polymatroid> {
        if j < i {
            return Err(Error::OutOfRange(format!("inflation target {j} < {i}")));
        }
        self.check_k(i)?;
        let rank = self
            .rank
            .iter()
            .enumerate()
            .map(|(x, &r)| r + (j - i) * bits::size(x as Subset) as u32)
            .collect();
        Ok(Polymatroid {
            ground: self.ground.clone(),
            rank,
        })
    }

    /// Relabel: the result `σ` satisfies `σ(π(A)) = ρ(A)`.
    pub fn permute(&self, perm: &Permutation) -> Result<Polymatroid> {
        if perm.images().len() != self.n() {
            return Err(Error::GroundMismatch {
                left: self.n(),
                right: perm.images().len(),
            });
        }
        let mut rank = vec![0; self.rank.len()];
        for a in 0..=self.full() {
            rank[perm.apply_set(a) as usize] = self.rank(a);
        }
        Ok(Polymatroid {
            ground: GroundSet::new(self.n()),
            rank,
        })
    }

    /// The lexicographically least permutation `π` with
    /// `self(π(A)) = other(A)` for all `A`, if any.
    pub fn isomorphic(&self, other: &Polymatroid) -> Option<Permutation> {
        let n = self.n();
        if n != other.n() {
            return None;
        }
        let mut a: Vec<u32> = (0..n).map(|e| self.singleton_rank(e)).collect();
        let mut b: Vec<u32> = (0..n).map(|e| other.singleton_rank(e)).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b || self.total_rank() != other.total_rank() {
            return None;
        }
        let mut images = Vec::with_capacity(n);
        let mut used = 0u32;
        self.extend_iso(other, &mut images, &mut used)
            .then(|| Permutation::new(images).expect("search builds a bijection"))
    }

    fn extend_iso(&self, other: &Polymatroid, images: &mut Vec<usize>, used: &mut u32) -> bool {
        let m = images.len();
        if m == self.n() {
            return true;
        }
        for target in 0..self.n() {
            if bits::contains(*used, target) {
                continue;
            }
            images.push(target);
            // Check every subset of the assigned prefix that contains `m`.
            let consistent = bits::subsets_of(bits::full(m)).all(|rest| {
                let a = rest | bits::singleton(m);
                let image = bits::elements(a).fold(0, |acc, e| acc | bits::singleton(images[e]));
                self.rank(image) == other.rank(a)
            });
            if consistent {
                *used |= bits::singleton(target);
                if self.extend_iso(other, images, used) {
                    return true;
                }
                *used &= !bits::singleton(target);
            }
            images.pop();
        }
        false
    }

    /// Whether `ρ(A) = ρ(A ∩ X) + ρ(A − X)` for every `A`.
    pub fn is_separator(&self, x: Subset) -> bool {
        let full = self.full();
        let x = x & full;
        if self.rank(x) + self.rank(full & !x) != self.total_rank() {
            return false;
        }
        (0..=full).all(|a| self.rank(a) == self.rank(a & x) + self.rank(a & !x))
    }

    /// The finest partition of `E` into blocks `E_j` with
    /// `ρ(A) = Σ_j ρ(A ∩ E_j)`; blocks are listed by least element.
    pub fn connectivity_split(&self) -> Vec<Subset> {
        let mut blocks = Vec::new();
        let mut rest = self.full();
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            let others = rest & !bits::singleton(e);
            // Separators are closed under intersection, so the least one
            // containing `e` is the block of `e`. Search by increasing size.
            let block = (0..=bits::size(others))
                .flat_map(|k| bits::subsets_of_size(others, k))
                .map(|s| s | bits::singleton(e))
                .find(|&s| self.is_separator(s))
                .unwrap_or(rest);
            blocks.push(block);
            rest &= !block;
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity_split().len() <= 1
    }

    /// All minors on the 2-element, 3-element, … ground set `keep`: every
    /// split of `E − keep` into deleted and contracted parts.
    pub fn minors_onto(&self, keep: Subset) -> impl Iterator<Item = (Subset, Subset)> {
        let outside = self.full() & !keep;
        bits::subsets_of(outside).map(move |contracted| (outside & !contracted, contracted))
    }
}

impl std::fmt::Display for Polymatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polymatroid(n={}, rank={:?})", self.n(), self.rank)
    }
}
