//! Bitmask subsets of a ground set `0..n`.
//!
//! A subset `S` is encoded as `Σ_{j∈S} 2^j`, which is also its index into a
//! rank table.

/// A subset of the ground set, encoded as a bitmask.
pub type Subset = u32;

/// Largest ground set a rank table may be built on.
pub const MAX_TABLE_ELEMENTS: usize = 16;

#[inline]
pub fn full(n: usize) -> Subset {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn singleton(e: usize) -> Subset {
    1u32 << e
}

#[inline]
pub fn contains(s: Subset, e: usize) -> bool {
    s >> e & 1 == 1
}

#[inline]
pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn is_subset(a: Subset, b: Subset) -> bool {
    a & !b == 0
}

/// Elements of `s` in increasing order.
pub fn elements(s: Subset) -> impl Iterator<Item = usize> + Clone {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(e)
        }
    })
}

/// All subsets of `s`, in increasing integer order.
pub fn subsets_of(s: Subset) -> impl Iterator<Item = Subset> {
    // Enumerate by walking submasks upward: next = ((cur | !s) + 1) & s.
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == s {
            None
        } else {
            Some(((cur | !s).wrapping_add(1)) & s)
        };
        Some(cur)
    })
}

/// Subsets of `s` with exactly `k` elements, in increasing integer order.
pub fn subsets_of_size(s: Subset, k: usize) -> impl Iterator<Item = Subset> {
    subsets_of(s).filter(move |&x| size(x) == k)
}

/// Re-index `s` onto the compacted ground set obtained by keeping only the
/// elements of `keep` (relative order preserved).
pub fn compact(s: Subset, keep: Subset) -> Subset {
    let mut out = 0;
    for (i, e) in elements(keep).enumerate() {
        if contains(s, e) {
            out |= 1 << i;
        }
    }
    out
}

/// Inverse of [`compact`]: map a subset of the compacted ground set back
/// to the original indices.
pub fn expand(s: Subset, keep: Subset) -> Subset {
    let mut out = 0;
    for (i, e) in elements(keep).enumerate() {
        if contains(s, i) {
            out |= 1 << e;
        }
    }
    out
}

/// Render a subset as `{0,2,3}`.
pub fn fmt_subset(s: Subset) -> String {
    let parts: Vec<String> = elements(s).map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Build a subset from element indices.
pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Subset {
    it.into_iter().fold(0, |acc, e| acc | singleton(e))
}
