use std::collections::HashSet;

use crate::bits::{self, Subset};
use crate::error::{Error, Result};

/// A labeled finite set `{0, …, n−1}` with optional display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    size: usize,
    names: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, names: None }
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidNames(format!("duplicate name {name:?}")));
            }
        }
        Ok(GroundSet {
            size: names.len(),
            names: Some(names),
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn full(&self) -> Subset {
        bits::full(self.size)
    }

    pub fn name(&self, e: usize) -> String {
        match &self.names {
            Some(names) => names[e].clone(),
            None => e.to_string(),
        }
    }

    /// The ground set restricted to `keep`, compacted in relative order.
    pub fn restrict(&self, keep: Subset) -> GroundSet {
        GroundSet {
            size: bits::size(keep),
            names: self
                .names
                .as_ref()
                .map(|names| bits::elements(keep).map(|e| names[e].clone()).collect()),
        }
    }

    /// Disjoint union; the elements of `other` follow those of `self`.
    ///
    /// Names are kept only when both sides carry them and they stay distinct.
    pub fn concat(&self, other: &GroundSet) -> GroundSet {
        let names = match (&self.names, &other.names) {
            (Some(a), Some(b)) => {
                let joined: Vec<String> = a.iter().chain(b).cloned().collect();
                let distinct = joined.iter().collect::<HashSet<_>>().len() == joined.len();
                distinct.then_some(joined)
            }
            _ => None,
        };
        GroundSet {
            size: self.size + other.size,
            names,
        }
    }

    pub(crate) fn check_subset(&self, s: Subset) -> Result<()> {
        if bits::is_subset(s, self.full()) {
            Ok(())
        } else {
            Err(Error::NotSubset {
                set: s,
                n: self.size,
            })
        }
    }
}

/// A bijection on `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, e: usize) -> usize {
        self.0[e]
    }

    pub fn apply_set(&self, s: Subset) -> Subset {
        bits::elements(s).fold(0, |acc, e| acc | bits::singleton(self.0[e]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}
