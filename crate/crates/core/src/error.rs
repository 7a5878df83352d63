use crate::bits::{fmt_subset, Subset};

/// The first polymatroid axiom a rank table violates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("rank table has {len} entries, expected 2^{n}")]
    TableLength { n: usize, len: usize },
    #[error("rank of the empty set is {0}, expected 0")]
    NotNormalized(i64),
    #[error("negative rank at {}", fmt_subset(*.0))]
    NegativeRank(Subset),
    #[error("not monotone: rank({}) > rank({})", fmt_subset(*a), fmt_subset(*b))]
    NotMonotone { a: Subset, b: Subset },
    #[error(
        "not submodular: rank(A∪B) + rank(A∩B) > rank(A) + rank(B) for A={}, B={}",
        fmt_subset(*a),
        fmt_subset(*b)
    )]
    NotSubmodular { a: Subset, b: Subset },
}

impl AxiomViolation {
    /// The witness pair `(A, B)` for order and submodularity violations.
    pub fn witness(&self) -> Option<(Subset, Subset)> {
        match *self {
            AxiomViolation::NotMonotone { a, b } | AxiomViolation::NotSubmodular { a, b } => {
                Some((a, b))
            }
            _ => None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("{} is not a subset of a ground set of size {n}", fmt_subset(*set))]
    NotSubset { set: Subset, n: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("element {element} has rank {rank} > {k}")]
    NotKPolymatroid { k: u32, element: usize, rank: u32 },
    #[error("not a matroid: {0}")]
    NotMatroid(String),
    #[error("ground sets differ: {left} vs {right} elements")]
    GroundMismatch { left: usize, right: usize },
    #[error("search incomplete: node budget of {budget} exhausted")]
    Incomplete { budget: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid element names: {0}")]
    InvalidNames(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_incomplete(&self) -> bool {
        matches!(self, Error::Incomplete { .. })
    }

    pub fn is_cap_violation(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
