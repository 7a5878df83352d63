//! Integer polymatroids on at most 16 elements: exact enumeration of their
//! decompositions into matroids, the chromatic polynomial and number those
//! decompositions define, hypergraph constructions, quotient chains and
//! matroid mixing.

pub mod bits;
pub mod decomp;
pub mod error;
pub mod format;
pub mod gallery;
pub mod graph;
pub mod hyper;
pub mod ground;
pub mod matroid;
pub mod mixing;
pub mod poly;
pub mod polymatroid;
pub mod quotient;
