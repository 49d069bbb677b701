//! Critical simplex diagrams.
//!
//! A filtered simplicial complex is stored through its critical simplices
//! only: those whose every coface appears strictly later in the filtration.
//! Each critical simplex is a star graph over per-vertex ordered arrays, which
//! is enough to answer membership, filtration and criticality queries and to
//! support insertion, removal and collapses.
//!
//! Alongside the diagram live a simplex tree for size comparison, an
//! exhaustive reference implementation, and builders for flag (Rips) and
//! relaxed Delaunay filtrations.
//!
//! ```
//! use csd_core::{simplex, CriticalSimplexDiagram};
//!
//! let mut d = CriticalSimplexDiagram::new(4, 3);
//! d.insert(&simplex![1, 2, 3], 2).unwrap();
//! d.insert(&simplex![2, 3], 1).unwrap();
//! assert_eq!(d.filtration(&simplex![2, 3]).unwrap(), 1);
//! assert_eq!(d.filtration(&simplex![1, 3]).unwrap(), 2);
//! assert!(!d.membership(&simplex![3, 4]));
//! ```

pub mod delaunay;
pub mod diagram;
pub mod error;
pub mod flag;
pub mod oracle;
pub mod simplex;
pub mod simplex_tree;

pub use delaunay::{
    build_delaunay, build_delaunay_lazy, nearest_neighbor_matrix, witness_simplices,
    DistanceMatrix, PointSet, RelaxationConfig,
};
pub use diagram::{CriticalSimplexDiagram, NodeRef, Star, Stats};
pub use error::{Error, Result};
pub use flag::{
    build_flag, build_flag_lazy, cliques_through_edge, enumerate_maximal_cliques, PrefixTree,
    WeightedGraph,
};
pub use oracle::{ExplicitComplex, OracleStats};
pub use simplex::{CriticalEntry, Label, Level, Simplex, VertexId};
pub use simplex_tree::SimplexTree;
