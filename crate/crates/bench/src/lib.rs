//! Fixtures shared by the benchmarks.

use csd_cli::commands::{rips_graph, simplex_tree_of};
use csd_cli::klein::klein_bottle;
use csd_core::{
    build_flag, CriticalSimplexDiagram, Level, PointSet, Simplex, SimplexTree, WeightedGraph,
};

pub const SEED: u64 = 0;

pub fn klein_points(count: usize) -> PointSet {
    PointSet::new(klein_bottle(count, SEED)).expect("generated points are valid")
}

pub fn klein_rips(count: usize, rmax: f64, t: Level) -> WeightedGraph {
    rips_graph(&klein_points(count), rmax, t).expect("valid radius")
}

/// The diagram, the simplex tree of the same complex, and every simplex of
/// the complex as query input.
pub fn klein_complex(
    count: usize,
    rmax: f64,
    t: Level,
) -> (CriticalSimplexDiagram, SimplexTree, Vec<Simplex>) {
    let g = klein_rips(count, rmax, t);
    let d = build_flag(&g, t).expect("levels within range");
    let st = simplex_tree_of(&d);
    let simplices = st.simplices().into_iter().map(|(s, _)| s).collect();
    (d, st, simplices)
}
