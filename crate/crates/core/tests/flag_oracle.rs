mod common;

use common::*;
use csd_core::{
    build_flag, build_flag_lazy, enumerate_maximal_cliques, ExplicitComplex, WeightedGraph,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flag_build_matches_oracle((n, t, edges) in arb_weighted_graph(8, 6)) {
        let g = WeightedGraph::from_edges(n, edges.iter().copied()).unwrap();
        let d = build_flag(&g, t).unwrap();
        let o = ExplicitComplex::flag(n, &edge_map(&edges), t);
        prop_assert_eq!(d.entries(), o.critical_set());
        assert_queries_match(&d, &o);
    }

    #[test]
    fn lazy_flag_build_answers_queries_before_cleanup((n, t, edges) in arb_weighted_graph(7, 4)) {
        let g = WeightedGraph::from_edges(n, edges.iter().copied()).unwrap();
        let d = build_flag_lazy(&g, t).unwrap();
        let o = ExplicitComplex::flag(n, &edge_map(&edges), t);
        assert_queries_match(&d, &o);
        assert_critical_sets_match(&d, &o);
    }

    #[test]
    fn maximal_cliques_match_oracle((n, _t, edges) in arb_weighted_graph(9, 0)) {
        let g = WeightedGraph::from_edges(n, edges.iter().copied()).unwrap();
        let o = ExplicitComplex::flag(n, &edge_map(&edges), 0);
        prop_assert_eq!(enumerate_maximal_cliques(&g), o.maximal_simplices());
    }

    #[test]
    fn size_bounds_hold((n, t, edges) in arb_weighted_graph(8, 6)) {
        let g = WeightedGraph::from_edges(n, edges.iter().copied()).unwrap();
        let d = build_flag(&g, t).unwrap();
        let o = ExplicitComplex::flag(n, &edge_map(&edges), t);
        let s = d.stats();
        let os = o.oracle_stats();
        prop_assert_eq!(s.node_count, os.critical_nodes);
        prop_assert!(s.node_count <= s.critical * (s.d + 1));
        prop_assert!(s.node_count <= s.psi * s.n);
        prop_assert!(s.gamma0 <= s.psi);
        prop_assert!(s.psi <= os.m);
        prop_assert_eq!(s.psi, os.psi);
        prop_assert_eq!(s.gamma0, os.gamma[0]);
        if t == 0 {
            prop_assert_eq!(s.gamma0, s.psi);
        }
    }
}
