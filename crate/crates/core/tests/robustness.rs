//! Lazy insertions followed by cleanup must not change any query answer.

mod common;

use common::*;
use csd_core::{build_flag, CriticalSimplexDiagram, ExplicitComplex, Simplex, WeightedGraph};
use proptest::prelude::*;

fn snapshot(d: &CriticalSimplexDiagram) -> Vec<String> {
    all_subsets(d.n())
        .into_iter()
        .map(|s| {
            format!(
                "{:?} {} {} {:?} {:?} {:?} {:?}",
                s,
                d.membership(&s),
                d.is_maximal(&s),
                d.filtration(&s).ok(),
                d.is_critical(&s).ok(),
                d.facet_filtrations(&s).ok(),
                d.coface_filtrations_codim1(&s).ok()
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cleanup_preserves_queries(
        (n, t, edges) in arb_weighted_graph(7, 5),
        batch in proptest::collection::vec((1u32..128, any::<u32>()), 0..8),
    ) {
        let g = WeightedGraph::from_edges(n, edges.iter().copied()).unwrap();
        let mut d = build_flag(&g, t).unwrap();
        let mut o = ExplicitComplex::flag(n, &edge_map(&edges), t);
        let batch: Vec<(Simplex, u32)> = batch
            .into_iter()
            .map(|(m, l)| {
                let m = m % ((1 << n) - 1) + 1;
                let verts = (0..n as u32).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect();
                (Simplex::new(verts).unwrap(), l % (t + 1))
            })
            .collect();
        for (s, l) in &batch {
            o.lower(s, *l);
        }
        for (s, l) in &batch {
            d.lazy_insert(s, *l, o.is_maximal(s)).unwrap();
        }
        let before = snapshot(&d);
        let stars = d.star_count();
        let deleted = d.cleanup();
        prop_assert_eq!(d.star_count() + deleted, stars);
        prop_assert_eq!(snapshot(&d), before);
        prop_assert_eq!(d.entries(), o.critical_set());
        prop_assert_eq!(d.cleanup(), 0);
    }
}
