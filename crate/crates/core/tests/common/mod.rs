#![allow(dead_code)]

use std::collections::BTreeMap;

use csd_core::{CriticalEntry, CriticalSimplexDiagram, Error, ExplicitComplex, Simplex, VertexId};
use proptest::prelude::*;

/// Every non-empty subset of `1..=n`.
pub fn all_subsets(n: usize) -> Vec<Simplex> {
    (1u32..(1 << n))
        .map(|mask| {
            let verts: Vec<VertexId> = (0..n as u32)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            Simplex::new(verts).unwrap()
        })
        .collect()
}

/// `(n, t, edges)` with `u < v` and weights in `0..=t`.
pub fn arb_weighted_graph(
    max_n: usize,
    max_t: u32,
) -> impl Strategy<Value = (usize, u32, Vec<(u32, u32, u32)>)> {
    (1..=max_n, 0..=max_t).prop_flat_map(|(n, t)| {
        let pairs: Vec<(u32, u32)> = (1..=n as u32)
            .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::option::weighted(0.6, 0..=t), len).prop_map(move |ws| {
            let edges = pairs
                .iter()
                .zip(ws)
                .filter_map(|(&(u, v), w)| w.map(|w| (u, v, w)))
                .collect();
            (n, t, edges)
        })
    })
}

pub fn edge_map(edges: &[(u32, u32, u32)]) -> BTreeMap<(u32, u32), u32> {
    edges.iter().map(|&(u, v, w)| ((u, v), w)).collect()
}

/// Critical entries after a cleanup of a copy of `d`.
pub fn cleaned_entries(d: &CriticalSimplexDiagram) -> Vec<CriticalEntry> {
    let mut c = d.clone();
    c.cleanup();
    c.entries()
}

/// Every query on every subset of the vertex universe agrees with `o`.
pub fn assert_queries_match(d: &CriticalSimplexDiagram, o: &ExplicitComplex) {
    d.check_structure().unwrap();
    for s in all_subsets(d.n()) {
        let member = o.contains(&s);
        assert_eq!(d.membership(&s), member, "membership {s:?}");
        assert_eq!(d.is_maximal(&s), o.is_maximal(&s), "is_maximal {s:?}");
        if !member {
            assert!(matches!(d.filtration(&s), Err(Error::NotInComplex(_))));
            continue;
        }
        assert_eq!(
            d.filtration(&s).unwrap(),
            o.get(&s).unwrap(),
            "filtration {s:?}"
        );
        assert_eq!(
            d.is_critical(&s).unwrap(),
            o.is_critical(&s).unwrap(),
            "critical {s:?}"
        );
        if s.dim() > 0 {
            assert_eq!(
                d.facet_filtrations(&s).unwrap(),
                o.facet_filtrations(&s).unwrap(),
                "facets {s:?}"
            );
        }
        assert_eq!(
            d.coface_filtrations_codim1(&s).unwrap(),
            o.coface_filtrations_codim1(&s).unwrap(),
            "cofaces {s:?}"
        );
    }
}

/// The diagram, once cleaned, holds exactly the critical simplices of `o`
/// with the right maximal flags.
pub fn assert_critical_sets_match(d: &CriticalSimplexDiagram, o: &ExplicitComplex) {
    assert_eq!(cleaned_entries(d), o.critical_set());
}
