//! Flag filtrations from weighted graphs, built by edge deletion.
//!
//! Edges are swept from the heaviest down. For each edge the maximal cliques
//! through it in the residual graph are exactly the simplices whose largest
//! edge it is, so they are lazily inserted at its weight and the edge is
//! deleted. Vertices go in last at level 0, then a cleanup pass removes the
//! duplicates that equal-weight edges produce.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::CriticalSimplexDiagram;
use crate::error::{Error, Result};
use crate::simplex::{Level, Simplex, VertexId};

/// Undirected graph on vertices `1..=n` with integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: BTreeMap<(VertexId, VertexId), Level>,
    adj: Vec<BTreeSet<VertexId>>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: BTreeMap::new(),
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Level)>,
    {
        let mut g = WeightedGraph::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}`; endpoints may be given in either order.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: Level) -> Result<()> {
        for x in [u, v] {
            if x == 0 || x as usize > self.n {
                return Err(Error::UnknownVertex {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {} {}",
                key.0, key.1
            )));
        }
        self.edges.insert(key, w);
        self.adj[u as usize - 1].insert(v);
        self.adj[v as usize - 1].insert(u);
        Ok(())
    }

    fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.remove(&(u.min(v), u.max(v)));
        self.adj[u as usize - 1].remove(&v);
        self.adj[v as usize - 1].remove(&u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Level> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    /// Edges as `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Level)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn edge_map(&self) -> &BTreeMap<(VertexId, VertexId), Level> {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[v as usize - 1]
    }

    pub fn max_weight(&self) -> Level {
        self.edges.values().copied().max().unwrap_or(0)
    }

    /// Vertices in degeneracy order: repeatedly take a vertex of least
    /// remaining degree, smallest id first.
    fn degeneracy_order(&self, vertices: &BTreeSet<VertexId>) -> Vec<VertexId> {
        let mut degree: BTreeMap<VertexId, usize> = vertices
            .iter()
            .map(|&v| (v, self.neighbors(v).intersection(vertices).count()))
            .collect();
        let mut queue: BTreeSet<(usize, VertexId)> = degree.iter().map(|(&v, &d)| (d, v)).collect();
        let mut order = Vec::with_capacity(vertices.len());
        while let Some((_, v)) = queue.pop_first() {
            degree.remove(&v);
            order.push(v);
            for w in self.neighbors(v) {
                if let Some(d) = degree.get_mut(w) {
                    queue.remove(&(*d, *w));
                    *d -= 1;
                    queue.insert((*d, *w));
                }
            }
        }
        order
    }

    /// Maximal cliques of the subgraph induced on `vertices`, each sorted,
    /// in ascending order.
    fn maximal_cliques_in(&self, vertices: &BTreeSet<VertexId>) -> Vec<Simplex> {
        let mut out = Vec::new();
        let order = self.degeneracy_order(vertices);
        let mut earlier = BTreeSet::new();
        for v in order {
            let nv: BTreeSet<VertexId> =
                self.neighbors(v).intersection(vertices).copied().collect();
            let p = nv
                .iter()
                .filter(|w| !earlier.contains(*w))
                .copied()
                .collect();
            let x = nv.intersection(&earlier).copied().collect();
            self.pivot_search(&mut vec![v], p, x, &mut out);
            earlier.insert(v);
        }
        out.sort();
        out
    }

    fn pivot_search(
        &self,
        r: &mut Vec<VertexId>,
        mut p: BTreeSet<VertexId>,
        mut x: BTreeSet<VertexId>,
        out: &mut Vec<Simplex>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(Simplex::from_sorted(clique));
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                (
                    self.neighbors(u).intersection(&p).count(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("p is non-empty");
        let candidates: Vec<VertexId> = p.difference(self.neighbors(pivot)).copied().collect();
        for v in candidates {
            let nv = self.neighbors(v);
            r.push(v);
            self.pivot_search(
                r,
                p.intersection(nv).copied().collect(),
                x.intersection(nv).copied().collect(),
                out,
            );
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
}

/// All inclusion-maximal cliques, weights ignored. Isolated vertices are
/// one-vertex cliques.
pub fn enumerate_maximal_cliques(g: &WeightedGraph) -> Vec<Simplex> {
    g.maximal_cliques_in(&(1..=g.n as VertexId).collect())
}

/// Maximal cliques of `g` that contain the edge `{u, v}`.
///
/// These are the maximal cliques of the subgraph induced on `u`, `v` and
/// their common neighbors.
pub fn cliques_through_edge(g: &WeightedGraph, u: VertexId, v: VertexId) -> Result<Vec<Simplex>> {
    if g.weight(u, v).is_none() {
        return Err(Error::UnknownEdge(u.min(v), u.max(v)));
    }
    let mut h: BTreeSet<VertexId> = g
        .neighbors(u)
        .intersection(g.neighbors(v))
        .copied()
        .collect();
    h.insert(u);
    h.insert(v);
    Ok(g.maximal_cliques_in(&h))
}

/// Trie over sorted vertex words, answering exact-word membership.
#[derive(Debug, Clone, Default)]
pub struct PrefixTree {
    children: BTreeMap<VertexId, PrefixTree>,
    terminal: bool,
}

impl PrefixTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: &Simplex) {
        let mut node = self;
        for &v in s.vertices() {
            node = node.children.entry(v).or_default();
        }
        node.terminal = true;
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        let mut node = self;
        for v in s.vertices() {
            match node.children.get(v) {
                Some(next) => node = next,
                None => return false,
            }
        }
        node.terminal
    }
}

impl<'a> FromIterator<&'a Simplex> for PrefixTree {
    fn from_iter<I: IntoIterator<Item = &'a Simplex>>(iter: I) -> Self {
        let mut tree = PrefixTree::new();
        for s in iter {
            tree.insert(s);
        }
        tree
    }
}

/// The edge sweep without the final cleanup: the result may hold duplicate
/// and non-critical stars.
pub fn build_flag_lazy(g: &WeightedGraph, t: Level) -> Result<CriticalSimplexDiagram> {
    if let Some((_, _, w)) = g.edges().find(|&(_, _, w)| w > t) {
        return Err(Error::FiltrationOutOfRange { level: w, t });
    }
    let maximal: PrefixTree = enumerate_maximal_cliques(g).iter().collect();
    let mut order: Vec<(VertexId, VertexId, Level)> = g.edges().collect();
    order.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));

    let mut d = CriticalSimplexDiagram::new(g.n, t);
    let mut residual = g.clone();
    for (u, v, w) in order {
        for clique in cliques_through_edge(&residual, u, v)? {
            let is_max = maximal.contains(&clique);
            d.lazy_insert(&clique, w, is_max)?;
        }
        residual.remove_edge(u, v);
    }
    for v in 1..=g.n as VertexId {
        let s = Simplex::from_sorted(vec![v]);
        d.lazy_insert(&s, 0, g.neighbors(v).is_empty())?;
    }
    Ok(d)
}

/// Critical simplex diagram of the flag filtration of `g`: every clique takes
/// the largest weight among its edges, vertices take 0.
pub fn build_flag(g: &WeightedGraph, t: Level) -> Result<CriticalSimplexDiagram> {
    let mut d = build_flag_lazy(g, t)?;
    d.cleanup();
    Ok(d)
}
