//! The critical simplex diagram.
//!
//! Each stored simplex is a star graph: one node per vertex, all carrying the
//! same [`Label`], with the smallest vertex as center. Node `(v, label)` lives
//! in the array of vertex `v`, in either the maximal segment or the
//! non-maximal segment. Both segments are ordered by label.
//!
//! Queries treat the stored stars as a possibly redundant cover of the
//! complex: a simplex is present iff some maximal-flagged star contains it,
//! and its filtration value is the minimum level over all stars containing
//! it. This is what lets lazy insertion skip bookkeeping; [`cleanup`] brings
//! the store back down to exactly the critical simplices.
//!
//! [`cleanup`]: CriticalSimplexDiagram::cleanup

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::simplex::{CriticalEntry, Label, Level, Simplex, VertexId};

mod io;
mod query;
mod stats;
mod update;

pub use stats::Stats;

/// One stored critical simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub simplex: Simplex,
    pub maximal: bool,
}

impl Star {
    pub fn center(&self) -> VertexId {
        self.simplex.min_vertex()
    }
}

/// A node of the diagram: the copy of a star's label held by one vertex array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeRef {
    pub vertex: VertexId,
    pub label: Label,
}

#[derive(Debug, Clone, Default)]
struct VertexArray {
    maximal: BTreeSet<Label>,
    other: BTreeSet<Label>,
}

impl VertexArray {
    fn len(&self) -> usize {
        self.maximal.len() + self.other.len()
    }

    fn contains(&self, label: &Label) -> bool {
        self.maximal.contains(label) || self.other.contains(label)
    }

    fn segment(&self, maximal_only: bool) -> &BTreeSet<Label> {
        if maximal_only {
            &self.maximal
        } else {
            &self.other
        }
    }
}

/// Per-level key source; released keys are handed out again smallest first.
#[derive(Debug, Clone)]
struct KeyPool {
    next: u32,
    free: BTreeSet<u32>,
}

impl Default for KeyPool {
    fn default() -> Self {
        KeyPool {
            next: 1,
            free: BTreeSet::new(),
        }
    }
}

impl KeyPool {
    fn allocate(&mut self) -> u32 {
        if let Some(k) = self.free.pop_first() {
            return k;
        }
        let k = self.next;
        self.next += 1;
        k
    }

    fn release(&mut self, key: u32) {
        self.free.insert(key);
    }
}

#[derive(Debug, Clone)]
pub struct CriticalSimplexDiagram {
    arrays: Vec<VertexArray>,
    stars: BTreeMap<Label, Star>,
    t: Level,
    keys: BTreeMap<Level, KeyPool>,
}

impl CriticalSimplexDiagram {
    /// An empty diagram over vertices `1..=n` with levels in `0..=t`.
    pub fn new(n: usize, t: Level) -> Self {
        CriticalSimplexDiagram {
            arrays: vec![VertexArray::default(); n],
            stars: BTreeMap::new(),
            t,
            keys: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.arrays.len()
    }

    pub fn t(&self) -> Level {
        self.t
    }

    pub fn star_count(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// Total number of nodes, `Σ |A_i|`.
    pub fn node_count(&self) -> usize {
        self.arrays.iter().map(VertexArray::len).sum()
    }

    pub fn star(&self, label: Label) -> Option<&Star> {
        self.stars.get(&label)
    }

    pub fn stars(&self) -> impl Iterator<Item = (Label, &Star)> + '_ {
        self.stars.iter().map(|(l, s)| (*l, s))
    }

    /// Nodes of one star, center first.
    pub fn star_nodes(&self, label: Label) -> Option<Vec<NodeRef>> {
        let star = self.stars.get(&label)?;
        Some(
            star.simplex
                .vertices()
                .iter()
                .map(|&vertex| NodeRef { vertex, label })
                .collect(),
        )
    }

    /// Labels in array `A_v`: maximal segment first, each segment in label order.
    pub fn array(&self, v: VertexId) -> Result<Vec<Label>> {
        let a = self.vertex_array(v)?;
        Ok(a.maximal.iter().chain(a.other.iter()).copied().collect())
    }

    /// Labels in the maximal segment `A_v*`.
    pub fn maximal_segment(&self, v: VertexId) -> Result<Vec<Label>> {
        Ok(self.vertex_array(v)?.maximal.iter().copied().collect())
    }

    /// Stored stars as `(level, simplex, maximal)` triples, sorted.
    pub fn entries(&self) -> Vec<CriticalEntry> {
        let mut out: Vec<_> = self
            .stars
            .iter()
            .map(|(l, s)| CriticalEntry {
                level: l.level,
                simplex: s.simplex.clone(),
                maximal: s.maximal,
            })
            .collect();
        out.sort();
        out
    }

    /// Intersection of the member arrays of `s`, as labels in ascending order.
    ///
    /// With `maximal_only` this is `A_σ*`, otherwise `A_σ`. The smallest
    /// participating array is scanned and every other array is probed.
    pub fn intersect_arrays(&self, s: &Simplex, maximal_only: bool) -> Result<Vec<Label>> {
        self.check_vertices(s)?;
        Ok(self.intersect(s, maximal_only))
    }

    /// Checks the structural invariants; returns a description of the first
    /// violation found.
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        let mut nodes = 0;
        for (label, star) in &self.stars {
            for &v in star.simplex.vertices() {
                let a = self.arrays.get(v as usize - 1).ok_or_else(|| {
                    format!("star {label} names vertex {v} outside 1..={}", self.n())
                })?;
                if !a.segment(star.maximal).contains(label) {
                    return Err(format!("star {label} missing from its segment of A_{v}"));
                }
                if a.segment(!star.maximal).contains(label) {
                    return Err(format!("star {label} sits in both segments of A_{v}"));
                }
            }
            nodes += star.simplex.len();
        }
        if nodes != self.node_count() {
            return Err(format!(
                "{} nodes in arrays, but stars account for {nodes}",
                self.node_count()
            ));
        }
        for (i, a) in self.arrays.iter().enumerate() {
            for label in a.maximal.iter().chain(a.other.iter()) {
                let star = self
                    .stars
                    .get(label)
                    .ok_or_else(|| format!("A_{} holds dangling label {label}", i + 1))?;
                if !star.simplex.contains(i as VertexId + 1) {
                    return Err(format!(
                        "A_{} holds {label} of a star not containing it",
                        i + 1
                    ));
                }
            }
        }
        Ok(())
    }

    fn vertex_array(&self, v: VertexId) -> Result<&VertexArray> {
        if v == 0 || v as usize > self.arrays.len() {
            return Err(Error::UnknownVertex {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(&self.arrays[v as usize - 1])
    }

    fn check_vertices(&self, s: &Simplex) -> Result<()> {
        let v = s.max_vertex();
        if v as usize > self.arrays.len() {
            return Err(Error::UnknownVertex {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    fn knows(&self, s: &Simplex) -> bool {
        (s.max_vertex() as usize) <= self.arrays.len()
    }

    fn check_level(&self, level: Level) -> Result<()> {
        if level > self.t {
            return Err(Error::FiltrationOutOfRange { level, t: self.t });
        }
        Ok(())
    }

    fn arr(&self, v: VertexId) -> &VertexArray {
        &self.arrays[v as usize - 1]
    }

    /// Caller has validated the vertices of `s`.
    fn intersect(&self, s: &Simplex, maximal_only: bool) -> Vec<Label> {
        let verts = s.vertices();
        let size = |v: VertexId| {
            let a = self.arr(v);
            if maximal_only {
                a.maximal.len()
            } else {
                a.len()
            }
        };
        let pivot = *verts
            .iter()
            .min_by_key(|&&v| size(v))
            .expect("simplex is non-empty");
        let base = self.arr(pivot);
        let probe = |l: &Label| {
            verts.iter().all(|&v| {
                v == pivot || {
                    let a = self.arr(v);
                    if maximal_only {
                        a.maximal.contains(l)
                    } else {
                        a.contains(l)
                    }
                }
            })
        };
        if maximal_only {
            base.maximal.iter().filter(|l| probe(l)).copied().collect()
        } else {
            let mut out: Vec<Label> = base
                .maximal
                .iter()
                .chain(base.other.iter())
                .filter(|l| probe(l))
                .copied()
                .collect();
            out.sort_unstable();
            out
        }
    }

    fn simplex_of(&self, label: &Label) -> &Simplex {
        &self.stars[label].simplex
    }

    fn place(&mut self, label: Label, star: Star) {
        for &v in star.simplex.vertices() {
            let a = &mut self.arrays[v as usize - 1];
            if star.maximal {
                a.maximal.insert(label);
            } else {
                a.other.insert(label);
            }
        }
        self.stars.insert(label, star);
    }

    fn delete_star(&mut self, label: Label) -> Option<Star> {
        let star = self.stars.remove(&label)?;
        for &v in star.simplex.vertices() {
            let a = &mut self.arrays[v as usize - 1];
            a.maximal.remove(&label);
            a.other.remove(&label);
        }
        if let Some(pool) = self.keys.get_mut(&label.level) {
            pool.release(label.key);
        }
        Some(star)
    }

    /// Moves a star between the maximal and non-maximal segments.
    fn set_maximal(&mut self, label: Label, maximal: bool) {
        let Some(star) = self.stars.get_mut(&label) else {
            return;
        };
        if star.maximal == maximal {
            return;
        }
        star.maximal = maximal;
        for &v in star.simplex.vertices() {
            let a = &mut self.arrays[v as usize - 1];
            if maximal {
                a.other.remove(&label);
                a.maximal.insert(label);
            } else {
                a.maximal.remove(&label);
                a.other.insert(label);
            }
        }
    }

    fn fresh_label(&mut self, level: Level) -> Label {
        let key = self.keys.entry(level).or_default().allocate();
        Label { level, key }
    }
}
