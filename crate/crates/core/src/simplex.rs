//! Simplices, filtration levels and labels.
//!
//! A [`Simplex`] is a strictly increasing list of 1-based vertex ids. Every
//! other module identifies simplices this way, so the canonical form is
//! enforced once, at construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// 1-based vertex identifier.
pub type VertexId = u32;

/// Discrete filtration value in `0..=t`.
pub type Level = u32;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Repeated vertices are
    /// rejected rather than merged.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort_unstable();
        if vertices[0] == 0 {
            return Err(Error::ZeroVertex);
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0]));
        }
        Ok(Simplex(vertices))
    }

    /// Caller guarantees `vertices` is non-empty, strictly increasing and 1-based.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices[0] >= 1);
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: VertexId) -> Result<Self> {
        Self::new(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    /// Number of vertices, `dim() + 1`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Smallest vertex; the center of the simplex's star graph.
    pub fn min_vertex(&self) -> VertexId {
        self.0[0]
    }

    pub fn max_vertex(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `true` iff every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
        self.0.len() < other.0.len() && self.is_face_of(other)
    }

    /// The facet that omits the vertex at position `index`.
    pub fn without_index(&self, index: usize) -> Option<Simplex> {
        if self.0.len() < 2 || index >= self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(index);
        Some(Simplex(v))
    }

    /// `self ∖ {v}`, or `None` when that would be empty or `v` is absent.
    pub fn without_vertex(&self, v: VertexId) -> Option<Simplex> {
        let idx = self.0.binary_search(&v).ok()?;
        self.without_index(idx)
    }

    /// `self ∪ {v}`; returns a clone when `v` is already present.
    pub fn with_vertex(&self, v: VertexId) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    /// Vertices shared with `other`, if any.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common: Vec<_> = self
            .0
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect();
        (!common.is_empty()).then_some(Simplex(common))
    }

    /// All faces of dimension `dim`, lexicographically ordered.
    pub fn faces(&self, dim: usize) -> Result<Vec<Simplex>> {
        if dim > self.dim() {
            return Err(Error::Dimension {
                requested: dim,
                dim: self.dim(),
            });
        }
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(dim + 1);
        subsets_of_size(&self.0, dim + 1, 0, &mut buf, &mut out);
        Ok(out)
    }

    /// Every non-empty face, including `self`, in no particular order.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(
            n < 32,
            "closure of a {n}-vertex simplex is too large to enumerate"
        );
        (1u32..(1u32 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// The `d + 1` facets; the i-th omits the i-th vertex.
    pub fn facets(&self) -> Result<Vec<Simplex>> {
        if self.0.len() < 2 {
            return Err(Error::Dimension {
                requested: 0,
                dim: 0,
            });
        }
        Ok((0..self.0.len())
            .map(|i| self.without_index(i).expect("index in range"))
            .collect())
    }
}

fn subsets_of_size(
    src: &[VertexId],
    k: usize,
    start: usize,
    buf: &mut Vec<VertexId>,
    out: &mut Vec<Simplex>,
) {
    if buf.len() == k {
        out.push(Simplex(buf.clone()));
        return;
    }
    let need = k - buf.len();
    for i in start..=src.len() - need {
        buf.push(src[i]);
        subsets_of_size(src, k, i + 1, buf, out);
        buf.pop();
    }
}

/// All faces of `s` of dimension `dim`.
pub fn faces(s: &Simplex, dim: usize) -> Result<Vec<Simplex>> {
    s.faces(dim)
}

/// The facets of `s`; vertices have none.
pub fn facets(s: &Simplex) -> Result<Vec<Simplex>> {
    s.facets()
}

pub fn is_face(a: &Simplex, b: &Simplex) -> bool {
    a.is_face_of(b)
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Simplex {
    type Err = Error;

    /// Parses the whitespace-separated textual form, e.g. `"1 3 4"`.
    fn from_str(s: &str) -> Result<Self> {
        let vertices = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<VertexId>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("bad vertex id {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vertices)
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl<const N: usize> TryFrom<[VertexId; N]> for Simplex {
    type Error = Error;

    fn try_from(v: [VertexId; N]) -> Result<Self> {
        Simplex::new(v.to_vec())
    }
}

/// Identifies one stored star: its filtration level and a per-level key.
/// Ordered lexicographically on `(level, key)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub level: Level,
    pub key: u32,
}

impl Label {
    pub fn new(level: Level, key: u32) -> Self {
        Label { level, key }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.key)
    }
}

/// A critical simplex with its filtration value and maximality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CriticalEntry {
    pub level: Level,
    pub simplex: Simplex,
    pub maximal: bool,
}

/// Shorthand for building simplices in tests and examples.
///
/// Panics on invalid input.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),+ $(,)?) => {
        $crate::Simplex::new(vec![$($v),+]).expect("valid simplex literal")
    };
}
