//! Brute-force reference: the whole complex as an explicit table.
//!
//! Everything here is exhaustive and exponential in the dimension. It exists
//! to be obviously right, and is only meant for complexes with a dozen or so
//! vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::simplex::{CriticalEntry, Level, Simplex, VertexId};

/// A face-closed table of simplices and their filtration values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitComplex {
    table: BTreeMap<Simplex, Level>,
    t: Level,
}

/// Exhaustive counts; see [`ExplicitComplex::oracle_stats`].
#[derive(Debug, Clone, PartialEq)]
pub struct OracleStats {
    pub n: usize,
    pub d: usize,
    /// Number of simplices.
    pub m: usize,
    /// Number of maximal simplices.
    pub k: usize,
    /// Number of critical simplices.
    pub kappa: usize,
    pub psi: usize,
    pub psi_avg: f64,
    /// `gamma[j]`: most maximal simplices containing any one j-simplex.
    pub gamma: Vec<usize>,
    /// `Σ_σ∈M (d_σ + 1)`, the node count of an exact diagram.
    pub critical_nodes: usize,
}

impl ExplicitComplex {
    pub fn empty(t: Level) -> Self {
        ExplicitComplex {
            table: BTreeMap::new(),
            t,
        }
    }

    /// Face closure of `stars`, each simplex taking the minimum level of the
    /// stars that contain it. No monotonicity check.
    pub fn from_stars<'a, I>(stars: I, t: Level) -> Self
    where
        I: IntoIterator<Item = (&'a Simplex, Level)>,
    {
        let mut c = ExplicitComplex::empty(t);
        for (s, level) in stars {
            c.lower(s, level);
        }
        c
    }

    /// Closes `seed` under faces. A face takes the smallest value among its
    /// seeded cofaces; a seeded value larger than that is an error.
    pub fn close_down(seed: &BTreeMap<Simplex, Level>, t: Level) -> Result<Self> {
        if let Some((_, &level)) = seed.iter().find(|(_, &h)| h > t) {
            return Err(Error::FiltrationOutOfRange { level, t });
        }
        let c = Self::from_stars(seed.iter().map(|(s, h)| (s, *h)), t);
        for (s, &h) in seed {
            if c.table[s] < h {
                let (coface, &coface_level) = seed
                    .iter()
                    .find(|(c, &ch)| ch < h && s.is_proper_face_of(c))
                    .expect("a smaller value comes from a seeded coface");
                return Err(Error::Monotonicity {
                    face: s.clone(),
                    face_level: h,
                    coface: coface.clone(),
                    coface_level,
                });
            }
        }
        Ok(c)
    }

    /// Flag filtration of a weighted graph on vertices `1..=n`: every clique,
    /// valued by its heaviest edge, vertices at 0. Enumerates all vertex
    /// subsets.
    pub fn flag(n: usize, edges: &BTreeMap<(VertexId, VertexId), Level>, t: Level) -> Self {
        assert!(
            n <= 20,
            "exhaustive flag enumeration is limited to 20 vertices"
        );
        let mut table = BTreeMap::new();
        for mask in 1u32..(1u32 << n) {
            let verts: Vec<VertexId> = (0..n as u32)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            let mut value = Some(0);
            'pairs: for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    match edges.get(&(u, v)) {
                        Some(&w) => value = value.map(|h: Level| h.max(w)),
                        None => {
                            value = None;
                            break 'pairs;
                        }
                    }
                }
            }
            if let Some(h) = value {
                table.insert(Simplex::from_sorted(verts), h);
            }
        }
        ExplicitComplex { table, t }
    }

    /// Relaxed Delaunay filtration straight from the witness inequality: at
    /// level `i`, witness `x` admits every landmark `q` with
    /// `|x - q| <= |x - q'| + rho * i / t` for all landmarks `q'`.
    /// Landmark `j` (0-based in `landmarks`) is vertex `j + 1`.
    pub fn relaxed_delaunay(
        landmarks: &[Vec<f64>],
        witnesses: &[Vec<f64>],
        rho: f64,
        t: Level,
    ) -> Self {
        let dist = |a: &[f64], b: &[f64]| -> f64 {
            a.iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt()
        };
        let mut seeds: BTreeMap<Simplex, Level> = BTreeMap::new();
        for x in witnesses {
            let d: Vec<f64> = landmarks.iter().map(|q| dist(x, q)).collect();
            for i in 0..=t {
                let slack = rho * i as f64 / t as f64;
                let admitted: Vec<VertexId> = (0..landmarks.len())
                    .filter(|&a| d.iter().all(|&other| d[a] - other <= slack))
                    .map(|a| a as VertexId + 1)
                    .collect();
                if admitted.is_empty() {
                    continue;
                }
                let s = Simplex::from_sorted(admitted);
                let e = seeds.entry(s).or_insert(i);
                *e = (*e).min(i);
            }
        }
        Self::from_stars(seeds.iter().map(|(s, h)| (s, *h)), t)
    }

    pub fn t(&self) -> Level {
        self.t
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, s: &Simplex) -> Option<Level> {
        self.table.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.table.contains_key(s)
    }

    pub fn simplices(&self) -> impl Iterator<Item = (&Simplex, Level)> + '_ {
        self.table.iter().map(|(s, h)| (s, *h))
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.table
            .keys()
            .filter(|s| s.len() == 1)
            .map(|s| s.min_vertex())
            .collect()
    }

    /// Every proper coface of `s` in the table, by scanning the whole table.
    pub fn cofaces(&self, s: &Simplex) -> Vec<(&Simplex, Level)> {
        self.table
            .iter()
            .filter(|(c, _)| s.is_proper_face_of(c))
            .map(|(c, h)| (c, *h))
            .collect()
    }

    /// Cofaces with one more vertex, found by table lookups.
    fn codim1(&self, s: &Simplex) -> Vec<(Simplex, Level)> {
        // The last key in lexicographic order is the largest vertex.
        let top = self.table.keys().next_back().map_or(0, Simplex::min_vertex);
        (1..=top)
            .filter(|&w| !s.contains(w))
            .filter_map(|w| {
                let c = s.with_vertex(w);
                self.table.get(&c).map(|&h| (c, h))
            })
            .collect()
    }

    pub fn is_maximal(&self, s: &Simplex) -> bool {
        self.contains(s) && self.codim1(s).is_empty()
    }

    /// Only codimension-1 cofaces are examined; see [`critical_set`](Self::critical_set).
    pub fn is_critical(&self, s: &Simplex) -> Option<bool> {
        let h = self.get(s)?;
        Some(self.codim1(s).iter().all(|(_, ch)| *ch > h))
    }

    pub fn facet_filtrations(&self, s: &Simplex) -> Option<BTreeMap<Simplex, Level>> {
        self.get(s)?;
        let facets = s.facets().ok()?;
        Some(
            facets
                .into_iter()
                .map(|f| (f.clone(), self.table[&f]))
                .collect(),
        )
    }

    pub fn coface_filtrations_codim1(&self, s: &Simplex) -> Option<BTreeMap<Simplex, Level>> {
        self.get(s)?;
        Some(self.codim1(s).into_iter().collect())
    }

    /// Simplices with no coface of equal value.
    ///
    /// Only codimension-1 cofaces are examined: the table is monotone, so any
    /// coface of equal value sits above a codimension-1 coface of equal value.
    pub fn critical_set(&self) -> Vec<CriticalEntry> {
        let vertices = self.vertices();
        let mut out: Vec<CriticalEntry> = self
            .table
            .iter()
            .filter_map(|(s, &h)| {
                let mut maximal = true;
                for &w in &vertices {
                    if s.contains(w) {
                        continue;
                    }
                    if let Some(&ch) = self.table.get(&s.with_vertex(w)) {
                        maximal = false;
                        if ch <= h {
                            return None;
                        }
                    }
                }
                Some(CriticalEntry {
                    level: h,
                    simplex: s.clone(),
                    maximal,
                })
            })
            .collect();
        out.sort();
        out
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.critical_set()
            .into_iter()
            .filter(|e| e.maximal)
            .map(|e| e.simplex)
            .collect()
    }

    /// Exhaustive statistics.
    pub fn oracle_stats(&self) -> OracleStats {
        let critical = self.critical_set();
        let maximal: Vec<&Simplex> = critical
            .iter()
            .filter(|e| e.maximal)
            .map(|e| &e.simplex)
            .collect();
        let vertices = self.vertices();
        let n = vertices.len();
        let d = self.table.keys().map(Simplex::dim).max().unwrap_or(0);

        let mut per_vertex: BTreeMap<VertexId, usize> = BTreeMap::new();
        for e in &critical {
            for &v in e.simplex.vertices() {
                *per_vertex.entry(v).or_default() += 1;
            }
        }
        let psi = per_vertex.values().copied().max().unwrap_or(0);
        let critical_nodes: usize = critical.iter().map(|e| e.simplex.len()).sum();

        let mut gamma = vec![0usize; if self.table.is_empty() { 0 } else { d + 1 }];
        for s in self.table.keys() {
            let count = maximal.iter().filter(|m| s.is_face_of(m)).count();
            let g = &mut gamma[s.dim()];
            *g = (*g).max(count);
        }

        OracleStats {
            n,
            d,
            m: self.table.len(),
            k: maximal.len(),
            kappa: critical.len(),
            psi,
            psi_avg: if n == 0 {
                0.0
            } else {
                critical_nodes as f64 / n as f64
            },
            gamma,
            critical_nodes,
        }
    }

    /// Adds `s` and its faces, lowering existing values to `level` where larger.
    pub fn lower(&mut self, s: &Simplex, level: Level) {
        for f in s.all_faces() {
            self.table
                .entry(f)
                .and_modify(|h| *h = (*h).min(level))
                .or_insert(level);
        }
    }

    /// Deletes `s` and every coface of `s`.
    pub fn remove(&mut self, s: &Simplex) {
        self.table.retain(|c, _| !s.is_face_of(c));
    }

    /// Deletes exactly `sigma` and `tau`.
    pub fn collapse(&mut self, sigma: &Simplex, tau: &Simplex) {
        self.table.remove(sigma);
        self.table.remove(tau);
    }

    /// All free pairs: `(σ, τ)` where `τ` is the only proper coface of `σ`.
    pub fn free_pairs(&self) -> Vec<(Simplex, Simplex)> {
        self.table
            .keys()
            .filter_map(|s| {
                let cof = self.cofaces(s);
                (cof.len() == 1).then(|| (s.clone(), cof[0].0.clone()))
            })
            .collect()
    }

    /// Image under a vertex map; unmapped vertices are fixed. Each image
    /// simplex takes the smallest value among its preimages.
    pub fn map_vertices(&self, pi: &BTreeMap<VertexId, VertexId>) -> Self {
        let mut out = ExplicitComplex::empty(self.t);
        for (s, &h) in &self.table {
            let image: BTreeSet<VertexId> = s
                .vertices()
                .iter()
                .map(|v| pi.get(v).copied().unwrap_or(*v))
                .collect();
            let image = Simplex::from_sorted(image.into_iter().collect());
            let e = out.table.entry(image).or_insert(h);
            *e = (*e).min(h);
        }
        out
    }
}
