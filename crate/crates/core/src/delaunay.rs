//! Relaxed Delaunay filtrations from landmarks and witnesses.
//!
//! Each witness sees the landmarks in order of distance. At level `i` it
//! witnesses the prefix of landmarks no more than `rho * i / t` farther than
//! its nearest one. Every such prefix is lazily inserted, which stores a
//! superset of the critical simplices; cleanup trims the rest.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::CriticalSimplexDiagram;
use crate::error::{Error, Result};
use crate::simplex::{Level, Simplex, VertexId};

/// Points in a common Euclidean space.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(first) = points.first() {
            let dim = first.len();
            if dim == 0 {
                return Err(Error::InvalidPoints("points have no coordinates".into()));
            }
            for (i, p) in points.iter().enumerate() {
                if p.len() != dim {
                    return Err(Error::InvalidPoints(format!(
                        "point {} has {} coordinates, expected {dim}",
                        i + 1,
                        p.len()
                    )));
                }
                if p.iter().any(|x| !x.is_finite()) {
                    return Err(Error::InvalidPoints(format!(
                        "point {} has a non-finite coordinate",
                        i + 1
                    )));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// For every witness, the landmarks ordered by `(distance, index)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    rows: Vec<Vec<(VertexId, f64)>>,
    landmarks: usize,
}

impl DistanceMatrix {
    /// Row of witness `x` (0-based): `(landmark vertex, distance)` pairs,
    /// nearest first. Landmark `j` (0-based) is vertex `j + 1`.
    pub fn row(&self, x: usize) -> &[(VertexId, f64)] {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[Vec<(VertexId, f64)>] {
        &self.rows
    }

    pub fn landmarks(&self) -> usize {
        self.landmarks
    }
}

pub fn nearest_neighbor_matrix(
    witnesses: &PointSet,
    landmarks: &PointSet,
) -> Result<DistanceMatrix> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    if !witnesses.is_empty() && witnesses.dim() != landmarks.dim() {
        return Err(Error::InvalidPoints(format!(
            "witnesses have dimension {}, landmarks {}",
            witnesses.dim(),
            landmarks.dim()
        )));
    }
    let rows = witnesses
        .points()
        .iter()
        .map(|x| {
            let mut row: Vec<(VertexId, f64)> = landmarks
                .points()
                .iter()
                .enumerate()
                .map(|(j, q)| (j as VertexId + 1, euclidean(x, q)))
                .collect();
            row.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
            row
        })
        .collect();
    Ok(DistanceMatrix {
        rows,
        landmarks: landmarks.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxationConfig {
    rho: f64,
    t: Level,
}

impl RelaxationConfig {
    pub fn new(rho: f64, t: Level) -> Result<Self> {
        if !(rho.is_finite() && rho >= 0.0) {
            return Err(Error::InvalidRelaxation(format!(
                "rho must be finite and non-negative, got {rho}"
            )));
        }
        if t == 0 {
            return Err(Error::InvalidRelaxation("t must be at least 1".into()));
        }
        Ok(RelaxationConfig { rho, t })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn t(&self) -> Level {
        self.t
    }

    /// Allowed excess over the nearest distance at level `i`.
    pub fn slack(&self, i: Level) -> f64 {
        self.rho * i as f64 / self.t as f64
    }
}

/// `σ_x^i` for every witness row and every level, in row order then level
/// order. The same simplex may appear many times.
pub fn witness_simplices(d: &DistanceMatrix, cfg: &RelaxationConfig) -> Vec<(Simplex, Level)> {
    let mut out = Vec::with_capacity(d.rows.len() * (cfg.t as usize + 1));
    for row in &d.rows {
        let nearest = row[0].1;
        let mut len = 1;
        for i in 0..=cfg.t {
            let slack = cfg.slack(i);
            while len < row.len() && row[len].1 - nearest <= slack {
                len += 1;
            }
            let mut verts: Vec<VertexId> = row[..len].iter().map(|&(v, _)| v).collect();
            verts.sort_unstable();
            out.push((Simplex::from_sorted(verts), i));
        }
    }
    out
}

/// Witnessed simplices lazily inserted, without cleanup.
///
/// Distinct `(simplex, level)` pairs are inserted once each. A simplex is
/// flagged maximal iff no strict superset of it was witnessed at any level.
pub fn build_delaunay_lazy(
    witnesses: &PointSet,
    landmarks: &PointSet,
    cfg: &RelaxationConfig,
) -> Result<CriticalSimplexDiagram> {
    let matrix = nearest_neighbor_matrix(witnesses, landmarks)?;
    let w: BTreeSet<(Simplex, Level)> = witness_simplices(&matrix, cfg).into_iter().collect();

    let mut by_size: BTreeMap<usize, BTreeSet<&Simplex>> = BTreeMap::new();
    for (s, _) in &w {
        by_size.entry(s.len()).or_default().insert(s);
    }
    let has_superset = |s: &Simplex| {
        by_size
            .range(s.len() + 1..)
            .any(|(_, group)| group.iter().any(|c| s.is_face_of(c)))
    };

    let mut d = CriticalSimplexDiagram::new(landmarks.len(), cfg.t);
    let mut verdicts: BTreeMap<&Simplex, bool> = BTreeMap::new();
    for (s, level) in &w {
        let maximal = *verdicts.entry(s).or_insert_with(|| !has_superset(s));
        d.lazy_insert(s, *level, maximal)?;
    }
    Ok(d)
}

/// Critical simplex diagram of the relaxed Delaunay filtration: a simplex
/// takes the smallest level at which some witness admits a superset of it.
pub fn build_delaunay(
    witnesses: &PointSet,
    landmarks: &PointSet,
    cfg: &RelaxationConfig,
) -> Result<CriticalSimplexDiagram> {
    let mut d = build_delaunay_lazy(witnesses, landmarks, cfg)?;
    d.cleanup();
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    fn line(xs: &[f64]) -> PointSet {
        PointSet::new(xs.iter().map(|&x| vec![x]).collect()).unwrap()
    }

    #[test]
    fn point_validation() {
        assert!(PointSet::new(vec![vec![0.0, 1.0], vec![2.0]]).is_err());
        assert!(PointSet::new(vec![vec![f64::NAN]]).is_err());
        assert!(PointSet::new(vec![vec![]]).is_err());
        assert!(PointSet::new(vec![]).unwrap().is_empty());
        assert!(RelaxationConfig::new(-1.0, 2).is_err());
        assert!(RelaxationConfig::new(1.0, 0).is_err());
    }

    #[test]
    fn matrix_rows() {
        let m = nearest_neighbor_matrix(&line(&[0.0]), &line(&[-1.0, 2.0])).unwrap();
        assert_eq!(m.row(0), &[(1, 1.0), (2, 2.0)]);

        let m = nearest_neighbor_matrix(&line(&[0.0]), &line(&[1.0, -1.0])).unwrap();
        assert_eq!(m.row(0), &[(1, 1.0), (2, 1.0)]);

        assert!(matches!(
            nearest_neighbor_matrix(&line(&[0.0]), &line(&[])),
            Err(Error::EmptyLandmarks)
        ));
    }

    #[test]
    fn zero_relaxation_keeps_nearest_only() {
        let m = nearest_neighbor_matrix(&line(&[0.0, 5.5]), &line(&[1.0, 3.0, 7.0])).unwrap();
        let cfg = RelaxationConfig::new(0.0, 3).unwrap();
        for (s, _) in witness_simplices(&m, &cfg) {
            assert_eq!(s.len(), 1);
        }
    }

    #[test]
    fn three_landmark_example() {
        let witnesses = PointSet::new(vec![vec![0.0, 0.0]]).unwrap();
        let landmarks =
            PointSet::new(vec![vec![1.0, 0.0], vec![0.0, 1.4], vec![-3.0, 0.0]]).unwrap();
        let m = nearest_neighbor_matrix(&witnesses, &landmarks).unwrap();
        let cfg = RelaxationConfig::new(1.0, 2).unwrap();
        assert_eq!(
            witness_simplices(&m, &cfg),
            vec![(simplex![1], 0), (simplex![1, 2], 1), (simplex![1, 2], 2)]
        );
    }

    #[test]
    fn large_relaxation_gives_one_triangle() {
        let q = line(&[0.0, 1.0, 2.0]);
        let cfg = RelaxationConfig::new(10.0, 2).unwrap();
        let d = build_delaunay(&q, &q, &cfg).unwrap();
        let maximal: Vec<_> = d.entries().into_iter().filter(|e| e.maximal).collect();
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].simplex, simplex![1, 2, 3]);
    }

    #[test]
    fn zero_relaxation_on_landmarks_gives_vertices() {
        let q = PointSet::new(vec![vec![0.0, 0.0], vec![1.0, 0.3], vec![0.2, 2.0]]).unwrap();
        let cfg = RelaxationConfig::new(0.0, 3).unwrap();
        let d = build_delaunay(&q, &q, &cfg).unwrap();
        let got: Vec<_> = d
            .entries()
            .into_iter()
            .map(|e| (e.level, e.simplex))
            .collect();
        assert_eq!(
            got,
            vec![(0, simplex![1]), (0, simplex![2]), (0, simplex![3])]
        );
    }
}
