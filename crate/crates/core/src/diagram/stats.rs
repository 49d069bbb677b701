use super::CriticalSimplexDiagram;

/// Size measurements of a diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct Stats {
    /// Size of the vertex universe.
    pub n: usize,
    /// Largest stored star dimension.
    pub d: usize,
    /// `Σ |A_i|`.
    pub node_count: usize,
    /// Stored stars, redundant ones included.
    pub stars: usize,
    /// Stars that would survive cleanup (κ).
    pub critical: usize,
    /// Stars flagged maximal (k).
    pub maximal: usize,
    /// `max |A_i|`.
    pub psi: usize,
    pub psi_avg: f64,
    /// `max |A_i*|`.
    pub gamma0: usize,
    pub gamma0_avg: f64,
}

impl CriticalSimplexDiagram {
    pub fn stats(&self) -> Stats {
        let n = self.n();
        let node_count = self.node_count();
        let psi = self.arrays.iter().map(|a| a.len()).max().unwrap_or(0);
        let gamma0 = self
            .arrays
            .iter()
            .map(|a| a.maximal.len())
            .max()
            .unwrap_or(0);
        let maximal_nodes: usize = self.arrays.iter().map(|a| a.maximal.len()).sum();
        let avg = |total: usize| if n == 0 { 0.0 } else { total as f64 / n as f64 };
        Stats {
            n,
            d: self
                .stars
                .values()
                .map(|s| s.simplex.dim())
                .max()
                .unwrap_or(0),
            node_count,
            stars: self.stars.len(),
            critical: self
                .stars
                .iter()
                .filter(|(l, s)| self.verdict(**l, &s.simplex).0)
                .count(),
            maximal: self.stars.values().filter(|s| s.maximal).count(),
            psi,
            psi_avg: avg(node_count),
            gamma0,
            gamma0_avg: avg(maximal_nodes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::figure1;
    use super::*;
    use crate::simplex;

    #[test]
    fn figure1_stats() {
        let s = figure1().stats();
        assert_eq!(s.n, 6);
        assert_eq!(s.d, 3);
        assert_eq!(s.stars, 12);
        assert_eq!(s.critical, 12);
        assert_eq!(s.maximal, 2);
        assert_eq!(s.psi, 5);
        assert_eq!(s.gamma0, 2);
        assert_eq!(s.node_count, 22);
        assert!((s.psi_avg - 22.0 / 6.0).abs() < 1e-12);
        assert!((s.gamma0_avg - 7.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn empty_stats() {
        let s = CriticalSimplexDiagram::new(0, 0).stats();
        assert_eq!(
            (s.n, s.d, s.node_count, s.stars, s.critical, s.maximal),
            (0, 0, 0, 0, 0, 0)
        );
        assert_eq!((s.psi, s.gamma0), (0, 0));
        assert_eq!((s.psi_avg, s.gamma0_avg), (0.0, 0.0));
    }

    #[test]
    fn single_simplex_stats() {
        let mut d = CriticalSimplexDiagram::new(5, 0);
        d.insert(&simplex![1, 2, 3, 4], 0).unwrap();
        let s = d.stats();
        assert_eq!((s.node_count, s.psi, s.gamma0, s.d), (4, 1, 1, 3));
    }
}
