use std::collections::BTreeMap;
use std::fmt;

use csd_core::{CriticalSimplexDiagram, Level};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelRow {
    pub level: Level,
    pub stars: usize,
    pub maximal: usize,
    pub nodes: usize,
}

/// Size summary of one diagram, printed as `key: value` lines followed by a
/// per-level table.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub n: usize,
    pub d: usize,
    pub t: Level,
    pub stars: usize,
    pub kappa: usize,
    pub k: usize,
    pub m: Option<usize>,
    pub node_count_csd: usize,
    pub node_count_st: Option<usize>,
    pub psi: usize,
    pub psi_avg: f64,
    pub gamma0: usize,
    pub gamma0_avg: f64,
    pub build_time_ms: Vec<(&'static str, u128)>,
    pub levels: Vec<LevelRow>,
}

impl StatsReport {
    pub fn of(d: &CriticalSimplexDiagram) -> Self {
        let s = d.stats();
        let mut levels: BTreeMap<Level, LevelRow> = BTreeMap::new();
        for (label, star) in d.stars() {
            let row = levels.entry(label.level).or_insert(LevelRow {
                level: label.level,
                stars: 0,
                maximal: 0,
                nodes: 0,
            });
            row.stars += 1;
            row.maximal += usize::from(star.maximal);
            row.nodes += star.simplex.len();
        }
        StatsReport {
            n: s.n,
            d: s.d,
            t: d.t(),
            stars: s.stars,
            kappa: s.critical,
            k: s.maximal,
            m: None,
            node_count_csd: s.node_count,
            node_count_st: None,
            psi: s.psi,
            psi_avg: s.psi_avg,
            gamma0: s.gamma0,
            gamma0_avg: s.gamma0_avg,
            build_time_ms: Vec::new(),
            levels: levels.into_values().collect(),
        }
    }
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "d: {}", self.d)?;
        writeln!(f, "t: {}", self.t)?;
        writeln!(f, "stars: {}", self.stars)?;
        writeln!(f, "kappa: {}", self.kappa)?;
        writeln!(f, "k: {}", self.k)?;
        if let Some(m) = self.m {
            writeln!(f, "m: {m}")?;
        }
        writeln!(f, "node_count_csd: {}", self.node_count_csd)?;
        if let Some(st) = self.node_count_st {
            writeln!(f, "node_count_st: {st}")?;
        }
        writeln!(f, "psi: {}", self.psi)?;
        writeln!(f, "psi_avg: {:.3}", self.psi_avg)?;
        writeln!(f, "gamma0: {}", self.gamma0)?;
        writeln!(f, "gamma0_avg: {:.3}", self.gamma0_avg)?;
        for (backend, ms) in &self.build_time_ms {
            writeln!(f, "build_time_ms_{backend}: {ms}")?;
        }
        writeln!(f, "level stars maximal nodes")?;
        for r in &self.levels {
            writeln!(f, "{} {} {} {}", r.level, r.stars, r.maximal, r.nodes)?;
        }
        Ok(())
    }
}
