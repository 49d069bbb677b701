use std::time::Instant;

use clap::ValueEnum;
use csd_core::delaunay::euclidean;
use csd_core::{
    build_delaunay, build_flag, CriticalEntry, CriticalSimplexDiagram, ExplicitComplex, Level,
    PointSet, RelaxationConfig, Simplex, SimplexTree, VertexId, WeightedGraph,
};

use crate::error::{CliError, CliResult};
use crate::input::{parse_edge_list, parse_points};
use crate::quantize::Quantizer;
use crate::report::StatsReport;

/// Flag diagram from an edge list.
///
/// With `quantize = Some(t)` weights are real and binned onto `0..=t` over
/// `[0, max weight]`. Otherwise they must be integer levels; `t` defaults to
/// the largest one.
pub fn build_flag_from_text(
    text: &str,
    t: Option<Level>,
    quantize: Option<Level>,
) -> CliResult<CriticalSimplexDiagram> {
    let list = parse_edge_list(text)?;
    let (graph, t) = match quantize {
        Some(qt) => {
            let max = list.max_weight();
            let q = Quantizer::new(qt, if max > 0.0 { max } else { 1.0 })?;
            (list.quantized_graph(&q)?, qt)
        }
        None => {
            let g = list.integer_graph()?;
            let t = t.unwrap_or(g.max_weight());
            (g, t)
        }
    };
    Ok(build_flag(&graph, t)?)
}

/// Rips graph: every pair within `2 * rmax`, weighted by its quantized
/// distance over `[0, 2 * rmax]`.
pub fn rips_graph(points: &PointSet, rmax: f64, t: Level) -> CliResult<WeightedGraph> {
    if !(rmax.is_finite() && rmax > 0.0) {
        return Err(CliError::Invariant(format!(
            "rmax must be positive, got {rmax}"
        )));
    }
    let q = Quantizer::new(t, 2.0 * rmax)?;
    let pts = points.points();
    let mut g = WeightedGraph::new(pts.len());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let dist = euclidean(&pts[i], &pts[j]);
            if dist <= q.max_value() {
                g.add_edge(i as VertexId + 1, j as VertexId + 1, q.level(dist)?)?;
            }
        }
    }
    Ok(g)
}

pub fn build_rips_from_text(text: &str, rmax: f64, t: Level) -> CliResult<CriticalSimplexDiagram> {
    let points = parse_points(text)?;
    Ok(build_flag(&rips_graph(&points, rmax, t)?, t)?)
}

pub fn build_delaunay_from_text(
    landmarks: &str,
    witnesses: &str,
    rho: f64,
    t: Level,
) -> CliResult<CriticalSimplexDiagram> {
    let q = parse_points(landmarks)?;
    let p = parse_points(witnesses)?;
    let cfg = RelaxationConfig::new(rho, t)?;
    Ok(build_delaunay(&p, &q, &cfg)?)
}

pub fn load_diagram(text: &str) -> CliResult<CriticalSimplexDiagram> {
    Ok(CriticalSimplexDiagram::from_text(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QueryKind {
    Member,
    Maximal,
    Critical,
    Filtration,
    Facets,
    Cofaces,
}

/// Parses vertex tokens; all of them are joined, so `"1 3 4"` and
/// `1 3 4` are the same simplex.
pub fn parse_simplex(tokens: &[String]) -> CliResult<Simplex> {
    let joined = tokens.join(" ");
    joined
        .parse::<Simplex>()
        .map_err(|e| CliError::Input(format!("bad simplex {joined:?}: {e}")))
}

fn listing(values: impl IntoIterator<Item = (Simplex, Level)>) -> String {
    values
        .into_iter()
        .map(|(s, h)| format!("{s}: {h}\n"))
        .collect()
}

/// Answer text, newline terminated. Questions about values of an absent
/// simplex print `absent`.
pub fn query(d: &CriticalSimplexDiagram, kind: QueryKind, s: &Simplex) -> CliResult<String> {
    let present = d.membership(s);
    let out = match kind {
        QueryKind::Member => format!("{present}\n"),
        QueryKind::Maximal => format!("{}\n", d.is_maximal(s)),
        _ if !present => "absent\n".to_string(),
        QueryKind::Critical => format!("{}\n", d.is_critical(s)?),
        QueryKind::Filtration => format!("{}\n", d.filtration(s)?),
        QueryKind::Facets if s.dim() == 0 => String::new(),
        QueryKind::Facets => listing(d.facet_filtrations(s)?),
        QueryKind::Cofaces => listing(d.coface_filtrations_codim1(s)?),
    };
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsOptions {
    pub verify: bool,
    pub with_st: bool,
    pub verify_cap: usize,
}

impl Default for StatsOptions {
    fn default() -> Self {
        StatsOptions {
            verify: false,
            with_st: false,
            verify_cap: 32,
        }
    }
}

pub fn simplex_tree_of(d: &CriticalSimplexDiagram) -> SimplexTree {
    let mut st = SimplexTree::new();
    for (label, star) in d.stars() {
        st.insert(&star.simplex, label.level);
    }
    st
}

/// Compares the stored stars with the critical set of the complex they
/// span; reports the first difference.
pub fn verify(d: &CriticalSimplexDiagram) -> CliResult<ExplicitComplex> {
    d.check_structure().map_err(CliError::Verify)?;
    let o = ExplicitComplex::from_stars(d.stars().map(|(l, s)| (&s.simplex, l.level)), d.t());
    let expected = o.critical_set();
    let stored = d.entries();
    let describe = |e: &CriticalEntry| {
        format!(
            "[{}] at level {}{}",
            e.simplex,
            e.level,
            if e.maximal { " (maximal)" } else { "" }
        )
    };
    for i in 0..stored.len().max(expected.len()) {
        match (stored.get(i), expected.get(i)) {
            (Some(a), Some(b)) if a == b => continue,
            (Some(a), Some(b)) => {
                return Err(CliError::Verify(format!(
                    "stored {} where the complex has {}",
                    describe(a),
                    describe(b)
                )))
            }
            (Some(a), None) => {
                return Err(CliError::Verify(format!("extra stored {}", describe(a))))
            }
            (None, Some(b)) => return Err(CliError::Verify(format!("missing {}", describe(b)))),
            (None, None) => unreachable!(),
        }
    }
    Ok(o)
}

pub fn stats(d: &CriticalSimplexDiagram, opts: StatsOptions) -> CliResult<StatsReport> {
    let mut report = StatsReport::of(d);
    if opts.verify {
        if d.n() > opts.verify_cap {
            return Err(CliError::Input(format!(
                "refusing to verify a diagram on {} vertices; the cap is {}",
                d.n(),
                opts.verify_cap
            )));
        }
        report.m = Some(verify(d)?.len());
    }
    if opts.with_st {
        let start = Instant::now();
        let st = simplex_tree_of(d);
        report
            .build_time_ms
            .push(("st", start.elapsed().as_millis()));
        report.node_count_st = Some(st.node_count());
    }
    Ok(report)
}

/// One step of the Klein bottle chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRow {
    pub t: Level,
    pub edges: usize,
    pub node_count_csd: usize,
    pub node_count_st: usize,
    pub kappa: usize,
    pub k: usize,
    pub psi: usize,
    pub gamma0: usize,
    pub build_ms_csd: u128,
    pub build_ms_st: u128,
}

/// Rips diagrams of `points` at each `t`, with the simplex tree built from
/// the same critical simplices for comparison.
pub fn rips_chain(points: &PointSet, rmax: f64, ts: &[Level]) -> CliResult<Vec<ChainRow>> {
    ts.iter()
        .map(|&t| {
            let start = Instant::now();
            let g = rips_graph(points, rmax, t)?;
            let d = build_flag(&g, t)?;
            let build_ms_csd = start.elapsed().as_millis();
            let start = Instant::now();
            let st = simplex_tree_of(&d);
            let build_ms_st = start.elapsed().as_millis();
            let s = d.stats();
            Ok(ChainRow {
                t,
                edges: g.edge_count(),
                node_count_csd: s.node_count,
                node_count_st: st.node_count(),
                kappa: s.critical,
                k: s.maximal,
                psi: s.psi,
                gamma0: s.gamma0,
                build_ms_csd,
                build_ms_st,
            })
        })
        .collect()
}

pub fn format_chain(rows: &[ChainRow]) -> String {
    let mut out = String::from(
        "t edges node_count_csd node_count_st kappa k psi gamma0 build_ms_csd build_ms_st\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{} {} {} {} {} {} {} {} {} {}\n",
            r.t,
            r.edges,
            r.node_count_csd,
            r.node_count_st,
            r.kappa,
            r.k,
            r.psi,
            r.gamma0,
            r.build_ms_csd,
            r.build_ms_st
        ));
    }
    out
}

/// `1, 2, 4, ...` up to and including the largest power of two not above `max_t`.
pub fn doubling_chain(max_t: Level) -> Vec<Level> {
    std::iter::successors(Some(1), |&t: &Level| t.checked_mul(2))
        .take_while(|&t| t <= max_t)
        .collect()
}
