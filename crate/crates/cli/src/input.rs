//! Edge lists and point files.
//!
//! Edge list: an optional `n=<int>` line, then `u v w` per line with 1-based
//! vertices. `#` starts a comment. Without a header, `n` is the largest
//! vertex mentioned.
//!
//! Points: one point per line, whitespace-separated coordinates.

use csd_core::{Error, Level, PointSet, VertexId, WeightedGraph};

use crate::error::{CliError, CliResult};
use crate::quantize::Quantizer;

/// An edge list before weights are turned into levels.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId, f64)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    Error::Parse {
        line,
        message: message.into(),
    }
    .into()
}

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

pub fn parse_edge_list(text: &str) -> CliResult<EdgeList> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("n=") {
            if header.is_some() || !edges.is_empty() {
                return Err(parse_error(line, "`n=` must come before any edge"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_error(line, format!("bad vertex count {rest:?}")))?;
            header = Some(n);
            continue;
        }
        let tok: Vec<&str> = body.split_whitespace().collect();
        if tok.len() != 3 {
            return Err(parse_error(line, format!("expected `u v w`, got {body:?}")));
        }
        let vertex = |s: &str| {
            s.parse::<VertexId>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| parse_error(line, format!("bad vertex {s:?}")))
        };
        let (u, v) = (vertex(tok[0])?, vertex(tok[1])?);
        let w = tok[2]
            .parse::<f64>()
            .ok()
            .filter(|w| w.is_finite())
            .ok_or_else(|| parse_error(line, format!("bad weight {:?}", tok[2])))?;
        edges.push((u, v, w));
    }
    let n = header.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v, _)| u.max(v) as usize)
            .max()
            .unwrap_or(0)
    });
    Ok(EdgeList { n, edges })
}

impl EdgeList {
    /// Weights taken as levels; each must be a non-negative integer.
    pub fn integer_graph(&self) -> CliResult<WeightedGraph> {
        let mut g = WeightedGraph::new(self.n);
        for &(u, v, w) in &self.edges {
            if w < 0.0 || w.fract() != 0.0 || w > Level::MAX as f64 {
                return Err(CliError::Input(format!(
                    "weight {w} of edge {u} {v} is not a level; pass --quantize for real weights"
                )));
            }
            g.add_edge(u, v, w as Level)?;
        }
        Ok(g)
    }

    pub fn max_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).fold(0.0, f64::max)
    }

    /// Weights binned by `q`.
    pub fn quantized_graph(&self, q: &Quantizer) -> CliResult<WeightedGraph> {
        let mut g = WeightedGraph::new(self.n);
        for &(u, v, w) in &self.edges {
            g.add_edge(u, v, q.level(w)?)?;
        }
        Ok(g)
    }
}

pub fn parse_points(text: &str) -> CliResult<PointSet> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let p = body
            .split_whitespace()
            .map(|s| {
                s.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| parse_error(i + 1, format!("bad coordinate {s:?}")))
            })
            .collect::<CliResult<Vec<f64>>>()?;
        if let Some(first) = points.first().map(Vec::len) {
            if first != p.len() {
                return Err(parse_error(
                    i + 1,
                    format!("expected {first} coordinates, got {}", p.len()),
                ));
            }
        }
        points.push(p);
    }
    Ok(PointSet::new(points)?)
}

pub fn write_points(points: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for p in points {
        let row: Vec<String> = p.iter().map(|x| format!("{x:.9}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
