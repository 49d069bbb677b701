//! Text serialization.
//!
//! ```text
//! csd n=<n> t=<t>
//! <level> <maximal:0|1> <v0> <v1> ...
//! ```
//!
//! One line per stored star, ordered by level, then simplex, then flag.
//! Keys are not written; reading re-keys the stars in file order.

use std::fmt::Write as _;

use super::CriticalSimplexDiagram;
use crate::error::{Error, Result};
use crate::simplex::{Level, Simplex, VertexId};

impl CriticalSimplexDiagram {
    pub fn to_text(&self) -> String {
        let mut out = format!("csd n={} t={}\n", self.n(), self.t);
        let mut entries = self.entries();
        entries.sort_by(|a, b| {
            (a.level, &a.simplex, a.maximal).cmp(&(b.level, &b.simplex, b.maximal))
        });
        for e in entries {
            let _ = writeln!(out, "{} {} {}", e.level, u8::from(e.maximal), e.simplex);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let (n, t) = parse_header(header)?;
        let mut d = CriticalSimplexDiagram::new(n, t);
        for (line, raw) in lines {
            if raw.trim().is_empty() {
                continue;
            }
            let mut tok = raw.split_whitespace();
            let level: Level = tok
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err(line, "expected a level"))?;
            let maximal = match tok.next() {
                Some("0") => false,
                Some("1") => true,
                _ => return Err(parse_err(line, "expected maximal flag 0 or 1")),
            };
            let vertices = tok
                .map(|s| {
                    s.parse::<VertexId>()
                        .map_err(|_| parse_err(line, &format!("bad vertex {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(parse_err(line, "vertices must be strictly ascending"));
            }
            let s = Simplex::new(vertices).map_err(|e| parse_err(line, &e.to_string()))?;
            d.lazy_insert(&s, level, maximal)
                .map_err(|e| parse_err(line, &e.to_string()))?;
        }
        Ok(d)
    }
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_header(header: &str) -> Result<(usize, Level)> {
    let mut tok = header.split_whitespace();
    if tok.next() != Some("csd") {
        return Err(parse_err(1, "header must start with `csd`"));
    }
    let n = tok
        .next()
        .and_then(|s| s.strip_prefix("n="))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(1, "expected n=<int>"))?;
    let t = tok
        .next()
        .and_then(|s| s.strip_prefix("t="))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(1, "expected t=<int>"))?;
    if tok.next().is_some() {
        return Err(parse_err(1, "trailing tokens in header"));
    }
    Ok((n, t))
}
