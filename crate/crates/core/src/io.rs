//! Text formats for graphs, matchings and paths.
//!
//! Graph files look like
//!
//! ```text
//! c optional comment
//! p 4 3
//! e 0 1
//! e 1 2
//! e 2 3
//! b 0 2
//! ```
//!
//! where the optional `b` line lists one side of a bipartition. Matching files
//! hold `e u v` lines only; path files hold a single line of vertex ids.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{AltPath, Graph, GraphError, Matching};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Fs {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("header declares {declared} edges, file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

fn read_to_string(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Fs {
        path: path.display().to_string(),
        source,
    })
}

fn write_string(path: &Path, s: &str) -> Result<(), IoError> {
    fs::write(path, s).map_err(|source| IoError::Fs {
        path: path.display().to_string(),
        source,
    })
}

fn parse_ids<'a>(
    tokens: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<Vec<usize>, IoError> {
    tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad vertex id {t:?}")))
        })
        .collect()
}

/// Lines that carry data: 1-based line number plus trimmed text.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut left: Option<Vec<usize>> = None;
    for (line, rec) in records(text) {
        let mut tok = rec.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let nums = parse_ids(tok, line)?;
                let [n, m] = nums[..] else {
                    return Err(parse_err(line, "header must be `p <n> <m>`"));
                };
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line, "edge before header"));
                };
                let nums = parse_ids(tok, line)?;
                let [u, v] = nums[..] else {
                    return Err(parse_err(line, "edge must be `e <u> <v>`"));
                };
                if u >= n || v >= n {
                    return Err(parse_err(line, format!("vertex out of range for n = {n}")));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
            Some("b") => {
                if header.is_none() {
                    return Err(parse_err(line, "bipartition before header"));
                }
                if left.is_some() {
                    return Err(parse_err(line, "duplicate bipartition line"));
                }
                left = Some(parse_ids(tok, line)?);
            }
            Some(other) => return Err(parse_err(line, format!("unknown record {other:?}"))),
            None => unreachable!("records() skips blank lines"),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(IoError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let g = Graph::new(n, edges)?;
    if g.m() != m {
        return Err(IoError::EdgeCount {
            declared: m,
            found: g.m(),
        });
    }
    Ok(match left {
        Some(left) => g.with_bipartition(&left)?,
        None => g,
    })
}

/// Canonical form: edges in sorted order, bipartition line last.
pub fn format_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    if let Some(left) = g.left_side() {
        s.push('b');
        for v in left {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    s
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, IoError> {
    parse_graph(&read_to_string(path.as_ref())?)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_string(path.as_ref(), &format_graph(g))
}

/// Parses a matching on `n` vertices. Edges are not checked against a graph.
pub fn parse_matching(text: &str, n: usize) -> Result<Matching, IoError> {
    let mut edges = Vec::new();
    for (line, rec) in records(text) {
        let mut tok = rec.split_whitespace();
        if tok.next() != Some("e") {
            return Err(parse_err(line, "matching lines must be `e <u> <v>`"));
        }
        let nums = parse_ids(tok, line)?;
        let [u, v] = nums[..] else {
            return Err(parse_err(line, "matching lines must be `e <u> <v>`"));
        };
        edges.push((u, v));
    }
    Ok(Matching::from_edges(n, edges)?)
}

pub fn format_matching(m: &Matching) -> String {
    m.edges().iter().map(|(u, v)| format!("e {u} {v}\n")).collect()
}

pub fn read_matching(path: impl AsRef<Path>, n: usize) -> Result<Matching, IoError> {
    parse_matching(&read_to_string(path.as_ref())?, n)
}

pub fn write_matching(m: &Matching, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_string(path.as_ref(), &format_matching(m))
}

pub fn parse_path(text: &str) -> Result<AltPath, IoError> {
    let mut recs = records(text);
    let (line, rec) = recs.next().ok_or_else(|| parse_err(0, "empty path file"))?;
    if let Some((extra, _)) = recs.next() {
        return Err(parse_err(extra, "path files hold a single line"));
    }
    Ok(AltPath::try_new(parse_ids(rec.split_whitespace(), line)?)?)
}

pub fn format_path(p: &AltPath) -> String {
    let ids: Vec<String> = p.vertices().iter().map(usize::to_string).collect();
    format!("{}\n", ids.join(" "))
}

pub fn read_path(path: impl AsRef<Path>) -> Result<AltPath, IoError> {
    parse_path(&read_to_string(path.as_ref())?)
}

pub fn write_path(p: &AltPath, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_string(path.as_ref(), &format_path(p))
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T, IoError> {
    Ok(serde_json::from_str(&read_to_string(path.as_ref())?)?)
}

pub fn write_json<T: Serialize>(value: &T, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    write_string(path.as_ref(), &s)
}
