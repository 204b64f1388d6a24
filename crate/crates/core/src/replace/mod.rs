//! Path replacement: given an alternating path, build a shorter alternating
//! path on a subset of its vertices with the same endpoints and the same
//! colors on the end edges.
//!
//! Every procedure iterates its shortcut until the path is below the
//! construction threshold, checks each step against [`validate_replacement`]
//! and records the length after every step.

mod independence;
mod modular;
mod nd;
mod splex;

use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use independence::replace_independence;
pub use modular::{replace_modular, ModularStats};
pub use nd::replace_nd;
pub use splex::replace_splex;

use crate::graph::{validate_replacement, AltPath, Graph, GraphError, Matching};
use crate::params::{modular_decomposition, neighborhood_diversity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplaceError {
    #[error("input path: {0}")]
    NotAlternating(GraphError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("type partition does not match the graph: {0}")]
    Types(String),
    #[error("decomposition tree does not match the graph: {0}")]
    Tree(String),
    /// A constructed step failed validation. Indicates a bug.
    #[error("step {step} produced an invalid replacement: {reason}")]
    Invalid { step: usize, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplaceResult {
    pub path: AltPath,
    /// Number of shortcut steps applied.
    pub steps: usize,
    /// Length bound the procedure guarantees when its hypothesis holds.
    pub bound: u64,
    /// Path length before the first step and after every step.
    pub lengths: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularStats>,
}

impl ReplaceResult {
    pub fn within_bound(&self) -> bool {
        self.path.len() as u64 <= self.bound
    }
}

/// A path split into an optional first edge, a core and an optional last edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parity {
    pub head: Option<(usize, usize)>,
    pub core: AltPath,
    pub tail: Option<(usize, usize)>,
}

impl Parity {
    /// Puts the stripped edges back around `core`, which must share the
    /// endpoints of the original core.
    pub fn reattach(&self, core: &AltPath) -> AltPath {
        let mut vs = Vec::with_capacity(core.len() + 3);
        if let Some((h, _)) = self.head {
            vs.push(h);
        }
        vs.extend_from_slice(core.vertices());
        if let Some((_, t)) = self.tail {
            vs.push(t);
        }
        AltPath::new(vs)
    }

    fn split(p: &AltPath, strip_head: bool, strip_tail: bool) -> Parity {
        let vs = p.vertices();
        let mut lo = 0;
        let mut hi = vs.len() - 1;
        let mut head = None;
        let mut tail = None;
        if strip_head && hi > lo {
            head = Some((vs[0], vs[1]));
            lo = 1;
        }
        if strip_tail && hi > lo {
            tail = Some((vs[hi - 1], vs[hi]));
            hi -= 1;
        }
        Parity {
            head,
            core: AltPath::new(vs[lo..=hi].to_vec()),
            tail,
        }
    }
}

/// Strips a blue first (last) edge whose outer endpoint is matched, so the
/// core starts (ends) with a red edge or at an exposed vertex.
pub fn normalize_parity(m: &Matching, p: &AltPath) -> Parity {
    let head = p.first_red(m) == Some(false) && !m.is_exposed(p.first());
    let tail = p.last_red(m) == Some(false) && !m.is_exposed(p.last());
    Parity::split(p, head, tail)
}

/// Strips red end edges so the core starts and ends with a blue edge.
pub fn blue_bounded_core(m: &Matching, p: &AltPath) -> Parity {
    Parity::split(p, p.first_red(m) == Some(true), p.last_red(m) == Some(true))
}

/// Bookkeeping shared by the replacers: current path, step count and
/// per-step validation.
struct Steps<'a> {
    g: &'a Graph,
    m: &'a Matching,
    cur: Vec<usize>,
    lengths: Vec<usize>,
}

impl<'a> Steps<'a> {
    fn new(g: &'a Graph, m: &'a Matching, p: &AltPath) -> Self {
        Steps {
            g,
            m,
            cur: p.vertices().to_vec(),
            lengths: vec![p.len()],
        }
    }

    fn len(&self) -> usize {
        self.cur.len() - 1
    }

    /// Replaces the current path by `next` after checking it.
    fn apply(&mut self, next: Vec<usize>) -> Result<(), ReplaceError> {
        let step = self.lengths.len();
        let old = AltPath::new(std::mem::take(&mut self.cur));
        let new = AltPath::new(next);
        if new.len() >= old.len() {
            return Err(ReplaceError::Invalid {
                step,
                reason: format!("length {} does not shrink {}", new.len(), old.len()),
            });
        }
        if !validate_replacement(self.g, self.m, &old, &new) {
            return Err(ReplaceError::Invalid {
                step,
                reason: format!("{:?} does not replace {:?}", new.vertices(), old.vertices()),
            });
        }
        self.lengths.push(new.len());
        self.cur = new.into_vertices();
        Ok(())
    }

    fn finish(self, bound: u64) -> ReplaceResult {
        ReplaceResult {
            path: AltPath::new(self.cur),
            steps: self.lengths.len() - 1,
            bound,
            lengths: self.lengths,
            modular: None,
        }
    }
}

/// `q[..=a] q[b..]`, joined by the edge `q[a] q[b]`.
fn shortcut(q: &[usize], a: usize, b: usize) -> Vec<usize> {
    let mut out = q[..=a].to_vec();
    out.extend_from_slice(&q[b..]);
    out
}

/// Runs `f` on the core of `p` and reattaches the stripped edges, keeping
/// lengths relative to the whole path.
fn on_core<F>(g: &Graph, m: &Matching, p: &AltPath, parity: Parity, bound: u64, f: F) -> Result<ReplaceResult, ReplaceError>
where
    F: FnOnce(&mut Steps) -> Result<(), ReplaceError>,
{
    let extra = p.len() - parity.core.len();
    let mut steps = Steps::new(g, m, &parity.core);
    f(&mut steps)?;
    let inner = steps.finish(bound);
    let path = parity.reattach(&inner.path);
    if !validate_replacement(g, m, p, &path) {
        return Err(ReplaceError::Invalid {
            step: inner.steps,
            reason: "reattached path does not replace the input".into(),
        });
    }
    Ok(ReplaceResult {
        path,
        steps: inner.steps,
        bound,
        lengths: inner.lengths.iter().map(|l| l + extra).collect(),
        modular: None,
    })
}

fn check_input(g: &Graph, m: &Matching, p: &AltPath) -> Result<(), ReplaceError> {
    m.validate(g).map_err(ReplaceError::NotAlternating)?;
    p.check_alternating(g, m).map_err(ReplaceError::NotAlternating)
}

/// Replacer choice with its parameter, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// `α(G) ≤ k`.
    Independence(usize),
    /// `G` is a `k`-plex.
    Splex(usize),
    /// Uses the exact type partition.
    NeighborhoodDiversity,
    /// Uses the computed modular decomposition.
    Modular,
}

impl FromStr for Method {
    type Err = String;

    /// `independence:K`, `splex:K`, `nd`, `modular`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let k = || -> Result<usize, String> {
            arg.ok_or_else(|| format!("{name} needs a parameter, e.g. {name}:2"))?
                .parse()
                .map_err(|_| format!("bad parameter in {s:?}"))
        };
        match name {
            "independence" | "alpha" => Ok(Method::Independence(k()?)),
            "splex" | "plex" => Ok(Method::Splex(k()?)),
            "nd" => Ok(Method::NeighborhoodDiversity),
            "modular" => Ok(Method::Modular),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

/// Dispatches to the replacer for `method`, computing types or the
/// decomposition tree where needed.
pub fn replace_with(g: &Graph, m: &Matching, p: &AltPath, method: Method) -> Result<ReplaceResult, ReplaceError> {
    match method {
        Method::Independence(k) => replace_independence(g, m, p, k),
        Method::Splex(k) => replace_splex(g, m, p, k),
        Method::NeighborhoodDiversity => replace_nd(g, m, p, &neighborhood_diversity(g)),
        Method::Modular => replace_modular(g, m, p, &modular_decomposition(g)),
    }
}
