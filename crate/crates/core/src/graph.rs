//! Graphs, matchings and alternating paths.
//!
//! Vertices are dense `usize` ids in `0..n`. Edges are stored as normalized
//! pairs `(u, v)` with `u < v`. A matching edge is called *red*, every other
//! edge *blue*.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) does not cross the bipartition")]
    EdgeInsideSide(usize, usize),
    #[error("vertex {0} is matched more than once")]
    MatchingConflict(usize),
    #[error("matching edge ({0}, {1}) is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("matching has {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not an alternating path: {0}")]
    NotAlternating(String),
    #[error("path is not augmenting: {0}")]
    NotAugmenting(String),
    #[error("vertex {0} is not on the path")]
    NotOnPath(usize),
    #[error("a path needs at least one vertex")]
    EmptyPath,
}

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// `Some(side)` with `side[v] == true` for the left side.
    side: Option<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            side: None,
        })
    }

    /// Attaches a bipartition given by the vertices of one side. Every edge
    /// must have exactly one endpoint in `left`.
    pub fn with_bipartition(mut self, left: &[usize]) -> Result<Self, GraphError> {
        let mut side = vec![false; self.n];
        for &v in left {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            side[v] = true;
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| side[u] == side[v]) {
            return Err(GraphError::EdgeInsideSide(u, v));
        }
        self.side = Some(side);
        Ok(self)
    }

    /// Attaches a bipartition found by two-coloring, if the graph is bipartite.
    pub fn with_detected_bipartition(self) -> Option<Self> {
        let coloring = self.two_coloring()?;
        let left: Vec<usize> = (0..self.n).filter(|&v| coloring[v]).collect();
        self.with_bipartition(&left).ok()
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let g = Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid");
        let left: Vec<usize> = (0..n).step_by(2).collect();
        g.with_bipartition(&left).expect("paths are bipartite")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is valid")
    }

    /// `K_{a,b}` with left side `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        let left: Vec<usize> = (0..a).collect();
        Graph::new(a + b, edges)
            .and_then(|g| g.with_bipartition(&left))
            .expect("complete bipartite graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Normalized, sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn bipartition(&self) -> Option<&[bool]> {
        self.side.as_deref()
    }

    pub fn is_bipartite_marked(&self) -> bool {
        self.side.is_some()
    }

    /// Vertices of the left side of the attached bipartition.
    pub fn left_side(&self) -> Option<Vec<usize>> {
        self.side
            .as_ref()
            .map(|s| (0..self.n).filter(|&v| s[v]).collect())
    }

    /// Proper two-coloring (`true` = first color), if one exists. The
    /// smallest vertex of every component gets `true`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(true);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n])
    }

    /// Connected components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] || !alive[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if alive[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices` (in the given order), relabelled to
    /// `0..vertices.len()`. Returns the graph and the map new id -> old id.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        let mut g = Graph::new(vertices.len(), edges).expect("induced subgraph is valid");
        if let Some(side) = &self.side {
            let left: Vec<usize> = (0..vertices.len()).filter(|&i| side[vertices[i]]).collect();
            g = g.with_bipartition(&left).expect("induced subgraph keeps the bipartition");
        }
        (g, vertices.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, edges).expect("complement is valid")
    }
}

/// Set of pairwise vertex-disjoint edges, stored as a mate table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
            size: 0,
        }
    }

    /// Builds a matching on `n` vertices. Fails if two edges share a vertex.
    /// Adjacency in a host graph is checked separately by [`Matching::validate`].
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Matching::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if m.mate[u] == Some(v) {
                continue;
            }
            for w in [u, v] {
                if m.mate[w].is_some() {
                    return Err(GraphError::MatchingConflict(w));
                }
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
            m.size += 1;
        }
        Ok(m)
    }

    /// Checks that every matching edge is an edge of `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if self.mate.len() != g.n() {
            return Err(GraphError::SizeMismatch {
                expected: g.n(),
                found: self.mate.len(),
            });
        }
        match self.edges().into_iter().find(|&(u, v)| !g.has_edge(u, v)) {
            Some((u, v)) => Err(GraphError::MissingEdge(u, v)),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn mates(&self) -> &[Option<usize>] {
        &self.mate
    }

    pub fn is_exposed(&self, v: usize) -> bool {
        self.mate[v].is_none()
    }

    /// Whether `uv` is a matching (red) edge.
    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.mate[u] == Some(v)
    }

    pub fn exposed(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.mate.len()).filter(move |&v| self.mate[v].is_none())
    }

    /// Sorted, normalized edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, &w)| w.filter(|&w| u < w).map(|w| (u, w)))
            .collect()
    }

    /// Edges in exactly one of `self` and `other`.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !other.is_red(u, v))
            .chain(other.edges().into_iter().filter(|&(u, v)| !self.is_red(u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// No edge of `g` joins two exposed vertices.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.mate[u].is_some() || self.mate[v].is_some())
    }

    /// Returns `self △ E(p)`. Fails unless `p` is augmenting for `self` in `g`.
    pub fn augment(&self, g: &Graph, p: &AltPath) -> Result<Matching, GraphError> {
        check_augmenting(g, self, p)?;
        let mut out = self.clone();
        out.flip_unchecked(p);
        Ok(out)
    }

    /// Flips the colors along `p` without checking it. Callers must have
    /// validated that `p` is augmenting.
    pub(crate) fn flip_unchecked(&mut self, p: &AltPath) {
        let vs = p.vertices();
        for pair in vs.chunks(2) {
            if let [u, v] = *pair {
                self.mate[u] = Some(v);
                self.mate[v] = Some(u);
            }
        }
        self.size += 1;
    }
}

/// Simple path `v_1 ... v_l` given by its vertex sequence. Alternation is a
/// property checked against a graph and a matching, not an invariant of the
/// type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AltPath {
    vertices: Vec<usize>,
}

impl AltPath {
    /// Panics on an empty sequence; use [`AltPath::try_new`] for untrusted input.
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path needs at least one vertex");
        AltPath { vertices }
    }

    pub fn try_new(vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            Err(GraphError::EmptyPath)
        } else {
            Ok(AltPath { vertices })
        }
    }

    pub fn single(v: usize) -> Self {
        AltPath { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True for the single-vertex path.
    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn reversed(&self) -> AltPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        AltPath { vertices }
    }

    /// Orientation with the smaller endpoint first.
    pub fn canonical(&self) -> AltPath {
        if self.first() <= self.last() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// `P[from, to]`: the contiguous piece between two vertices of the path,
    /// reversed when `from` comes after `to`.
    pub fn subpath(&self, from: usize, to: usize) -> Result<AltPath, GraphError> {
        let i = self.position(from).ok_or(GraphError::NotOnPath(from))?;
        let j = self.position(to).ok_or(GraphError::NotOnPath(to))?;
        Ok(self.slice(i, j))
    }

    /// Same as [`AltPath::subpath`] but by index.
    pub fn slice(&self, i: usize, j: usize) -> AltPath {
        let vertices = if i <= j {
            self.vertices[i..=j].to_vec()
        } else {
            self.vertices[j..=i].iter().rev().copied().collect()
        };
        AltPath { vertices }
    }

    /// Checks simplicity, adjacency in `g` and color alternation under `m`.
    pub fn check_alternating(&self, g: &Graph, m: &Matching) -> Result<(), GraphError> {
        let n = g.n();
        let mut seen = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if seen[v] {
                return Err(GraphError::NotAlternating(format!("vertex {v} repeats")));
            }
            seen[v] = true;
        }
        let mut prev: Option<bool> = None;
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAlternating(format!("({u}, {v}) is not an edge")));
            }
            let red = m.is_red(u, v);
            if prev == Some(red) {
                return Err(GraphError::NotAlternating(format!(
                    "two consecutive {} edges ending at ({u}, {v})",
                    if red { "red" } else { "blue" }
                )));
            }
            prev = Some(red);
        }
        Ok(())
    }

    pub fn is_alternating(&self, g: &Graph, m: &Matching) -> bool {
        self.check_alternating(g, m).is_ok()
    }

    /// Color of the first edge (`true` = red). `None` for a single vertex.
    pub fn first_red(&self, m: &Matching) -> Option<bool> {
        (!self.is_empty()).then(|| m.is_red(self.vertices[0], self.vertices[1]))
    }

    pub fn last_red(&self, m: &Matching) -> Option<bool> {
        let l = self.vertices.len();
        (!self.is_empty()).then(|| m.is_red(self.vertices[l - 2], self.vertices[l - 1]))
    }
}

impl From<Vec<usize>> for AltPath {
    fn from(vertices: Vec<usize>) -> Self {
        AltPath::new(vertices)
    }
}

fn check_augmenting(g: &Graph, m: &Matching, p: &AltPath) -> Result<(), GraphError> {
    if p.is_empty() {
        return Err(GraphError::NotAugmenting("single vertex".into()));
    }
    p.check_alternating(g, m)
        .map_err(|e| GraphError::NotAugmenting(e.to_string()))?;
    for v in [p.first(), p.last()] {
        if !m.is_exposed(v) {
            return Err(GraphError::NotAugmenting(format!("endpoint {v} is matched")));
        }
    }
    Ok(())
}

/// `p` alternates under `m` and both endpoints are exposed.
pub fn is_augmenting(g: &Graph, m: &Matching, p: &AltPath) -> bool {
    check_augmenting(g, m, p).is_ok()
}

/// Edges with exactly one endpoint in `s`.
pub fn boundary_edges(g: &Graph, s: &[usize]) -> Result<Vec<(usize, usize)>, GraphError> {
    let mut inside = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { v, n: g.n() });
        }
        inside[v] = true;
    }
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| inside[u] != inside[v])
        .collect())
}

/// Whether `q` replaces `p` under `m`: `q` is an alternating path of `g`
/// with `V(q) ⊆ V(p)`, the same endpoints in the same order, and the same
/// colors on its first and last edges. A single-vertex path is replaced only
/// by itself.
pub fn validate_replacement(g: &Graph, m: &Matching, p: &AltPath, q: &AltPath) -> bool {
    if p.is_empty() {
        return q == p;
    }
    if q.first() != p.first() || q.last() != p.last() || q.is_empty() {
        return false;
    }
    if !q.is_alternating(g, m) {
        return false;
    }
    let mut on_p = vec![false; g.n()];
    for &v in p.vertices() {
        on_p[v] = true;
    }
    if !q.vertices().iter().all(|&v| on_p[v]) {
        return false;
    }
    q.first_red(m) == p.first_red(m) && q.last_red(m) == p.last_red(m)
}
