//! Depth-bounded search for augmenting paths of a fixed length.
//!
//! A path is grown from an exposed start vertex two edges at a time: a blue
//! edge to a neighbour `w`, then the red edge to `mate(w)`, until a blue edge
//! reaches an exposed vertex. The search is pruned by a relaxed distance
//! (`h`) that ignores simplicity, so it never cuts a real path.
//!
//! In bipartite graphs `h` is exact on shortest paths and the search only
//! follows arcs that drop `h` by two (the Hopcroft-Karp layering). Failed
//! vertices are then dead for the rest of the phase. That shortcut is unsound
//! once odd cycles exist, so general graphs get the plain pruned search.

use std::collections::VecDeque;

use crate::graph::{Graph, Matching};

pub(crate) const INF: u32 = u32::MAX;

/// Relaxed distance from every vertex (taken as needing a blue edge next)
/// to an exposed vertex. Arcs are `v -> mate(w)` for blue neighbours `w`;
/// vertices with `alive[v] == false` are ignored.
pub(crate) fn relaxed_distances(g: &Graph, m: &Matching, alive: &[bool]) -> Vec<u32> {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if alive[v]
            && g
                .neighbors(v)
                .iter()
                .any(|&w| alive[w] && m.is_exposed(w))
        {
            dist[v] = 1;
            queue.push_back(v);
        }
    }
    while let Some(x) = queue.pop_front() {
        // predecessors of x: v adjacent to w = mate(x) through a blue edge
        let Some(w) = m.mate(x) else { continue };
        if !alive[w] {
            continue;
        }
        let d = dist[x] + 2;
        for &v in g.neighbors(w) {
            if v != x && alive[v] && dist[v] == INF {
                dist[v] = d;
                queue.push_back(v);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BudgetExceeded;

pub(crate) struct Searcher<'a> {
    g: &'a Graph,
    m: &'a Matching,
    /// Neighbour order used by the search (sorted or shuffled).
    adj: &'a [Vec<usize>],
    layered: bool,
    blocked: Vec<bool>,
    h: Vec<u32>,
    dead: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        m: &'a Matching,
        adj: &'a [Vec<usize>],
        layered: bool,
        budget: Option<u64>,
    ) -> Self {
        let n = g.n();
        let blocked = vec![false; n];
        let h = relaxed_distances(g, m, &vec![true; n]);
        Searcher {
            g,
            m,
            adj,
            layered,
            blocked,
            h,
            dead: vec![false; n],
            on_path: vec![false; n],
            path: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    pub(crate) fn h(&self, v: usize) -> u32 {
        self.h[v]
    }

    pub(crate) fn is_blocked(&self, v: usize) -> bool {
        self.blocked[v]
    }

    /// Removes the vertices of a chosen path from further searches.
    pub(crate) fn block(&mut self, vertices: &[usize]) {
        for &v in vertices {
            self.blocked[v] = true;
        }
        if !self.layered {
            let alive: Vec<bool> = self.blocked.iter().map(|b| !b).collect();
            self.h = relaxed_distances(self.g, self.m, &alive);
        }
    }

    /// Finds an augmenting path from exposed `s` of length at most `limit`
    /// (exactly `limit` in layered mode) avoiding blocked vertices. Neighbours
    /// are tried in `adj` order, so with sorted lists the result is the
    /// lexicographically smallest such path starting at `s`.
    pub(crate) fn find_from(
        &mut self,
        s: usize,
        limit: usize,
    ) -> Result<Option<Vec<usize>>, BudgetExceeded> {
        if self.blocked[s] || !self.m.is_exposed(s) || self.dead[s] {
            return Ok(None);
        }
        let limit = limit as u32;
        if self.h[s] > limit || (self.layered && self.h[s] != limit) {
            return Ok(None);
        }
        self.path.clear();
        self.path.push(s);
        self.on_path[s] = true;
        let found = self.extend(s, 0, limit);
        for &v in &self.path {
            self.on_path[v] = false;
        }
        match found {
            Ok(true) => Ok(Some(std::mem::take(&mut self.path))),
            Ok(false) => {
                if self.layered {
                    self.dead[s] = true;
                }
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn extend(&mut self, v: usize, used: u32, limit: u32) -> Result<bool, BudgetExceeded> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(BudgetExceeded);
            }
        }
        let mate_v = self.m.mate(v);
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.blocked[w] || self.on_path[w] || Some(w) == mate_v {
                continue;
            }
            match self.m.mate(w) {
                None => {
                    let ok = if self.layered {
                        used + 1 == limit
                    } else {
                        used < limit
                    };
                    if ok {
                        self.path.push(w);
                        return Ok(true);
                    }
                }
                Some(x) => {
                    if self.blocked[x] || self.on_path[x] || self.dead[x] {
                        continue;
                    }
                    let hx = self.h[x];
                    if hx == INF {
                        continue;
                    }
                    let fits = if self.layered {
                        used + 2 + hx == limit
                    } else {
                        used + 2 + hx <= limit
                    };
                    if !fits {
                        continue;
                    }
                    self.path.push(w);
                    self.path.push(x);
                    self.on_path[w] = true;
                    self.on_path[x] = true;
                    if self.extend(x, used + 2, limit)? {
                        return Ok(true);
                    }
                    self.on_path[w] = false;
                    self.on_path[x] = false;
                    self.path.truncate(self.path.len() - 2);
                    if self.layered {
                        self.dead[x] = true;
                    }
                }
            }
        }
        Ok(false)
    }
}
