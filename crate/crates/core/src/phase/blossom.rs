//! Edmonds' blossom search. The engine uses it to decide whether a matching
//! is maximum in a non-bipartite graph before paying for the exhaustive
//! shortest-length search, and to skip start vertices that cannot be
//! augmented at all.

use std::collections::VecDeque;

use crate::graph::{AltPath, Graph, Matching};

const NONE: usize = usize::MAX;

struct Forest<'a> {
    g: &'a Graph,
    mate: &'a [Option<usize>],
    alive: &'a [bool],
    base: Vec<usize>,
    parent: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Forest<'a> {
    fn new(g: &'a Graph, mate: &'a [Option<usize>], alive: &'a [bool]) -> Self {
        let n = g.n();
        Forest {
            g,
            mate,
            alive,
            base: (0..n).collect(),
            parent: vec![NONE; n],
            outer: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn mate(&self, v: usize) -> usize {
        self.mate[v].unwrap_or(NONE)
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            let ma = self.mate(a);
            if ma == NONE {
                break;
            }
            a = self.parent[ma];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate(b)];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let mv = self.mate(v);
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mv]] = true;
            self.parent[v] = child;
            child = mv;
            v = self.parent[mv];
        }
    }

    /// Grows an alternating tree from `root`; returns an augmenting path
    /// ending at `root` if one exists.
    fn search(mut self, root: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        self.outer[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate(v) == to {
                    continue;
                }
                let mto = self.mate(to);
                if mto != NONE && !self.alive[mto] {
                    continue;
                }
                if to == root || (mto != NONE && self.parent[mto] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mto == NONE {
                        return Some(self.trace(to));
                    }
                    self.outer[mto] = true;
                    queue.push_back(mto);
                }
            }
        }
        None
    }

    fn trace(&self, end: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            path.push(v);
            path.push(pv);
            v = self.mate(pv);
        }
        path
    }
}

/// Augmenting path with one endpoint at `root` in the subgraph induced by
/// `alive`, if one exists.
pub fn augmenting_path_from(g: &Graph, m: &Matching, alive: &[bool], root: usize) -> Option<AltPath> {
    if !alive[root] || !m.is_exposed(root) {
        return None;
    }
    Forest::new(g, m.mates(), alive)
        .search(root)
        .map(AltPath::new)
}

/// Whether no augmenting path exists, i.e. `m` is maximum.
pub fn is_maximum(g: &Graph, m: &Matching) -> bool {
    let alive = vec![true; g.n()];
    m.exposed()
        .all(|r| augmenting_path_from(g, m, &alive, r).is_none())
}

/// Exposed vertices from which some augmenting path starts.
pub fn augmentable_vertices(g: &Graph, m: &Matching, alive: &[bool]) -> Vec<bool> {
    let mut out = vec![false; g.n()];
    for r in m.exposed() {
        if out[r] {
            continue;
        }
        if let Some(p) = augmenting_path_from(g, m, alive, r) {
            out[p.first()] = true;
            out[p.last()] = true;
        }
    }
    out
}

/// Maximum matching by repeated blossom augmentation.
pub fn maximum_matching(g: &Graph) -> Matching {
    let alive = vec![true; g.n()];
    let mut m = Matching::empty(g.n());
    for r in 0..g.n() {
        if let Some(p) = augmenting_path_from(g, &m, &alive, r) {
            m.flip_unchecked(&p);
        }
    }
    m
}
