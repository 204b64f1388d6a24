//! Class recognition and vertex-deletion distance by bounded branching on
//! forbidden structures.

use std::collections::VecDeque;
use std::str::FromStr;

use serde::Serialize;

use super::mdtree::modular_decomposition;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Cluster,
    StarForest,
    /// Disjoint union of `s`-plexes: each component `C` has `δ(C) ≥ |C| − s`.
    SplexUnion(usize),
    BipartiteChain,
    Cograph,
    TriviallyPerfect,
}

impl FromStr for GraphClass {
    type Err = String;

    /// `cluster`, `star-forest`, `splex:<s>`, `chain`, `cograph`,
    /// `trivially-perfect`.
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "cluster" => GraphClass::Cluster,
            "star-forest" | "star_forest" => GraphClass::StarForest,
            "chain" | "bipartite-chain" => GraphClass::BipartiteChain,
            "cograph" => GraphClass::Cograph,
            "trivially-perfect" => GraphClass::TriviallyPerfect,
            _ => match s.strip_prefix("splex:") {
                Some(k) => GraphClass::SplexUnion(k.parse().map_err(|_| format!("bad plex size in {s:?}"))?),
                None => return Err(format!("unknown class {s:?}")),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub is_cluster: bool,
    pub is_star_forest: bool,
    pub is_bipartite_chain: bool,
    pub is_cograph: bool,
    pub is_trivially_perfect: bool,
    /// Least `s` with every component an `s`-plex (0 for the empty graph).
    pub splex_s: usize,
}

impl ClassFlags {
    pub fn is_splex_union(&self, s: usize) -> bool {
        self.splex_s <= s
    }

    pub fn contains(&self, class: GraphClass) -> bool {
        match class {
            GraphClass::Cluster => self.is_cluster,
            GraphClass::StarForest => self.is_star_forest,
            GraphClass::SplexUnion(s) => self.is_splex_union(s),
            GraphClass::BipartiteChain => self.is_bipartite_chain,
            GraphClass::Cograph => self.is_cograph,
            GraphClass::TriviallyPerfect => self.is_trivially_perfect,
        }
    }
}

pub fn class_membership(g: &Graph) -> ClassFlags {
    let is_cograph = !modular_decomposition(g).has_prime();
    ClassFlags {
        is_cluster: find_obstruction(g, GraphClass::Cluster, &vec![true; g.n()]).is_none(),
        is_star_forest: is_star_forest(g),
        is_bipartite_chain: is_bipartite_chain(g),
        is_cograph,
        is_trivially_perfect: is_cograph && find_c4(g).is_none(),
        splex_s: splex_s(g),
    }
}

fn is_star_forest(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
}

fn splex_s(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|c| c.len() - c.iter().map(|&v| g.degree(v)).min().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Nested neighbourhoods on one side, checked after sorting by degree (ties
/// by id). Uses the attached bipartition or else the two-coloring, which is
/// enough since a chain graph has at most one component with edges.
fn is_bipartite_chain(g: &Graph) -> bool {
    let side: Vec<bool> = match g.bipartition() {
        Some(s) => s.to_vec(),
        None => match g.two_coloring() {
            Some(c) => c,
            None => return false,
        },
    };
    let mut a: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    a.sort_by_key(|&v| (g.degree(v), v));
    a.windows(2).all(|w| {
        let small = g.neighbors(w[0]);
        small.iter().all(|x| g.neighbors(w[1]).binary_search(x).is_ok())
    }) && {
        let mut b: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
        b.sort_by_key(|&v| (g.degree(v), v));
        b.windows(2).all(|w| {
            g.neighbors(w[0])
                .iter()
                .all(|x| g.neighbors(w[1]).binary_search(x).is_ok())
        })
    }
}

fn find_c4(g: &Graph) -> Option<Vec<usize>> {
    find_p4_or_c4(g, &vec![true; g.n()], true)
}

/// Induced `P4` (`a-b-c-d`), or with `allow_c4` also an induced `C4`.
fn find_p4_or_c4(g: &Graph, alive: &[bool], want_c4: bool) -> Option<Vec<usize>> {
    for &(b, c) in g.edges() {
        if !alive[b] || !alive[c] {
            continue;
        }
        for (b, c) in [(b, c), (c, b)] {
            for &a in g.neighbors(b) {
                if !alive[a] || a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if !alive[d] || d == b || d == a || g.has_edge(d, b) {
                        continue;
                    }
                    if g.has_edge(a, d) == want_c4 {
                        return Some(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

fn find_induced_p3(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    for v in (0..g.n()).filter(|&v| alive[v]) {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        for (i, &a) in nb.iter().enumerate() {
            if let Some(&b) = nb[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Some(vec![a, v, b]);
            }
        }
    }
    None
}

fn live_degree(g: &Graph, alive: &[bool], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| alive[w]).count()
}

fn find_induced_2k2(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| alive[u] && alive[v])
        .collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if [a, b].contains(&c) || [a, b].contains(&d) {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    None
}

/// Shortest odd cycle through BFS from every vertex, as a vertex list.
fn find_short_odd_cycle(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in (0..n).filter(|&v| alive[v]) {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v) {
                if !alive[w] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if dist[w] == dist[v] && v < w {
                    // odd closed walk s..v w..s; collect both branches
                    let mut left = vec![v];
                    let mut right = vec![w];
                    while left.last() != right.last() {
                        left.push(parent[*left.last().unwrap()]);
                        right.push(parent[*right.last().unwrap()]);
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    if best.as_ref().is_none_or(|b| left.len() < b.len()) {
                        best = Some(left);
                    }
                }
            }
        }
    }
    best
}

/// A vertex set every deletion set for `class` must hit, if `g[alive]` is
/// not in the class.
pub fn find_obstruction(g: &Graph, class: GraphClass, alive: &[bool]) -> Option<Vec<usize>> {
    match class {
        GraphClass::Cluster => find_induced_p3(g, alive),
        GraphClass::StarForest => {
            for &(u, v) in g.edges() {
                if !alive[u] || !alive[v] {
                    continue;
                }
                if live_degree(g, alive, u) >= 2 && live_degree(g, alive, v) >= 2 {
                    let a = *g.neighbors(u).iter().find(|&&x| alive[x] && x != v).unwrap();
                    let b = *g.neighbors(v).iter().find(|&&x| alive[x] && x != u).unwrap();
                    let mut obs = vec![a, u, v];
                    if b != a {
                        obs.push(b);
                    }
                    return Some(obs);
                }
            }
            None
        }
        GraphClass::SplexUnion(s) => g.components_within(alive).into_iter().find(|c| {
            let min_deg = c.iter().map(|&v| live_degree(g, alive, v)).min().unwrap();
            c.len() - min_deg > s
        }),
        GraphClass::BipartiteChain => {
            find_induced_2k2(g, alive).or_else(|| find_short_odd_cycle(g, alive))
        }
        GraphClass::Cograph => find_p4_or_c4(g, alive, false),
        GraphClass::TriviallyPerfect => {
            find_p4_or_c4(g, alive, false).or_else(|| find_p4_or_c4(g, alive, true))
        }
    }
}

/// Least `k ≤ k_max` with a deletion set of size `k` putting `g` in `class`,
/// together with one such set.
pub fn distance_to_class(g: &Graph, class: GraphClass, k_max: usize) -> Option<(usize, Vec<usize>)> {
    let mut alive = vec![true; g.n()];
    let mut deleted = Vec::new();
    (0..=k_max).find_map(|k| {
        branch(g, class, k, &mut alive, &mut deleted).then(|| {
            let mut s = deleted.clone();
            s.sort_unstable();
            (k, s)
        })
    })
}

fn branch(g: &Graph, class: GraphClass, budget: usize, alive: &mut [bool], deleted: &mut Vec<usize>) -> bool {
    let Some(obs) = find_obstruction(g, class, alive) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for v in obs {
        alive[v] = false;
        deleted.push(v);
        if branch(g, class, budget - 1, alive, deleted) {
            return true;
        }
        deleted.pop();
        alive[v] = true;
    }
    false
}
