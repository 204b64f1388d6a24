//! Brute-force ground truth. Everything here is deliberately simple and
//! exponential, shares no search code with the phase engine, and refuses
//! inputs above its configured size limits.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::graph::{edge, is_augmenting, AltPath, Graph, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} oracle accepts at most {limit} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_n_matching: usize,
    pub max_n_replaceability: usize,
    pub max_n_enumeration: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit {
            max_n_matching: 18,
            max_n_replaceability: 9,
            max_n_enumeration: 14,
        }
    }
}

fn check(what: &'static str, n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError::TooLarge { what, n, limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("mask graph is valid")
}

/// Number of vertex pairs, i.e. the number of labelled graphs is `2^pairs(n)`.
pub fn pairs(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Matching number by include/exclude branching on the lowest live vertex.
pub fn brute_force_nu(g: &Graph) -> Result<usize, OracleError> {
    brute_force_nu_with(g, &OracleLimit::default())
}

pub fn brute_force_nu_with(g: &Graph, limit: &OracleLimit) -> Result<usize, OracleError> {
    check("matching", g.n(), limit.max_n_matching)?;
    let adj = adjacency_masks(g);
    let all = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    let mut best = 0;
    nu_rec(&adj, all, 0, &mut best);
    Ok(best)
}

fn nu_rec(adj: &[u32], live: u32, cur: usize, best: &mut usize) {
    // drop vertices with no live neighbours
    let mut live = live;
    let mut useful = 0u32;
    let mut rest = live;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & live != 0 {
            useful |= 1 << v;
        }
    }
    live = useful;
    if cur + live.count_ones() as usize / 2 <= *best {
        return;
    }
    if live == 0 {
        *best = (*best).max(cur);
        return;
    }
    let v = live.trailing_zeros() as usize;
    let mut nb = adj[v] & live;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        nu_rec(adj, live & !(1 << v) & !(1 << w), cur + 1, best);
    }
    nu_rec(adj, live & !(1 << v), cur, best);
}

/// Every matching of `g`, including the empty one.
pub fn all_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    matchings_rec(g, 0, &mut vec![false; g.n()], &mut chosen, &mut out);
    out
}

fn matchings_rec(
    g: &Graph,
    idx: usize,
    used: &mut Vec<bool>,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
) {
    if idx == g.m() {
        out.push(Matching::from_edges(g.n(), chosen.iter().copied()).unwrap());
        return;
    }
    matchings_rec(g, idx + 1, used, chosen, out);
    let (u, v) = g.edges()[idx];
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        matchings_rec(g, idx + 1, used, chosen, out);
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
}

/// Calls `f` on every simple alternating path with at least one edge,
/// once per orientation.
pub fn for_each_alternating_path(g: &Graph, m: &Matching, mut f: impl FnMut(&[usize])) {
    let mut path = Vec::with_capacity(g.n());
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        path.push(s);
        on[s] = true;
        alt_rec(g, m, &mut path, &mut on, None, &mut f);
        on[s] = false;
        path.pop();
    }
}

fn alt_rec(
    g: &Graph,
    m: &Matching,
    path: &mut Vec<usize>,
    on: &mut [bool],
    last_red: Option<bool>,
    f: &mut impl FnMut(&[usize]),
) {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if on[w] {
            continue;
        }
        let red = m.is_red(v, w);
        if last_red == Some(red) {
            continue;
        }
        path.push(w);
        on[w] = true;
        f(path);
        alt_rec(g, m, path, on, Some(red), f);
        on[w] = false;
        path.pop();
    }
}

/// All shortest augmenting paths, one orientation each (smaller endpoint
/// first), sorted.
pub fn enumerate_shortest_aug_paths(g: &Graph, m: &Matching) -> Result<Vec<AltPath>, OracleError> {
    enumerate_shortest_aug_paths_with(g, m, &OracleLimit::default())
}

pub fn enumerate_shortest_aug_paths_with(
    g: &Graph,
    m: &Matching,
    limit: &OracleLimit,
) -> Result<Vec<AltPath>, OracleError> {
    check("enumeration", g.n(), limit.max_n_enumeration)?;
    m.validate(g)
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    let mut best = usize::MAX;
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    for s in m.exposed().collect::<Vec<_>>() {
        let mut path = vec![s];
        let mut on = vec![false; g.n()];
        on[s] = true;
        aug_rec(g, m, &mut path, &mut on, &mut best, &mut found);
    }
    let mut out: Vec<AltPath> = found
        .into_iter()
        .filter(|p| p.len() - 1 == best)
        .map(|p| AltPath::new(p).canonical())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    out.sort();
    Ok(out)
}

fn aug_rec(
    g: &Graph,
    m: &Matching,
    path: &mut Vec<usize>,
    on: &mut [bool],
    best: &mut usize,
    found: &mut HashSet<Vec<usize>>,
) {
    // even number of vertices so far means the next edge is blue
    let v = *path.last().unwrap();
    let len = path.len() - 1;
    if len + 1 > *best {
        return;
    }
    for &w in g.neighbors(v) {
        if on[w] || m.is_red(v, w) {
            continue;
        }
        match m.mate(w) {
            None => {
                if len + 1 <= *best {
                    *best = len + 1;
                    let mut p = path.clone();
                    p.push(w);
                    found.insert(p);
                }
            }
            Some(x) => {
                if on[x] {
                    continue;
                }
                path.extend([w, x]);
                on[w] = true;
                on[x] = true;
                aug_rec(g, m, path, on, best, found);
                on[w] = false;
                on[x] = false;
                path.truncate(path.len() - 2);
            }
        }
    }
}

/// Shortest augmenting length by exhaustive enumeration.
pub fn brute_force_shortest(g: &Graph, m: &Matching) -> Result<Option<usize>, OracleError> {
    Ok(enumerate_shortest_aug_paths(g, m)?.first().map(AltPath::len))
}

/// Shortest augmenting length in a bipartite graph by BFS over the
/// orientation blue: left -> right, red: right -> left. Needs the
/// bipartition attached to `g`.
pub fn bipartite_shortest_bfs(g: &Graph, m: &Matching) -> Result<Option<usize>, OracleError> {
    let side = g
        .bipartition()
        .ok_or_else(|| OracleError::Precondition("graph has no bipartition".into()))?;
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in (0..g.n()).filter(|&v| side[v] && m.is_exposed(v)) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if side[v] {
            for &w in g.neighbors(v) {
                if !m.is_red(v, w) && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if m.is_exposed(w) {
                        return Ok(Some(dist[w]));
                    }
                    queue.push_back(w);
                }
            }
        } else if let Some(w) = m.mate(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Least `l` such that every alternating path under every matching has a
/// replacement of length at most `l`.
pub fn min_replaceability(g: &Graph) -> Result<usize, OracleError> {
    check("replaceability", g.n(), OracleLimit::default().max_n_replaceability)?;
    let n = g.n();
    let full = 1usize << n;
    let mut worst = 0;
    // exists[(s, t, fc, lc)][mask]: an alternating s..t path with vertex set
    // exactly `mask` and the given end colours
    let key = |s: usize, t: usize, fc: bool, lc: bool| ((s * n + t) * 2 + fc as usize) * 2 + lc as usize;
    let mut exists = vec![Vec::<u8>::new(); n * n * 4];
    for m in all_matchings(g) {
        for e in &mut exists {
            e.clear();
        }
        let mut seen_keys = Vec::new();
        for_each_alternating_path(g, &m, |p| {
            let s = p[0];
            let t = p[p.len() - 1];
            let fc = m.is_red(p[0], p[1]);
            let lc = m.is_red(p[p.len() - 2], t);
            let k = key(s, t, fc, lc);
            if exists[k].is_empty() {
                exists[k] = vec![0; full];
                seen_keys.push(k);
            }
            let mask = p.iter().fold(0usize, |a, &v| a | 1 << v);
            exists[k][mask] = 1;
        });
        for k in seen_keys {
            // best[mask] = fewest vertices of a path with vertex set inside mask
            let mut best: Vec<u8> = exists[k]
                .iter()
                .enumerate()
                .map(|(mask, &e)| if e == 1 { mask.count_ones() as u8 } else { u8::MAX })
                .collect();
            for bit in 0..n {
                for mask in 0..full {
                    if mask >> bit & 1 == 1 {
                        best[mask] = best[mask].min(best[mask ^ 1 << bit]);
                    }
                }
            }
            for mask in 0..full {
                if exists[k][mask] == 1 {
                    worst = worst.max(best[mask] as usize - 1);
                }
            }
        }
    }
    Ok(worst)
}

/// Whether `m △ n2` holds at least `|n2| - |m|` vertex-disjoint
/// `m`-augmenting paths.
pub fn check_disjoint_packing(g: &Graph, m: &Matching, n2: &Matching) -> Result<bool, OracleError> {
    for x in [m, n2] {
        x.validate(g)
            .map_err(|e| OracleError::Precondition(e.to_string()))?;
    }
    if n2.len() <= m.len() {
        return Err(OracleError::Precondition(format!(
            "|N| = {} must exceed |M| = {}",
            n2.len(),
            m.len()
        )));
    }
    let diff = m.symmetric_difference(n2);
    let h = Graph::new(g.n(), diff).expect("subgraph of g");
    let mut count = 0;
    for comp in h.components() {
        if comp.len() < 2 {
            continue;
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&v| h.degree(v) == 1).collect();
        if ends.len() != 2 {
            continue; // cycle
        }
        let path = walk_path(&h, ends[0]);
        if is_augmenting(g, m, &AltPath::new(path)) {
            count += 1;
        }
    }
    Ok(count >= n2.len() - m.len())
}

fn walk_path(h: &Graph, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&w) = h.neighbors(cur).iter().find(|&&w| Some(w) != prev) {
        path.push(w);
        prev = Some(cur);
        cur = w;
    }
    path
}

/// `|p2| >= |p| + 2 |E(p) ∩ E(p2)|` for `p` a shortest `m`-augmenting path
/// and `p2` augmenting for `m △ E(p)`.
pub fn check_hk_inequality(
    g: &Graph,
    m: &Matching,
    p: &AltPath,
    p2: &AltPath,
) -> Result<bool, OracleError> {
    if !is_augmenting(g, m, p) {
        return Err(OracleError::Precondition("p is not augmenting".into()));
    }
    if brute_force_shortest(g, m)? != Some(p.len()) {
        return Err(OracleError::Precondition("p is not a shortest augmenting path".into()));
    }
    let m2 = m.augment(g, p).expect("checked above");
    if !is_augmenting(g, &m2, p2) {
        return Err(OracleError::Precondition("p2 is not augmenting after p".into()));
    }
    let ep: HashSet<(usize, usize)> = p.edges().map(|(u, v)| edge(u, v)).collect();
    let shared = p2.edges().filter(|&(u, v)| ep.contains(&edge(u, v))).count();
    Ok(p2.len() >= p.len() + 2 * shared)
}

/// Maximal matchings of `g` (no edge can be added).
pub fn maximal_matchings(g: &Graph) -> Vec<Matching> {
    all_matchings(g)
        .into_iter()
        .filter(|m| m.is_maximal(g))
        .collect()
}
