//! Classic Hopcroft-Karp phase: layered BFS from the exposed left vertices,
//! then disjoint DFS extraction with dead-end removal.

use std::collections::VecDeque;

use super::{PhaseError, PhaseRecord, PhaseTrace};
use crate::graph::{AltPath, Graph, Matching};

const INF: usize = usize::MAX;

/// One phase on a graph with a bipartition. Paths start at the left side.
pub fn hopcroft_karp_phase(g: &Graph, m: &Matching) -> Result<Vec<AltPath>, PhaseError> {
    let side = g.bipartition().ok_or(PhaseError::NotBipartite)?;
    m.validate(g)?;
    let n = g.n();
    // dist is defined on left vertices only
    let mut dist = vec![INF; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if side[v] && m.is_exposed(v) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    let mut found = INF;
    while let Some(u) = queue.pop_front() {
        if dist[u] >= found {
            continue;
        }
        for &v in g.neighbors(u) {
            match m.mate(v) {
                None => found = found.min(dist[u] + 1),
                Some(w) if dist[w] == INF => {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                Some(_) => {}
            }
        }
    }
    if found == INF {
        return Ok(Vec::new());
    }

    let mut used = vec![false; n];
    let mut paths = Vec::new();
    for s in 0..n {
        if !(side[s] && m.is_exposed(s)) {
            continue;
        }
        let mut path = vec![s];
        if extract(g, m, &mut dist, &mut used, found, &mut path) {
            for &v in &path {
                used[v] = true;
            }
            paths.push(AltPath::new(path));
        }
    }
    Ok(paths)
}

/// Layer `found` is the last left layer; an exposed right neighbour of a
/// vertex there ends the path.
fn extract(
    g: &Graph,
    m: &Matching,
    dist: &mut [usize],
    used: &mut [bool],
    found: usize,
    path: &mut Vec<usize>,
) -> bool {
    let u = *path.last().unwrap();
    for &v in g.neighbors(u) {
        if used[v] {
            continue;
        }
        match m.mate(v) {
            None => {
                if dist[u] + 1 == found {
                    path.push(v);
                    return true;
                }
            }
            Some(w) => {
                if dist[w] == dist[u] + 1 && dist[w] < found && !used[w] {
                    path.push(v);
                    path.push(w);
                    if extract(g, m, dist, used, found, path) {
                        return true;
                    }
                    path.truncate(path.len() - 2);
                }
            }
        }
    }
    dist[u] = INF;
    false
}

/// Plain Hopcroft-Karp from the empty matching, recorded as a trace with
/// strategy name `hopcroft-karp`. Needs an attached bipartition.
pub fn run_hopcroft_karp(g: &Graph) -> Result<(Matching, PhaseTrace), PhaseError> {
    let mut m = Matching::empty(g.n());
    let mut phases = Vec::new();
    loop {
        let paths = hopcroft_karp_phase(g, &m)?;
        if paths.is_empty() {
            break;
        }
        for p in &paths {
            m.flip_unchecked(p);
        }
        phases.push(PhaseRecord {
            index: phases.len() + 1,
            length: paths[0].len(),
            paths: paths.into_iter().map(AltPath::into_vertices).collect(),
            matching_size: m.len(),
        });
    }
    let trace = PhaseTrace {
        n: g.n(),
        strategy: "hopcroft-karp".into(),
        final_size: m.len(),
        phases,
    };
    Ok((m, trace))
}

/// Exact shortest augmenting path length in a bipartite graph.
pub fn bipartite_shortest_length(g: &Graph, m: &Matching) -> Option<usize> {
    let alive = vec![true; g.n()];
    let h = super::search::relaxed_distances(g, m, &alive);
    m.exposed()
        .map(|s| h[s])
        .filter(|&d| d != super::search::INF)
        .min()
        .map(|d| d as usize)
}
