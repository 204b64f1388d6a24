//! Instance generators shared by the integration tests.
#![allow(dead_code)]

use phasematch::graph::{AltPath, Graph, Matching};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Greedy maximal matching over shuffled edges, then each edge dropped
/// with probability `drop`.
pub fn random_matching(g: &Graph, rng: &mut ChaCha8Rng, drop: f64) -> Matching {
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut chosen = Vec::new();
    for (u, v) in edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            if !rng.random_bool(drop) {
                chosen.push((u, v));
            }
        }
    }
    Matching::from_edges(g.n(), chosen).unwrap()
}

/// Random alternating walk without repeated vertices, the longest of
/// `tries` attempts, cut to a random prefix length of at least `min_len`
/// when possible.
pub fn random_alternating_path(g: &Graph, m: &Matching, rng: &mut ChaCha8Rng, tries: usize) -> Option<AltPath> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut best: Vec<usize> = Vec::new();
    for _ in 0..tries {
        let s = rng.random_range(0..n);
        let mut path = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        let mut want_red = m.mate(s).is_some() && rng.random_bool(0.5);
        loop {
            let v = *path.last().unwrap();
            let next = if want_red {
                m.mate(v).filter(|&w| !on[w])
            } else {
                let options: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| !on[w] && m.mate(v) != Some(w))
                    .collect();
                // prefer continuing through matched vertices
                let matched: Vec<usize> = options
                    .iter()
                    .copied()
                    .filter(|&w| m.mate(w).is_some_and(|x| !on[x]))
                    .collect();
                matched.choose(rng).or_else(|| options.choose(rng)).copied()
            };
            match next {
                Some(w) => {
                    on[w] = true;
                    path.push(w);
                    want_red = !want_red;
                }
                None => break,
            }
        }
        if path.len() > best.len() {
            best = path;
        }
    }
    if best.len() < 2 {
        return None;
    }
    // random suffix cut keeps a mix of end colors
    let cut = rng.random_range(0..=2.min(best.len() - 2));
    best.truncate(best.len() - cut);
    let start = rng.random_range(0..=2.min(best.len() - 2));
    Some(AltPath::new(best[start..].to_vec()))
}

/// `K_n` minus random edges with at most `s − 1` removed per vertex.
pub fn random_plex(n: usize, s: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut removed = vec![0usize; n];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let edges: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(u, v)| {
            if removed[u] + 1 < s && removed[v] + 1 < s && rng.random_bool(0.7) {
                removed[u] += 1;
                removed[v] += 1;
                false
            } else {
                true
            }
        })
        .collect();
    Graph::new(n, edges).unwrap()
}

/// `k` disjoint cliques of random sizes in `lo..=hi` plus random edges
/// between them, so `α ≤ k`.
pub fn random_low_alpha(k: usize, lo: usize, hi: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let sizes: Vec<usize> = (0..k).map(|_| rng.random_range(lo..=hi)).collect();
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] == part[v] || rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// At most `t` types: classes of random size, each a clique or independent,
/// class pairs joined completely or not at all.
pub fn random_bounded_nd(t: usize, lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> Graph {
    let sizes: Vec<usize> = (0..t).map(|_| rng.random_range(lo..=hi)).collect();
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let clique: Vec<bool> = (0..t).map(|_| rng.random_bool(0.5)).collect();
    let joined: Vec<Vec<bool>> = (0..t).map(|_| (0..t).map(|_| rng.random_bool(0.6)).collect()).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (part[u].min(part[v]), part[u].max(part[v]));
            if (a == b && clique[a]) || (a != b && joined[a][b]) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Graph built by substituting random graphs into random quotients: series,
/// parallel, or a prime quotient among `P_4`, `C_5`, the bull and `P_5`.
pub fn random_modular(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    build_modular(0, n, rng, &mut edges, 0);
    Graph::new(n, edges).unwrap()
}

fn build_modular(base: usize, n: usize, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>, depth: usize) {
    if n == 1 {
        return;
    }
    let primes: [(usize, &[(usize, usize)]); 4] = [
        (4, &[(0, 1), (1, 2), (2, 3)]),
        (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        (5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
        (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    ];
    let kind = rng.random_range(0..3);
    let (parts, quotient): (usize, Vec<(usize, usize)>) = match kind {
        0 | 1 if n >= 2 => {
            let parts = rng.random_range(2..=n.min(4));
            let q = if kind == 0 {
                (0..parts).flat_map(|a| (a + 1..parts).map(move |b| (a, b))).collect()
            } else {
                Vec::new()
            };
            (parts, q)
        }
        _ => {
            let fitting: Vec<&(usize, &[(usize, usize)])> = primes.iter().filter(|(k, _)| *k <= n).collect();
            match fitting.choose(rng) {
                Some((k, q)) => (*k, q.to_vec()),
                None => (n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()),
            }
        }
    };
    // split n into `parts` positive sizes
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut bounds = vec![0];
    bounds.extend(cuts);
    bounds.push(n);
    let ranges: Vec<(usize, usize)> = bounds.windows(2).map(|w| (base + w[0], w[1] - w[0])).collect();
    for &(a, b) in &quotient {
        let (sa, na) = ranges[a];
        let (sb, nb) = ranges[b];
        for u in sa..sa + na {
            for v in sb..sb + nb {
                edges.push((u, v));
            }
        }
    }
    for &(s, len) in &ranges {
        build_modular(s, len, rng, edges, depth + 1);
    }
}
