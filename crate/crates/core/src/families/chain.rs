//! Bipartite chain graph `a_i b_j ∈ E ⇔ i ≥ j` with a phase-1 matching that
//! leaves exactly one augmenting path per later phase.
//!
//! The index set `[n]` is cut into intervals `idx_0, ..., idx_t` with
//! `|idx_j| = t − j` for `j < t` and `|idx_t| = t`, where `t = k − 1`. This
//! gives `n = k(k+1)/2 − 1`, `t` augmenting paths after phase 1 and `k`
//! phases in total.

use super::{FamilyError, FamilyInstance};
use crate::graph::{AltPath, Graph, Matching};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub k: usize,
    /// Number of intervals before `idx_t`; `t = k − 1`.
    pub t: usize,
    /// Side size.
    pub n: usize,
    /// 1-based inclusive intervals `idx_0, ..., idx_t`.
    pub idx: Vec<(usize, usize)>,
    /// `i*_j = min idx_j` for `j < t`.
    pub istar: Vec<usize>,
}

impl ChainSpec {
    pub fn new(k: usize) -> Result<Self, FamilyError> {
        if k < 2 {
            return Err(FamilyError::Params(format!("chain needs k >= 2, got {k}")));
        }
        let t = k - 1;
        let n = t * (t + 1) / 2 + t;
        let mut idx = Vec::with_capacity(t + 1);
        let mut lo = 1;
        for j in 0..t {
            idx.push((lo, lo + (t - j) - 1));
            lo += t - j;
        }
        idx.push((n - t + 1, n));
        let istar = idx[..t].iter().map(|&(lo, _)| lo).collect();
        let spec = ChainSpec { k, t, n, idx, istar };
        spec.check()?;
        Ok(spec)
    }

    /// Intervals partition `[1, n]` in order and have the stated sizes.
    pub fn check(&self) -> Result<(), FamilyError> {
        let t = self.t;
        if self.idx.len() != t + 1 || self.istar.len() != t {
            return Err(FamilyError::Inconsistent("wrong number of intervals".into()));
        }
        let mut next = 1;
        for (j, &(lo, hi)) in self.idx.iter().enumerate() {
            let want = if j < t { t - j } else { t };
            if lo != next || hi + 1 - lo != want {
                return Err(FamilyError::Inconsistent(format!("idx_{j} = [{lo}, {hi}] breaks the partition")));
            }
            if j < t && self.istar[j] != lo {
                return Err(FamilyError::Inconsistent(format!("i*_{j} is not min idx_{j}")));
            }
            next = hi + 1;
        }
        if next != self.n + 1 {
            return Err(FamilyError::Inconsistent(format!("intervals end at {} not {}", next - 1, self.n)));
        }
        Ok(())
    }

    /// Vertex id of `a_i`, `1 ≤ i ≤ n`.
    pub fn a(&self, i: usize) -> usize {
        i - 1
    }

    /// Vertex id of `b_j`, `1 ≤ j ≤ n`.
    pub fn b(&self, j: usize) -> usize {
        self.n + j - 1
    }

    pub fn graph(&self) -> Graph {
        let n = self.n;
        let edges = (1..=n).flat_map(|i| (1..=i).map(move |j| (i - 1, n + j - 1)));
        Graph::new(2 * n, edges)
            .and_then(|g| g.with_bipartition(&(0..n).collect::<Vec<_>>()))
            .expect("chain graph is well formed")
    }

    /// Pairs `(b index, a index)` of the phase-1 matching `M_0`.
    fn m0_pairs(&self) -> Vec<(usize, usize)> {
        let (n, t) = (self.n, self.t);
        let mut out: Vec<(usize, usize)> = (0..t).map(|j| (self.istar[j], n - t + 1 + j)).collect();
        for j in 0..t.saturating_sub(1) {
            let (lo, hi) = self.idx[j];
            out.extend((lo + 1..=hi).map(|s| (s, s + t - 1 - j)));
        }
        out
    }

    fn to_matching(&self, pairs: &[(usize, usize)]) -> Result<Matching, FamilyError> {
        for &(bj, ai) in pairs {
            if !(1..=self.n).contains(&bj) || !(1..=self.n).contains(&ai) || ai < bj {
                return Err(FamilyError::Inconsistent(format!("b{bj} a{ai} is not an edge")));
            }
        }
        Ok(Matching::from_edges(2 * self.n, pairs.iter().map(|&(bj, ai)| (self.b(bj), self.a(ai))))?)
    }
}

/// Closed form of the matching after phases `1..=l+1`, i.e. `M_0` augmented
/// along `P_1, ..., P_l`. Besides the surviving edges of `M_0` it contains
/// the edges `a_i b_i` the paths picked up.
pub fn chain_matching(spec: &ChainSpec, l: usize) -> Result<Matching, FamilyError> {
    let (n, t) = (spec.n, spec.t);
    if l > t {
        return Err(FamilyError::Params(format!("l = {l} exceeds t = {t}")));
    }
    let mut pairs = Vec::new();
    for j in 0..t.saturating_sub(1) {
        let (lo, hi) = spec.idx[j];
        let gone = spec.istar[j] + l.saturating_sub(1 + j);
        pairs.extend((lo..=hi).filter(|&s| s > gone).map(|s| (s, s + t - 1 - j)));
    }
    pairs.extend((l..t).map(|j| (spec.istar[j], n - t + 1 + j)));
    for j in 0..l {
        let (lo, _) = spec.idx[j];
        // P_{j+1}, ..., P_l visit offsets l-1-j down to 0 of idx_j
        pairs.extend((lo..=lo + (l - 1 - j)).map(|i| (i, i)));
    }
    pairs.extend((1..=l).map(|q| (n - t + q, n - t + q)));
    spec.to_matching(&pairs)
}

/// `P_1, ..., P_t`: from `a_l`, take `a_i b_i` and then the `M_0` edge at
/// `b_i` until reaching an exposed `b`.
pub fn chain_paths(spec: &ChainSpec) -> Result<Vec<AltPath>, FamilyError> {
    let m0 = spec.to_matching(&spec.m0_pairs())?;
    (1..=spec.t)
        .map(|l| {
            let mut vs = vec![spec.a(l)];
            let mut i = l;
            loop {
                let bi = spec.b(i);
                vs.push(bi);
                match m0.mate(bi) {
                    Some(a) => {
                        if a + 1 <= i {
                            return Err(FamilyError::Inconsistent(format!("P_{l} does not advance at b{i}")));
                        }
                        i = a + 1;
                        vs.push(a);
                    }
                    None => break,
                }
            }
            let p = AltPath::new(vs);
            if p.len() != 2 * l + 1 {
                return Err(FamilyError::Inconsistent(format!("P_{l} has length {}", p.len())));
            }
            Ok(p)
        })
        .collect()
}

/// Chain graph for `k ≥ 2` with the `k`-phase plan: `M_0` as length-1
/// paths, then `P_l` alone in phase `l + 1`.
pub fn gen_chain(k: usize) -> Result<FamilyInstance, FamilyError> {
    let spec = ChainSpec::new(k)?;
    let g = spec.graph();
    let m0: Vec<AltPath> = spec
        .m0_pairs()
        .into_iter()
        .map(|(bj, ai)| AltPath::new(vec![spec.a(ai), spec.b(bj)]))
        .collect();
    let mut phases = vec![m0];
    phases.extend(chain_paths(&spec)?.into_iter().map(|p| vec![p]));
    let mut inst = FamilyInstance::new(g, "chain", &[("k", k as u64), ("side", spec.n as u64)]).with_plan(phases);
    for i in 1..=spec.n {
        inst.meta.labels.insert(format!("a{i}"), spec.a(i));
        inst.meta.labels.insert(format!("b{i}"), spec.b(i));
    }
    Ok(inst)
}
