//! The phase framework: repeatedly augment along a maximal set of
//! vertex-disjoint shortest augmenting paths until the matching is maximum.
//!
//! Which maximal set a phase takes is left open by the framework, so it is
//! fixed by a [`Strategy`]. Bipartite inputs use the layered search at any
//! size. General graphs use a pruned exhaustive search, refused above
//! [`EngineConfig::exhaustive_limit`] vertices.

mod bipartite;
pub mod blossom;
mod search;
mod verify;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bipartite::{bipartite_shortest_length, hopcroft_karp_phase, run_hopcroft_karp};
pub use verify::{phase_bound_report, verify_trace, BoundCheck, BoundReport, TraceReport, Violation};

use crate::graph::{AltPath, Graph, GraphError, Matching};
use search::{BudgetExceeded, Searcher};

#[derive(Debug, Error)]
pub enum PhaseError {
    #[error("graph has no bipartition")]
    NotBipartite,
    #[error("general graph with {n} vertices exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget of {budget} nodes exhausted in phase {phase}")]
    Budget { phase: usize, budget: u64 },
    #[error("plan rejected at phase {phase}: {reason}")]
    Script { phase: usize, reason: String },
    #[error("plan is for {plan} vertices, graph has {graph}")]
    PlanSize { plan: usize, graph: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanMeta {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, u64>,
    pub expected_phases: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanPhase {
    pub index: usize,
    pub paths: Vec<Vec<usize>>,
}

/// Predetermined phases, checked for legality when replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub n: usize,
    pub meta: PlanMeta,
    pub phases: Vec<PlanPhase>,
}

impl Plan {
    pub fn new(n: usize, meta: PlanMeta, phases: Vec<Vec<AltPath>>) -> Self {
        let phases = phases
            .into_iter()
            .enumerate()
            .map(|(i, ps)| PlanPhase {
                index: i + 1,
                paths: ps.into_iter().map(AltPath::into_vertices).collect(),
            })
            .collect();
        Plan { n, meta, phases }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    GreedyLex,
    SeededRandom(u64),
    Scripted(Plan),
}

impl Strategy {
    pub fn name(&self) -> String {
        match self {
            Strategy::GreedyLex => "greedy-lex".into(),
            Strategy::SeededRandom(seed) => format!("seeded-random:{seed}"),
            Strategy::Scripted(plan) => format!("scripted:{}", plan.meta.family),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseRecord {
    pub index: usize,
    pub length: usize,
    pub paths: Vec<Vec<usize>>,
    /// Matching size after this phase.
    #[serde(default)]
    pub matching_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTrace {
    pub n: usize,
    pub strategy: String,
    pub phases: Vec<PhaseRecord>,
    pub final_size: usize,
}

impl PhaseTrace {
    pub fn phase_count(&self) -> usize {
        self.phases.len()
    }

    /// Drops the per-phase data and keeps it as a replayable plan.
    pub fn to_plan(&self, meta: PlanMeta) -> Plan {
        Plan {
            n: self.n,
            meta,
            phases: self
                .phases
                .iter()
                .map(|p| PlanPhase {
                    index: p.index,
                    paths: p.paths.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest non-bipartite graph the exhaustive search accepts.
    pub exhaustive_limit: usize,
    /// Search nodes allowed per phase before giving up.
    pub node_budget: Option<u64>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            exhaustive_limit: 512,
            node_budget: Some(200_000_000),
        }
    }
}

/// Phase runner bound to one graph. Caches the two-coloring.
pub struct Engine<'g> {
    g: &'g Graph,
    cfg: EngineConfig,
    bipartite: bool,
    sorted: Vec<Vec<usize>>,
}

impl<'g> Engine<'g> {
    pub fn new(g: &'g Graph, cfg: EngineConfig) -> Self {
        let bipartite = g.is_bipartite_marked() || g.two_coloring().is_some();
        let sorted = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        Engine {
            g,
            cfg,
            bipartite,
            sorted,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    fn check_size(&self) -> Result<(), PhaseError> {
        if !self.bipartite && self.g.n() > self.cfg.exhaustive_limit {
            return Err(PhaseError::TooLarge {
                n: self.g.n(),
                limit: self.cfg.exhaustive_limit,
            });
        }
        Ok(())
    }

    fn budget_error(&self, phase: usize) -> PhaseError {
        PhaseError::Budget {
            phase,
            budget: self.cfg.node_budget.unwrap_or(u64::MAX),
        }
    }

    /// Length of a shortest augmenting path, or `None` when `m` is maximum.
    pub fn shortest_aug_length(&self, m: &Matching) -> Result<Option<usize>, PhaseError> {
        m.validate(self.g)?;
        if self.bipartite {
            return Ok(bipartite_shortest_length(self.g, m));
        }
        self.check_size()?;
        let alive = vec![true; self.g.n()];
        let starts = blossom::augmentable_vertices(self.g, m, &alive);
        if !starts.iter().any(|&b| b) {
            return Ok(None);
        }
        let mut searcher = Searcher::new(self.g, m, &self.sorted, false, self.cfg.node_budget);
        let lb = (0..self.g.n())
            .filter(|&s| starts[s])
            .map(|s| searcher.h(s))
            .min()
            .expect("an augmentable vertex exists") as usize;
        let mut len = lb;
        loop {
            for s in (0..self.g.n()).filter(|&s| starts[s]) {
                if searcher
                    .find_from(s, len)
                    .map_err(|BudgetExceeded| self.budget_error(0))?
                    .is_some()
                {
                    return Ok(Some(len));
                }
            }
            len += 2;
            debug_assert!(len < self.g.n(), "blossom found a path the search missed");
        }
    }

    /// A maximal set of disjoint length-`len` augmenting paths avoiding the
    /// vertices in `taken`, searched in `order` with neighbour lists `adj`.
    fn complete_phase(
        &self,
        m: &Matching,
        len: usize,
        taken: &[Vec<usize>],
        order: &[usize],
        adj: &[Vec<usize>],
        phase: usize,
    ) -> Result<Vec<Vec<usize>>, PhaseError> {
        let mut searcher = Searcher::new(self.g, m, adj, self.bipartite, self.cfg.node_budget);
        for p in taken {
            searcher.block(p);
        }
        let mut alive: Vec<bool> = (0..self.g.n()).map(|v| !searcher.is_blocked(v)).collect();
        let mut out = Vec::new();
        for &s in order {
            if searcher.is_blocked(s) || !m.is_exposed(s) {
                continue;
            }
            // Edmonds decides cheaply whether any path at all leaves s; the
            // exhaustive search only runs when one does.
            if !self.bipartite && blossom::augmenting_path_from(self.g, m, &alive, s).is_none() {
                continue;
            }
            let found = searcher
                .find_from(s, len)
                .map_err(|BudgetExceeded| self.budget_error(phase))?;
            if let Some(p) = found {
                debug_assert_eq!(p.len(), len + 1);
                searcher.block(&p);
                for &v in &p {
                    alive[v] = false;
                }
                out.push(p);
            }
        }
        Ok(out)
    }

    /// One phase under `strategy`. `phase` is 1-based and selects the plan
    /// entry (scripted) or the RNG stream (seeded-random). Returns an empty
    /// list when `m` is maximum, except for a scripted plan that still has
    /// entries, which is an error.
    pub fn exact_phase(
        &self,
        m: &Matching,
        strategy: &Strategy,
        phase: usize,
    ) -> Result<Vec<AltPath>, PhaseError> {
        let len = self.shortest_aug_length(m)?;
        self.phase_with_length(m, strategy, phase, len)
    }

    fn phase_with_length(
        &self,
        m: &Matching,
        strategy: &Strategy,
        phase: usize,
        len: Option<usize>,
    ) -> Result<Vec<AltPath>, PhaseError> {
        let n = self.g.n();
        let Some(len) = len else {
            if let Strategy::Scripted(plan) = strategy {
                if plan.phases.len() >= phase {
                    return Err(PhaseError::Script {
                        phase,
                        reason: "matching is already maximum but the plan continues".into(),
                    });
                }
            }
            return Ok(Vec::new());
        };
        let paths = match strategy {
            Strategy::GreedyLex => {
                if self.bipartite && n > self.cfg.exhaustive_limit {
                    if let Some(paths) = self.hk_if_marked(m)? {
                        return Ok(paths);
                    }
                }
                let order: Vec<usize> = (0..n).collect();
                self.complete_phase(m, len, &[], &order, &self.sorted, phase)?
            }
            Strategy::SeededRandom(seed) => {
                self.check_size()?;
                let mut rng = ChaCha8Rng::seed_from_u64(
                    seed.wrapping_add((phase as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
                );
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                let mut adj = self.sorted.clone();
                for nb in &mut adj {
                    nb.shuffle(&mut rng);
                }
                self.complete_phase(m, len, &[], &order, &adj, phase)?
            }
            Strategy::Scripted(plan) => self.scripted_phase(m, plan, phase, len)?,
        };
        Ok(paths.into_iter().map(AltPath::new).collect())
    }

    fn hk_if_marked(&self, m: &Matching) -> Result<Option<Vec<AltPath>>, PhaseError> {
        if self.g.is_bipartite_marked() {
            Ok(Some(hopcroft_karp_phase(self.g, m)?))
        } else {
            Ok(None)
        }
    }

    fn scripted_phase(
        &self,
        m: &Matching,
        plan: &Plan,
        phase: usize,
        len: usize,
    ) -> Result<Vec<Vec<usize>>, PhaseError> {
        let err = |reason: String| PhaseError::Script { phase, reason };
        if plan.n != self.g.n() {
            return Err(PhaseError::PlanSize {
                plan: plan.n,
                graph: self.g.n(),
            });
        }
        let entry = plan
            .phases
            .get(phase - 1)
            .ok_or_else(|| err("plan exhausted before the matching is maximum".into()))?;
        let mut used = vec![false; self.g.n()];
        for (i, vs) in entry.paths.iter().enumerate() {
            let p = AltPath::try_new(vs.clone()).map_err(|e| err(format!("path {i}: {e}")))?;
            if let Some(&v) = p.vertices().iter().find(|&&v| v >= self.g.n()) {
                return Err(err(format!("path {i}: vertex {v} out of range")));
            }
            if !crate::graph::is_augmenting(self.g, m, &p) {
                return Err(err(format!("path {i} is not augmenting")));
            }
            if p.len() != len {
                return Err(err(format!(
                    "path {i} has length {} but the shortest augmenting length is {len}",
                    p.len()
                )));
            }
            if let Some(&v) = p.vertices().iter().find(|&&v| used[v]) {
                return Err(err(format!("path {i} reuses vertex {v}")));
            }
            for &v in p.vertices() {
                used[v] = true;
            }
        }
        if entry.paths.is_empty() {
            return Err(err("phase lists no paths".into()));
        }
        let order: Vec<usize> = (0..self.g.n()).collect();
        let extra = self.complete_phase(m, len, &entry.paths, &order, &self.sorted, phase)?;
        if let Some(p) = extra.first() {
            return Err(err(format!(
                "set is not maximal: {p:?} is disjoint from every listed path"
            )));
        }
        Ok(entry.paths.clone())
    }

    /// Runs phases from the empty matching until it is maximum.
    pub fn run(&self, strategy: &Strategy) -> Result<(Matching, PhaseTrace), PhaseError> {
        let mut m = Matching::empty(self.g.n());
        let mut phases = Vec::new();
        loop {
            let index = phases.len() + 1;
            let len = self.shortest_aug_length(&m)?;
            let paths = self.phase_with_length(&m, strategy, index, len)?;
            let Some(len) = len else { break };
            debug_assert!(!paths.is_empty());
            for p in &paths {
                m.flip_unchecked(p);
            }
            phases.push(PhaseRecord {
                index,
                length: len,
                paths: paths.into_iter().map(AltPath::into_vertices).collect(),
                matching_size: m.len(),
            });
        }
        let trace = PhaseTrace {
            n: self.g.n(),
            strategy: strategy.name(),
            final_size: m.len(),
            phases,
        };
        Ok((m, trace))
    }
}

/// Runs the framework with the default configuration.
pub fn run_phase_framework(
    g: &Graph,
    strategy: &Strategy,
) -> Result<(Matching, PhaseTrace), PhaseError> {
    Engine::new(g, EngineConfig::default()).run(strategy)
}

/// One phase with the default configuration.
pub fn exact_phase(
    g: &Graph,
    m: &Matching,
    strategy: &Strategy,
    phase: usize,
) -> Result<Vec<AltPath>, PhaseError> {
    Engine::new(g, EngineConfig::default()).exact_phase(m, strategy, phase)
}

/// Shortest augmenting path length with no size limit or search budget.
/// Panics if `m` is not a matching of `g`.
pub fn shortest_aug_length(g: &Graph, m: &Matching) -> Option<usize> {
    let cfg = EngineConfig {
        exhaustive_limit: usize::MAX,
        node_budget: None,
    };
    Engine::new(g, cfg)
        .shortest_aug_length(m)
        .expect("matching must belong to the graph")
}
