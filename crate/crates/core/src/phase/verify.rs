//! Replay of a recorded trace, and the phase-count bounds.

use serde::Serialize;

use super::{Engine, EngineConfig, PhaseTrace, Plan, Strategy};
use crate::graph::{is_augmenting, AltPath, Graph, Matching};
use crate::util::ceil_sqrt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1-based phase, or `None` for whole-trace problems.
    pub phase: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub phases: usize,
    pub final_size: usize,
    pub violations: Vec<Violation>,
}

impl TraceReport {
    pub fn legal(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Replays `trace` from the empty matching. Checks every path is a shortest
/// augmenting path, paths in a phase are disjoint and maximal, lengths grow
/// strictly across phases, and the final matching is maximum.
pub fn verify_trace(g: &Graph, trace: &PhaseTrace) -> TraceReport {
    Engine::new(g, EngineConfig::default()).verify_trace(trace)
}

impl Engine<'_> {
    pub fn verify_trace(&self, trace: &PhaseTrace) -> TraceReport {
        let g = self.graph();
        let mut violations = Vec::new();
        let mut flag = |phase: Option<usize>, reason: String| violations.push(Violation { phase, reason });
        if trace.n != g.n() {
            flag(None, format!("trace is for {} vertices, graph has {}", trace.n, g.n()));
            return TraceReport {
                phases: trace.phases.len(),
                final_size: 0,
                violations,
            };
        }
        let mut m = Matching::empty(g.n());
        let mut prev_len: Option<usize> = None;
        for (i, rec) in trace.phases.iter().enumerate() {
            let phase = i + 1;
            if rec.index != phase {
                flag(Some(phase), format!("recorded index {} out of sequence", rec.index));
            }
            let shortest = match self.shortest_aug_length(&m) {
                Ok(Some(l)) => l,
                Ok(None) => {
                    flag(Some(phase), "matching is already maximum".into());
                    break;
                }
                Err(e) => {
                    flag(Some(phase), format!("cannot compute shortest length: {e}"));
                    break;
                }
            };
            if rec.length != shortest {
                flag(
                    Some(phase),
                    format!("recorded length {} but shortest is {shortest}", rec.length),
                );
            }
            if let Some(p) = prev_len {
                if shortest <= p {
                    flag(Some(phase), format!("length {shortest} does not exceed previous {p}"));
                }
            }
            prev_len = Some(shortest);
            if rec.paths.is_empty() {
                flag(Some(phase), "phase has no paths".into());
            }
            let mut used = vec![false; g.n()];
            let mut good: Vec<AltPath> = Vec::new();
            for (j, vs) in rec.paths.iter().enumerate() {
                let Ok(p) = AltPath::try_new(vs.clone()) else {
                    flag(Some(phase), format!("path {j} is empty"));
                    continue;
                };
                if p.vertices().iter().any(|&v| v >= g.n()) || !is_augmenting(g, &m, &p) {
                    flag(Some(phase), format!("path {j} is not augmenting"));
                    continue;
                }
                if p.len() != shortest {
                    flag(
                        Some(phase),
                        format!("path {j} has length {} but shortest is {shortest}", p.len()),
                    );
                }
                if let Some(&v) = p.vertices().iter().find(|&&v| used[v]) {
                    flag(Some(phase), format!("path {j} shares vertex {v} with an earlier path"));
                    continue;
                }
                for &v in p.vertices() {
                    used[v] = true;
                }
                good.push(p);
            }
            let taken: Vec<Vec<usize>> = good.iter().map(|p| p.vertices().to_vec()).collect();
            let order: Vec<usize> = (0..g.n()).collect();
            match self.complete_phase(&m, shortest, &taken, &order, &self.sorted, phase) {
                Ok(extra) if !extra.is_empty() => flag(
                    Some(phase),
                    format!("not maximal: {:?} is disjoint from the listed paths", extra[0]),
                ),
                Ok(_) => {}
                Err(e) => flag(Some(phase), format!("cannot check maximality: {e}")),
            }
            for p in &good {
                m.flip_unchecked(p);
            }
            if rec.matching_size != 0 && rec.matching_size != m.len() {
                flag(
                    Some(phase),
                    format!("recorded size {} but replay gives {}", rec.matching_size, m.len()),
                );
            }
        }
        match self.shortest_aug_length(&m) {
            Ok(None) => {}
            Ok(Some(l)) => flag(None, format!("final matching is not maximum (path of length {l})")),
            Err(e) => flag(None, format!("cannot certify final matching: {e}")),
        }
        if trace.final_size != m.len() {
            flag(
                None,
                format!("recorded final size {} but replay gives {}", trace.final_size, m.len()),
            );
        }
        TraceReport {
            phases: trace.phases.len(),
            final_size: m.len(),
            violations,
        }
    }

    /// Runs `plan` as a scripted strategy and verifies the resulting trace.
    pub fn replay_plan(&self, plan: &Plan) -> Result<TraceReport, super::PhaseError> {
        let (_, trace) = self.run(&Strategy::Scripted(plan.clone()))?;
        Ok(self.verify_trace(&trace))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: u64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub phases: usize,
    pub nu: usize,
    pub n: usize,
    pub bounds: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.bounds.iter().all(|b| b.satisfied)
    }
}

/// Compares the phase count of a legal trace with `2⌈√ν⌉+2` and `2⌈√n⌉`.
/// `ν` is the final matching size, which is maximum for a legal trace.
pub fn phase_bound_report(g: &Graph, trace: &PhaseTrace) -> BoundReport {
    let phases = trace.phases.len();
    let nu = trace.final_size;
    let by_nu = 2 * ceil_sqrt(nu as u64) + 2;
    let by_n = 2 * ceil_sqrt(g.n() as u64);
    let check = |name: &str, value: u64| BoundCheck {
        name: name.into(),
        value,
        satisfied: phases as u64 <= value,
    };
    BoundReport {
        phases,
        nu,
        n: g.n(),
        bounds: vec![check("2*ceil(sqrt(nu))+2", by_nu), check("2*ceil(sqrt(n))", by_n)],
    }
}
