//! Experiment suites: scripted lower-bound replays, phase counts against the
//! upper bounds on structured families, and the exhaustive oracle sweep.

use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::{gen_chain, gen_cograph_lb, gen_path_lb, gen_structured, FamilyError, FamilyInstance, StructuredClass, StructuredParams};
use crate::oracles::{brute_force_nu, graph_from_mask, min_replaceability, pairs, OracleError};
use crate::params::{theorem_bound, DeletionBound};
use crate::phase::{phase_bound_report, Engine, EngineConfig, PhaseError, PhaseTrace, Strategy};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{family} {params}: {source}")]
    Phase {
        family: String,
        params: String,
        source: PhaseError,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Satisfied when `phases_observed <= value`.
    Upper,
    /// Satisfied when `phases_observed >= value`.
    Lower,
    /// Count of oracle disagreements, satisfied when zero.
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowBound {
    pub name: String,
    pub kind: BoundKind,
    pub value: u64,
    pub satisfied: bool,
}

impl RowBound {
    pub fn upper(name: impl Into<String>, value: u64, phases: usize) -> Self {
        RowBound {
            name: name.into(),
            kind: BoundKind::Upper,
            value,
            satisfied: phases as u64 <= value,
        }
    }

    pub fn lower(name: impl Into<String>, value: u64, phases: usize) -> Self {
        RowBound {
            name: name.into(),
            kind: BoundKind::Lower,
            value,
            satisfied: phases as u64 >= value,
        }
    }

    fn mismatch(name: impl Into<String>, count: u64) -> Self {
        RowBound {
            name: name.into(),
            kind: BoundKind::Mismatch,
            value: count,
            satisfied: count == 0,
        }
    }
}

/// One instance under one strategy. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub family: String,
    /// `key=value` pairs joined by `;`, seed included when there is one.
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub strategy: String,
    pub phases_observed: usize,
    pub nu: usize,
    pub bounds: Vec<RowBound>,
}

impl BenchRow {
    pub fn ok(&self) -> bool {
        self.bounds.iter().all(|b| b.satisfied)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    LowerBounds,
    UpperBounds,
    OracleSweep,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lowerbounds" => Ok(Suite::LowerBounds),
            "upperbounds" => Ok(Suite::UpperBounds),
            "oracle-sweep" => Ok(Suite::OracleSweep),
            _ => Err(format!("unknown suite {s:?} (lowerbounds, upperbounds, oracle-sweep)")),
        }
    }
}

/// Grid of a suite run.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Base seed for generated instances and random strategies.
    pub seed: u64,
    /// Instances with more vertices are skipped.
    pub limit_n: Option<usize>,
    pub chain_k: Vec<usize>,
    pub path_j: Vec<usize>,
    /// Cograph construction sizes `s`; the instance is built for `n = s²`.
    pub cograph_s: Vec<usize>,
    /// Planted modulator sizes for the upper-bound families.
    pub upper_k: Vec<usize>,
    pub upper_classes: Vec<StructuredClass>,
    pub upper_params: StructuredParams,
    /// Seeded-random runs per upper-bound instance, besides greedy-lex.
    pub random_runs: usize,
    /// Largest `n` of the exhaustive sweep.
    pub oracle_n: usize,
    pub engine: EngineConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            limit_n: None,
            chain_k: (2..=12).collect(),
            path_j: (2..=30).collect(),
            cograph_s: (1..=10).collect(),
            upper_k: vec![16, 36, 64],
            upper_classes: vec![StructuredClass::Cluster, StructuredClass::SplexUnion(2)],
            upper_params: StructuredParams {
                components: 12,
                min_size: 5,
                max_size: 6,
                apex_p: 0.3,
            },
            random_runs: 50,
            oracle_n: 6,
            engine: EngineConfig::default(),
        }
    }
}

impl SuiteConfig {
    fn fits(&self, n: usize) -> bool {
        self.limit_n.is_none_or(|l| n <= l)
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<BenchRow>, BenchError> {
    match suite {
        Suite::LowerBounds => lower_bounds(cfg),
        Suite::UpperBounds => upper_bounds(cfg),
        Suite::OracleSweep => oracle_sweep(cfg),
    }
}

fn params_string(inst: &FamilyInstance) -> String {
    let mut parts: Vec<String> = inst.meta.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    if let Some(s) = inst.meta.seed {
        parts.push(format!("seed={s}"));
    }
    parts.join(";")
}

/// Runs `strategy` and builds the row with the generic upper bounds.
fn run_row(inst: &FamilyInstance, strategy: &Strategy, engine: EngineConfig) -> Result<(BenchRow, PhaseTrace), BenchError> {
    let params = params_string(inst);
    let (_, trace) = Engine::new(&inst.graph, engine)
        .run(strategy)
        .map_err(|source| BenchError::Phase {
            family: inst.meta.family.clone(),
            params: params.clone(),
            source,
        })?;
    let report = phase_bound_report(&inst.graph, &trace);
    let phases = trace.phase_count();
    let bounds = report
        .bounds
        .iter()
        .map(|b| RowBound::upper(b.name.clone(), b.value, phases))
        .collect();
    let row = BenchRow {
        family: inst.meta.family.clone(),
        params,
        n: inst.graph.n(),
        m: inst.graph.m(),
        strategy: strategy.name(),
        phases_observed: phases,
        nu: trace.final_size,
        bounds,
    };
    Ok((row, trace))
}

/// Scripted replays of the chain, path and cograph constructions. Each row
/// carries the realized-phase lower bound and a legality check of the trace.
fn lower_bounds(cfg: &SuiteConfig) -> Result<Vec<BenchRow>, BenchError> {
    let mut grid: Vec<FamilyInstance> = Vec::new();
    for &k in &cfg.chain_k {
        grid.push(gen_chain(k)?);
    }
    for &j in &cfg.path_j {
        grid.push(gen_path_lb(j)?);
    }
    for &s in &cfg.cograph_s {
        grid.push(gen_cograph_lb(s * s)?);
    }
    grid.retain(|inst| cfg.fits(inst.graph.n()));
    grid.par_iter()
        .map(|inst| {
            let plan = inst.plan.clone().expect("lower-bound families carry a plan");
            let expected = plan.meta.expected_phases;
            let (mut row, trace) = run_row(inst, &Strategy::Scripted(plan), cfg.engine)?;
            let report = Engine::new(&inst.graph, cfg.engine).verify_trace(&trace);
            row.bounds.insert(0, RowBound::lower("expected_phases", expected as u64, row.phases_observed));
            row.bounds.push(RowBound::mismatch("trace_violations", report.violations.len() as u64));
            Ok(row)
        })
        .collect()
}

/// Replaceability of `G − S`: the worst [`min_replaceability`] over the
/// components left after deleting the planted modulator.
pub fn modulator_replaceability(inst: &FamilyInstance) -> Result<usize, OracleError> {
    let g = &inst.graph;
    let mut alive = vec![true; g.n()];
    for &v in &inst.meta.modulator {
        alive[v] = false;
    }
    let mut worst = 0;
    for comp in g.components_within(&alive) {
        let (h, _) = g.induced(&comp);
        worst = worst.max(min_replaceability(&h)?);
    }
    Ok(worst)
}

/// Structured families with planted modulators under greedy-lex and
/// `random_runs` seeded strategies, against every applicable upper bound.
fn upper_bounds(cfg: &SuiteConfig) -> Result<Vec<BenchRow>, BenchError> {
    let mut grid: Vec<(FamilyInstance, usize)> = Vec::new();
    for &class in &cfg.upper_classes {
        for &k in &cfg.upper_k {
            let inst = gen_structured(class, &cfg.upper_params, k, cfg.seed)?;
            if !cfg.fits(inst.graph.n()) {
                continue;
            }
            let l = modulator_replaceability(&inst)?;
            grid.push((inst, l));
        }
    }
    let mut jobs: Vec<(usize, Strategy)> = Vec::new();
    for i in 0..grid.len() {
        jobs.push((i, Strategy::GreedyLex));
        jobs.extend((0..cfg.random_runs as u64).map(|r| (i, Strategy::SeededRandom(cfg.seed.wrapping_add(r)))));
    }
    jobs.par_iter()
        .map(|(i, strategy)| {
            let (inst, l) = &grid[*i];
            let (mut row, trace) = run_row(inst, strategy, cfg.engine)?;
            let deletion = DeletionBound {
                class: inst.meta.family.trim_start_matches("structured:").to_string(),
                l: *l as u64,
                k: inst.meta.modulator.len() as u64,
            };
            row.bounds = theorem_bound(&inst.graph, trace.final_size, &[deletion])
                .into_iter()
                .map(|b| RowBound::upper(b.name, b.value, row.phases_observed))
                .collect();
            Ok(row)
        })
        .collect()
}

/// Every labeled graph on `n ≤ oracle_n` vertices under greedy-lex,
/// compared with the brute-force matching number. One row per `n`:
/// `phases_observed` and `nu` are the maxima over the graphs.
fn oracle_sweep(cfg: &SuiteConfig) -> Result<Vec<BenchRow>, BenchError> {
    (1..=cfg.oracle_n)
        .filter(|&n| cfg.fits(n))
        .map(|n| {
            let total = 1u64 << pairs(n);
            let per_graph: Vec<(usize, usize, bool, bool)> = (0..total)
                .into_par_iter()
                .map(|mask| -> Result<_, BenchError> {
                    let g = graph_from_mask(n, mask);
                    let (_, trace) = Engine::new(&g, cfg.engine).run(&Strategy::GreedyLex).map_err(|source| {
                        BenchError::Phase {
                            family: "oracle-sweep".into(),
                            params: format!("n={n};mask={mask}"),
                            source,
                        }
                    })?;
                    let nu = brute_force_nu(&g)?;
                    let within = phase_bound_report(&g, &trace).all_satisfied();
                    Ok((trace.phase_count(), trace.final_size, trace.final_size == nu, within))
                })
                .collect::<Result<_, _>>()?;
            let phases = per_graph.iter().map(|r| r.0).max().unwrap_or(0);
            let nu = per_graph.iter().map(|r| r.1).max().unwrap_or(0);
            let mismatches = per_graph.iter().filter(|r| !r.2).count() as u64;
            let over = per_graph.iter().filter(|r| !r.3).count() as u64;
            Ok(BenchRow {
                family: "oracle-sweep".into(),
                params: format!("n={n};graphs={total}"),
                n,
                m: pairs(n) as usize,
                strategy: Strategy::GreedyLex.name(),
                phases_observed: phases,
                nu,
                bounds: vec![
                    RowBound::mismatch("nu_vs_brute_force", mismatches),
                    RowBound::mismatch("graphs_over_phase_bound", over),
                ],
            })
        })
        .collect()
}

/// Bounds packed into one CSV cell: `name|kind|value|ok` joined by `;`.
fn bounds_cell(bounds: &[RowBound]) -> String {
    bounds
        .iter()
        .map(|b| {
            let kind = match b.kind {
                BoundKind::Upper => "upper",
                BoundKind::Lower => "lower",
                BoundKind::Mismatch => "mismatch",
            };
            format!("{}|{kind}|{}|{}", b.name, b.value, if b.satisfied { "ok" } else { "FAIL" })
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "params", "n", "m", "strategy", "phases_observed", "nu", "bounds"])?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.params.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.strategy.clone(),
            r.phases_observed.to_string(),
            r.nu.to_string(),
            bounds_cell(&r.bounds),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[BenchRow], mut out: W) -> Result<(), BenchError> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}
