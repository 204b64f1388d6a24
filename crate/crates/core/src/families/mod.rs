//! Instance generators: the lower-bound constructions with their scripted
//! plans, and seeded structured and random families.

mod chain;
mod lower;
mod structured;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use chain::{chain_matching, chain_paths, gen_chain, ChainSpec};
pub use lower::{gen_cograph_lb, gen_path_lb};
pub use structured::{gen_random, gen_structured, Density, StructuredClass, StructuredParams};

use crate::graph::{Graph, GraphError};
use crate::phase::{Plan, PlanMeta};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("construction is inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyMeta {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Phase count the plan realizes (lower-bound families only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_phases: Option<usize>,
    /// Planted deletion set, sorted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub modulator: Vec<usize>,
    /// Names from the constructions (`a3`, `w2@G4`, ...) to vertex ids.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, usize>,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub plan: Option<Plan>,
    pub meta: FamilyMeta,
}

impl FamilyInstance {
    fn new(graph: Graph, family: &str, params: &[(&str, u64)]) -> Self {
        let meta = FamilyMeta {
            family: family.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            n: graph.n(),
            m: graph.m(),
            ..FamilyMeta::default()
        };
        FamilyInstance {
            graph,
            plan: None,
            meta,
        }
    }

    fn with_plan(mut self, phases: Vec<Vec<crate::graph::AltPath>>) -> Self {
        let expected = phases.len();
        let plan_meta = PlanMeta {
            family: self.meta.family.clone(),
            params: self.meta.params.clone(),
            expected_phases: expected,
        };
        self.plan = Some(Plan::new(self.graph.n(), plan_meta, phases));
        self.meta.expected_phases = Some(expected);
        self
    }
}
