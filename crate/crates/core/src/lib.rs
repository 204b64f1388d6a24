//! Maximum matching through the Hopcroft-Karp phase framework, with
//! adversarial phase strategies, path-replacement procedures, graph
//! parameters, lower-bound families and brute-force oracles.

pub mod bench;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod params;
pub mod phase;
pub mod replace;
pub mod util;

pub use graph::{AltPath, Graph, GraphError, Matching};
pub use phase::{
    exact_phase, run_phase_framework, shortest_aug_length, Engine, EngineConfig, PhaseError,
    PhaseTrace, Plan, PlanMeta, Strategy,
};
