//! Graph parameters: independence and vertex cover numbers, neighbourhood
//! diversity, modular decomposition, class membership, deletion distances
//! and the phase-count bounds they imply.

mod classes;
mod mdtree;

use serde::Serialize;
use thiserror::Error;

pub use classes::{class_membership, distance_to_class, find_obstruction, ClassFlags, GraphClass};
pub use mdtree::{modular_decomposition, is_module, MDNode, MDTree, NodeKind};

use crate::graph::Graph;
use crate::util::ceil_sqrt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("exact computation accepts at most {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

/// Default vertex limit for the exact independence number.
pub const EXACT_LIMIT: usize = 30;

/// Maximum independent set by branching on a maximum-degree vertex.
/// Returns the size and one witness set.
pub fn max_independent_set(g: &Graph) -> Result<(usize, Vec<usize>), ParamError> {
    max_independent_set_with(g, EXACT_LIMIT)
}

pub fn max_independent_set_with(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>), ParamError> {
    let n = g.n();
    if n > limit.min(64) {
        return Err(ParamError::TooLarge { n, limit: limit.min(64) });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |a, &w| a | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = (0usize, 0u64);
    mis_rec(&adj, all, 0, 0, &mut best);
    let set = (0..n).filter(|&v| best.1 >> v & 1 == 1).collect();
    Ok((best.0, set))
}

fn mis_rec(adj: &[u64], live: u64, chosen: u64, size: usize, best: &mut (usize, u64)) {
    if size + live.count_ones() as usize <= best.0 {
        return;
    }
    // take every vertex of live degree 0 or 1 greedily: always safe
    let mut live = live;
    let mut chosen = chosen;
    let mut size = size;
    loop {
        let mut changed = false;
        let mut rest = live;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if live >> v & 1 == 0 {
                continue;
            }
            if (adj[v] & live).count_ones() <= 1 {
                chosen |= 1 << v;
                size += 1;
                live &= !(adj[v] | 1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if live == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + live.count_ones() as usize <= best.0 {
        return;
    }
    let mut v = 0;
    let mut deg = 0;
    let mut rest = live;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[u] & live).count_ones();
        if d > deg {
            deg = d;
            v = u;
        }
    }
    mis_rec(adj, live & !(adj[v] | 1 << v), chosen | 1 << v, size + 1, best);
    mis_rec(adj, live & !(1 << v), chosen, size, best);
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> Result<usize, ParamError> {
    Ok(max_independent_set(g)?.0)
}

/// `τ(G) = n − α(G)`.
pub fn vertex_cover_number(g: &Graph) -> Result<usize, ParamError> {
    Ok(g.n() - independence_number(g)?)
}

/// Neighbourhood-diversity classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypePartition {
    pub classes: Vec<Vec<usize>>,
}

impl TypePartition {
    pub fn nd(&self) -> usize {
        self.classes.len()
    }

    /// Class index of every vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }

    /// Whether the classes partition `V(g)` and each is one type.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let cls = self.class_of(g.n());
        let count: usize = self.classes.iter().map(Vec::len).sum();
        if count != g.n() || cls.contains(&usize::MAX) {
            return false;
        }
        self.classes
            .iter()
            .all(|c| c.iter().all(|&v| same_type(g, c[0], v)))
    }
}

/// `N(u) ∖ {v} = N(v) ∖ {u}`.
pub fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

/// Exact type partition by comparison against class representatives.
/// Classes are ordered by their smallest vertex.
pub fn neighborhood_diversity(g: &Graph) -> TypePartition {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        match classes.iter_mut().find(|c| same_type(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    TypePartition { classes }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedBound {
    pub name: String,
    pub value: u64,
    /// The deletion count was raised to 16 to make the bound valid.
    pub clamped: bool,
}

/// A known replaceability `l` for `G − S` with `|S| <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionBound {
    pub class: String,
    pub l: u64,
    pub k: u64,
}

/// `⌈√k·l⌉ + 2⌈√k⌉`, valid for `k ≥ 16`. Smaller `k` are clamped to 16.
pub fn replaceable_phase_bound(k: u64, l: u64) -> (u64, bool) {
    let clamped = k < 16;
    let k = k.max(16);
    (ceil_sqrt(k * l * l) + 2 * ceil_sqrt(k), clamped)
}

/// Phase-count upper bounds applicable to `g`.
pub fn theorem_bound(g: &Graph, nu: usize, deletions: &[DeletionBound]) -> Vec<NamedBound> {
    let mut out = vec![
        NamedBound {
            name: "2*ceil(sqrt(nu))+2".into(),
            value: 2 * ceil_sqrt(nu as u64) + 2,
            clamped: false,
        },
        NamedBound {
            name: "2*ceil(sqrt(n))".into(),
            value: 2 * ceil_sqrt(g.n() as u64),
            clamped: false,
        },
    ];
    for d in deletions {
        let (value, clamped) = replaceable_phase_bound(d.k, d.l);
        out.push(NamedBound {
            name: format!("ceil(sqrt(k)*l)+2*ceil(sqrt(k)) [{} l={} k={}]", d.class, d.l, d.k),
            value,
            clamped,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDistance {
    pub class: String,
    /// `None` when the distance exceeds the search limit.
    pub distance: Option<usize>,
    pub deletion_set: Vec<usize>,
}

/// Everything the `params` subcommand prints. Exact `α` and `τ` are only
/// attempted up to [`EXACT_LIMIT`] vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    pub nd: usize,
    pub types: Vec<Vec<usize>>,
    pub alpha: Option<usize>,
    pub independent_set: Option<Vec<usize>>,
    pub tau: Option<usize>,
    pub mw: usize,
    pub md: usize,
    pub has_prime: bool,
    pub classes: ClassFlags,
    pub distances: Vec<ClassDistance>,
}

/// Computes all parameters; deletion distances are searched up to `k_max`
/// for each class in `targets`.
pub fn param_report(g: &Graph, targets: &[GraphClass], k_max: usize) -> ParamReport {
    let types = neighborhood_diversity(g);
    let mis = max_independent_set(g).ok();
    let tree = modular_decomposition(g);
    let distances = targets
        .iter()
        .map(|&c| {
            let found = distance_to_class(g, c, k_max);
            ClassDistance {
                class: class_name(c),
                distance: found.as_ref().map(|f| f.0),
                deletion_set: found.map(|f| f.1).unwrap_or_default(),
            }
        })
        .collect();
    ParamReport {
        n: g.n(),
        m: g.m(),
        nd: types.nd(),
        types: types.classes,
        alpha: mis.as_ref().map(|x| x.0),
        tau: mis.as_ref().map(|x| g.n() - x.0),
        independent_set: mis.map(|x| x.1),
        mw: tree.mw(),
        md: tree.md(),
        has_prime: tree.has_prime(),
        classes: class_membership(g),
        distances,
    }
}

fn class_name(c: GraphClass) -> String {
    match c {
        GraphClass::Cluster => "cluster".into(),
        GraphClass::StarForest => "star-forest".into(),
        GraphClass::SplexUnion(s) => format!("splex:{s}"),
        GraphClass::BipartiteChain => "chain".into(),
        GraphClass::Cograph => "cograph".into(),
        GraphClass::TriviallyPerfect => "trivially-perfect".into(),
    }
}

/// Modular-width bound `(21·mw)^md`, saturating.
pub fn modular_bound(mw: usize, md: usize) -> u64 {
    (21 * mw as u64).saturating_pow(md as u32)
}
