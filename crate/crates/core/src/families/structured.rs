//! Seeded instance families: a structured base plus planted apex vertices,
//! and plain random graphs.

use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FamilyError, FamilyInstance};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuredClass {
    Cluster,
    /// Disjoint union of `s`-plexes.
    SplexUnion(usize),
    /// At most `t` neighbourhood types.
    BoundedNd(usize),
    StarForest,
}

impl FromStr for StructuredClass {
    type Err = String;

    /// `cluster`, `splex:S`, `nd:T`, `star-forest`.
    fn from_str(s: &str) -> Result<Self, String> {
        let arg = |p: &str| -> Result<usize, String> { p.parse().map_err(|_| format!("bad parameter in {s:?}")) };
        match s.split_once(':') {
            None if s == "cluster" => Ok(StructuredClass::Cluster),
            None if s == "star-forest" || s == "star_forest" => Ok(StructuredClass::StarForest),
            Some(("splex", p)) => Ok(StructuredClass::SplexUnion(arg(p)?)),
            Some(("nd", p)) => Ok(StructuredClass::BoundedNd(arg(p)?)),
            _ => Err(format!("unknown class {s:?}")),
        }
    }
}

impl StructuredClass {
    pub fn name(&self) -> String {
        match self {
            StructuredClass::Cluster => "cluster".into(),
            StructuredClass::SplexUnion(s) => format!("splex:{s}"),
            StructuredClass::BoundedNd(t) => format!("nd:{t}"),
            StructuredClass::StarForest => "star-forest".into(),
        }
    }
}

/// Sizes of the base. For [`StructuredClass::BoundedNd`] `components` is
/// ignored and each of the `t` type classes gets a size in range.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StructuredParams {
    pub components: usize,
    pub min_size: usize,
    pub max_size: usize,
    /// Probability of each apex-to-base edge.
    pub apex_p: f64,
}

impl Default for StructuredParams {
    fn default() -> Self {
        StructuredParams {
            components: 10,
            min_size: 6,
            max_size: 6,
            apex_p: 0.3,
        }
    }
}

/// Structured base with `k` apex vertices appended as the last ids, each
/// joined to base vertices independently with probability `apex_p` and to
/// the other apexes with probability 1/2. The apexes are recorded as the
/// planted modulator.
pub fn gen_structured(
    class: StructuredClass,
    params: &StructuredParams,
    k: usize,
    seed: u64,
) -> Result<FamilyInstance, FamilyError> {
    let StructuredParams {
        components,
        min_size,
        max_size,
        apex_p,
    } = *params;
    if min_size == 0 || min_size > max_size {
        return Err(FamilyError::Params(format!("bad size range {min_size}..={max_size}")));
    }
    if !(0.0..=1.0).contains(&apex_p) {
        return Err(FamilyError::Params(format!("apex probability {apex_p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut base = 0usize;
    match class {
        StructuredClass::Cluster | StructuredClass::SplexUnion(_) => {
            let s = match class {
                StructuredClass::SplexUnion(s) => s,
                _ => 1,
            };
            if s == 0 || s > min_size {
                return Err(FamilyError::Params(format!("plex parameter {s} must lie in 1..={min_size}")));
            }
            for _ in 0..components {
                let size = rng.random_range(min_size..=max_size);
                edges.extend(plex(&mut rng, base, size, s));
                base += size;
            }
        }
        StructuredClass::StarForest => {
            for _ in 0..components {
                let size = rng.random_range(min_size..=max_size);
                edges.extend((1..size).map(|x| (base, base + x)));
                base += size;
            }
        }
        StructuredClass::BoundedNd(t) => {
            if t == 0 {
                return Err(FamilyError::Params("nd family needs t >= 1".into()));
            }
            let sizes: Vec<usize> = (0..t).map(|_| rng.random_range(min_size..=max_size)).collect();
            let starts: Vec<usize> = sizes.iter().scan(0, |acc, &s| {
                let at = *acc;
                *acc += s;
                Some(at)
            }).collect();
            for a in 0..t {
                let members = starts[a]..starts[a] + sizes[a];
                if rng.random_bool(0.5) {
                    for u in members.clone() {
                        edges.extend((u + 1..members.end).map(|v| (u, v)));
                    }
                }
                for b in a + 1..t {
                    if rng.random_bool(0.5) {
                        for u in members.clone() {
                            edges.extend((starts[b]..starts[b] + sizes[b]).map(|v| (u, v)));
                        }
                    }
                }
            }
            base = sizes.iter().sum();
        }
    }
    let n = base + k;
    for a in base..n {
        for v in 0..base {
            if rng.random_bool(apex_p) {
                edges.push((v, a));
            }
        }
        for b in a + 1..n {
            if rng.random_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(n, edges)?;
    let mut inst = FamilyInstance::new(
        g,
        &format!("structured:{}", class.name()),
        &[
            ("k", k as u64),
            ("components", components as u64),
            ("min_size", min_size as u64),
            ("max_size", max_size as u64),
        ],
    );
    inst.meta.seed = Some(seed);
    inst.meta.modulator = (base..n).collect();
    Ok(inst)
}

/// `K_size` on `base..base+size` minus random edges, removing at most
/// `s − 1` at each vertex so every degree stays at least `size − s`.
fn plex(rng: &mut ChaCha8Rng, base: usize, size: usize, s: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))).collect();
    let mut removed = vec![0usize; size];
    pairs.shuffle(rng);
    pairs
        .into_iter()
        .filter(|&(u, v)| {
            if removed[u] + 1 < s && removed[v] + 1 < s && rng.random_bool(0.5) {
                removed[u] += 1;
                removed[v] += 1;
                false
            } else {
                true
            }
        })
        .map(|(u, v)| (base + u, base + v))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    /// Each pair independently.
    P(f64),
    /// Exactly this many distinct edges.
    M(usize),
}

/// Seeded random graph. With `bipartite`, the sides are `0..n/2` and
/// `n/2..n`, only cross pairs are candidates and the bipartition is
/// attached.
pub fn gen_random(n: usize, density: Density, seed: u64, bipartite: bool) -> Result<FamilyInstance, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = n / 2;
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !bipartite || (u < half) != (v < half))
        .collect();
    let edges: Vec<(usize, usize)> = match density {
        Density::P(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(FamilyError::Params(format!("edge probability {p} outside [0, 1]")));
            }
            candidates.into_iter().filter(|_| rng.random_bool(p)).collect()
        }
        Density::M(m) => {
            if m > candidates.len() {
                return Err(FamilyError::Params(format!("{m} edges requested, only {} pairs", candidates.len())));
            }
            candidates.choose_multiple(&mut rng, m).copied().collect()
        }
    };
    let mut g = Graph::new(n, edges)?;
    if bipartite {
        g = g.with_bipartition(&(0..half).collect::<Vec<_>>())?;
    }
    let (dname, dval) = match density {
        Density::P(p) => ("p_permille", (p * 1000.0).round() as u64),
        Density::M(m) => ("m", m as u64),
    };
    let mut inst = FamilyInstance::new(g, if bipartite { "random-bipartite" } else { "random" }, &[("n", n as u64), (dname, dval)]);
    inst.meta.seed = Some(seed);
    Ok(inst)
}
