mod common;

use common::*;
use phasematch::graph::{validate_replacement, AltPath, Graph, Matching};
use phasematch::params::{modular_decomposition, neighborhood_diversity};
use phasematch::replace::{
    replace_independence, replace_modular, replace_nd, replace_splex, ReplaceError, ReplaceResult,
};
use proptest::prelude::*;

fn check(g: &Graph, m: &Matching, p: &AltPath, r: &ReplaceResult) {
    assert!(validate_replacement(g, m, p, &r.path), "invalid replacement {:?} for {:?}", r.path, p);
    assert!(r.path.len() <= p.len());
    assert_eq!(r.lengths.len(), r.steps + 1);
    assert!(r.lengths.windows(2).all(|w| w[1] < w[0]));
}

fn instance(g: &Graph, seed: u64) -> Option<(Matching, AltPath)> {
    let mut rng = rng(seed);
    let m = random_matching(g, &mut rng, 0.1);
    let p = random_alternating_path(g, &m, &mut rng, 8)?;
    Some((m, p))
}

#[test]
fn splex_stress() {
    let mut long = 0;
    for seed in 0..400u64 {
        let mut r = rng(seed);
        let k = 1 + (seed % 3) as usize;
        let n = 8 + (seed % 23) as usize;
        let g = random_plex(n, k, &mut r);
        let Some((m, p)) = instance(&g, seed) else { continue };
        let res = replace_splex(&g, &m, &p, k).unwrap();
        check(&g, &m, &p, &res);
        assert!(res.within_bound(), "seed {seed}: {} > {}", res.path.len(), res.bound);
        long += (p.len() as u64 > res.bound) as usize;
    }
    assert!(long > 50, "only {long} paths above the bound");
}

#[test]
fn independence_stress() {
    let mut long = 0;
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let k = 1 + (seed % 2) as usize;
        let g = random_low_alpha(k, 14, 26, 0.2, &mut r);
        let Some((m, p)) = instance(&g, seed) else { continue };
        let res = replace_independence(&g, &m, &p, k).unwrap();
        check(&g, &m, &p, &res);
        assert!(res.within_bound(), "seed {seed}: {} > {}", res.path.len(), res.bound);
        long += (p.len() as u64 > res.bound) as usize;
    }
    assert!(long > 20, "only {long} paths above the bound");
}

#[test]
fn nd_stress() {
    let mut long = 0;
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let t = 2 + (seed % 4) as usize;
        let g = random_bounded_nd(t, 4, 12, &mut r);
        let types = neighborhood_diversity(&g);
        let Some((m, p)) = instance(&g, seed) else { continue };
        let res = replace_nd(&g, &m, &p, &types).unwrap();
        check(&g, &m, &p, &res);
        assert!(res.within_bound(), "seed {seed}: {} > {}", res.path.len(), res.bound);
        long += (p.len() as u64 > res.bound) as usize;
    }
    assert!(long > 20, "only {long} paths above the bound");
}

#[test]
fn modular_stress() {
    let mut prime_hits = 0;
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let n = 6 + (seed % 30) as usize;
        let g = random_modular(n, &mut r);
        let tree = modular_decomposition(&g);
        let Some((m, p)) = instance(&g, seed) else { continue };
        let res = replace_modular(&g, &m, &p, &tree).unwrap();
        check(&g, &m, &p, &res);
        let stats = res.modular.unwrap();
        assert!(stats.max_series_blue <= 4 && stats.max_series_red <= 6, "seed {seed}: {stats:?}");
        assert!(stats.max_border <= 8, "seed {seed}: {stats:?}");
        prime_hits += (stats.prime_red + stats.prime_blue > 0) as usize;
    }
    assert!(prime_hits > 0);
}

#[test]
fn hypotheses_are_enforced() {
    let g = Graph::path(40);
    let m = Matching::from_edges(40, (0..20).map(|i| (2 * i, 2 * i + 1))).unwrap();
    let p = AltPath::new((0..40).collect());
    assert!(matches!(replace_splex(&g, &m, &p, 2), Err(ReplaceError::Hypothesis(_))));
    assert!(matches!(replace_independence(&g, &m, &p, 1), Err(ReplaceError::Hypothesis(_))));
    let wrong = neighborhood_diversity(&Graph::complete(40));
    assert!(matches!(replace_nd(&g, &m, &p, &wrong), Err(ReplaceError::Types(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn splex_output_is_a_replacement(seed in any::<u64>(), n in 6usize..24, k in 1usize..4) {
        let mut r = rng(seed);
        let g = random_plex(n, k, &mut r);
        if let Some((m, p)) = instance(&g, seed) {
            let res = replace_splex(&g, &m, &p, k).unwrap();
            prop_assert!(validate_replacement(&g, &m, &p, &res.path));
            prop_assert!(res.within_bound());
        }
    }

    #[test]
    fn modular_output_is_a_replacement(seed in any::<u64>(), n in 2usize..28) {
        let mut r = rng(seed);
        let g = random_modular(n, &mut r);
        let tree = modular_decomposition(&g);
        prop_assert!(tree.check(&g).is_ok());
        if let Some((m, p)) = instance(&g, seed) {
            let res = replace_modular(&g, &m, &p, &tree).unwrap();
            prop_assert!(validate_replacement(&g, &m, &p, &res.path));
        }
    }

    #[test]
    fn nd_output_is_a_replacement(seed in any::<u64>(), t in 1usize..6) {
        let mut r = rng(seed);
        let g = random_bounded_nd(t, 1, 8, &mut r);
        let types = neighborhood_diversity(&g);
        prop_assert!(types.nd() <= t);
        if let Some((m, p)) = instance(&g, seed) {
            let res = replace_nd(&g, &m, &p, &types).unwrap();
            prop_assert!(validate_replacement(&g, &m, &p, &res.path));
            prop_assert!(res.within_bound());
        }
    }
}
