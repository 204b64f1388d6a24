use super::{blue_bounded_core, check_input, on_core, shortcut, ReplaceError, ReplaceResult};
use crate::graph::{AltPath, Graph, Matching};
use crate::params::TypePartition;

/// Replacement for neighbourhood diversity `k = |types|`, acting on the
/// blue-bounded core `v_1 ... v_l`.
///
/// While the core has length at least `6k + 3`, three of
/// `v_2, v_5, ..., v_{6k+2}` share a type (the first such triple is used).
/// If two of their entering edges `u_r v_r`, `u_s v_s` are red the path
/// jumps `v_r -> w_s`, otherwise two are blue and it jumps `u_r -> v_s`.
/// Final length at most `6k + 4`.
pub fn replace_nd(g: &Graph, m: &Matching, p: &AltPath, types: &TypePartition) -> Result<ReplaceResult, ReplaceError> {
    check_input(g, m, p)?;
    if !types.is_valid_for(g) {
        return Err(ReplaceError::Types("classes do not partition V into same-type sets".into()));
    }
    let k = types.nd();
    let class = types.class_of(g.n());
    let threshold = 6 * k + 3;
    let parity = blue_bounded_core(m, p);
    on_core(g, m, p, parity, threshold as u64 + 1, |steps| {
        while steps.len() >= threshold {
            let c = &steps.cur;
            // 1-based v_x
            let v = |x: usize| c[x - 1];
            let mut seen: Vec<Vec<usize>> = vec![Vec::new(); k];
            let triple = (0..=2 * k)
                .map(|t| 2 + 3 * t)
                .find_map(|x| {
                    let bucket = &mut seen[class[v(x)]];
                    bucket.push(x);
                    (bucket.len() == 3).then(|| bucket.clone())
                })
                .expect("pigeonhole over 2k + 1 vertices and k types");
            let red: Vec<usize> = triple.iter().copied().filter(|&x| m.is_red(v(x - 1), v(x))).collect();
            let next = if red.len() >= 2 {
                let (r, s) = (red[0], red[1]);
                shortcut(c, r - 1, s)
            } else {
                let blue: Vec<usize> = triple.iter().copied().filter(|x| !red.contains(x)).collect();
                let (r, s) = (blue[0], blue[1]);
                shortcut(c, r - 2, s - 1)
            };
            steps.apply(next)?;
        }
        Ok(())
    })
}
