use super::{blue_bounded_core, check_input, on_core, ReplaceError, ReplaceResult};
use crate::graph::{AltPath, Graph, Matching};

/// Replacement for `α(G) ≤ k`, acting on the blue-bounded core
/// `a_1 b_1 a_2 b_2 ... a_l b_l`.
///
/// While the core is longer than `4(k+1)² + 1`: for each of the `k + 1`
/// blocks `A'_i` (odd-indexed `a`s among `2k + 1` consecutive ones) take the
/// first edge `a_p a_q`, let `b'_i = b_{p+1}`, take the first edge
/// `b'_i b'_j` and splice `a_1..a_p` `a_q..b'_i` (backwards) `b'_j..b_l`.
/// A missing edge means `α(G) > k`. Final length at most `4(k+1)² + 3`.
pub fn replace_independence(g: &Graph, m: &Matching, p: &AltPath, k: usize) -> Result<ReplaceResult, ReplaceError> {
    check_input(g, m, p)?;
    let threshold = 4 * (k + 1) * (k + 1) + 1;
    let parity = blue_bounded_core(m, p);
    on_core(g, m, p, parity, threshold as u64 + 2, |steps| {
        while steps.len() > threshold {
            let c = &steps.cur;
            // 1-based a_x and b_x
            let a = |x: usize| c[2 * (x - 1)];
            let b = |x: usize| c[2 * x - 1];
            let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(k + 1);
            for i in 1..=k + 1 {
                let odd: Vec<usize> = (1..=2 * k + 1)
                    .step_by(2)
                    .map(|j| (i - 1) * (2 * k + 2) + j)
                    .collect();
                let edge = odd
                    .iter()
                    .enumerate()
                    .find_map(|(t, &x)| odd[t + 1..].iter().find(|&&y| g.has_edge(a(x), a(y))).map(|&y| (x, y)))
                    .ok_or_else(|| ReplaceError::Hypothesis(format!("block {i} is independent, so alpha > {k}")))?;
                chosen.push(edge);
            }
            let (si, ti) = (0..chosen.len())
                .find_map(|i| {
                    (i + 1..chosen.len())
                        .find(|&j| g.has_edge(b(chosen[i].0 + 1), b(chosen[j].0 + 1)))
                        .map(|j| (i, j))
                })
                .ok_or_else(|| ReplaceError::Hypothesis(format!("the chosen b vertices are independent, so alpha > {k}")))?;
            let (pp, qq) = chosen[si];
            let s = pp + 1;
            let t = chosen[ti].0 + 1;
            let mut next: Vec<usize> = c[..=2 * (pp - 1)].to_vec();
            next.extend((2 * s - 1..=2 * (qq - 1)).rev().map(|i| c[i]));
            next.extend_from_slice(&c[2 * t - 1..]);
            steps.apply(next)?;
        }
        Ok(())
    })
}
