use super::{check_input, shortcut, ReplaceError, ReplaceResult, Steps};
use crate::graph::{AltPath, Graph, Matching};

/// Shortcut for `k`-plexes (`δ(G) ≥ n − k`). While the path has length at
/// least `2k + 5`, jump from the first vertex that is exposed or entered by
/// a red edge to the latest vertex of `W = {v_j, v_{j-2}, ..., v_{j-2(k-1)}}`
/// it is adjacent to, where `v_j` is the last vertex that is exposed or
/// left by a red edge. Final length at most `2k + 4`.
pub fn replace_splex(g: &Graph, m: &Matching, p: &AltPath, k: usize) -> Result<ReplaceResult, ReplaceError> {
    check_input(g, m, p)?;
    if g.n() > 0 && g.min_degree() + k < g.n() {
        return Err(ReplaceError::Hypothesis(format!(
            "minimum degree {} is below n - k = {}",
            g.min_degree(),
            g.n() as i64 - k as i64
        )));
    }
    let bound = 2 * k as u64 + 4;
    let mut steps = Steps::new(g, m, p);
    while steps.len() >= 2 * k + 5 {
        let q = &steps.cur;
        let last = q.len() - 1;
        let red = |a: usize, b: usize| m.is_red(q[a], q[b]);
        let x = (0..=last)
            .find(|&x| m.is_exposed(q[x]) || (x > 0 && red(x - 1, x)))
            .expect("an alternating path of length two has a red edge or an exposed end");
        let y = (0..=last)
            .rev()
            .find(|&y| m.is_exposed(q[y]) || (y < last && red(y, y + 1)))
            .expect("an alternating path of length two has a red edge or an exposed end");
        let s = (0..k)
            .map(|t| y - 2 * t)
            .find(|&s| g.has_edge(q[x], q[s]))
            .ok_or_else(|| {
                ReplaceError::Hypothesis(format!("vertex {} has no neighbour among the {k} window vertices", q[x]))
            })?;
        let next = shortcut(q, x, s);
        steps.apply(next)?;
    }
    Ok(steps.finish(bound))
}
