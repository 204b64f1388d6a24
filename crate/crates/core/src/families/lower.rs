//! Lower-bound constructions on paths and on trivially perfect graphs.

use super::{FamilyError, FamilyInstance};
use crate::graph::{AltPath, Graph};
use crate::util::ceil_sqrt;

/// The path `G_j`: `P_3` (left edge matched) followed by `H_2, ..., H_j`,
/// each glued to the previous right end by identifying endpoints. `H_i` is
/// two copies of `P_{2i}` sharing an end, `4i − 1` vertices, with every
/// second edge of each copy matched so that each copy holds one augmenting
/// path of length `2i − 1`. Phase `i ≥ 2` takes the left copy of `H_i`.
/// `|V| = 2j² + 1`.
pub fn gen_path_lb(j: usize) -> Result<FamilyInstance, FamilyError> {
    if j == 0 {
        return Err(FamilyError::Params("path family needs j >= 1".into()));
    }
    let n = 2 * j * j + 1;
    let g = Graph::path(n);
    let mut first = vec![AltPath::new(vec![0, 1])];
    let mut later = Vec::new();
    let mut labels = vec![("h1".to_string(), 0)];
    let mut start = 2;
    for i in 2..=j {
        let at = |x: usize| start + x;
        // left copy: positions 0..2i-1, right copy: 2i-1..4i-2
        first.extend((1..2 * i - 2).step_by(2).map(|x| AltPath::new(vec![at(x), at(x + 1)])));
        first.extend((2 * i..4 * i - 3).step_by(2).map(|x| AltPath::new(vec![at(x), at(x + 1)])));
        later.push(vec![AltPath::new((0..2 * i).map(at).collect())]);
        labels.push((format!("h{i}"), start));
        start += 4 * i - 2;
    }
    debug_assert_eq!(start, n - 1);
    let mut phases = vec![first];
    phases.extend(later);
    let mut inst = FamilyInstance::new(g, "pathlb", &[("j", j as u64)]).with_plan(phases);
    inst.meta.labels.extend(labels);
    Ok(inst)
}

/// `H = (G_0 ∪ G_1 ∪ ... ∪ G_s) × v` with `s = ⌈√n⌉`, `G_1 = P_2` and
/// `G_{i+1} = (G_i ∪ w_{i+1}) × v_{i+1}`. The phase-1 matching takes the
/// edge of `G_1`, the edges `v_{i+1} w_i` inside each copy of `G_i` for
/// `i ≥ 2`, and `v` with the `G_0` copy. Phase `i ≥ 2` takes the unique
/// path `w_i v_i w_{i−1} ... v_2 w_1 u_1` of length `2i − 1` in the copy of
/// `G_i`. `|V| = s² + s + 2`.
///
/// Vertex ids: `G_0` is 0, the copy of `G_i` occupies `i(i−1)+1 ..= i(i+1)`
/// laid out as `u_1, w_1, w_2, v_2, ..., w_i, v_i`, and `v` is last.
pub fn gen_cograph_lb(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Params("cograph family needs n >= 1".into()));
    }
    let s = ceil_sqrt(n as u64) as usize;
    let total = s * s + s + 2;
    let apex = total - 1;
    let mut edges = vec![(0, apex)];
    let mut first = vec![AltPath::new(vec![0, apex])];
    let mut later = Vec::new();
    let mut labels = vec![("u0".to_string(), 0), ("v".to_string(), apex)];
    for i in 1..=s {
        let base = i * (i - 1) + 1;
        let u1 = base;
        let w = |r: usize| if r == 1 { base + 1 } else { base + 2 * r - 2 };
        let v = |r: usize| base + 2 * r - 1;
        let verts: Vec<usize> = (base..base + 2 * i).collect();
        edges.push((u1, w(1)));
        for r in 2..=i {
            // v_r is joined to everything built before it
            for &x in &verts[..2 * r - 1] {
                edges.push((x, v(r)));
            }
        }
        edges.extend(verts.iter().map(|&x| (x, apex)));
        if i == 1 {
            first.push(AltPath::new(vec![u1, w(1)]));
        } else {
            first.extend((1..i).map(|r| AltPath::new(vec![w(r), v(r + 1)])));
            let mut path = vec![w(i)];
            for r in (2..=i).rev() {
                path.extend([v(r), w(r - 1)]);
            }
            path.push(u1);
            later.push(vec![AltPath::new(path)]);
        }
        labels.push((format!("u1@G{i}"), u1));
        for r in 1..=i {
            labels.push((format!("w{r}@G{i}"), w(r)));
            if r >= 2 {
                labels.push((format!("v{r}@G{i}"), v(r)));
            }
        }
    }
    let g = Graph::new(total, edges)?;
    let mut phases = vec![first];
    phases.extend(later);
    let mut inst = FamilyInstance::new(g, "cographlb", &[("n", n as u64), ("s", s as u64)]).with_plan(phases);
    inst.meta.labels.extend(labels);
    Ok(inst)
}
