use serde::Serialize;

use super::{check_input, normalize_parity, shortcut, ReplaceError, ReplaceResult};
use crate::graph::{validate_replacement, AltPath, Graph, Matching};
use crate::params::{modular_bound, MDTree, NodeKind};

/// Counters and per-lemma maxima collected by [`replace_modular`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ModularStats {
    /// Shortcuts removing red (blue) entering or leaving edges of a module
    /// at prime nodes.
    pub prime_red: usize,
    pub prime_blue: usize,
    /// Shortcuts between red (blue) external edges at series nodes.
    pub series_red: usize,
    pub series_blue: usize,
    /// Largest number of edges of one subpath in `δ(M_i)` for a child
    /// module `M_i` of a prime node, after its reductions.
    pub max_border: usize,
    /// Largest number of blue (red) external edges of one subpath at a
    /// series node, after its reductions.
    pub max_series_blue: usize,
    pub max_series_red: usize,
}

/// Replacement following the modular decomposition bottom-up from the
/// root: at a prime node, reduce red and blue edges entering (and, on the
/// reversed path, leaving) each child module to at most two each; at a
/// series node, reduce red external edges to at most four and then blue
/// ones to at most two on the parity-normalized core; then recurse into
/// the maximal subpaths inside each child. Parallel nodes only recurse.
/// Final length at most `(21·mw)^md`.
pub fn replace_modular(g: &Graph, m: &Matching, p: &AltPath, tree: &MDTree) -> Result<ReplaceResult, ReplaceError> {
    check_input(g, m, p)?;
    tree.check(g).map_err(ReplaceError::Tree)?;
    let bound = modular_bound(tree.mw(), tree.md());
    let mut ctx = Ctx {
        g,
        m,
        tree,
        stats: ModularStats::default(),
        lengths: vec![p.len()],
        cur: p.len(),
    };
    let root = tree.root.expect("a checked tree of a graph with a path has a root");
    let out = AltPath::new(ctx.reduce(root, p.vertices().to_vec())?);
    if !validate_replacement(g, m, p, &out) {
        return Err(ReplaceError::Invalid {
            step: ctx.lengths.len() - 1,
            reason: "result does not replace the input".into(),
        });
    }
    Ok(ReplaceResult {
        path: out,
        steps: ctx.lengths.len() - 1,
        bound,
        lengths: ctx.lengths,
        modular: Some(ctx.stats),
    })
}

struct Ctx<'a> {
    g: &'a Graph,
    m: &'a Matching,
    tree: &'a MDTree,
    stats: ModularStats,
    lengths: Vec<usize>,
    /// Current length of the whole path.
    cur: usize,
}

impl Ctx<'_> {
    /// Checks that `new` replaces the subpath `old` and records the step.
    fn apply(&mut self, old: &[usize], new: Vec<usize>) -> Result<Vec<usize>, ReplaceError> {
        let step = self.lengths.len();
        let (o, n) = (AltPath::new(old.to_vec()), AltPath::new(new));
        if n.len() >= o.len() || !validate_replacement(self.g, self.m, &o, &n) {
            return Err(ReplaceError::Invalid {
                step,
                reason: format!("{:?} does not replace {:?}", n.vertices(), o.vertices()),
            });
        }
        self.cur -= o.len() - n.len();
        self.lengths.push(self.cur);
        Ok(n.into_vertices())
    }

    /// Child index of every vertex of `node`, `usize::MAX` elsewhere.
    fn owner(&self, node: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; self.g.n()];
        for (ci, &c) in self.tree.nodes[node].children.iter().enumerate() {
            for &v in &self.tree.nodes[c].vertices {
                owner[v] = ci;
            }
        }
        owner
    }

    fn reduce(&mut self, node: usize, q: Vec<usize>) -> Result<Vec<usize>, ReplaceError> {
        // paths of length at most 2 cannot shrink
        if q.len() <= 3 {
            return Ok(q);
        }
        let owner = self.owner(node);
        let q = match self.tree.nodes[node].kind {
            NodeKind::Leaf => return Ok(q),
            // a connected subpath stays inside one component
            NodeKind::Parallel => q,
            NodeKind::Series => self.series(&owner, q)?,
            NodeKind::Prime => self.prime(&owner, q)?,
        };
        let children = self.tree.nodes[node].children.clone();
        let mut out = Vec::with_capacity(q.len());
        let mut start = 0;
        for end in 1..=q.len() {
            if end == q.len() || owner[q[end]] != owner[q[start]] {
                let run = q[start..end].to_vec();
                out.extend(self.reduce(children[owner[q[start]]], run)?);
                start = end;
            }
        }
        Ok(out)
    }

    fn prime(&mut self, owner: &[usize], mut q: Vec<usize>) -> Result<Vec<usize>, ReplaceError> {
        let k = owner.iter().filter(|&&o| o != usize::MAX).max().map_or(0, |&o| o + 1);
        'outer: loop {
            for ci in 0..k {
                for reverse in [false, true] {
                    let mut oriented = q.clone();
                    if reverse {
                        oriented.reverse();
                    }
                    if let Some((mut next, red)) = self.entering_step(&oriented, |v| owner[v] == ci) {
                        if reverse {
                            next.reverse();
                        }
                        q = self.apply(&q, next)?;
                        if red {
                            self.stats.prime_red += 1;
                        } else {
                            self.stats.prime_blue += 1;
                        }
                        continue 'outer;
                    }
                }
            }
            break;
        }
        for ci in 0..k {
            let border = q
                .windows(2)
                .filter(|w| (owner[w[0]] == ci) != (owner[w[1]] == ci))
                .count();
            self.stats.max_border = self.stats.max_border.max(border);
        }
        Ok(q)
    }

    /// One shortcut removing red or blue edges entering the module, if three
    /// or more of that color enter it. Returns the new path and whether the
    /// red rule fired.
    fn entering_step(&self, q: &[usize], inside: impl Fn(usize) -> bool) -> Option<(Vec<usize>, bool)> {
        let m = self.m;
        let entering: Vec<usize> = (1..q.len()).filter(|&x| !inside(q[x - 1]) && inside(q[x])).collect();
        let (red, blue): (Vec<usize>, Vec<usize>) = entering.iter().partition(|&&x| m.is_red(q[x - 1], q[x]));
        if red.len() >= 3 {
            let (i1, ik) = (red[0], red[red.len() - 1]);
            return Some((shortcut(q, i1, ik - 1), true));
        }
        if blue.len() >= 3 {
            let (i1, ik) = (blue[0], blue[blue.len() - 1]);
            let to = if m.is_red(q[i1 - 1], q[ik]) {
                blue[blue.len() - 2]
            } else {
                ik
            };
            return Some((shortcut(q, i1 - 1, to), false));
        }
        None
    }

    fn series(&mut self, owner: &[usize], q: Vec<usize>) -> Result<Vec<usize>, ReplaceError> {
        let m = self.m;
        let parity = normalize_parity(m, &AltPath::new(q));
        let mut core = parity.core.vertices().to_vec();
        // external edges of one color as (position of first endpoint, from, to)
        let external = |c: &[usize], red: bool| -> Vec<(usize, usize, usize)> {
            (0..c.len().saturating_sub(1))
                .filter(|&x| owner[c[x]] != owner[c[x + 1]] && m.is_red(c[x], c[x + 1]) == red)
                .map(|x| (x, owner[c[x]], owner[c[x + 1]]))
                .collect()
        };
        loop {
            let r = external(&core, true);
            // r_i = v_i w_i, r_j = v_j w_j with i < j - 1 and t_i != s_j: w_i -> v_j
            let pick = (0..r.len()).find_map(|i| (i + 2..r.len()).rev().find(|&j| r[i].2 != r[j].1).map(|j| (i, j)));
            let Some((i, j)) = pick else { break };
            let next = shortcut(&core, r[i].0 + 1, r[j].0);
            core = self.apply(&core, next)?;
            self.stats.series_red += 1;
        }
        loop {
            let b = external(&core, false);
            // b_i = v_i w_i, b_j = v_j w_j with i < j and s_i != t_j: v_i -> w_j
            let pick = (0..b.len()).find_map(|i| (i + 1..b.len()).rev().find(|&j| b[i].1 != b[j].2).map(|j| (i, j)));
            let Some((i, j)) = pick else { break };
            let next = shortcut(&core, b[i].0, b[j].0 + 1);
            core = self.apply(&core, next)?;
            self.stats.series_blue += 1;
        }
        let q = parity.reattach(&AltPath::new(core)).into_vertices();
        let blue = external(&q, false).len();
        let red = external(&q, true).len();
        self.stats.max_series_blue = self.stats.max_series_blue.max(blue);
        self.stats.max_series_red = self.stats.max_series_red.max(red);
        Ok(q)
    }
}
