//! Modular decomposition by recursive splitting.
//!
//! A node over vertex set `S` is parallel when `G[S]` is disconnected
//! (children: components), series when its complement is disconnected
//! (children: co-components), and prime otherwise. In the prime case the
//! maximal proper modules partition `S`; the one containing `v` is the union
//! of all minimal modules `m(u, v) ≠ S`. This is cubic-ish and meant for
//! correctness, not speed; [`MDTree::check`] validates every output.

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Prime,
    Series,
    Parallel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MDNode {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MDTree {
    pub nodes: Vec<MDNode>,
    /// `None` for the empty graph.
    pub root: Option<usize>,
}

/// Whether every vertex outside `s` sees all or none of `s`.
pub fn is_module(g: &Graph, s: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    let mut count = vec![0usize; g.n()];
    for &v in s {
        for &w in g.neighbors(v) {
            if !inside[w] {
                count[w] += 1;
            }
        }
    }
    count.iter().all(|&c| c == 0 || c == s.len())
}

/// Smallest module of `g[within]` containing `u` and `v`.
fn minimal_module(g: &Graph, in_s: &[bool], s_len: usize, u: usize, v: usize) -> Vec<bool> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut count = vec![0usize; n];
    let mut size = 0usize;
    let mut pending = vec![u, v];
    while let Some(x) = pending.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        size += 1;
        for &w in g.neighbors(x) {
            if in_s[w] {
                count[w] += 1;
            }
        }
        if size == s_len {
            break;
        }
        // any outside vertex with 0 < count < size splits the set
        for z in 0..n {
            if in_s[z] && !inside[z] && count[z] > 0 && count[z] < size {
                pending.push(z);
            }
        }
    }
    inside
}

impl MDTree {
    pub fn root_node(&self) -> Option<&MDNode> {
        self.root.map(|r| &self.nodes[r])
    }

    /// Largest number of children of a prime node, at least 2.
    pub fn mw(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.kind == NodeKind::Prime)
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
            .max(2)
    }

    /// Height of the tree with leaves at depth 0.
    pub fn md(&self) -> usize {
        self.root.map_or(0, |r| self.height(r))
    }

    fn height(&self, i: usize) -> usize {
        self.nodes[i]
            .children
            .iter()
            .map(|&c| 1 + self.height(c))
            .max()
            .unwrap_or(0)
    }

    pub fn has_prime(&self) -> bool {
        self.nodes.iter().any(|n| n.kind == NodeKind::Prime)
    }

    /// Validates the structure against `g`: children partition their parent,
    /// every node is a module, node kinds match the quotient, and prime
    /// children are maximal.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let Some(root) = self.root else {
            return if g.n() == 0 {
                Ok(())
            } else {
                Err("empty tree for a non-empty graph".into())
            };
        };
        if self.nodes[root].vertices != (0..g.n()).collect::<Vec<_>>() {
            return Err("root does not cover V".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if !is_module(g, &node.vertices) {
                return Err(format!("node {i} is not a module"));
            }
            if node.kind == NodeKind::Leaf {
                if node.vertices.len() != 1 || !node.children.is_empty() {
                    return Err(format!("leaf {i} malformed"));
                }
                continue;
            }
            if node.children.len() < 2 {
                return Err(format!("internal node {i} has fewer than two children"));
            }
            let mut union: Vec<usize> = node
                .children
                .iter()
                .flat_map(|&c| self.nodes[c].vertices.iter().copied())
                .collect();
            union.sort_unstable();
            if union != node.vertices {
                return Err(format!("children of node {i} do not partition it"));
            }
            let reps: Vec<usize> = node
                .children
                .iter()
                .map(|&c| self.nodes[c].vertices[0])
                .collect();
            let (q, _) = g.induced(&reps);
            let k = reps.len();
            match node.kind {
                NodeKind::Series if q.m() != k * (k - 1) / 2 => {
                    return Err(format!("series node {i} quotient is not complete"));
                }
                NodeKind::Parallel if q.m() != 0 => {
                    return Err(format!("parallel node {i} quotient has edges"));
                }
                NodeKind::Prime => {
                    if q.components().len() != 1 || q.complement().components().len() != 1 {
                        return Err(format!("prime node {i} quotient is degenerate"));
                    }
                    // no proper non-trivial module in the quotient
                    let full = vec![true; k];
                    for a in 0..k {
                        for b in a + 1..k {
                            let mm = minimal_module(&q, &full, k, a, b);
                            if mm.iter().filter(|&&x| x).count() != k {
                                return Err(format!("prime node {i} quotient has a module"));
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Modular decomposition tree of `g`.
pub fn modular_decomposition(g: &Graph) -> MDTree {
    let mut tree = MDTree {
        nodes: Vec::new(),
        root: None,
    };
    if g.n() > 0 {
        let all: Vec<usize> = (0..g.n()).collect();
        tree.root = Some(build(g, &all, &mut tree.nodes));
    }
    tree
}

fn build(g: &Graph, s: &[usize], nodes: &mut Vec<MDNode>) -> usize {
    if s.len() == 1 {
        nodes.push(MDNode {
            vertices: s.to_vec(),
            kind: NodeKind::Leaf,
            children: Vec::new(),
        });
        return nodes.len() - 1;
    }
    let (kind, parts) = split(g, s);
    let children = parts.iter().map(|p| build(g, p, nodes)).collect();
    nodes.push(MDNode {
        vertices: s.to_vec(),
        kind,
        children,
    });
    nodes.len() - 1
}

fn split(g: &Graph, s: &[usize]) -> (NodeKind, Vec<Vec<usize>>) {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let comps = g.components_within(&in_s);
    if comps.len() > 1 {
        return (NodeKind::Parallel, comps);
    }
    let co = co_components(g, s);
    if co.len() > 1 {
        return (NodeKind::Series, co);
    }
    let mut label = vec![usize::MAX; g.n()];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for &v in s {
        if label[v] != usize::MAX {
            continue;
        }
        let mut part = vec![false; g.n()];
        part[v] = true;
        for &u in s {
            // vertices already placed belong to another maximal module
            if u == v || part[u] || label[u] != usize::MAX {
                continue;
            }
            let mm = minimal_module(g, &in_s, s.len(), u, v);
            if mm.iter().filter(|&&x| x).count() < s.len() {
                for &x in s {
                    if mm[x] {
                        part[x] = true;
                    }
                }
            }
        }
        let members: Vec<usize> = s.iter().copied().filter(|&x| part[x]).collect();
        for &x in &members {
            label[x] = parts.len();
        }
        parts.push(members);
    }
    (NodeKind::Prime, parts)
}

/// Connected components of the complement of `g[s]`, each sorted, ordered
/// by smallest vertex.
fn co_components(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let mut unvisited: Vec<usize> = s.to_vec();
    let mut out = Vec::new();
    let mut adj_mark = vec![false; g.n()];
    while let Some(start) = unvisited.first().copied() {
        unvisited.retain(|&x| x != start);
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                adj_mark[w] = true;
            }
            let (next, keep): (Vec<usize>, Vec<usize>) =
                unvisited.iter().partition(|&&x| !adj_mark[x]);
            for &w in g.neighbors(v) {
                adj_mark[w] = false;
            }
            unvisited = keep;
            comp.extend(next);
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}
