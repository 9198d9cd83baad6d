//! Exhaustive enumeration: mutation classes, modular group generators,
//! exchange complexes under a framing, face counts and subalgebra types.

mod classify;
mod exchange;

pub use classify::{classify_subalgebra, double_edge_reachability, mutation_fingerprint, ReachabilityTable};
pub use exchange::{count_faces, enumerate_exchange, ExchangeComplex};

use crate::error::Result;
use crate::mcg::{invert, GroupElement};
use crate::quiver::{automorphisms, canonicalize, CanonicalForm, WeightedQuiver};
use rayon::prelude::*;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

/// Limits for a breadth-first enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_depth: usize,
    /// Rough cap on stored quiver data, in bytes.
    pub max_memory: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_vertices: 1_000_000, max_depth: usize::MAX, max_memory: 8 << 30 }
    }
}

impl Budget {
    pub fn vertices(max_vertices: usize) -> Self {
        Self { max_vertices, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    VertexLimit,
    DepthLimit,
    MemoryLimit,
}

impl Status {
    pub fn is_complete(self) -> bool {
        self == Status::Complete
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Complete => "COMPLETE",
            Status::VertexLimit => "TRUNCATED (vertex budget)",
            Status::DepthLimit => "TRUNCATED (depth budget)",
            Status::MemoryLimit => "TRUNCATED (memory budget)",
        })
    }
}

/// Approximate heap size of one stored quiver.
pub(crate) fn quiver_bytes(n: usize) -> usize {
    8 * n * n + 16 * n + 96
}

/// Checks a budget before admitting a vertex at `depth`.
pub(crate) fn budget_status(budget: &Budget, count: usize, depth: usize, bytes_each: usize) -> Option<Status> {
    if count >= budget.max_vertices {
        Some(Status::VertexLimit)
    } else if depth > budget.max_depth {
        Some(Status::DepthLimit)
    } else if count.saturating_mul(bytes_each) > budget.max_memory {
        Some(Status::MemoryLimit)
    } else {
        None
    }
}

/// A directed edge of the mutation class graph: mutating the representative
/// of `from` at `node` and relabeling by `relabel` gives the representative
/// of `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEdge {
    pub from: usize,
    pub node: usize,
    pub to: usize,
    pub relabel: Vec<usize>,
}

/// Undirected edge pairing `(a, node_a)` with its inverse `(b, node_b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UndirectedEdge {
    pub a: usize,
    pub node_a: usize,
    pub b: usize,
    pub node_b: usize,
}

impl UndirectedEdge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Debug)]
pub struct MutationClassGraph {
    /// The start quiver; group elements are anchored here.
    pub root: Arc<WeightedQuiver>,
    pub classes: Vec<CanonicalForm>,
    pub edges: Vec<ClassEdge>,
    pub undirected: Vec<UndirectedEdge>,
    /// Indices into `undirected`.
    pub spanning_tree: Vec<usize>,
    pub diameter: usize,
    pub status: Status,
    /// Per class: a path from the root and the relabeling taking
    /// `root.mutate_path(path)` to the class representative.
    tree_paths: Vec<(Vec<usize>, Vec<usize>)>,
}

impl MutationClassGraph {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn representative(&self, c: usize) -> &WeightedQuiver {
        &self.classes[c].canonical_quiver
    }

    /// Path from the root to class `c` along the spanning tree, with the
    /// relabeling onto the representative.
    pub fn tree_path(&self, c: usize) -> (&[usize], &[usize]) {
        let (p, s) = &self.tree_paths[c];
        (p, s)
    }

    /// The class containing `q`, if enumerated.
    pub fn class_of(&self, q: &WeightedQuiver) -> Option<usize> {
        let key = canonicalize(q).encoding;
        self.classes.iter().position(|c| c.encoding == key)
    }

    /// Undirected edge counts per class: `(loops, other incident edges)`.
    pub fn loop_profile(&self, c: usize) -> (usize, usize) {
        let loops = self.undirected.iter().filter(|e| e.is_loop() && e.a == c).count();
        let other = self.undirected.iter().filter(|e| !e.is_loop() && (e.a == c || e.b == c)).count();
        (loops, other)
    }

    /// `vertex <id> <hash>` and `edge <id> <node> <id>` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.classes.iter().enumerate() {
            out.push_str(&format!("vertex {i} {}\n", c.hash()));
        }
        for e in &self.edges {
            out.push_str(&format!("edge {} {} {}\n", e.from, e.node, e.to));
        }
        out
    }
}

/// Breadth-first search of the mutation class of `q` up to isomorphism.
pub fn enumerate_mutation_class(q: &WeightedQuiver, budget: &Budget) -> Result<MutationClassGraph> {
    let root = Arc::new(q.clone());
    let first = canonicalize(q);
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(first.encoding.clone(), 0);
    let mut tree_paths = vec![(Vec::new(), first.relabeling.clone())];
    let mut classes = vec![first];
    let mut depth_of = vec![0usize];
    let mut edges = Vec::new();
    let mut status = Status::Complete;
    let bytes = quiver_bytes(q.node_count());
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        let expanded: Vec<Vec<(usize, CanonicalForm)>> = frontier
            .par_iter()
            .map(|&c| {
                let rep = &classes[c].canonical_quiver;
                rep.mutable_nodes()
                    .into_iter()
                    .map(|k| Ok((k, canonicalize(&rep.mutate(k)?))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (&c, outs) in frontier.iter().zip(expanded) {
            for (k, cf) in outs {
                let to = match index.get(&cf.encoding) {
                    Some(&d) => d,
                    None => {
                        if let Some(s) = budget_status(budget, classes.len(), depth + 1, bytes) {
                            status = s;
                            continue;
                        }
                        let d = classes.len();
                        index.insert(cf.encoding.clone(), d);
                        let (path, phi) = &tree_paths[c];
                        let inv = invert(phi);
                        let mut p = path.clone();
                        p.push(inv[k]);
                        let sigma: Vec<usize> = phi.iter().map(|&x| cf.relabeling[x]).collect();
                        tree_paths.push((p, sigma));
                        classes.push(cf.clone());
                        depth_of.push(depth + 1);
                        next.push(d);
                        d
                    }
                };
                edges.push(ClassEdge { from: c, node: k, to, relabel: cf.relabeling });
            }
        }
        frontier = next;
        depth += 1;
    }
    edges.sort_by_key(|e| (e.from, e.node));
    let undirected = pair_edges(&edges);
    let spanning_tree = tree_edges(&undirected, &depth_of, &tree_paths, &edges);
    let diameter = if status.is_complete() { graph_diameter(classes.len(), &undirected) } else { 0 };
    Ok(MutationClassGraph { root, classes, edges, undirected, spanning_tree, diameter, status, tree_paths })
}

/// Pairs each directed edge `(a, k) -> b` between distinct classes with its
/// inverse `(b, ψ(k)) -> a`; every loop stays a loop of its own.
fn pair_edges(edges: &[ClassEdge]) -> Vec<UndirectedEdge> {
    let mut out = Vec::new();
    for e in edges {
        let back = e.relabel[e.node];
        let u = UndirectedEdge { a: e.from, node_a: e.node, b: e.to, node_b: back };
        if u.a == u.b || (u.a, u.node_a) < (u.b, u.node_b) {
            out.push(u);
        }
    }
    out.sort();
    out
}

/// Undirected edges used by the BFS tree: the first edge that reached each
/// class, recognized by its tree path.
fn tree_edges(
    undirected: &[UndirectedEdge],
    depth_of: &[usize],
    tree_paths: &[(Vec<usize>, Vec<usize>)],
    edges: &[ClassEdge],
) -> Vec<usize> {
    let mut parent_edge: HashMap<usize, (usize, usize)> = HashMap::new();
    for e in edges {
        if depth_of[e.to] == depth_of[e.from] + 1 && !parent_edge.contains_key(&e.to) {
            let (p, phi) = &tree_paths[e.from];
            let (q, _) = &tree_paths[e.to];
            let inv = invert(phi);
            if q.len() == p.len() + 1 && q[..p.len()] == p[..] && q[p.len()] == inv[e.node] {
                parent_edge.insert(e.to, (e.from, e.node));
            }
        }
    }
    let mut out: Vec<usize> = undirected
        .iter()
        .enumerate()
        .filter(|(_, u)| {
            parent_edge.get(&u.b) == Some(&(u.a, u.node_a)) || parent_edge.get(&u.a) == Some(&(u.b, u.node_b))
        })
        .map(|(i, _)| i)
        .collect();
    out.sort_unstable();
    out
}

fn graph_diameter(n: usize, undirected: &[UndirectedEdge]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for u in undirected {
        if !u.is_loop() {
            adj[u.a].push(u.b);
            adj[u.b].push(u.a);
        }
    }
    (0..n)
        .into_par_iter()
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut far = 0;
            while let Some(v) = queue.pop_front() {
                far = far.max(dist[v]);
                for &u in &adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            far
        })
        .max()
        .unwrap_or(0)
}

/// One element per non-tree undirected edge (the cycle through the tree)
/// plus, for each class, its automorphisms transported to the root.
pub fn modular_group_generators(g: &MutationClassGraph) -> Result<Vec<GroupElement>> {
    let root = &g.root;
    let mut out = Vec::new();
    let in_tree: std::collections::HashSet<usize> = g.spanning_tree.iter().copied().collect();
    for (i, u) in g.undirected.iter().enumerate() {
        if in_tree.contains(&i) {
            continue;
        }
        let edge = g
            .edges
            .iter()
            .find(|e| e.from == u.a && e.node == u.node_a)
            .expect("undirected edges come from directed ones");
        out.push(cycle_element(g, edge)?);
    }
    for c in 0..g.class_count() {
        let (path, phi) = &g.tree_paths[c];
        let inv_phi = invert(phi);
        for a in automorphisms(g.representative(c)).into_iter().skip(1) {
            // b = φ⁻¹ a φ is an automorphism of root.mutate_path(path).
            let b: Vec<usize> = phi.iter().map(|&x| inv_phi[a[x]]).collect();
            let mut p = path.clone();
            p.extend(path.iter().rev().map(|&k| b[k]));
            out.push(GroupElement::new(root.clone(), p, b)?);
        }
    }
    Ok(out)
}

/// The loop `root -> class(from) -> class(to) -> root` for one edge.
fn cycle_element(g: &MutationClassGraph, e: &ClassEdge) -> Result<GroupElement> {
    let (pc, phi_c) = &g.tree_paths[e.from];
    let (pd, phi_d) = &g.tree_paths[e.to];
    let inv_c = invert(phi_c);
    let inv_d = invert(phi_d);
    let mut path = pc.clone();
    path.push(inv_c[e.node]);
    // α = φ_d⁻¹ ψ φ_c carries root.mutate_path(path) onto root.mutate_path(pd).
    let alpha: Vec<usize> = phi_c.iter().map(|&x| inv_d[e.relabel[x]]).collect();
    let sigma = invert(&alpha);
    path.extend(pd.iter().rev().map(|&k| sigma[k]));
    GroupElement::new(g.root.clone(), path, sigma)
}
