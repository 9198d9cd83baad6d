//! Exchange graph enumeration modulo frozen isomorphism, with cluster
//! variables tracked by gluing the unmutated positions along each edge.

use super::{budget_status, quiver_bytes, Budget, Status};
use crate::error::{Error, Result};
use crate::framing::FramedQuiver;
use crate::quiver::{automorphisms_with, canonicalize_with, CanonicalForm, WeightedQuiver};
use rayon::prelude::*;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct ExchangeComplex {
    pub rank: usize,
    /// Canonical framed quivers, one per vertex.
    pub vertices: Vec<CanonicalForm>,
    /// `(vertex, mutable slot, vertex)`, one per expanded slot.
    pub edges: Vec<(usize, usize, usize)>,
    /// Per edge, the image in the target vertex of each slot.
    slot_maps: Vec<Vec<usize>>,
    /// Nontrivial slot permutations from frozen automorphisms.
    slot_symmetries: Vec<(usize, Vec<usize>)>,
    pub status: Status,
    /// Vertices whose framed quiver has a nontrivial automorphism fixing the
    /// frozen nodes; their slots are glued along it.
    pub symmetric_vertices: Vec<usize>,
    /// Variable id of each `(vertex, slot)`, row-major.
    variables: Vec<usize>,
    variable_count: usize,
}

impl ExchangeComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    /// Variable ids of the cluster at `v`, one per slot.
    pub fn cluster(&self, v: usize) -> &[usize] {
        &self.variables[v * self.rank..(v + 1) * self.rank]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.vertices.iter().enumerate() {
            out.push_str(&format!("vertex {i} {}\n", c.hash()));
        }
        for &(a, k, b) in &self.edges {
            out.push_str(&format!("edge {a} {k} {b}\n"));
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn slot_of(q: &WeightedQuiver) -> Vec<usize> {
    let mut slot = vec![usize::MAX; q.node_count()];
    for (s, v) in q.mutable_nodes().into_iter().enumerate() {
        slot[v] = s;
    }
    slot
}

/// Breadth-first enumeration of framed seeds up to isomorphisms fixing the
/// frozen nodes.
pub fn enumerate_exchange(fq: &FramedQuiver, budget: &Budget) -> Result<ExchangeComplex> {
    let rank = fq.rank();
    let first = canonicalize_with(&fq.full, true);
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(first.encoding.clone(), 0);
    let mut vertices = vec![first];
    let mut edges = Vec::new();
    let mut glue: Vec<(usize, usize)> = Vec::new();
    let mut status = Status::Complete;
    let bytes = quiver_bytes(fq.full.node_count());
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        let expanded: Vec<Vec<(usize, CanonicalForm)>> = frontier
            .par_iter()
            .map(|&v| {
                let rep = &vertices[v].canonical_quiver;
                rep.mutable_nodes()
                    .into_iter()
                    .map(|k| Ok((k, canonicalize_with(&rep.mutate(k)?, true))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for (&v, outs) in frontier.iter().zip(expanded) {
            let rep = &vertices[v].canonical_quiver;
            let slots_v = slot_of(rep);
            let mut pending = Vec::new();
            for (k, cf) in outs {
                let u = match index.get(&cf.encoding) {
                    Some(&u) => u,
                    None => {
                        if let Some(s) = budget_status(budget, vertices.len() + pending.len(), depth + 1, bytes) {
                            status = s;
                            continue;
                        }
                        let u = vertices.len() + pending.len();
                        index.insert(cf.encoding.clone(), u);
                        pending.push(cf.clone());
                        next.push(u);
                        u
                    }
                };
                let slots_u = slot_of(&cf.canonical_quiver);
                let mut map = vec![0; rank];
                for j in rep.mutable_nodes() {
                    map[slots_v[j]] = slots_u[cf.relabeling[j]];
                    if j != k {
                        glue.push((v * rank + slots_v[j], u * rank + slots_u[cf.relabeling[j]]));
                    }
                }
                edges.push(((v, slots_v[k], u), map));
            }
            vertices.extend(pending);
        }
        frontier = next;
        depth += 1;
    }
    let symmetric: Vec<(usize, Vec<Vec<usize>>)> = vertices
        .par_iter()
        .enumerate()
        .filter_map(|(v, c)| {
            let auts = automorphisms_with(&c.canonical_quiver, true);
            (auts.len() > 1).then_some((v, auts))
        })
        .collect();
    let mut uf = UnionFind { parent: (0..vertices.len() * rank).collect() };
    for (a, b) in glue {
        uf.union(a, b);
    }
    let mut slot_symmetries = Vec::new();
    for (v, auts) in &symmetric {
        let slots = slot_of(&vertices[*v].canonical_quiver);
        for a in auts.iter().skip(1) {
            let mut perm = vec![0; rank];
            for j in vertices[*v].canonical_quiver.mutable_nodes() {
                perm[slots[j]] = slots[a[j]];
                uf.union(v * rank + slots[j], v * rank + slots[a[j]]);
            }
            slot_symmetries.push((*v, perm));
        }
    }
    let mut dense: HashMap<usize, usize> = HashMap::new();
    let variables: Vec<usize> = (0..vertices.len() * rank)
        .map(|s| {
            let r = uf.find(s);
            let next = dense.len();
            *dense.entry(r).or_insert(next)
        })
        .collect();
    edges.sort_unstable();
    let (edges, slot_maps) = edges.into_iter().unzip();
    Ok(ExchangeComplex {
        rank,
        vertices,
        edges,
        slot_maps,
        slot_symmetries,
        status,
        symmetric_vertices: symmetric.into_iter().map(|(v, _)| v).collect(),
        variable_count: dense.len(),
        variables,
    })
}

/// Number of faces with `codim` variables: pairs (vertex, slot subset)
/// glued along every mutation outside the subset, so that a face is one
/// connected piece of its star. `codim = rank` counts vertices, `codim = 1`
/// variables.
pub fn count_faces(ec: &ExchangeComplex, codim: usize) -> Result<u64> {
    if !ec.status.is_complete() {
        return Err(Error::IncompleteComplex);
    }
    let n = ec.rank;
    if codim == 0 || codim > n {
        return Err(Error::Usage(format!("codimension must be between 1 and {n}")));
    }
    let all: Vec<usize> = (0..n).collect();
    let subs = subsets(&all, codim);
    let index: HashMap<Vec<usize>, usize> = subs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let per = subs.len();
    let image = |s: &[usize], map: &[usize]| -> usize {
        let mut t: Vec<usize> = s.iter().map(|&x| map[x]).collect();
        t.sort_unstable();
        index[&t]
    };
    let mut uf = UnionFind { parent: (0..ec.vertex_count() * per).collect() };
    for (&(v, k, u), map) in ec.edges.iter().zip(&ec.slot_maps) {
        for (i, s) in subs.iter().enumerate() {
            if !s.contains(&k) {
                uf.union(v * per + i, u * per + image(s, map));
            }
        }
    }
    for (v, perm) in &ec.slot_symmetries {
        for (i, s) in subs.iter().enumerate() {
            uf.union(v * per + i, v * per + image(s, perm));
        }
    }
    let count = (0..ec.vertex_count() * per).filter(|&x| uf.find(x) == x).count();
    Ok(count as u64)
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
