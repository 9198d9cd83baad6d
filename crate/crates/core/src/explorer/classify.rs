//! Mutation-type identification of subalgebras obtained by freezing, and
//! the double-edge reachability search.

use super::{enumerate_mutation_class, Budget, MutationClassGraph};
use crate::error::Result;
use crate::families::{build_markov, build_named, build_tnw, chi, classify, Family, TnwSignature, TypeLabel};
use crate::quiver::{canonicalize, canonicalize_marked, WeightedQuiver};
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Mutex, OnceLock};

/// Largest mutation class explored when fingerprinting.
const FINGERPRINT_LIMIT: usize = 200_000;

/// The least canonical encoding over the mutation class, with the class
/// size; `None` when the class exceeds `limit`.
pub fn mutation_fingerprint(q: &WeightedQuiver, limit: usize) -> Result<Option<(Vec<u8>, usize)>> {
    let g = enumerate_mutation_class(q, &Budget::vertices(limit))?;
    if !g.status.is_complete() {
        return Ok(None);
    }
    let min = g.classes.iter().map(|c| &c.encoding).min().cloned().unwrap_or_default();
    Ok(Some((min, g.class_count())))
}

fn normalize_weights(q: &WeightedQuiver) -> Result<WeightedQuiver> {
    let g = q.weights().iter().fold(0u32, |a, &b| a.gcd(&b)).max(1);
    let weights: Vec<u32> = q.weights().iter().map(|w| w / g).collect();
    WeightedQuiver::from_matrix(weights, q.frozen_flags().to_vec(), &q.matrix_rows())
}

/// Same arrows with weights `W / w_i`, `W` the lcm: the Langlands dual.
fn dual(q: &WeightedQuiver) -> Result<WeightedQuiver> {
    let l = q.weights().iter().fold(1u32, |a, &b| a.lcm(&b));
    let weights: Vec<u32> = q.weights().iter().map(|w| l / w).collect();
    normalize_weights(&WeightedQuiver::from_matrix(weights, q.frozen_flags().to_vec(), &q.matrix_rows())?)
}

fn weight_key(q: &WeightedQuiver) -> Vec<u32> {
    let mut w = q.weights().to_vec();
    w.sort_unstable();
    w
}

/// T signatures of a given rank with χ ≥ 0 and weights at most 3, tails
/// sorted longest first.
fn signatures_of_rank(rank: usize) -> Vec<TnwSignature> {
    fn rec(left: usize, max: (usize, u32), cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for n in (2..=left + 1).rev() {
            for w in 1..=3u32 {
                if (n, w) > max {
                    continue;
                }
                cur.push((n, w));
                rec(left - (n - 1), (n, w), cur, out);
                cur.pop();
            }
        }
    }
    if rank < 2 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    rec(rank - 2, (usize::MAX, u32::MAX), &mut Vec::new(), &mut raw);
    let mut out = Vec::new();
    for tails in raw {
        let sig = TnwSignature::new(tails.iter().map(|t| t.0).collect(), tails.iter().map(|t| t.1).collect());
        if let Ok(sig) = sig {
            if !chi(&sig).is_negative() {
                out.push(sig);
            }
        }
    }
    for n in 2..rank {
        if let Ok(sig) = TnwSignature::bc(vec![n]) {
            if sig.rank() == rank {
                out.push(sig);
            }
        }
    }
    out
}

/// Catalog quivers of a given rank, finite types first.
fn catalog(rank: usize) -> Vec<(TypeLabel, WeightedQuiver)> {
    let mut out = Vec::new();
    let mut finite = vec![format!("A_{rank}")];
    if rank >= 2 {
        finite.push(format!("B_{rank}"));
        finite.push(format!("C_{rank}"));
    }
    if rank >= 4 {
        finite.push(format!("D_{rank}"));
    }
    match rank {
        2 => finite.push("G_2".into()),
        4 => finite.push("F_4".into()),
        6..=8 => finite.push(format!("E_{rank}")),
        _ => {}
    }
    for name in finite {
        if let Ok(seed) = build_named(&name) {
            out.push((TypeLabel::named(Family::Finite, name), seed.quiver));
        }
    }
    for sig in signatures_of_rank(rank) {
        let label = classify(&sig);
        if label.name.is_some() {
            if let Ok(q) = build_tnw(&sig) {
                out.push((label, q));
            }
        }
    }
    if rank == 3 {
        if let Ok(q) = build_markov() {
            out.push((TypeLabel::named(Family::DoublyExtended, "A1^(1,1)"), q));
        }
    }
    out
}

type Fingerprint = Option<(Vec<u8>, usize)>;

fn fingerprint_cache() -> &'static Mutex<HashMap<Vec<u8>, Fingerprint>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u8>, Fingerprint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_fingerprint(q: &WeightedQuiver) -> Result<Fingerprint> {
    let key = canonicalize(q).encoding;
    if let Some(f) = fingerprint_cache().lock().expect("cache lock").get(&key) {
        return Ok(f.clone());
    }
    let f = mutation_fingerprint(q, FINGERPRINT_LIMIT)?;
    fingerprint_cache().lock().expect("cache lock").insert(key, f.clone());
    Ok(f)
}

fn unknown() -> TypeLabel {
    TypeLabel { family: Family::Unknown, name: None }
}

/// Identifies a connected quiver without frozen nodes against the catalog.
pub(crate) fn identify(component: &WeightedQuiver) -> Result<TypeLabel> {
    let q = normalize_weights(component)?;
    let n = q.node_count();
    if n == 1 {
        return Ok(TypeLabel::named(Family::Finite, "A_1"));
    }
    let Some(fp) = cached_fingerprint(&q)? else { return Ok(unknown()) };
    let dq = dual(&q)?;
    let own = weight_key(&q);
    let dual_key = weight_key(&dq);
    let dual_fp = if dual_key != own { cached_fingerprint(&dq)? } else { None };
    for (label, cand) in catalog(n) {
        let key = weight_key(&cand);
        if key == own {
            if cached_fingerprint(&cand)?.as_ref().map(|f| f == &fp).unwrap_or(false) {
                return Ok(label);
            }
        } else if key == dual_key {
            if let Some(dfp) = &dual_fp {
                if cached_fingerprint(&cand)?.as_ref() == Some(dfp) {
                    let name = label.name.map(|s| format!("dual({s})"));
                    return Ok(TypeLabel { family: label.family, name });
                }
            }
        }
    }
    Ok(unknown())
}

/// Freezes `frozen_set` and labels each connected mutable component; the
/// empty list is the trivial (empty) product.
pub fn classify_subalgebra(q: &WeightedQuiver, frozen_set: &[usize]) -> Result<Vec<TypeLabel>> {
    let f = q.freeze(frozen_set);
    let mut labels = f
        .mutable_components()
        .into_iter()
        .map(|comp| identify(&f.subquiver(&comp).mutable_part()))
        .collect::<Result<Vec<_>>>()?;
    labels.sort();
    Ok(labels)
}

/// For each class representative and node, a mutation path avoiding the
/// node that reaches a quiver with a multiple arrow not touching it.
#[derive(Clone, Debug)]
pub struct ReachabilityTable {
    pub graph: MutationClassGraph,
    /// `paths[class][node]`, in the representative's labeling.
    pub paths: Vec<Vec<Option<Vec<usize>>>>,
}

impl ReachabilityTable {
    pub fn all_reached(&self) -> bool {
        self.paths.iter().all(|row| row.iter().all(Option::is_some))
    }
}

fn double_edge_avoiding(q: &WeightedQuiver, v: usize) -> bool {
    let n = q.node_count();
    (0..n).any(|a| a != v && (a + 1..n).any(|b| b != v && q.arrows(a, b).abs() >= 2))
}

fn reach_from(start: &WeightedQuiver, v: usize, limit: usize) -> Result<Option<Vec<usize>>> {
    if double_edge_avoiding(start, v) {
        return Ok(Some(Vec::new()));
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(canonicalize_marked(start, v).encoding);
    let mut queue = VecDeque::from([(start.clone(), Vec::new())]);
    while let Some((q, path)) = queue.pop_front() {
        for k in q.mutable_nodes() {
            if k == v {
                continue;
            }
            let m = q.mutate(k)?;
            if !seen.insert(canonicalize_marked(&m, v).encoding) {
                continue;
            }
            let mut p: Vec<usize> = path.clone();
            p.push(k);
            if double_edge_avoiding(&m, v) {
                return Ok(Some(p));
            }
            if seen.len() >= limit {
                return Ok(None);
            }
            queue.push_back((m, p));
        }
    }
    Ok(None)
}

/// Shortest such paths for every class of the mutation class of `q`.
pub fn double_edge_reachability(q: &WeightedQuiver, budget: &Budget) -> Result<ReachabilityTable> {
    let graph = enumerate_mutation_class(q, budget)?;
    let jobs: Vec<(usize, usize)> = (0..graph.class_count())
        .flat_map(|c| graph.representative(c).mutable_nodes().into_iter().map(move |v| (c, v)))
        .collect();
    let found = jobs
        .par_iter()
        .map(|&(c, v)| reach_from(graph.representative(c), v, budget.max_vertices))
        .collect::<Result<Vec<_>>>()?;
    let n = q.node_count();
    let mut paths = vec![vec![None; n]; graph.class_count()];
    for (&(c, v), p) in jobs.iter().zip(found) {
        paths[c][v] = p;
    }
    Ok(ReachabilityTable { graph, paths })
}
