//! Canonical labeling by colour refinement and individualization search.

use super::WeightedQuiver;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub canonical_quiver: WeightedQuiver,
    /// `relabeling[i]` is the canonical id of input node `i`.
    pub relabeling: Vec<usize>,
    /// Canonical byte encoding; equal encodings mean isomorphic quivers.
    pub encoding: Vec<u8>,
}

impl CanonicalForm {
    /// Fixed-width hex digest of the encoding.
    pub fn hash(&self) -> String {
        digest(&self.encoding)
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    hex::encode(&d[..16])
}

/// Canonical form up to isomorphisms that preserve weights, arrows and
/// frozen status.
pub fn canonicalize(q: &WeightedQuiver) -> CanonicalForm {
    canonicalize_with(q, false)
}

/// With `pin_frozen`, every frozen node keeps its own colour, so only
/// relabelings fixing the frozen nodes pointwise are considered.
pub fn canonicalize_with(q: &WeightedQuiver, pin_frozen: bool) -> CanonicalForm {
    let mut s = Search::new(q);
    let colors = initial_colors(q, pin_frozen, None);
    s.run(colors, &mut Vec::new());
    let (encoding, perm) = s.best.expect("search always reaches a leaf");
    CanonicalForm { canonical_quiver: q.permute(&perm), relabeling: perm, encoding }
}

/// Canonical form with one extra node distinguished (used to track a node
/// through isomorphism classes).
pub(crate) fn canonicalize_marked(q: &WeightedQuiver, mark: usize) -> CanonicalForm {
    let mut s = Search::new(q);
    let colors = initial_colors(q, false, Some(mark));
    s.run(colors, &mut Vec::new());
    let (mut encoding, perm) = s.best.expect("search always reaches a leaf");
    encoding.extend(varint(perm[mark] as u64));
    CanonicalForm { canonical_quiver: q.permute(&perm), relabeling: perm, encoding }
}

/// A relabeling `p` with `q.permute(p) == r`, if one exists.
pub fn find_isomorphism(q: &WeightedQuiver, r: &WeightedQuiver) -> Option<Vec<usize>> {
    if q.node_count() != r.node_count() {
        return None;
    }
    let cq = canonicalize(q);
    let cr = canonicalize(r);
    if cq.encoding != cr.encoding {
        return None;
    }
    let n = q.node_count();
    let mut inv_r = vec![0; n];
    for (i, &c) in cr.relabeling.iter().enumerate() {
        inv_r[c] = i;
    }
    Some((0..n).map(|i| inv_r[cq.relabeling[i]]).collect())
}

/// All automorphisms of `q` (relabelings fixing `q`), identity first.
pub fn automorphisms(q: &WeightedQuiver) -> Vec<Vec<usize>> {
    automorphisms_with(q, false)
}

/// Automorphisms, optionally only those fixing every frozen node.
pub fn automorphisms_with(q: &WeightedQuiver, pin_frozen: bool) -> Vec<Vec<usize>> {
    let n = q.node_count();
    let mut colors = initial_colors(q, pin_frozen, None);
    refine(q, &mut colors);
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    aut_backtrack(q, &colors, 0, &mut assign, &mut used, &mut out);
    out.sort();
    out
}

fn aut_backtrack(
    q: &WeightedQuiver,
    colors: &[usize],
    v: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = q.node_count();
    if v == n {
        out.push(assign.clone());
        return;
    }
    for t in 0..n {
        if used[t] || colors[t] != colors[v] {
            continue;
        }
        if (0..v).any(|u| q.arrows(u, v) != q.arrows(assign[u], t)) {
            continue;
        }
        assign[v] = t;
        used[t] = true;
        aut_backtrack(q, colors, v + 1, assign, used, out);
        used[t] = false;
        assign[v] = usize::MAX;
    }
}

fn initial_colors(q: &WeightedQuiver, pin_frozen: bool, mark: Option<usize>) -> Vec<usize> {
    let keys: Vec<(bool, u32, usize, bool)> = (0..q.node_count())
        .map(|i| {
            let frozen = q.is_frozen(i);
            let pin = if pin_frozen && frozen { i + 1 } else { 0 };
            (frozen, q.weight(i), pin, mark == Some(i))
        })
        .collect();
    rank(&keys)
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

/// Refines to the coarsest equitable partition finer than `colors`.
fn refine(q: &WeightedQuiver, colors: &mut Vec<usize>) {
    let n = q.node_count();
    let e = q.raw();
    let mut k = count_colors(colors);
    loop {
        let keys: Vec<(usize, Vec<(usize, i64)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, i64)> = (0..n)
                    .filter(|&u| e[v * n + u] != 0)
                    .map(|u| (colors[u], e[v * n + u]))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&keys);
        let k2 = count_colors(&next);
        *colors = next;
        if k2 == k {
            return;
        }
        k = k2;
    }
}

struct Search<'a> {
    q: &'a WeightedQuiver,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    auts: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(q: &'a WeightedQuiver) -> Self {
        Self { q, best: None, first: None, auts: Vec::new() }
    }

    fn run(&mut self, mut colors: Vec<usize>, prefix: &mut Vec<usize>) {
        refine(self.q, &mut colors);
        let n = self.q.node_count();
        if count_colors(&colors) == n {
            self.leaf(colors);
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap();
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let keys: Vec<(usize, bool)> =
                (0..n).map(|u| (colors[u], colors[u] == target && u != v)).collect();
            prefix.push(v);
            self.run(rank(&keys), prefix);
            prefix.pop();
        }
    }

    /// Whether `v` lies in the orbit of an already explored vertex under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.q.node_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for a in &self.auts {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let enc = encode(self.q, &perm);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == enc {
                let n = perm.len();
                let mut inv = vec![0; n];
                for (i, &p) in reference.1.iter().enumerate() {
                    inv[p] = i;
                }
                let aut: Vec<usize> = (0..n).map(|v| inv[perm[v]]).collect();
                if aut.iter().enumerate().any(|(i, &a)| i != a) {
                    self.auts.push(aut);
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((enc.clone(), perm.clone()));
        }
        if self.best.as_ref().map_or(true, |b| enc < b.0) {
            self.best = Some((enc, perm));
        }
    }
}

fn varint(x: u64) -> Vec<u8> {
    let mut out = Vec::new();
    let mut x = x;
    loop {
        let b = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(b);
            return out;
        }
        out.push(b | 0x80);
    }
}

fn zigzag(v: i64) -> u64 {
    ((v << 1) ^ (v >> 63)) as u64
}

/// Byte encoding of `q` relabeled by `perm`.
fn encode(q: &WeightedQuiver, perm: &[usize]) -> Vec<u8> {
    let n = q.node_count();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = varint(n as u64);
    for &v in &inv {
        out.push(q.is_frozen(v) as u8);
        out.extend(varint(q.weight(v) as u64));
    }
    for a in 0..n {
        for b in a + 1..n {
            out.extend(varint(zigzag(q.arrows(inv[a], inv[b]))));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> WeightedQuiver {
        let mut q = WeightedQuiver::new(vec![1, 1, 1]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        q.add_arrows(1, 2, 1).unwrap();
        q.add_arrows(2, 0, 1).unwrap();
        q
    }

    #[test]
    fn cycle_has_rotations() {
        assert_eq!(automorphisms(&cycle3()).len(), 3);
    }

    #[test]
    fn isomorphism_applies() {
        let q = cycle3();
        let mut r = q.clone();
        r.add_arrows(0, 1, 1).unwrap();
        let r2 = r.permute(&[2, 0, 1]);
        let p = find_isomorphism(&r, &r2).unwrap();
        assert_eq!(r.permute(&p), r2);
        assert!(find_isomorphism(&q, &r).is_none());
    }

    #[test]
    fn mutable_nodes_stay_low() {
        let mut q = WeightedQuiver::with_frozen(vec![1, 1, 1], vec![true, false, false]).unwrap();
        q.add_arrows(1, 0, 1).unwrap();
        let c = canonicalize(&q);
        assert_eq!(c.relabeling[0], 2);
    }
}
