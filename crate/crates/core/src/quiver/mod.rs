//! Weighted quivers, mutation, exchange matrices and isomorphism.
//!
//! A quiver is stored as a signed arrow matrix `e` with `e[i][j] = -e[j][i]`.
//! Node weights encode a skew-symmetrizable exchange matrix: a node of weight
//! `w` stands for an orbit of `w` nodes in an unfolded simply-laced quiver.

mod canon;
mod text;

pub(crate) use canon::canonicalize_marked;
pub use canon::{automorphisms, automorphisms_with, canonicalize, canonicalize_with, find_isomorphism, CanonicalForm};
pub use text::{parse_quiver, write_quiver};

use crate::error::{Error, Result};
use std::fmt;

/// Largest arrow multiplicity we allow before reporting overflow.
const ARROW_LIMIT: i64 = 1 << 40;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedQuiver {
    n: usize,
    weights: Vec<u32>,
    frozen: Vec<bool>,
    e: Vec<i64>,
}

impl fmt::Debug for WeightedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "WeightedQuiver(n={}, weights={:?}, frozen={:?})", self.n, self.weights, self.frozen)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.e[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl WeightedQuiver {
    /// Quiver on `weights.len()` nodes with no arrows and nothing frozen.
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        let n = weights.len();
        Self::with_frozen(weights, vec![false; n])
    }

    pub fn with_frozen(weights: Vec<u32>, frozen: Vec<bool>) -> Result<Self> {
        if weights.len() != frozen.len() {
            return Err(Error::InvalidQuiver("weight and frozen lists differ in length".into()));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidQuiver(format!("node {i} has weight 0")));
        }
        let n = weights.len();
        Ok(Self { n, weights, frozen, e: vec![0; n * n] })
    }

    /// Builds a quiver from a full signed matrix given row by row.
    pub fn from_matrix(weights: Vec<u32>, frozen: Vec<bool>, rows: &[Vec<i64>]) -> Result<Self> {
        let mut q = Self::with_frozen(weights, frozen)?;
        if rows.len() != q.n || rows.iter().any(|r| r.len() != q.n) {
            return Err(Error::InvalidQuiver("matrix shape does not match node count".into()));
        }
        for i in 0..q.n {
            if rows[i][i] != 0 {
                return Err(Error::InvalidQuiver(format!("self loop at node {i}")));
            }
            for j in 0..q.n {
                if rows[i][j] != -rows[j][i] {
                    return Err(Error::InvalidQuiver(format!("matrix not skew at ({i}, {j})")));
                }
                if !(q.frozen[i] && q.frozen[j]) {
                    q.e[i * q.n + j] = rows[i][j];
                }
            }
        }
        Ok(q)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn frozen_flags(&self) -> &[bool] {
        &self.frozen
    }

    pub fn mutable_nodes(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.frozen[i]).collect()
    }

    pub fn mutable_count(&self) -> usize {
        self.frozen.iter().filter(|f| !**f).count()
    }

    /// Signed arrow count from `i` to `j`.
    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        self.e[i * self.n + j]
    }

    /// Adds `m` arrows from `i` to `j` (negative `m` removes them).
    pub fn add_arrows(&mut self, i: usize, j: usize, m: i64) -> Result<()> {
        if i >= self.n {
            return Err(Error::NodeOutOfRange(i));
        }
        if j >= self.n {
            return Err(Error::NodeOutOfRange(j));
        }
        if i == j {
            return Err(Error::InvalidQuiver(format!("self loop at node {i}")));
        }
        if self.frozen[i] && self.frozen[j] {
            return Ok(());
        }
        self.e[i * self.n + j] += m;
        self.e[j * self.n + i] -= m;
        Ok(())
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.e[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub(crate) fn raw(&self) -> &[i64] {
        &self.e
    }

    /// Quiver mutation at the mutable node `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::NodeOutOfRange(k));
        }
        if self.frozen[k] {
            return Err(Error::FrozenNode(k));
        }
        let n = self.n;
        let mut out = self.clone();
        let wk = self.weights[k] as i128;
        let ins: Vec<usize> = (0..n).filter(|&i| self.e[i * n + k] > 0).collect();
        let outs: Vec<usize> = (0..n).filter(|&j| self.e[k * n + j] > 0).collect();
        for &i in &ins {
            for &j in &outs {
                if self.frozen[i] && self.frozen[j] {
                    continue;
                }
                let wi = self.weights[i] as i128;
                let wj = self.weights[j] as i128;
                let num = self.e[i * n + k] as i128 * self.e[k * n + j] as i128 * wi.max(wk) * wj.max(wk);
                let den = wk * wi.max(wj);
                if num % den != 0 {
                    return Err(Error::MalformedWeight { i, j, k });
                }
                let add = num / den;
                let v = out.e[i * n + j] as i128 + add;
                if v.abs() > ARROW_LIMIT as i128 {
                    return Err(Error::ArrowOverflow(i, j));
                }
                out.e[i * n + j] = v as i64;
                out.e[j * n + i] = -(v as i64);
            }
        }
        for j in 0..n {
            out.e[k * n + j] = -out.e[k * n + j];
            out.e[j * n + k] = -out.e[j * n + k];
        }
        Ok(out)
    }

    pub fn mutate_path(&self, path: &[usize]) -> Result<Self> {
        let mut q = self.clone();
        for &k in path {
            q = q.mutate(k)?;
        }
        Ok(q)
    }

    /// Relabels nodes: node `i` of `self` becomes node `perm[i]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut weights = vec![0; n];
        let mut frozen = vec![false; n];
        let mut e = vec![0; n * n];
        for i in 0..n {
            weights[perm[i]] = self.weights[i];
            frozen[perm[i]] = self.frozen[i];
            for j in 0..n {
                e[perm[i] * n + perm[j]] = self.e[i * n + j];
            }
        }
        Self { n, weights, frozen, e }
    }

    /// Induced subquiver on `nodes`, in the given order.
    pub fn subquiver(&self, nodes: &[usize]) -> Self {
        let m = nodes.len();
        let mut e = vec![0; m * m];
        for (a, &i) in nodes.iter().enumerate() {
            for (b, &j) in nodes.iter().enumerate() {
                e[a * m + b] = self.e[i * self.n + j];
            }
        }
        Self {
            n: m,
            weights: nodes.iter().map(|&i| self.weights[i]).collect(),
            frozen: nodes.iter().map(|&i| self.frozen[i]).collect(),
            e,
        }
    }

    /// The subquiver on mutable nodes.
    pub fn mutable_part(&self) -> Self {
        self.subquiver(&self.mutable_nodes())
    }

    /// Copy with the listed nodes frozen; arrows between frozen nodes are dropped.
    pub fn freeze(&self, nodes: &[usize]) -> Self {
        let mut q = self.clone();
        for &i in nodes {
            q.frozen[i] = true;
        }
        for i in 0..q.n {
            for j in 0..q.n {
                if q.frozen[i] && q.frozen[j] {
                    q.e[i * q.n + j] = 0;
                }
            }
        }
        q
    }

    /// Connected components of the mutable part, as sorted node lists.
    pub fn mutable_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if self.frozen[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut idx = 0;
            while idx < comp.len() {
                let v = comp[idx];
                idx += 1;
                for u in 0..self.n {
                    if !self.frozen[u] && !seen[u] && self.e[v * self.n + u] != 0 {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Largest absolute arrow multiplicity.
    pub fn max_multiplicity(&self) -> i64 {
        self.e.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

/// Skew-symmetrizable exchange matrix with its symmetrizer `D = diag(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeMatrix {
    pub n: usize,
    pub entries: Vec<i64>,
    pub symmetrizer: Vec<u32>,
    pub frozen: Vec<bool>,
}

impl ExchangeMatrix {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Exact check that `ε D^{-1}` is skew-symmetric.
    pub fn is_skew_symmetrizable(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                // ε_ij / d_j = -ε_ji / d_i  <=>  ε_ij d_i = -ε_ji d_j
                self.get(i, j) as i128 * self.symmetrizer[i] as i128
                    == -(self.get(j, i) as i128) * self.symmetrizer[j] as i128
            })
        })
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }
}

/// `ε_ij = e_ij · max(w_i, w_j) / w_i`.
pub fn exchange_matrix(q: &WeightedQuiver) -> Result<ExchangeMatrix> {
    let n = q.n;
    let mut entries = vec![0; n * n];
    for i in 0..n {
        let wi = q.weights[i] as i64;
        for j in 0..n {
            let e = q.e[i * n + j];
            if e == 0 {
                continue;
            }
            let m = wi.max(q.weights[j] as i64);
            if (e * m) % wi != 0 {
                return Err(Error::MalformedWeight { i, j, k: i });
            }
            entries[i * n + j] = e * m / wi;
        }
    }
    Ok(ExchangeMatrix { n, entries, symmetrizer: q.weights.clone(), frozen: q.frozen.clone() })
}

/// Matrix mutation; entries between two frozen indices are kept at zero.
pub fn mutate_matrix(m: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    if k >= m.n {
        return Err(Error::NodeOutOfRange(k));
    }
    if m.frozen[k] {
        return Err(Error::FrozenNode(k));
    }
    let n = m.n;
    let mut out = m.clone();
    for i in 0..n {
        for j in 0..n {
            let v = if i == k || j == k {
                -m.get(i, j)
            } else if m.frozen[i] && m.frozen[j] {
                0
            } else {
                let a = m.get(i, k);
                let b = m.get(k, j);
                m.get(i, j) + (a.abs() * b + a * b.abs()) / 2
            };
            out.entries[i * n + j] = v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> WeightedQuiver {
        let mut q = WeightedQuiver::new(vec![1, 1]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        q
    }

    #[test]
    fn single_arrow_reverses() {
        let q = a2().mutate(0).unwrap();
        assert_eq!(q.arrows(1, 0), 1);
    }

    #[test]
    fn frozen_mutation_rejected() {
        let q = a2().freeze(&[1]);
        assert_eq!(q.mutate(1), Err(Error::FrozenNode(1)));
    }

    #[test]
    fn b2_exchange_matrix() {
        let mut q = WeightedQuiver::new(vec![1, 2]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        let m = exchange_matrix(&q).unwrap();
        assert_eq!(m.rows(), vec![vec![0, 2], vec![-1, 0]]);
        assert!(m.is_skew_symmetrizable());
    }

    #[test]
    fn rank_two_matrix_flip() {
        let m = exchange_matrix(&a2()).unwrap();
        assert_eq!(mutate_matrix(&m, 0).unwrap().rows(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn weight_121_path_gives_two_arrows() {
        // 0 -> 1 -> 2 with the middle node of weight 2 unfolds to a fork;
        // mutating the middle creates two arrows 0 -> 2.
        let mut q = WeightedQuiver::new(vec![1, 2, 1]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        q.add_arrows(1, 2, 1).unwrap();
        let r = q.mutate(1).unwrap();
        assert_eq!(r.arrows(0, 2), 2);
    }

    #[test]
    fn equal_weights_behave_unweighted() {
        let mut q = WeightedQuiver::new(vec![2, 2, 2]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        q.add_arrows(1, 2, 1).unwrap();
        assert_eq!(q.mutate(1).unwrap().arrows(0, 2), 1);
    }

    #[test]
    fn incompatible_weights_error() {
        let mut q = WeightedQuiver::new(vec![2, 3, 2]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        q.add_arrows(1, 2, 1).unwrap();
        assert!(matches!(exchange_matrix(&q), Err(Error::MalformedWeight { .. })));
    }
}
