//! Framed quivers, c-vectors, node colours and reddening sequences.

use crate::error::{Error, Result};
use crate::quiver::{canonicalize_with, exchange_matrix, write_quiver, WeightedQuiver};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameKind {
    Principal,
    Coframe,
    Special,
    Custom,
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FrameKind::Principal => "principal",
            FrameKind::Coframe => "coframe",
            FrameKind::Special => "special",
            FrameKind::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A quiver whose first `rank` nodes are mutable and the rest frozen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedQuiver {
    pub full: WeightedQuiver,
    pub kind: FrameKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Green,
    Red,
}

/// One row per mutable node, one column per frozen node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl CMatrix {
    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }
}

impl FramedQuiver {
    /// Wraps a quiver; mutable nodes must precede frozen ones.
    pub fn new(full: WeightedQuiver, kind: FrameKind) -> Result<Self> {
        let r = full.mutable_count();
        if (0..full.node_count()).any(|i| full.is_frozen(i) != (i >= r)) {
            return Err(Error::InvalidQuiver("mutable nodes must come before frozen nodes".into()));
        }
        Ok(Self { full, kind })
    }

    pub fn rank(&self) -> usize {
        self.full.mutable_count()
    }

    pub fn frozen_count(&self) -> usize {
        self.full.node_count() - self.rank()
    }

    pub fn base(&self) -> WeightedQuiver {
        self.full.mutable_part()
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        Ok(Self { full: self.full.mutate(k)?, kind: self.kind })
    }

    pub fn mutate_path(&self, path: &[usize]) -> Result<Self> {
        Ok(Self { full: self.full.mutate_path(path)?, kind: self.kind })
    }

    pub fn to_text(&self) -> String {
        write_quiver(&self.full, Some(&self.kind.to_string()))
    }
}

fn frame(q: &WeightedQuiver, kind: FrameKind) -> Result<FramedQuiver> {
    if q.mutable_count() != q.node_count() {
        return Err(Error::Usage("framing requires a quiver without frozen nodes".into()));
    }
    let n = q.node_count();
    let mut weights = q.weights().to_vec();
    weights.extend_from_slice(q.weights());
    let mut frozen = vec![false; n];
    frozen.extend(vec![true; n]);
    let mut full = WeightedQuiver::with_frozen(weights, frozen)?;
    for i in 0..n {
        for j in 0..n {
            if q.arrows(i, j) > 0 {
                full.add_arrows(i, j, q.arrows(i, j))?;
            }
        }
        match kind {
            FrameKind::Coframe => full.add_arrows(n + i, i, 1)?,
            _ => full.add_arrows(i, n + i, 1)?,
        }
    }
    FramedQuiver::new(full, kind)
}

/// The principal framing: a frozen `F_i` of weight `w_i` and an arrow `i -> F_i`.
pub fn frame_principal(q: &WeightedQuiver) -> Result<FramedQuiver> {
    frame(q, FrameKind::Principal)
}

/// The coframing: arrows `F_i -> i`.
pub fn frame_coframe(q: &WeightedQuiver) -> Result<FramedQuiver> {
    frame(q, FrameKind::Coframe)
}

/// `c_i^j = ε_{i, rank + j}`.
pub fn c_vectors(fq: &FramedQuiver) -> Result<CMatrix> {
    let m = exchange_matrix(&fq.full)?;
    let r = fq.rank();
    let n = fq.full.node_count();
    Ok(CMatrix { rows: (0..r).map(|i| (r..n).map(|j| m.get(i, j)).collect()).collect() })
}

pub fn row_color(row: &[i64], k: usize) -> Result<Color> {
    let pos = row.iter().any(|&x| x > 0);
    let neg = row.iter().any(|&x| x < 0);
    match (pos, neg) {
        (true, false) => Ok(Color::Green),
        (false, true) => Ok(Color::Red),
        _ => Err(Error::SignCoherence(k)),
    }
}

pub fn node_color(fq: &FramedQuiver, k: usize) -> Result<Color> {
    if k >= fq.rank() {
        return Err(Error::Usage(format!("node {k} is not mutable")));
    }
    let c = c_vectors(fq)?;
    row_color(&c.rows[k], k)
}

/// A relabeling of mutable nodes, extended by the identity on frozen
/// nodes, carrying `a` to `b`.
pub fn frozen_isomorphic(a: &FramedQuiver, b: &FramedQuiver) -> Result<Option<Vec<usize>>> {
    let (fa, fb) = (&a.full, &b.full);
    let n = fa.node_count();
    if n != fb.node_count()
        || a.rank() != b.rank()
        || (a.rank()..n).any(|i| fa.weight(i) != fb.weight(i))
    {
        return Err(Error::Usage("framed quivers have different frozen labels".into()));
    }
    let ca = canonicalize_with(fa, true);
    let cb = canonicalize_with(fb, true);
    if ca.encoding != cb.encoding {
        return Ok(None);
    }
    let mut inv_b = vec![0; n];
    for (i, &c) in cb.relabeling.iter().enumerate() {
        inv_b[c] = i;
    }
    Ok(Some((0..n).map(|i| inv_b[ca.relabeling[i]]).collect()))
}

/// Whether `path` takes the principal framing to one frozen-isomorphic to
/// the coframing with every mutable node red.
pub fn verify_reddening(q: &WeightedQuiver, path: &[usize]) -> bool {
    let check = || -> Result<bool> {
        let start = frame_principal(q)?;
        let end = start.mutate_path(path)?;
        let c = c_vectors(&end)?;
        for (k, row) in c.rows.iter().enumerate() {
            if row_color(row, k)? != Color::Red {
                return Ok(false);
            }
        }
        Ok(frozen_isomorphic(&end, &frame_coframe(q)?)?.is_some())
    };
    check().unwrap_or(false)
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
    fn single_node_frame() {
        let q = WeightedQuiver::new(vec![1]).unwrap();
        let f = frame_principal(&q).unwrap();
        assert_eq!(f.full.node_count(), 2);
        assert_eq!(f.full.arrows(0, 1), 1);
    }

    #[test]
    fn mutated_node_turns_red() {
        let f = frame_principal(&a2()).unwrap();
        assert!(c_vectors(&f).unwrap().is_identity());
        let g = f.mutate(0).unwrap();
        assert_eq!(c_vectors(&g).unwrap().rows[0], vec![-1, 0]);
        assert_eq!(node_color(&g, 0).unwrap(), Color::Red);
        assert_eq!(node_color(&g, 1).unwrap(), Color::Green);
        assert!(frozen_isomorphic(&f, &g).unwrap().is_none());
    }

    #[test]
    fn a2_reddening() {
        assert!(verify_reddening(&a2(), &[0, 1]));
        assert!(verify_reddening(&a2(), &[1, 0, 1]));
        assert!(!verify_reddening(&a2(), &[]));
    }
}
