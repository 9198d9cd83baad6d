//! Face vectors of quotient cluster complexes: enumeration for base blocks,
//! products, and the corank-one recursion.

use super::{int, is_integer, ExactCount};
use crate::error::{Error, Result};
use crate::explorer::{count_faces, enumerate_exchange, Budget};
use crate::families::{build_named, build_special_framing, TnwSignature};
use crate::framing::{frame_principal, FramedQuiver};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// `by_rank[k]` is the number of rank-`k` subalgebras, so `by_rank[0]`
/// counts clusters and `by_rank[rank] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVector {
    pub by_rank: Vec<ExactCount>,
}

impl FaceVector {
    /// The rank-zero algebra.
    pub fn point() -> Self {
        Self { by_rank: vec![int(1)] }
    }

    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn clusters(&self) -> &ExactCount {
        &self.by_rank[0]
    }

    /// Subalgebras of corank `c`, i.e. faces with `c` variables.
    pub fn corank(&self, c: usize) -> &ExactCount {
        &self.by_rank[self.rank() - c]
    }

    /// Coranks `1..=rank`, the layout of the codimension tables.
    pub fn codim_row(&self) -> Vec<ExactCount> {
        (1..=self.rank()).map(|c| self.corank(c).clone()).collect()
    }

    pub fn from_codim_row(row: &[ExactCount]) -> Self {
        let mut by_rank: Vec<ExactCount> = row.iter().rev().cloned().collect();
        by_rank.push(int(1));
        Self { by_rank }
    }

    pub fn product(&self, other: &FaceVector) -> FaceVector {
        let mut by_rank = vec![ExactCount::zero(); self.rank() + other.rank() + 1];
        for (i, a) in self.by_rank.iter().enumerate() {
            for (j, b) in other.by_rank.iter().enumerate() {
                by_rank[i + j] += a * b;
            }
        }
        FaceVector { by_rank }
    }
}

pub fn product_faces(parts: &[FaceVector]) -> FaceVector {
    parts.iter().fold(FaceVector::point(), |acc, f| acc.product(f))
}

/// An indecomposable factor of a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    /// Catalog name of a finite type, e.g. `A_3`; `A_0` is the point.
    Finite(String),
    /// Affine T quiver, counted up to `γ` through the special framing.
    Affine(TnwSignature),
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Finite(name) => f.write_str(name),
            Block::Affine(sig) => write!(f, "{sig}"),
        }
    }
}

fn face_cache() -> &'static Mutex<HashMap<Block, FaceVector>> {
    static CACHE: OnceLock<Mutex<HashMap<Block, FaceVector>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn enumerate_faces(fq: &FramedQuiver, budget: &Budget) -> Result<FaceVector> {
    let ec = enumerate_exchange(fq, budget)?;
    if !ec.status.is_complete() {
        return Err(Error::IncompleteComplex);
    }
    let row = (1..=ec.rank).map(|c| count_faces(&ec, c).map(int)).collect::<Result<Vec<_>>>()?;
    Ok(FaceVector::from_codim_row(&row))
}

/// Face vector of a block by exchange enumeration: principal framing for
/// finite types, special framing for affine ones. Results are cached.
pub fn block_faces(block: &Block, budget: &Budget) -> Result<FaceVector> {
    if let Some(f) = face_cache().lock().expect("cache lock").get(block) {
        return Ok(f.clone());
    }
    let f = match block {
        Block::Finite(name) if name == "A_0" => FaceVector::point(),
        Block::Finite(name) => enumerate_faces(&frame_principal(&build_named(name)?.quiver)?, budget)?,
        Block::Affine(sig) => enumerate_faces(&build_special_framing(sig)?, budget)?,
    };
    face_cache().lock().expect("cache lock").insert(block.clone(), f.clone());
    Ok(f)
}

/// Corank-one subalgebras of an algebra of rank `rank`, each with its
/// multiplicity and face vector.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub rank: usize,
    pub parts: Vec<(ExactCount, FaceVector)>,
}

/// Every rank-`k` subalgebra lies in `rank - k` corank-one subalgebras, so
/// `C_k(A) = Σ m_B C_k(B) / (rank - k)`.
pub fn face_vector_from_decomposition(d: &Decomposition) -> Result<FaceVector> {
    if d.parts.is_empty() {
        return Err(Error::InconsistentDecomposition("empty decomposition".into()));
    }
    if let Some((_, f)) = d.parts.iter().find(|(_, f)| f.rank() + 1 != d.rank) {
        return Err(Error::InconsistentDecomposition(format!(
            "part of rank {} in an algebra of rank {}",
            f.rank(),
            d.rank
        )));
    }
    let mut by_rank = Vec::with_capacity(d.rank + 1);
    for k in 0..d.rank {
        let total: ExactCount = d.parts.iter().map(|(m, f)| m * &f.by_rank[k]).sum();
        let v = total / int(d.rank - k);
        if !is_integer(&v) {
            return Err(Error::InconsistentDecomposition(format!("rank-{k} count {v} is not an integer")));
        }
        by_rank.push(v);
    }
    by_rank.push(ExactCount::one());
    Ok(FaceVector { by_rank })
}

/// Number of rank-`k` subalgebras from a corank-one decomposition.
pub fn facet_recursion(d: &Decomposition, k: usize) -> Result<ExactCount> {
    let f = face_vector_from_decomposition(d)?;
    f.by_rank
        .get(k)
        .cloned()
        .ok_or_else(|| Error::Usage(format!("rank {k} exceeds {}", d.rank)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> FaceVector {
        FaceVector { by_rank: vec![int(2), int(1)] }
    }

    #[test]
    fn product_of_a1s() {
        let f = product_faces(&[a1(), a1()]);
        assert_eq!(f.by_rank, vec![int(4), int(4), int(1)]);
        assert_eq!(f.codim_row(), vec![int(4), int(4)]);
    }

    #[test]
    fn a2_from_five_a1() {
        // the pentagon: five variables, each freezing to A_1
        let d = Decomposition { rank: 2, parts: vec![(int(5), a1())] };
        assert_eq!(face_vector_from_decomposition(&d).unwrap().by_rank, vec![int(5), int(5), int(1)]);
    }

    #[test]
    fn empty_decomposition_fails() {
        let d = Decomposition { rank: 2, parts: vec![] };
        assert!(matches!(facet_recursion(&d, 0), Err(Error::InconsistentDecomposition(_))));
    }

    #[test]
    fn non_integral_fails() {
        let odd = FaceVector { by_rank: vec![int(1), int(1)] };
        let d = Decomposition { rank: 2, parts: vec![(int(3), odd)] };
        assert!(face_vector_from_decomposition(&d).is_err());
    }
}
