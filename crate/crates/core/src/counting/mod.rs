//! Exact counting: Catalan machinery, affine variable and cluster counts,
//! the A_{p,q} and D̂_n recurrences, facet recursion, doubly extended
//! per-coset counts, truncated power series and table emitters.

mod doubly;
mod faces;
mod series;
mod tables;

pub use doubly::{
    doubly_extended_coset_count, doubly_extended_rows, doubly_extended_variable_count, tail_subalgebras,
    DoublyExtendedRow, TailSubalgebra,
};
pub use faces::{
    block_faces, facet_recursion, face_vector_from_decomposition, product_faces, Block, Decomposition, FaceVector,
};
pub use series::{series_identity_check, series_identity_ids, SeriesPoly, MAX_SERIES_ORDER};
pub use tables::{
    affine_groups_table, apq_table, d4_affine_table, d4_decomposition, doubly_extended_clusters_table,
    doubly_extended_codim_table, doubly_extended_decomposition, Cell, Table,
};

use crate::error::{Error, Result};
use crate::families::{chi, TnwSignature};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational count; final user-facing counts are integers.
pub type ExactCount = BigRational;

pub fn int(x: impl Into<BigInt>) -> ExactCount {
    BigRational::from_integer(x.into())
}

pub fn binom(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn middle_binom(i: u64) -> BigInt {
    binom(2 * i, i)
}

pub fn catalan(i: u64) -> BigInt {
    middle_binom(i) / BigInt::from(i + 1)
}

fn positive_chi(sig: &TnwSignature) -> Result<BigRational> {
    let c = chi(sig);
    if !c.is_positive() {
        return Err(Error::InvalidSignature(format!("{sig} is not affine (chi = {c})")));
    }
    Ok(c)
}

/// `Σ (n_i - 1) n_i + n/χ`, cluster variables up to `γ`.
pub fn affine_variable_count(sig: &TnwSignature) -> Result<ExactCount> {
    affine_variable_count_mod(sig, 1)
}

/// Variables up to `γ^ℓ`: `Σ (n_i - 1) n_i + ℓ n/χ`.
pub fn affine_variable_count_mod(sig: &TnwSignature, ell: u64) -> Result<ExactCount> {
    let c = positive_chi(sig)?;
    let regular: usize = sig.n.iter().map(|&ni| (ni - 1) * ni).sum();
    Ok(int(regular) + int(ell) * int(sig.rank()) / c)
}

/// `(2/χ) ∏ binom(2 n_i - 1, n_i)`, clusters up to `γ`.
pub fn affine_cluster_count(sig: &TnwSignature) -> Result<ExactCount> {
    let c = positive_chi(sig)?;
    let prod: BigInt = sig.n.iter().map(|&ni| binom(2 * ni as u64 - 1, ni as u64)).product();
    Ok(int(2) * int(prod) / c)
}

pub fn apq_closed(p: u64, q: u64) -> Result<ExactCount> {
    if p == 0 || q == 0 {
        return Err(Error::Usage("A_{p,q} needs p, q >= 1".into()));
    }
    Ok(int(p * q) / int(2 * (p + q)) * int(middle_binom(p) * middle_binom(q)))
}

/// `A_{1,q} = q C_q` and `A_{p+1,q} = 2 Σ_{i<p} C_i A_{p-i,q} + q C_{p+q}`.
pub fn apq_recurrence(p: u64, q: u64) -> Result<ExactCount> {
    if p == 0 || q == 0 {
        return Err(Error::Usage("A_{p,q} needs p, q >= 1".into()));
    }
    // a[m] = A_{m,q}
    let mut a: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(q) * catalan(q)];
    for m in 1..p {
        let mut next = BigInt::from(q) * catalan(m + q);
        for i in 0..m {
            next += 2 * catalan(i) * &a[(m - i) as usize];
        }
        a.push(next);
    }
    Ok(int(a[p as usize].clone()))
}

/// Clusters of finite type D_n, `(3n-2)/n binom(2(n-1), n-1)`, with `D_0 = 1`.
pub fn finite_d(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    BigInt::from(3 * n - 2) * binom(2 * (n - 1), n - 1) / BigInt::from(n)
}

/// `D̂_n = 9 (n-2) binom(2(n-2), n-2)`.
pub fn dn_closed(n: u64) -> Result<ExactCount> {
    if n < 3 {
        return Err(Error::Usage("D^_n needs n >= 3".into()));
    }
    Ok(int(BigInt::from(9 * (n - 2)) * middle_binom(n - 2)))
}

/// `D̂_3 = 18` and `D̂_{m+1} = 2 Σ_{i ≤ m-3} C_i D̂_{m-i} + 2 Σ_{j ≤ m} D_j D_{m-j}`.
pub fn dn_recurrence(n: u64) -> Result<ExactCount> {
    if n < 3 {
        return Err(Error::Usage("D^_n needs n >= 3".into()));
    }
    // d[m] = D̂_m for m >= 3
    let mut d: Vec<BigInt> = vec![BigInt::zero(); 3];
    d.push(BigInt::from(18));
    for m in 3..n {
        let mut next = BigInt::zero();
        for i in 0..=m - 3 {
            next += 2 * catalan(i) * &d[(m - i) as usize];
        }
        for j in 0..=m {
            next += 2 * finite_d(j) * finite_d(m - j);
        }
        d.push(next);
    }
    Ok(int(d[n as usize].clone()))
}

/// Cluster counts of finite types. The exceptional values are checked
/// against exchange enumeration in the tests.
pub fn finite_cluster_count(label: &str) -> Result<ExactCount> {
    let unknown = || Error::UnknownName(label.to_string());
    let (letter, num) = label.split_once('_').ok_or_else(unknown)?;
    let n: u64 = num.trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| unknown())?;
    let v = match (letter, n) {
        ("A", n) => catalan(n + 1),
        ("B" | "C", n) if n >= 2 => middle_binom(n),
        ("D", n) if n >= 2 => finite_d(n),
        ("E", 6) => BigInt::from(833),
        ("E", 7) => BigInt::from(4160),
        ("E", 8) => BigInt::from(25080),
        ("F", 4) => BigInt::from(105),
        ("G", 2) => BigInt::from(8),
        _ => return Err(unknown()),
    };
    Ok(int(v))
}

pub(crate) fn is_integer(x: &ExactCount) -> bool {
    x.denom().is_one()
}

/// Renders `p/q`, or `p` when integral.
pub fn fmt_count(x: &ExactCount) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: &[usize], w: &[u32]) -> TnwSignature {
        TnwSignature::new(n.to_vec(), w.to_vec()).unwrap()
    }

    #[test]
    fn catalan_by_convolution() {
        let mut c = vec![BigInt::one()];
        for n in 1..15usize {
            let s: BigInt = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
            c.push(s);
        }
        for (i, v) in c.iter().enumerate() {
            assert_eq!(&catalan(i as u64), v);
        }
        assert_eq!(catalan(5), BigInt::from(42));
    }

    #[test]
    fn binomials_by_factorial() {
        let fact = |m: u64| (1..=m).fold(BigInt::one(), |a, b| a * b);
        for a in 0..20 {
            for b in 0..=a {
                assert_eq!(binom(a, b), fact(a) / (fact(b) * fact(a - b)));
            }
        }
        assert_eq!(middle_binom(4), BigInt::from(70));
        assert_eq!(binom(3, 5), BigInt::zero());
    }

    #[test]
    fn affine_counts() {
        assert_eq!(affine_variable_count(&sig(&[2, 2, 2], &[1, 1, 1])).unwrap(), int(16));
        assert_eq!(affine_variable_count(&sig(&[2], &[1])).unwrap(), int(4));
        assert_eq!(affine_variable_count_mod(&sig(&[2], &[1]), 2).unwrap(), int(6));
        assert_eq!(affine_cluster_count(&sig(&[2, 2, 2], &[1, 1, 1])).unwrap(), int(108));
        assert_eq!(affine_cluster_count(&sig(&[4, 3, 2], &[1, 1, 1])).unwrap(), int(25200));
        assert!(affine_cluster_count(&sig(&[3, 3, 3], &[1, 1, 1])).is_err());
        assert!(affine_variable_count(&sig(&[4, 3, 3], &[1, 1, 1])).is_err());
    }

    #[test]
    fn affine_clusters_specialize() {
        for p in 2..=6u64 {
            for q in 2..=6u64 {
                let s = sig(&[p as usize, q as usize], &[1, 1]);
                assert_eq!(affine_cluster_count(&s).unwrap(), apq_closed(p, q).unwrap());
            }
            assert_eq!(affine_cluster_count(&sig(&[p as usize], &[1])).unwrap(), apq_closed(p, 1).unwrap());
        }
        for n in 4..=12u64 {
            let s = sig(&[n as usize - 2, 2, 2], &[1, 1, 1]);
            assert_eq!(affine_cluster_count(&s).unwrap(), dn_closed(n).unwrap());
        }
    }

    #[test]
    fn apq_routes_agree() {
        for p in 1..=10 {
            for q in 1..=10 {
                assert_eq!(apq_closed(p, q).unwrap(), apq_recurrence(p, q).unwrap(), "A_{{{p},{q}}}");
            }
        }
        assert_eq!(apq_closed(2, 1).unwrap(), int(4));
        assert_eq!(apq_closed(4, 4).unwrap(), int(4900));
        assert_eq!(apq_closed(2, 4).unwrap() * int(5), int(1400));
    }

    #[test]
    fn dn_routes_agree() {
        for n in 3..=12 {
            assert_eq!(dn_closed(n).unwrap(), dn_recurrence(n).unwrap(), "D^_{n}");
        }
        assert_eq!(dn_closed(4).unwrap(), int(108));
        assert_eq!(dn_closed(6).unwrap() * int(2), int(5040));
        assert_eq!(finite_d(3), catalan(4));
        assert!(dn_closed(2).is_err());
    }

    #[test]
    fn finite_labels() {
        assert_eq!(finite_cluster_count("A_2").unwrap(), int(5));
        assert_eq!(finite_cluster_count("D_4").unwrap(), int(50));
        assert_eq!(finite_cluster_count("B_3").unwrap(), int(20));
        assert!(finite_cluster_count("H_3").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_count(&(int(21910) / int(3))), "21910/3");
        assert_eq!(fmt_count(&int(7)), "7");
    }
}
