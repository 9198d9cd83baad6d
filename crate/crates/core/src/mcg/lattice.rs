//! The abstract twist group Γ_τ = <γ, τ_i | τ_i^{n_i} = γ^{w_i}, abelian>,
//! handled through Smith normal form of its relation lattice and through its
//! embedding in ℤ × ∏ ℤ_{n_i}.

use crate::error::{Error, Result};
use crate::families::TnwSignature;
use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractTwistElement {
    pub z: i128,
    pub residues: Vec<i128>,
}

/// Order of a finitely generated abelian group with its invariant factors
/// (those greater than 1), or `None` for the order when infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOrder {
    pub order: Option<u128>,
    pub factors: Vec<i128>,
    pub free_rank: usize,
}

fn tail_weight(sig: &TnwSignature, i: usize) -> i128 {
    if sig.bc {
        1
    } else {
        sig.w[i] as i128
    }
}

fn ell(sig: &TnwSignature) -> i128 {
    sig.n.iter().map(|&x| x as i128).product()
}

/// `γ^a ∏ τ_i^{b_i}` as `(aℓ + Σ b_i w_i ℓ/n_i, b mod n)`.
pub fn abstract_element(sig: &TnwSignature, gamma_power: i64, twist_powers: &[i64]) -> Result<AbstractTwistElement> {
    if twist_powers.len() != sig.tails() {
        return Err(Error::Usage("one twist power per tail is required".into()));
    }
    let l = ell(sig);
    let mut z = gamma_power as i128 * l;
    let mut residues = Vec::new();
    for (i, &b) in twist_powers.iter().enumerate() {
        let ni = sig.n[i] as i128;
        z += b as i128 * tail_weight(sig, i) * l / ni;
        residues.push((b as i128).mod_floor(&ni));
    }
    Ok(AbstractTwistElement { z, residues })
}

/// Whether `x` lies in the subgroup generated by `γ = (ℓ, 0, …)` and
/// `τ_i = (w_i ℓ/n_i, e_i)`: writing `b_i = residue_i + n_i k_i`, membership
/// reduces to `ℓ | z - Σ residue_i w_i ℓ/n_i`.
pub fn contains(sig: &TnwSignature, x: &AbstractTwistElement) -> bool {
    if x.residues.len() != sig.tails() {
        return false;
    }
    let l = ell(sig);
    let mut rest = x.z;
    for (i, &r) in x.residues.iter().enumerate() {
        rest -= r * tail_weight(sig, i) * l / sig.n[i] as i128;
    }
    rest.mod_floor(&l) == 0
}

struct Smith {
    diag: Vec<i128>,
    /// Column transform: group coordinates `y = x V`.
    v: Vec<Vec<i128>>,
    cols: usize,
}

impl Smith {
    fn rank(&self) -> usize {
        self.diag.iter().filter(|&&d| d != 0).count()
    }

    fn quotient(&self) -> QuotientOrder {
        let factors: Vec<i128> = self.diag.iter().copied().filter(|&d| d > 1).collect();
        let free_rank = self.cols - self.rank();
        let order = (free_rank == 0).then(|| factors.iter().map(|&d| d as u128).product());
        QuotientOrder { order, factors, free_rank }
    }

    /// Order of the class of `x`, or `None` when infinite.
    fn element_order(&self, x: &[i128]) -> Option<u128> {
        let y: Vec<i128> = (0..self.cols).map(|j| (0..self.cols).map(|i| x[i] * self.v[i][j]).sum()).collect();
        let mut order: i128 = 1;
        for (j, &yj) in y.iter().enumerate() {
            let d = self.diag.get(j).copied().unwrap_or(0);
            if d == 0 {
                if yj != 0 {
                    return None;
                }
                continue;
            }
            order = order.lcm(&(d / d.gcd(&yj)));
        }
        Some(order as u128)
    }
}

/// Smith normal form of the row lattice of `a` (rows are relations).
fn smith(mut a: Vec<Vec<i128>>, cols: usize) -> Smith {
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();
    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in v.iter_mut() {
            row.swap(x, y);
        }
    };
    // col_j -= q col_t
    let col_op = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, j: usize, t: usize, q: i128| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= q * row[t];
        }
    };
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut pivot = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && pivot.map_or(true, |(_, _, m)| a[i][j].abs() < m) {
                        pivot = Some((i, j, a[i][j].abs()));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else { break };
            a.swap(t, pi);
            swap_cols(&mut a, &mut v, t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= q * p;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    col_op(&mut a, &mut v, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if t < rows && a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
        }
        diag.push(if t < rows { a[t][t] } else { 0 });
    }
    diag.resize(cols, 0);
    Smith { diag, v, cols }
}

/// Relations over generators `(γ, τ_1, …, τ_m)`: `n_i τ_i - w_i γ`, and
/// optionally `γ` itself.
fn relations(sig: &TnwSignature, kill_gamma: bool) -> Vec<Vec<i128>> {
    let m = sig.tails();
    let mut rows = Vec::new();
    for i in 0..m {
        let mut r = vec![0; m + 1];
        r[0] = -tail_weight(sig, i);
        r[i + 1] = sig.n[i] as i128;
        rows.push(r);
    }
    if kill_gamma {
        let mut r = vec![0; m + 1];
        r[0] = 1;
        rows.push(r);
    }
    rows
}

/// `|Γ_τ / <γ>|` and its invariant factors.
pub fn abstract_quotient_order(sig: &TnwSignature) -> QuotientOrder {
    smith(relations(sig, true), sig.tails() + 1).quotient()
}

/// `|Γ_τ°|`, the torsion subgroup (kernel of the projection to ℤ).
pub fn kernel_order(sig: &TnwSignature) -> u128 {
    let q = smith(relations(sig, false), sig.tails() + 1).quotient();
    q.factors.iter().map(|&d| d as u128).product()
}

/// Order of `r` in `Γ_τ / <γ>`.
pub fn abstract_r_order(sig: &TnwSignature) -> Option<u128> {
    let s = smith(relations(sig, true), sig.tails() + 1);
    let mut x = vec![0; sig.tails() + 1];
    for v in x.iter_mut().skip(1) {
        *v = 1;
    }
    s.element_order(&x)
}

/// Order of `γ^a ∏ τ_i^{b_i}` in Γ_τ (`None` when infinite).
pub fn element_order(sig: &TnwSignature, gamma_power: i64, twist_powers: &[i64]) -> Option<u128> {
    let s = smith(relations(sig, false), sig.tails() + 1);
    let mut x = vec![gamma_power as i128];
    x.extend(twist_powers.iter().map(|&b| b as i128));
    s.element_order(&x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: &[usize], w: &[u32]) -> TnwSignature {
        TnwSignature::new(n.to_vec(), w.to_vec()).unwrap()
    }

    #[test]
    fn apq_quotient() {
        let q = abstract_quotient_order(&sig(&[4, 6], &[1, 1]));
        assert_eq!(q.order, Some(24));
        assert_eq!(q.factors, vec![2, 12]);
    }

    #[test]
    fn e6_kernel() {
        assert_eq!(kernel_order(&sig(&[3, 3, 3], &[1, 1, 1])), 9);
        assert_eq!(kernel_order(&sig(&[2, 2, 2, 2], &[1, 1, 1, 1])), 8);
    }

    #[test]
    fn r_for_e8() {
        let s = sig(&[6, 3, 2], &[1, 1, 1]);
        let r = abstract_element(&s, 2 - 3, &[1, 1, 1]).unwrap();
        assert_eq!(r, AbstractTwistElement { z: 0, residues: vec![1, 1, 1] });
        assert_eq!(abstract_r_order(&s), Some(6));
        assert_eq!(element_order(&s, -1, &[1, 1, 1]), Some(6));
    }

    #[test]
    fn affine_r_has_infinite_order() {
        assert_eq!(element_order(&sig(&[2], &[1]), 1, &[1]), None);
    }
}
