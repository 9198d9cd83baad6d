//! Cluster modular group elements `(P, σ)` on a fixed base quiver, the
//! named elements of T_{n,w} quivers, and relation checking.

mod lattice;
mod words;

pub use lattice::{
    abstract_element, abstract_quotient_order, abstract_r_order, contains, element_order, kernel_order,
    AbstractTwistElement, QuotientOrder,
};
pub use words::{parse_word, WordToken};

use crate::error::{Error, Result};
use crate::families::{build_tnw, chi, TnwSignature, N1, NINF};
use crate::framing::frame_principal;
use crate::quiver::{automorphisms, find_isomorphism, WeightedQuiver};
use num_traits::Zero;
use std::sync::Arc;

/// A mutation path paired with an isomorphism `σ: Q -> P(Q)`, where node `i`
/// of the base corresponds to node `σ[i]` of the mutated quiver.
#[derive(Clone, Debug)]
pub struct GroupElement {
    base: Arc<WeightedQuiver>,
    path: Vec<usize>,
    sigma: Vec<usize>,
}

impl GroupElement {
    /// Validates `σ` as an isomorphism from the base to `path(base)`.
    pub fn new(base: Arc<WeightedQuiver>, path: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        let n = base.node_count();
        if base.mutable_count() != n {
            return Err(Error::InvalidElement("base quiver must have no frozen nodes".into()));
        }
        if !is_permutation(&sigma, n) {
            return Err(Error::InvalidElement("sigma is not a permutation of the nodes".into()));
        }
        if let Some(&k) = path.iter().find(|&&k| k >= n) {
            return Err(Error::NodeOutOfRange(k));
        }
        let end = base.mutate_path(&path)?;
        if base.permute(&sigma) != end {
            return Err(Error::InvalidElement("sigma is not an isomorphism onto the mutated quiver".into()));
        }
        Ok(Self { base, path, sigma })
    }

    /// Like `new`, but looks for an isomorphism when `sigma` does not fit.
    pub fn with_fallback(base: Arc<WeightedQuiver>, path: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        match Self::new(base.clone(), path.clone(), sigma) {
            Ok(g) => Ok(g),
            Err(Error::InvalidElement(_)) => {
                let end = base.mutate_path(&path)?;
                let s = find_isomorphism(&base, &end)
                    .ok_or_else(|| Error::InvalidElement("mutation path does not return to the base class".into()))?;
                Self::new(base, path, s)
            }
            Err(e) => Err(e),
        }
    }

    pub fn identity(base: Arc<WeightedQuiver>) -> Self {
        let n = base.node_count();
        Self { base, path: Vec::new(), sigma: (0..n).collect() }
    }

    /// A quiver automorphism as a path-free element.
    pub fn automorphism(base: Arc<WeightedQuiver>, sigma: Vec<usize>) -> Result<Self> {
        Self::new(base, Vec::new(), sigma)
    }

    pub fn base(&self) -> &Arc<WeightedQuiver> {
        &self.base
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.base, &other.base) || *self.base == *other.base {
            Ok(())
        } else {
            Err(Error::InvalidElement("group elements have different base quivers".into()))
        }
    }

    /// `(P, σ)(R, τ) = (P·σ(R), στ)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let mut path = self.path.clone();
        path.extend(other.path.iter().map(|&k| self.sigma[k]));
        let sigma = other.sigma.iter().map(|&t| self.sigma[t]).collect();
        Self::new(self.base.clone(), path, sigma)
    }

    pub fn inverse(&self) -> Self {
        let inv = invert(&self.sigma);
        let path = self.path.iter().rev().map(|&k| inv[k]).collect();
        Self { base: self.base.clone(), path, sigma: inv }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let g = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.base.clone());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&g)?;
        }
        Ok(acc)
    }

    /// Whether σ, extended by the identity on frozen nodes, is an
    /// isomorphism from the principal framing to its image under the path.
    pub fn is_trivial(&self) -> bool {
        let Ok(framed) = frame_principal(&self.base) else { return false };
        let Ok(end) = framed.full.mutate_path(&self.path) else { return false };
        let n = self.sigma.len();
        let mut full_sigma = self.sigma.clone();
        full_sigma.extend(n..2 * n);
        framed.full.permute(&full_sigma) == end
    }

    /// Equality in the cluster modular group.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.compose(&other.inverse())?.is_trivial())
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Permutation on `n` nodes from cycles, e.g. `[[a, b, c]]` maps a→b→c→a.
pub fn perm_from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut seen = vec![false; n];
    for c in cycles {
        for (idx, &a) in c.iter().enumerate() {
            if a >= n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidElement(format!("bad cycle entry {a}")));
            }
            p[a] = c[(idx + 1) % c.len()];
        }
    }
    Ok(p)
}

/// Base quiver of a signature, shared between elements.
pub fn base_quiver(sig: &TnwSignature) -> Result<Arc<WeightedQuiver>> {
    Ok(Arc::new(build_tnw(sig)?))
}

fn check_base(base: &Arc<WeightedQuiver>, sig: &TnwSignature) -> Result<()> {
    if **base != build_tnw(sig)? {
        return Err(Error::InvalidElement("base quiver is not T for this signature".into()));
    }
    Ok(())
}

/// Tries the given relabeling and then its inverse.
fn either_direction(base: &Arc<WeightedQuiver>, path: Vec<usize>, sigma: Vec<usize>) -> Result<GroupElement> {
    match GroupElement::new(base.clone(), path.clone(), sigma.clone()) {
        Ok(g) => Ok(g),
        Err(Error::InvalidElement(_)) => GroupElement::new(base.clone(), path, invert(&sigma)),
        Err(e) => Err(e),
    }
}

/// The twist `τ_i` of tail `i` (0-based).
pub fn twist(base: &Arc<WeightedQuiver>, sig: &TnwSignature, i: usize) -> Result<GroupElement> {
    check_base(base, sig)?;
    if i >= sig.tails() {
        return Err(Error::Usage(format!("tail {i} does not exist")));
    }
    let weight = if sig.bc { 2 } else { sig.w[i] };
    let i2 = sig.tail_node(i, 2);
    let mut path = sig.tail_odd(i);
    path.extend(sig.tail_even(i));
    let n = base.node_count();
    let id: Vec<usize> = (0..n).collect();
    match weight {
        1 => {
            path.extend([i2, NINF, N1]);
            either_direction(base, path, perm_from_cycles(n, &[vec![i2, NINF, N1]])?)
        }
        2 => {
            path.extend([i2, NINF, N1, i2, N1]);
            GroupElement::new(base.clone(), path, id)
        }
        3 => {
            path.extend([i2, NINF, N1, i2, NINF, i2, N1]);
            GroupElement::new(base.clone(), path, id)
        }
        w => Err(Error::NoTwist { tail: i, weight: w }),
    }
}

/// `γ = (N_∞, (N_1 N_∞))`; for T^BC, mutation at the weight-4 node and then
/// the weight-1 node.
pub fn gamma(base: &Arc<WeightedQuiver>, sig: &TnwSignature) -> Result<GroupElement> {
    check_base(base, sig)?;
    let n = base.node_count();
    if sig.bc {
        return GroupElement::with_fallback(base.clone(), vec![NINF, N1], (0..n).collect());
    }
    GroupElement::new(base.clone(), vec![NINF], perm_from_cycles(n, &[vec![N1, NINF]])?)
}

/// `r = γ² ∏ τ_i γ^{-w_i}`, or `γ ∏ τ_i γ^{-1}` for T^BC.
pub fn reddening_element(base: &Arc<WeightedQuiver>, sig: &TnwSignature) -> Result<GroupElement> {
    let g = gamma(base, sig)?;
    let mut r = g.pow(if sig.bc { 1 } else { 2 })?;
    for i in 0..sig.tails() {
        let t = twist(base, sig, i)?;
        let wi = if sig.bc { 1 } else { sig.w[i] as i64 };
        r = r.compose(&t)?.compose(&g.pow(-wi)?)?;
    }
    Ok(r)
}

/// Reorders tails so the first is longest, with the smallest weight among
/// the longest.
pub fn delta_order(sig: &TnwSignature) -> TnwSignature {
    let mut tails: Vec<(usize, u32)> = sig.n.iter().copied().zip(sig.w.iter().copied()).collect();
    let best = (0..tails.len())
        .min_by_key(|&i| (std::cmp::Reverse(tails[i].0), tails[i].1, i))
        .unwrap_or(0);
    if !tails.is_empty() {
        let t = tails.remove(best);
        tails.insert(0, t);
    }
    TnwSignature { n: tails.iter().map(|t| t.0).collect(), w: tails.iter().map(|t| t.1).collect(), bc: sig.bc }
}

/// Source–sink path of the star `T'` inside T: `N_1`, odd tail nodes, even
/// tail nodes, then every `i_2`.
pub fn source_sink_path(sig: &TnwSignature) -> Vec<usize> {
    let mut path = vec![N1];
    for i in 0..sig.tails() {
        path.extend(sig.tail_odd(i));
    }
    for i in 0..sig.tails() {
        path.extend(sig.tail_even(i));
    }
    for i in 0..sig.tails() {
        path.push(sig.tail_node(i, 2));
    }
    path
}

/// `δ = (s^k, σ)` with `k = (n_1 - 1)/w_1 = 1/(χ' n_1)`, where χ' is χ of
/// the signature with the first tail shortened by one. The signature must
/// already be in `delta_order`.
pub fn delta(base: &Arc<WeightedQuiver>, sig: &TnwSignature) -> Result<GroupElement> {
    check_base(base, sig)?;
    if sig.bc || !chi(sig).is_zero() {
        return Err(Error::InvalidSignature("delta needs a T_{n,w} signature with chi = 0".into()));
    }
    if delta_order(sig) != *sig {
        return Err(Error::InvalidSignature("tails must be in delta order (longest first)".into()));
    }
    let (n1, w1) = (sig.n[0], sig.w[0] as usize);
    if (n1 - 1) % w1 != 0 {
        return Err(Error::InvalidSignature(format!("(n_1 - 1)/w_1 = {}/{} is not an integer", n1 - 1, w1)));
    }
    let s = source_sink_path(sig);
    let path: Vec<usize> = std::iter::repeat(s).take((n1 - 1) / w1).flatten().collect();
    let n = base.node_count();
    GroupElement::with_fallback(base.clone(), path, (0..n).collect())
}

/// Automorphisms of T as path-free elements, identity excluded.
pub fn automorphism_elements(base: &Arc<WeightedQuiver>) -> Result<Vec<GroupElement>> {
    automorphisms(base)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .map(|p| GroupElement::automorphism(base.clone(), p))
        .collect()
}

/// Automorphism of T permuting whole tails: `tail_perm[i]` is the image of
/// tail `i`. Tails mapped to each other must have equal length and weight.
pub fn tail_automorphism(base: &Arc<WeightedQuiver>, sig: &TnwSignature, tail_perm: &[usize]) -> Result<GroupElement> {
    check_base(base, sig)?;
    let n = base.node_count();
    let mut p: Vec<usize> = (0..n).collect();
    for (i, &t) in tail_perm.iter().enumerate() {
        if sig.n[i] != sig.n[t] || sig.w[i] != sig.w[t] {
            return Err(Error::InvalidElement(format!("tails {i} and {t} differ")));
        }
        for j in 2..=sig.n[i] {
            p[sig.tail_node(i, j)] = sig.tail_node(t, j);
        }
    }
    GroupElement::automorphism(base.clone(), p)
}

/// Whether the product of `g^e` over the word is trivial.
pub fn verify_relation(base: &Arc<WeightedQuiver>, word: &[(GroupElement, i64)]) -> Result<bool> {
    let mut acc = GroupElement::identity(base.clone());
    for (g, e) in word {
        acc = acc.compose(&g.pow(*e)?)?;
    }
    Ok(acc.is_trivial())
}

/// The named generators of a signature, built lazily for word evaluation.
pub struct NamedElements {
    pub sig: TnwSignature,
    pub base: Arc<WeightedQuiver>,
}

impl NamedElements {
    pub fn new(sig: &TnwSignature) -> Result<Self> {
        Ok(Self { sig: sig.clone(), base: base_quiver(sig)? })
    }

    pub fn tau(&self, i: usize) -> Result<GroupElement> {
        twist(&self.base, &self.sig, i)
    }

    pub fn gamma(&self) -> Result<GroupElement> {
        gamma(&self.base, &self.sig)
    }

    pub fn r(&self) -> Result<GroupElement> {
        reddening_element(&self.base, &self.sig)
    }

    pub fn delta(&self) -> Result<GroupElement> {
        delta(&self.base, &self.sig)
    }

    pub fn tails(&self, perm: &[usize]) -> Result<GroupElement> {
        tail_automorphism(&self.base, &self.sig, perm)
    }

    /// Evaluates a parsed word to its product.
    pub fn evaluate(&self, word: &[WordToken]) -> Result<GroupElement> {
        let mut acc = GroupElement::identity(self.base.clone());
        for tok in word {
            let (g, e) = self.token(tok)?;
            acc = acc.compose(&g.pow(e)?)?;
        }
        Ok(acc)
    }

    fn token(&self, tok: &WordToken) -> Result<(GroupElement, i64)> {
        let n = self.base.node_count();
        Ok(match tok {
            WordToken::Tau(i, e) => (self.tau(*i)?, *e),
            WordToken::Gamma(e) => (self.gamma()?, *e),
            WordToken::Delta(e) => (self.delta()?, *e),
            WordToken::R(e) => (self.r()?, *e),
            WordToken::Aut(cycles, e) => {
                (GroupElement::automorphism(self.base.clone(), perm_from_cycles(n, cycles)?)?, *e)
            }
            WordToken::Tails(cycles, e) => (self.tails(&perm_from_cycles(self.sig.tails(), cycles)?)?, *e),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<WeightedQuiver> {
        let mut q = WeightedQuiver::new(vec![1, 1]).unwrap();
        q.add_arrows(0, 1, 1).unwrap();
        Arc::new(q)
    }

    #[test]
    fn pentagon_element_has_order_five() {
        let g = GroupElement::new(a2(), vec![0], vec![1, 0]).unwrap();
        assert!(!g.is_trivial());
        for k in 1..5 {
            assert!(!g.pow(k).unwrap().is_trivial());
        }
        assert!(g.pow(5).unwrap().is_trivial());
    }

    #[test]
    fn inverse_cancels() {
        let g = GroupElement::new(a2(), vec![0], vec![1, 0]).unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_trivial());
        assert!(g.inverse().compose(&g).unwrap().is_trivial());
    }

    #[test]
    fn double_mutation_is_trivial() {
        let g = GroupElement::new(a2(), vec![1, 1], vec![0, 1]).unwrap();
        assert!(g.is_trivial());
    }

    #[test]
    fn bad_sigma_rejected() {
        assert!(GroupElement::new(a2(), vec![0], vec![0, 1]).is_err());
    }
}
