//! Truncated integer power series and the generating-function identities
//! behind the A_{p,q} and D̂_n counts.

use super::{apq_closed, catalan, dn_closed, finite_d, int, is_integer, middle_binom};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

pub const MAX_SERIES_ORDER: usize = 400;

/// Coefficients of `x^0..=x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<BigInt>,
}

impl SeriesPoly {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> BigInt) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    /// `c x^k`.
    pub fn monomial(order: usize, k: usize, c: i64) -> Self {
        Self::from_fn(order, |i| if i == k { BigInt::from(c) } else { BigInt::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `x^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |i| if i >= k { self.coeffs[i - k].clone() } else { BigInt::zero() })
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Termwise derivative, truncated one order lower.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        Self::from_fn(n.saturating_sub(1), |i| if i < n { &self.coeffs[i + 1] * BigInt::from(i + 1) } else { BigInt::zero() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Multiplicative inverse; the constant term must be ±1.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::Usage("series inverse needs a unit constant term".into()));
        }
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let s: BigInt = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -(s * c0);
        }
        Ok(Self { coeffs: out })
    }
}

fn common(a: &SeriesPoly, b: &SeriesPoly) -> usize {
    a.order().min(b.order())
}

impl Add for &SeriesPoly {
    type Output = SeriesPoly;
    fn add(self, b: &SeriesPoly) -> SeriesPoly {
        SeriesPoly::from_fn(common(self, b), |i| &self.coeffs[i] + &b.coeffs[i])
    }
}

impl Sub for &SeriesPoly {
    type Output = SeriesPoly;
    fn sub(self, b: &SeriesPoly) -> SeriesPoly {
        SeriesPoly::from_fn(common(self, b), |i| &self.coeffs[i] - &b.coeffs[i])
    }
}

impl Mul for &SeriesPoly {
    type Output = SeriesPoly;
    fn mul(self, b: &SeriesPoly) -> SeriesPoly {
        SeriesPoly::from_fn(common(self, b), |k| (0..=k).map(|i| &self.coeffs[i] * &b.coeffs[k - i]).sum())
    }
}

impl Neg for &SeriesPoly {
    type Output = SeriesPoly;
    fn neg(self) -> SeriesPoly {
        self.scale(-1)
    }
}

fn one(order: usize) -> SeriesPoly {
    SeriesPoly::monomial(order, 0, 1)
}

/// `C(x) = Σ C_i x^i`.
fn catalan_series(order: usize) -> SeriesPoly {
    SeriesPoly::from_fn(order, |i| catalan(i as u64))
}

/// `B(x) = Σ binom(2i, i) x^i`.
fn middle_series(order: usize) -> SeriesPoly {
    SeriesPoly::from_fn(order, |i| middle_binom(i as u64))
}

/// `C_⌊k⌋(x) = Σ_{i<k} C_i x^i`.
fn catalan_head(order: usize, k: usize) -> SeriesPoly {
    SeriesPoly::from_fn(order, |i| if i < k { catalan(i as u64) } else { BigInt::zero() })
}

/// `1 - 2x C(x)`.
fn one_minus_2xc(order: usize) -> SeriesPoly {
    &one(order) - &catalan_series(order).shift(1).scale(2)
}

/// `D(x) = Σ D_i x^i` from the finite D formula.
fn d_series(order: usize) -> SeriesPoly {
    SeriesPoly::from_fn(order, |i| finite_d(i as u64))
}

fn to_int(x: super::ExactCount) -> Result<BigInt> {
    if !is_integer(&x) {
        return Err(Error::InconsistentDecomposition(format!("non-integral coefficient {x}")));
    }
    Ok(x.numer().clone())
}

/// Identity names accepted by [`series_identity_check`]; `lemma:q` and
/// `apq:q` take `q ≥ 1`.
pub fn series_identity_ids() -> Vec<String> {
    let mut ids: Vec<String> = ["catalan-functional", "square-root", "inverse-is-b", "b-cubed-derivative", "d-series", "dhat-functional", "dhat-closed"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for q in 1..=4 {
        ids.push(format!("lemma:{q}"));
        ids.push(format!("apq:{q}"));
    }
    ids
}

/// Expands both sides of a named identity to `order` and compares them
/// coefficientwise.
pub fn series_identity_check(id: &str, order: usize) -> Result<bool> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::Usage(format!("series order is limited to {MAX_SERIES_ORDER}")));
    }
    let n = order;
    let c = catalan_series(n);
    let b = middle_series(n);
    let (lhs, rhs) = match id {
        // C = 1 + x C²
        "catalan-functional" => (c.clone(), &one(n) + &(&c * &c).shift(1)),
        // (1 - 2xC)² = 1 - 4x
        "square-root" => {
            let s = one_minus_2xc(n);
            (&s * &s, &one(n) - &SeriesPoly::monomial(n, 1, 4))
        }
        // (1 - 2xC)^{-1} = B
        "inverse-is-b" => (one_minus_2xc(n).inverse()?, b),
        // 2B³ = B'
        "b-cubed-derivative" => {
            let wide = middle_series(n + 1);
            ((&(&b * &b) * &b).scale(2), wide.derivative())
        }
        // D = 3xB - 2xC + 1
        "d-series" => (d_series(n), &(&b.shift(1).scale(3) - &c.shift(1).scale(2)) + &one(n)),
        // D̂ = 2xC D̂ + 2x(D² - 1 - 2x)
        "dhat-functional" => {
            let dhat = dhat_series(n)?;
            let d = d_series(n);
            let inner = &(&(&d * &d) - &one(n)) - &SeriesPoly::monomial(n, 1, 2);
            (dhat.clone(), &(&c * &dhat).shift(1).scale(2) + &inner.shift(1).scale(2))
        }
        // D̂ = 18 x³ B³
        "dhat-closed" => (dhat_series(n)?, (&(&b * &b) * &b).shift(3).scale(18)),
        _ => {
            let (kind, q) = id.split_once(':').ok_or_else(|| Error::UnknownName(id.to_string()))?;
            let q: usize = q.parse().map_err(|_| Error::UnknownName(id.to_string()))?;
            if q == 0 {
                return Err(Error::UnknownName(id.to_string()));
            }
            let tail = &c - &catalan_head(n, q);
            match kind {
                // 2x(C - C_⌊q⌋)/(1 - 2xC) = Σ_{i≥1} i/(i+q) B_i B_q x^{i+q}
                "lemma" => {
                    let lhs = &tail.shift(1).scale(2) * &one_minus_2xc(n).inverse()?;
                    let rhs = lemma_rhs(n, q)?;
                    (lhs, rhs)
                }
                // A_q = 2xC A_q + q x (C - C_⌊q⌋), A_q = Σ_{i≥1} A_{i,q} x^{i+q}
                "apq" => {
                    let aq = apq_series(n, q)?;
                    (aq.clone(), &(&c * &aq).shift(1).scale(2) + &tail.shift(1).scale(q as i64))
                }
                _ => return Err(Error::UnknownName(id.to_string())),
            }
        }
    };
    Ok(lhs.truncate(n) == rhs.truncate(n))
}

fn lemma_rhs(n: usize, q: usize) -> Result<SeriesPoly> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate() {
        if k > q {
            let i = (k - q) as u64;
            let v = int(i) / int(i + q as u64) * int(middle_binom(i) * middle_binom(q as u64));
            *slot = to_int(v)?;
        }
    }
    Ok(SeriesPoly { coeffs })
}

fn apq_series(n: usize, q: usize) -> Result<SeriesPoly> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate() {
        if k > q {
            *slot = to_int(apq_closed((k - q) as u64, q as u64)?)?;
        }
    }
    Ok(SeriesPoly { coeffs })
}

/// `Σ_{i≥3} D̂_i x^i` from the closed form.
fn dhat_series(n: usize) -> Result<SeriesPoly> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate() {
        if k >= 3 {
            *slot = to_int(dn_closed(k as u64)?)?;
        }
    }
    Ok(SeriesPoly { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_to_order_30() {
        for id in series_identity_ids() {
            assert!(series_identity_check(&id, 30).unwrap(), "{id}");
        }
    }

    #[test]
    fn perturbed_identity_fails() {
        // the lemma with the wrong truncation point is false
        let n = 12;
        let c = catalan_series(n);
        let lhs = &(&c - &catalan_head(n, 2)).shift(1).scale(2) * &one_minus_2xc(n).inverse().unwrap();
        assert_ne!(lhs, lemma_rhs(n, 1).unwrap());
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(series_identity_check("nope", 5), Err(Error::UnknownName(_))));
        assert!(series_identity_check("lemma:0", 5).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let s = one_minus_2xc(20);
        assert_eq!(&s * &s.inverse().unwrap(), one(20));
    }
}
