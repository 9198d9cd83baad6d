//! Quiver families: T_{n,w}, T^BC, the special framing, Dynkin quivers,
//! the χ invariant, classification by χ, and folding.

use crate::error::{Error, Result};
use crate::framing::{FrameKind, FramedQuiver};
use crate::quiver::WeightedQuiver;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

pub const N1: usize = 0;
pub const NINF: usize = 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TnwSignature {
    pub n: Vec<usize>,
    pub w: Vec<u32>,
    pub bc: bool,
}

impl TnwSignature {
    pub fn new(n: Vec<usize>, w: Vec<u32>) -> Result<Self> {
        if n.len() != w.len() {
            return Err(Error::InvalidSignature("n and w differ in length".into()));
        }
        if n.iter().any(|&x| x < 2) {
            return Err(Error::InvalidSignature("tail lengths must be at least 2".into()));
        }
        if w.iter().any(|&x| x == 0) {
            return Err(Error::InvalidSignature("tail weights must be positive".into()));
        }
        Ok(Self { n, w, bc: false })
    }

    /// T^BC signature; every tail has weight 2.
    pub fn bc(n: Vec<usize>) -> Result<Self> {
        if n.iter().any(|&x| x < 2) {
            return Err(Error::InvalidSignature("tail lengths must be at least 2".into()));
        }
        let w = vec![2; n.len()];
        Ok(Self { n, w, bc: true })
    }

    pub fn tails(&self) -> usize {
        self.n.len()
    }

    pub fn rank(&self) -> usize {
        self.n.iter().map(|x| x - 1).sum::<usize>() + 2
    }

    /// Node id of `i_j` (tail `i`, position `j` in `2..=n_i`).
    pub fn tail_node(&self, i: usize, j: usize) -> usize {
        assert!(j >= 2 && j <= self.n[i], "tail position out of range");
        2 + self.n[..i].iter().map(|x| x - 1).sum::<usize>() + (j - 2)
    }

    /// Nodes `i_j` with `j ≥ 3` odd, in increasing `j`.
    pub fn tail_odd(&self, i: usize) -> Vec<usize> {
        (3..=self.n[i]).filter(|j| j % 2 == 1).map(|j| self.tail_node(i, j)).collect()
    }

    /// Nodes `i_j` with `j ≥ 4` even.
    pub fn tail_even(&self, i: usize) -> Vec<usize> {
        (4..=self.n[i]).filter(|j| j % 2 == 0).map(|j| self.tail_node(i, j)).collect()
    }

    /// `(tail, position)` for a tail node id.
    pub fn locate(&self, node: usize) -> Option<(usize, usize)> {
        let mut base = 2;
        for (i, &ni) in self.n.iter().enumerate() {
            if node < base + ni - 1 && node >= base {
                return Some((i, node - base + 2));
            }
            base += ni - 1;
        }
        None
    }

    /// Signature text in CLI form.
    pub fn spec_string(&self) -> String {
        let ns: Vec<String> = self.n.iter().map(|x| x.to_string()).collect();
        if self.bc {
            return format!("TBC:{}", ns.join(","));
        }
        let ws: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
        format!("T:{}/{}", ns.join(","), ws.join(","))
    }
}

impl fmt::Display for TnwSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `Σ w_i (1/n_i - 1) + 2`, or `Σ (1/n_i - 1) + 1` for T^BC.
pub fn chi(sig: &TnwSignature) -> BigRational {
    let mut x = if sig.bc { rat(1, 1) } else { rat(2, 1) };
    for (&ni, &wi) in sig.n.iter().zip(&sig.w) {
        let wi = if sig.bc { 1 } else { wi as i64 };
        x += rat(wi, 1) * (rat(1, ni as i64) - rat(1, 1));
    }
    x
}

/// Adds the source–sink tails (`i_3 -> i_2`, `i_3 -> i_4`, ...) and
/// `N_1 -> i_2` arrows shared by T_{n,w} and T^BC.
fn add_tails(q: &mut WeightedQuiver, sig: &TnwSignature) -> Result<()> {
    for i in 0..sig.tails() {
        q.add_arrows(N1, sig.tail_node(i, 2), 1)?;
        q.add_arrows(sig.tail_node(i, 2), NINF, 1)?;
        for j in 3..=sig.n[i] {
            let (a, b) = (sig.tail_node(i, j - 1), sig.tail_node(i, j));
            if j % 2 == 1 {
                q.add_arrows(b, a, 1)?;
            } else {
                q.add_arrows(a, b, 1)?;
            }
        }
    }
    Ok(())
}

fn tail_weights(sig: &TnwSignature) -> Vec<u32> {
    let mut weights = Vec::new();
    for (&ni, &wi) in sig.n.iter().zip(&sig.w) {
        weights.extend(std::iter::repeat(wi).take(ni - 1));
    }
    weights
}

/// T_{n,w}: nodes `N_1, N_∞`, then tail nodes tail by tail.
pub fn build_tnw(sig: &TnwSignature) -> Result<WeightedQuiver> {
    if sig.bc {
        return build_tbc(&sig.n);
    }
    let mut weights = vec![1, 1];
    weights.extend(tail_weights(sig));
    let mut q = WeightedQuiver::new(weights)?;
    q.add_arrows(NINF, N1, 2)?;
    add_tails(&mut q, sig)?;
    Ok(q)
}

/// The star T'_{n,w}: T_{n,w} without `N_∞` (node ids shift down by one
/// after `N_1`).
pub fn build_tprime(sig: &TnwSignature) -> Result<WeightedQuiver> {
    let q = build_tnw(sig)?;
    let keep: Vec<usize> = (0..q.node_count()).filter(|&v| v != NINF).collect();
    Ok(q.subquiver(&keep))
}

/// T^BC: node 0 has weight 1 (plays `N_1`), node 1 weight 4 (plays `N_∞`),
/// arrow `1 -> 0`, and weight-2 tails each closing a 3-cycle.
pub fn build_tbc(n: &[usize]) -> Result<WeightedQuiver> {
    let sig = TnwSignature::bc(n.to_vec())?;
    let mut weights = vec![1, 4];
    weights.extend(tail_weights(&sig));
    let mut q = WeightedQuiver::new(weights)?;
    q.add_arrows(NINF, N1, 1)?;
    add_tails(&mut q, &sig)?;
    Ok(q)
}

/// T^f: a frozen `f_{i,j}` of weight `w_i` with `i_j -> f_{i,j}` for every
/// tail node, then a frozen `f_1` of weight 1 with `N_1 -> f_1 -> N_∞`.
pub fn build_special_framing(sig: &TnwSignature) -> Result<FramedQuiver> {
    if sig.bc {
        return Err(Error::InvalidSignature("special framing is defined for T_{n,w} only".into()));
    }
    let t = build_tnw(sig)?;
    let r = t.node_count();
    let tails = r - 2;
    let mut weights = t.weights().to_vec();
    weights.extend_from_slice(&t.weights()[2..]);
    weights.push(1);
    let mut frozen = vec![false; r];
    frozen.extend(vec![true; tails + 1]);
    let mut full = WeightedQuiver::with_frozen(weights, frozen)?;
    for i in 0..r {
        for j in 0..r {
            if t.arrows(i, j) > 0 {
                full.add_arrows(i, j, t.arrows(i, j))?;
            }
        }
    }
    for k in 0..tails {
        full.add_arrows(2 + k, r + k, 1)?;
    }
    let f1 = r + tails;
    full.add_arrows(N1, f1, 1)?;
    full.add_arrows(f1, NINF, 1)?;
    FramedQuiver::new(full, FrameKind::Special)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Finite,
    Affine,
    DoublyExtended,
    InfiniteMutation,
    Unknown,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Finite => "finite",
            Family::Affine => "affine",
            Family::DoublyExtended => "doubly-extended",
            Family::InfiniteMutation => "infinite-mutation",
            Family::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub name: Option<String>,
}

impl TypeLabel {
    pub fn named(family: Family, name: impl Into<String>) -> Self {
        Self { family, name: Some(name.into()) }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{} {}", self.family, name),
            None => write!(f, "{}", self.family),
        }
    }
}

/// A doubly extended catalog row.
#[derive(Clone, Debug)]
pub struct DoublyExtended {
    pub name: &'static str,
    /// `None` only for A_1^(1,1), which is not a T quiver.
    pub sig: Option<TnwSignature>,
    pub dual: &'static str,
    /// Factor `d` in the per-coset counts: 2 for self-dual non-simply-laced
    /// rows, 1 otherwise.
    pub dual_factor: u32,
}

pub fn doubly_extended_catalog() -> Vec<DoublyExtended> {
    let t = |n: &[usize], w: &[u32]| Some(TnwSignature::new(n.to_vec(), w.to_vec()).unwrap());
    let row = |name, sig, dual, d| DoublyExtended { name, sig, dual, dual_factor: d };
    vec![
        row("A1^(1,1)", None, "self", 1),
        row("D4^(1,1)", t(&[2, 2, 2, 2], &[1, 1, 1, 1]), "self", 1),
        row("E6^(1,1)", t(&[3, 3, 3], &[1, 1, 1]), "self", 1),
        row("E7^(1,1)", t(&[4, 4, 2], &[1, 1, 1]), "self", 1),
        row("E8^(1,1)", t(&[6, 3, 2], &[1, 1, 1]), "self", 1),
        row("BC1^(4,1)", t(&[2], &[4]), "BC1^(4,4)", 1),
        row("B2^(2,1)", t(&[2, 2], &[2, 2]), "self", 2),
        row("BC2^(4,2)", Some(TnwSignature::bc(vec![2, 2]).unwrap()), "self", 2),
        row("B3^(1,1)", t(&[2, 2, 2], &[1, 1, 2]), "C3^(2,2)", 1),
        row("F4^(1,1)", t(&[3, 3], &[1, 2]), "F4^(2,2)", 1),
        row("F4^(2,1)", t(&[4, 2], &[2, 1]), "self", 2),
        row("G2^(1,1)", t(&[2, 2], &[1, 3]), "G2^(3,3)", 1),
        row("G2^(3,1)", t(&[3], &[3]), "self", 2),
    ]
}

fn sorted_tails(sig: &TnwSignature) -> Vec<(usize, u32)> {
    let mut v: Vec<(usize, u32)> = sig.n.iter().copied().zip(sig.w.iter().copied()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Affine catalog name for a signature with χ > 0.
fn affine_name(sig: &TnwSignature) -> Option<String> {
    if sig.bc {
        return (sig.tails() == 1).then(|| format!("BC~(4)_{}", sig.n[0]));
    }
    let t = sorted_tails(sig);
    let ns: Vec<usize> = t.iter().map(|x| x.0).collect();
    let ws: Vec<u32> = t.iter().map(|x| x.1).collect();
    if ws.iter().all(|&w| w == 1) {
        return match ns.as_slice() {
            [] => Some("A_{1,1}".into()),
            [p] => Some(format!("A_{{{p},1}}")),
            [p, q] => Some(format!("A_{{{p},{q}}}")),
            [a, 2, 2] => Some(format!("D~_{}", a + 2)),
            [3, 3, 2] => Some("E~_6".into()),
            [4, 3, 2] => Some("E~_7".into()),
            [5, 3, 2] => Some("E~_8".into()),
            _ => None,
        };
    }
    let mut pairs = t.clone();
    pairs.sort_unstable();
    match pairs.as_slice() {
        [(n, 2)] => Some(format!("C~_{n}")),
        [(2, 3)] => Some("G~_2".into()),
        [(2, 1), (3, 2)] => Some("F~_4".into()),
        [(2, 2), (m, 1)] => Some(format!("B~_{}", m + 1)),
        [(2, 1), (2, 2)] => Some("B~_3".into()),
        _ => None,
    }
}

fn doubly_name(sig: &TnwSignature) -> Option<String> {
    let mut key = sorted_tails(sig);
    key.sort_unstable();
    doubly_extended_catalog().into_iter().find_map(|row| {
        let s = row.sig?;
        let mut k2 = sorted_tails(&s);
        k2.sort_unstable();
        (s.bc == sig.bc && k2 == key).then(|| row.name.to_string())
    })
}

/// Family by the sign of χ, named from the built-in catalogs.
pub fn classify(sig: &TnwSignature) -> TypeLabel {
    let c = chi(sig);
    if c.is_positive() {
        TypeLabel { family: Family::Affine, name: affine_name(sig) }
    } else if c.is_zero() {
        TypeLabel { family: Family::DoublyExtended, name: doubly_name(sig) }
    } else {
        TypeLabel { family: Family::InfiniteMutation, name: None }
    }
}

/// Orients a forest so that every node is a source or a sink.
fn source_sink(weights: Vec<u32>, edges: &[(usize, usize)]) -> Result<WeightedQuiver> {
    let n = weights.len();
    let mut color = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                let u = if a == v { b } else if b == v { a } else { continue };
                if color[u] == usize::MAX {
                    color[u] = 1 - color[v];
                    stack.push(u);
                }
            }
        }
    }
    let mut q = WeightedQuiver::new(weights)?;
    for &(a, b) in edges {
        if color[a] == 0 {
            q.add_arrows(a, b, 1)?;
        } else {
            q.add_arrows(b, a, 1)?;
        }
    }
    Ok(q)
}

fn chain(weights: Vec<u32>) -> Result<WeightedQuiver> {
    let edges: Vec<(usize, usize)> = (1..weights.len()).map(|i| (i - 1, i)).collect();
    source_sink(weights, &edges)
}

/// Star with a centre and arms of the given node counts.
fn star(arms: &[usize], weights: Option<Vec<u32>>) -> Result<WeightedQuiver> {
    let total = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    source_sink(weights.unwrap_or_else(|| vec![1; total]), &edges)
}

/// Affine A_{p,q}: a cycle of `p+q` nodes, `p` arrows one way round and `q`
/// the other.
pub fn build_apq(p: usize, q: usize) -> Result<WeightedQuiver> {
    if p == 0 || q == 0 {
        return Err(Error::UnknownName(format!("A_{{{p},{q}}}")));
    }
    let m = p + q;
    let mut quiver = WeightedQuiver::new(vec![1; m])?;
    for t in 0..m {
        let (a, b) = (t, (t + 1) % m);
        if t < p {
            quiver.add_arrows(a, b, 1)?;
        } else {
            quiver.add_arrows(b, a, 1)?;
        }
    }
    Ok(quiver)
}

/// The Markov quiver, the doubly extended A_1^(1,1).
pub fn build_markov() -> Result<WeightedQuiver> {
    let mut q = WeightedQuiver::new(vec![1, 1, 1])?;
    q.add_arrows(0, 1, 2)?;
    q.add_arrows(1, 2, 2)?;
    q.add_arrows(2, 0, 2)?;
    Ok(q)
}

fn finite_dynkin(letter: &str, n: usize) -> Result<WeightedQuiver> {
    let bad = || Error::UnknownName(format!("{letter}_{n}"));
    match letter {
        "A" if n >= 1 => chain(vec![1; n]),
        "B" if n >= 2 => {
            let mut w = vec![1; n];
            w[0] = 2;
            chain(w)
        }
        "C" if n >= 2 => {
            let mut w = vec![2; n];
            w[0] = 1;
            chain(w)
        }
        "D" if n >= 3 => {
            let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
            edges.push((n - 3, n - 1));
            source_sink(vec![1; n], &edges)
        }
        "E" if (6..=8).contains(&n) => star(&[n - 4, 2, 1], None),
        "F" if n == 4 => chain(vec![1, 1, 2, 2]),
        "G" if n == 2 => chain(vec![1, 3]),
        _ => Err(bad()),
    }
}

fn affine_dynkin(letter: &str, n: usize) -> Result<WeightedQuiver> {
    let bad = || Error::UnknownName(format!("aff:{letter}_{n}"));
    match letter {
        "D" if n >= 4 => {
            // leaves 0,1 on chain node 2; chain 2..=n-2; leaves n-1, n on n-2
            let mut edges = vec![(0, 2), (1, 2)];
            for i in 3..=n - 2 {
                edges.push((i - 1, i));
            }
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
            source_sink(vec![1; n + 1], &edges)
        }
        "E" if n == 6 => star(&[2, 2, 2], None),
        "E" if n == 7 => star(&[3, 3, 1], None),
        "E" if n == 8 => star(&[5, 2, 1], None),
        "B" if n >= 3 => {
            // two weight-1 leaves on node 2, chain up to a weight-2 end node
            let mut edges = vec![(0, 2), (1, 2)];
            for i in 3..=n {
                edges.push((i - 1, i));
            }
            let mut w = vec![1; n + 1];
            w[n] = 2;
            source_sink(w, &edges)
        }
        "C" if n >= 2 => {
            let mut w = vec![2; n + 1];
            w[0] = 1;
            w[n] = 1;
            chain(w)
        }
        "F" if n == 4 => chain(vec![1, 1, 1, 2, 2]),
        "G" if n == 2 => chain(vec![1, 1, 3]),
        _ => Err(bad()),
    }
}

/// A seed named in the catalog syntax, with its signature when it is a T quiver.
#[derive(Clone, Debug)]
pub struct NamedSeed {
    pub quiver: WeightedQuiver,
    pub sig: Option<TnwSignature>,
}

fn parse_list<T: std::str::FromStr>(s: &str, name: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| Error::UnknownName(name.to_string()))).collect()
}

/// Parses `T:n1,…/w1,…` or `TBC:n1,…`.
pub fn parse_signature(name: &str) -> Result<TnwSignature> {
    if let Some(rest) = name.strip_prefix("TBC:") {
        return TnwSignature::bc(parse_list(rest, name)?);
    }
    if let Some(rest) = name.strip_prefix("T:") {
        let (ns, ws) = rest.split_once('/').unwrap_or((rest, ""));
        return TnwSignature::new(parse_list(ns, name)?, parse_list(ws, name)?);
    }
    Err(Error::UnknownName(name.to_string()))
}

/// Builds a catalog quiver: `A_n`…`G_2`, `A_{p,q}`, `aff:X_n`,
/// `dbl:X_n[(a,b)]`, `BCaff_n`, `T:…/…`, `TBC:…`.
pub fn build_named(name: &str) -> Result<NamedSeed> {
    let unknown = || Error::UnknownName(name.to_string());
    if name.starts_with("T:") || name.starts_with("TBC:") {
        let sig = parse_signature(name)?;
        return Ok(NamedSeed { quiver: build_tnw(&sig)?, sig: Some(sig) });
    }
    if let Some(rest) = name.strip_prefix("BCaff_") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        let sig = TnwSignature::bc(vec![n])?;
        return Ok(NamedSeed { quiver: build_tnw(&sig)?, sig: Some(sig) });
    }
    if let Some(rest) = name.strip_prefix("dbl:") {
        let compact: String = rest.chars().filter(|c| !"_^[](), ".contains(*c)).collect();
        for row in doubly_extended_catalog() {
            let key: String = row.name.chars().filter(|c| !"_^(), ".contains(*c)).collect();
            if key == compact {
                return match row.sig {
                    Some(sig) => Ok(NamedSeed { quiver: build_tnw(&sig)?, sig: Some(sig) }),
                    None => Ok(NamedSeed { quiver: build_markov()?, sig: None }),
                };
            }
        }
        return Err(unknown());
    }
    if let Some(inner) = name.strip_prefix("A_{").and_then(|s| s.strip_suffix('}')) {
        let v: Vec<usize> = parse_list(inner, name)?;
        if v.len() != 2 {
            return Err(unknown());
        }
        return Ok(NamedSeed { quiver: build_apq(v[0], v[1])?, sig: None });
    }
    let (affine, body) = match name.strip_prefix("aff:") {
        Some(b) => (true, b),
        None => (false, name),
    };
    let (letter, num) = body.split_once('_').ok_or_else(unknown)?;
    let n: usize = num.parse().map_err(|_| unknown())?;
    let quiver = if affine { affine_dynkin(letter, n) } else { finite_dynkin(letter, n) }
        .map_err(|_| unknown())?;
    Ok(NamedSeed { quiver, sig: None })
}

/// Builds a Dynkin-type quiver. `orientation` supplies `(p, q)` for A_{p,q}.
pub fn build_dynkin(name: &str, orientation: Option<(usize, usize)>) -> Result<WeightedQuiver> {
    match orientation {
        Some((p, q)) => build_apq(p, q),
        None => Ok(build_named(name)?.quiver),
    }
}

/// Folds each group of nodes into one node of weight `|K|·w`.
pub fn fold(q: &WeightedQuiver, groups: &[Vec<usize>]) -> Result<WeightedQuiver> {
    let n = q.node_count();
    let mut owner = vec![usize::MAX; n];
    for (g, group) in groups.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::InvalidFolding("empty group".into()));
        }
        for &v in group {
            if v >= n || owner[v] != usize::MAX {
                return Err(Error::InvalidFolding(format!("node {v} out of range or repeated")));
            }
            owner[v] = g;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::InvalidFolding("groups do not cover every node".into()));
    }
    let mut weights = Vec::new();
    let mut frozen = Vec::new();
    for group in groups {
        let w = q.weight(group[0]);
        let f = q.is_frozen(group[0]);
        if group.iter().any(|&v| q.weight(v) != w || q.is_frozen(v) != f) {
            return Err(Error::InvalidFolding("group mixes weights or frozen status".into()));
        }
        for &a in group {
            for &b in group {
                if q.arrows(a, b) != 0 {
                    return Err(Error::InvalidFolding(format!("arrow inside group between {a} and {b}")));
                }
            }
        }
        weights.push(w * group.len() as u32);
        frozen.push(f);
    }
    let mut out = WeightedQuiver::with_frozen(weights.clone(), frozen)?;
    for (gi, gi_nodes) in groups.iter().enumerate() {
        for (gj, gj_nodes) in groups.iter().enumerate() {
            if gi >= gj {
                continue;
            }
            // arrows of the full unfolding between the two orbits
            let mut total: i64 = 0;
            for &a in gi_nodes {
                for &b in gj_nodes {
                    total += q.arrows(a, b) * q.weight(a).max(q.weight(b)) as i64;
                }
            }
            let m = weights[gi].max(weights[gj]) as i64;
            if total % m != 0 {
                return Err(Error::InvalidFolding(format!("non-integral arrow count between groups {gi} and {gj}")));
            }
            out.add_arrows(gi, gj, total / m)?;
        }
    }
    Ok(out)
}

/// Mutates every node of a group with no internal arrows.
pub fn group_mutate(q: &WeightedQuiver, group: &[usize]) -> Result<WeightedQuiver> {
    q.mutate_path(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: &[usize], w: &[u32]) -> TnwSignature {
        TnwSignature::new(n.to_vec(), w.to_vec()).unwrap()
    }

    #[test]
    fn empty_signature_is_double_edge() {
        let q = build_tnw(&sig(&[], &[])).unwrap();
        assert_eq!(q.node_count(), 2);
        assert_eq!(q.arrows(NINF, N1), 2);
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi(&sig(&[2, 2, 2], &[1, 1, 1])), rat(1, 2));
        assert_eq!(chi(&sig(&[6, 3, 2], &[1, 1, 1])), rat(0, 1));
        assert_eq!(chi(&sig(&[2], &[4])), rat(0, 1));
        assert_eq!(chi(&TnwSignature::bc(vec![2, 2]).unwrap()), rat(0, 1));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&sig(&[5, 3, 2], &[1, 1, 1])).to_string(), "affine E~_8");
        assert_eq!(classify(&sig(&[4, 4, 2], &[1, 1, 1])).to_string(), "doubly-extended E7^(1,1)");
        assert_eq!(classify(&sig(&[7, 3, 2], &[1, 1, 1])).to_string(), "infinite-mutation");
        assert_eq!(classify(&sig(&[2], &[1])).to_string(), "affine A_{2,1}");
    }

    #[test]
    fn tail_layout() {
        let s = sig(&[3, 2], &[1, 2]);
        assert_eq!(s.tail_node(0, 2), 2);
        assert_eq!(s.tail_node(0, 3), 3);
        assert_eq!(s.tail_node(1, 2), 4);
        assert_eq!(s.locate(4), Some((1, 2)));
        let q = build_tnw(&s).unwrap();
        assert_eq!(q.arrows(3, 2), 1);
        assert_eq!(q.weight(4), 2);
    }

    #[test]
    fn special_framing_counts() {
        let f = build_special_framing(&sig(&[2], &[1])).unwrap();
        assert_eq!(f.rank(), 3);
        assert_eq!(f.frozen_count(), 2);
    }

    #[test]
    fn fold_two_tails() {
        let q = build_tnw(&sig(&[2, 2], &[1, 1])).unwrap();
        let f = fold(&q, &[vec![0], vec![1], vec![2, 3]]).unwrap();
        assert_eq!(f, build_tnw(&sig(&[2], &[2])).unwrap());
        assert!(fold(&q, &[vec![0, 1], vec![2, 3]]).is_err());
    }

    #[test]
    fn named_seeds() {
        assert_eq!(build_named("G_2").unwrap().quiver.weights(), &[1, 3]);
        assert_eq!(build_named("aff:G_2").unwrap().quiver.weights(), &[1, 1, 3]);
        assert_eq!(build_named("dbl:E_6[(1,1)]").unwrap().sig.unwrap().n, vec![3, 3, 3]);
        assert_eq!(build_named("A_{1,1}").unwrap().quiver.arrows(0, 1), 2);
        assert!(build_named("Q_7").is_err());
    }
}
