//! The simplex category: weakly monotone maps `[n] -> [m]`, their generators,
//! and the active-inert calculus.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly order preserving map `[n] -> [m]`.
///
/// Stored as the value sequence `f(0), ..., f(n)` together with the target rank.
/// Ordering is lexicographic on `(values, target)`, which is the enumeration order
/// used everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexMap {
    values: Vec<usize>,
    target: usize,
}

/// How a map sits relative to the active and inert subcategories.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapClass {
    Active,
    Inert,
    /// Both active and inert; only identities qualify.
    Identity,
    Neither,
}

impl SimplexMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("a map out of [n] needs n+1 values".into()));
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(Error::InvalidArgument(format!("value {v} exceeds target rank {target}")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(format!("{values:?} is not weakly increasing")));
        }
        Ok(Self { values, target })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (0..=n).collect(), target: n }
    }

    /// The inert map `[n] -> [k]` given by `t |-> t + offset`.
    pub fn inert(n: usize, k: usize, offset: usize) -> Result<Self> {
        if n + offset > k {
            return Err(Error::InvalidArgument(format!(
                "no inert map [{n}] -> [{k}] with offset {offset}"
            )));
        }
        Ok(Self { values: (offset..=offset + n).collect(), target: k })
    }

    pub fn source_rank(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_rank(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, k: usize) -> usize {
        self.values[k]
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source_rank() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_active(&self) -> bool {
        self.values[0] == 0 && *self.values.last().unwrap() == self.target
    }

    pub fn is_inert(&self) -> bool {
        self.values.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn classify(&self) -> MapClass {
        match (self.is_active(), self.is_inert()) {
            (true, true) => MapClass::Identity,
            (true, false) => MapClass::Active,
            (false, true) => MapClass::Inert,
            (false, false) => MapClass::Neither,
        }
    }

    /// `self ∘ first`, i.e. apply `first` and then `self`.
    pub fn after(&self, first: &SimplexMap) -> Result<SimplexMap> {
        compose(self, first)
    }

    /// The map obtained by conjugating with the order reversal of `[n]` and `[m]`,
    /// `t |-> m - f(n - t)`.
    pub fn reversed(&self) -> SimplexMap {
        let m = self.target;
        let values = self.values.iter().rev().map(|&v| m - v).collect();
        SimplexMap { values, target: m }
    }
}

impl fmt::Display for SimplexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}](", self.source_rank(), self.target)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The coface `δ^i : [n-1] -> [n]`, which skips `i`.
pub fn coface(n: usize, i: usize) -> Result<SimplexMap> {
    if n == 0 || i > n {
        return Err(Error::InvalidArgument(format!("coface δ^{i} into [{n}] does not exist")));
    }
    let values = (0..n).map(|k| if k < i { k } else { k + 1 }).collect();
    Ok(SimplexMap { values, target: n })
}

/// The codegeneracy `σ^i : [n+1] -> [n]`, which hits `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Result<SimplexMap> {
    if i > n {
        return Err(Error::InvalidArgument(format!("codegeneracy σ^{i} onto [{n}] does not exist")));
    }
    let values = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
    Ok(SimplexMap { values, target: n })
}

/// Pointwise composite `g ∘ f`.
pub fn compose(g: &SimplexMap, f: &SimplexMap) -> Result<SimplexMap> {
    if f.target != g.source_rank() {
        return Err(Error::InvalidArgument(format!(
            "cannot compose {g} after {f}: rank mismatch"
        )));
    }
    let values = f.values.iter().map(|&v| g.values[v]).collect();
    Ok(SimplexMap { values, target: g.target })
}

/// Unique factorization `f = inert ∘ active`. Returns `(active, inert)`.
pub fn factor_active_inert(f: &SimplexMap) -> (SimplexMap, SimplexMap) {
    let base = f.values[0];
    let top = *f.values.last().unwrap();
    let p = top - base;
    let active = SimplexMap { values: f.values.iter().map(|v| v - base).collect(), target: p };
    let inert = SimplexMap { values: (base..=base + p).collect(), target: f.target };
    (active, inert)
}

/// Completes an active `alpha: [n] -> [m]` and inert `iota: [n] -> [k]` to the
/// pushout square `theta ∘ alpha = phi ∘ iota` with `theta: [m] -> [p]` inert,
/// `phi: [k] -> [p]` active and `p = k - n + m`. Returns `(theta, phi)`.
pub fn active_inert_pushout(
    alpha: &SimplexMap,
    iota: &SimplexMap,
) -> Result<(SimplexMap, SimplexMap)> {
    if !alpha.is_active() {
        return Err(Error::InvalidArgument(format!("{alpha} is not active")));
    }
    if !iota.is_inert() {
        return Err(Error::InvalidArgument(format!("{iota} is not inert")));
    }
    let n = alpha.source_rank();
    if iota.source_rank() != n {
        return Err(Error::InvalidArgument(format!(
            "{alpha} and {iota} do not share a source"
        )));
    }
    let m = alpha.target;
    let k = iota.target;
    let c = iota.values[0];
    let p = k - n + m;
    let theta = SimplexMap { values: (c..=c + m).collect(), target: p };
    let phi_values = (0..=k)
        .map(|t| {
            if t < c {
                t
            } else if t <= c + n {
                alpha.values[t - c] + c
            } else {
                t - n + m
            }
        })
        .collect();
    let phi = SimplexMap { values: phi_values, target: p };
    Ok((theta, phi))
}

/// A generating map of the simplex category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `δ^index : [rank-1] -> [rank]`
    Coface { rank: usize, index: usize },
    /// `σ^index : [rank+1] -> [rank]`
    Codegeneracy { rank: usize, index: usize },
}

impl Generator {
    pub fn to_map(self) -> SimplexMap {
        match self {
            Generator::Coface { rank, index } => coface(rank, index).expect("valid coface"),
            Generator::Codegeneracy { rank, index } => {
                codegeneracy(rank, index).expect("valid codegeneracy")
            }
        }
    }

    pub fn source_rank(self) -> usize {
        match self {
            Generator::Coface { rank, .. } => rank - 1,
            Generator::Codegeneracy { rank, .. } => rank + 1,
        }
    }

    pub fn target_rank(self) -> usize {
        match self {
            Generator::Coface { rank, .. } | Generator::Codegeneracy { rank, .. } => rank,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Coface { rank, index } => write!(f, "δ^{index}:[{}]->[{rank}]", rank - 1),
            Generator::Codegeneracy { rank, index } => {
                write!(f, "σ^{index}:[{}]->[{rank}]", rank + 1)
            }
        }
    }
}

/// Normal form `δ^{i_1} ∘ ... ∘ δ^{i_s} ∘ σ^{j_1} ∘ ... ∘ σ^{j_t}` with
/// `i_1 > ... > i_s` and `j_1 < ... < j_t`.
///
/// The word is listed in composition order: the first entry is applied last.
pub fn generator_decomposition(f: &SimplexMap) -> Vec<Generator> {
    let n = f.source_rank();
    let m = f.target;
    // Positions j of [n] with f(j) = f(j+1), collapsed from the right so earlier
    // indices are unaffected.
    let repeats: Vec<usize> = (0..n).filter(|&j| f.values[j] == f.values[j + 1]).collect();
    let image_rank = n - repeats.len();
    let mut in_image = vec![false; m + 1];
    for &v in &f.values {
        in_image[v] = true;
    }
    let missing: Vec<usize> = (0..=m).filter(|&v| !in_image[v]).collect();

    let mut word = Vec::with_capacity(repeats.len() + missing.len());
    // δ's, outermost first; the outermost coface has the largest index and target m.
    for (pos, &i) in missing.iter().rev().enumerate() {
        word.push(Generator::Coface { rank: m - pos, index: i });
    }
    // σ's, outermost first; σ^{j_1} lands on [image_rank].
    for (pos, &j) in repeats.iter().enumerate() {
        word.push(Generator::Codegeneracy { rank: image_rank + pos, index: j });
    }
    word
}

/// Composite of a word listed in composition order. `source_rank` is needed for
/// the empty word.
pub fn compose_word(word: &[Generator], source_rank: usize) -> Result<SimplexMap> {
    let mut acc = SimplexMap::identity(source_rank);
    for g in word.iter().rev() {
        acc = compose(&g.to_map(), &acc)?;
    }
    Ok(acc)
}

/// All weakly monotone maps `[n] -> [m]` in lexicographic order.
pub fn enumerate_maps(n: usize, m: usize) -> Vec<SimplexMap> {
    let mut out = Vec::new();
    let mut values = vec![0usize; n + 1];
    loop {
        out.push(SimplexMap { values: values.clone(), target: m });
        // advance to the lexicographic successor
        let mut pos = n as isize;
        while pos >= 0 && values[pos as usize] == m {
            pos -= 1;
        }
        if pos < 0 {
            return out;
        }
        let p = pos as usize;
        let v = values[p] + 1;
        for slot in &mut values[p..] {
            *slot = v;
        }
    }
}

/// All active maps `[n] -> [m]`, lexicographic.
pub fn enumerate_active(n: usize, m: usize) -> Vec<SimplexMap> {
    if n == 0 {
        return if m == 0 { vec![SimplexMap::identity(0)] } else { Vec::new() };
    }
    // lexicographic order on parts agrees with lexicographic order on prefix sums
    Composition::all(n, m).iter().map(Composition::to_active).collect()
}

/// All inert maps `[n] -> [k]`, ordered by offset.
pub fn enumerate_inert(n: usize, k: usize) -> Vec<SimplexMap> {
    if k < n {
        return Vec::new();
    }
    (0..=k - n).map(|c| SimplexMap::inert(n, k, c).expect("offset in range")).collect()
}

/// A sequence `(ℓ_1, ..., ℓ_k)` of naturals, in bijection with the active maps
/// `[k] -> [ℓ_1 + ... + ℓ_k]` for `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The consecutive differences of an active map. Fails on non-active input.
    pub fn from_active(f: &SimplexMap) -> Result<Self> {
        if !f.is_active() {
            return Err(Error::InvalidArgument(format!("{f} is not active")));
        }
        Ok(Self { parts: f.values.windows(2).map(|w| w[1] - w[0]).collect() })
    }

    /// The active map `t |-> ℓ_1 + ... + ℓ_t`.
    pub fn to_active(&self) -> SimplexMap {
        let mut values = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        values.push(0);
        for &l in &self.parts {
            acc += l;
            values.push(acc);
        }
        SimplexMap { values, target: acc }
    }

    /// All compositions of `total` into `k` parts, in lexicographic order of parts.
    pub fn all(k: usize, total: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(k);
        fn rec(k: usize, remaining: usize, parts: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if parts.len() + 1 == k {
                parts.push(remaining);
                out.push(Composition { parts: parts.clone() });
                parts.pop();
                return;
            }
            for l in 0..=remaining {
                parts.push(l);
                rec(k, remaining - l, parts, out);
                parts.pop();
            }
        }
        match k {
            0 => {
                if total == 0 {
                    out.push(Composition { parts: Vec::new() });
                }
            }
            _ => rec(k, total, &mut parts, &mut out),
        }
        out
    }

    /// All compositions into `k` parts whose total is at most `bound`,
    /// ordered lexicographically by parts.
    pub fn bounded(k: usize, bound: usize) -> Vec<Composition> {
        let mut all: Vec<Composition> = (0..=bound).flat_map(|t| Composition::all(k, t)).collect();
        all.sort();
        all
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}
