//! Arithmetic of cyclic quotient surface singularities.
//!
//! A singularity of type `1/m (1, q)` (with `0 < q < m`, `gcd(q, m) = 1`)
//! resolves to a chain of rational curves whose negated self-intersections
//! `(b_1, ..., b_k)`, all `b_i >= 2`, are the Hirzebruch-Jung (minus-sign)
//! continued fraction of `m/q`:
//!
//! ```text
//! m/q = b_1 - 1/(b_2 - 1/(... - 1/b_k))
//! ```
//!
//! For such a chain the fundamental cycle is reduced and the multiplicity of
//! the singular point is `-Z^2 = sum b_i - 2(k - 1)`.
//!
//! Class T is the class of cyclic quotients admitting Q-Gorenstein
//! smoothings: type `1/(d n^2) (1, d n a - 1)` with `gcd(a, n) = 1`,
//! equivalently `m | (q + 1)^2`. Rational double points (all-2 chains) sit
//! in the class by the divisibility criterion but are not produced by the
//! usual chain recursion from `(4)`; both entry points take an
//! `include_du_val` flag so the two characterizations can be aligned either
//! way.
//!
//! The weighted-blowup helpers cover the numerics of hypersurface
//! degenerations in the style of Kollar's examples: the order of a
//! hypersurface along the exceptional divisor of a weighted blowup at a
//! smooth point, and the discrepancy of that divisor.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SingError {
    #[error("quotient type 1/{m}(1,{q}) needs 0 < q < m")]
    WeightOutOfRange { m: u64, q: u64 },
    #[error("quotient type 1/{m}(1,{q}) needs gcd(q, m) = 1")]
    NotCoprime { m: u64, q: u64 },
    #[error("chain entry {0} is less than 2")]
    ChainEntryTooSmall(u64),
    #[error("chain must be nonempty")]
    EmptyChain,
    #[error("arithmetic overflow in chain contraction")]
    Overflow,
    #[error("monomial list must be nonempty")]
    NoMonomials,
    #[error("monomial has {got} exponents, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("weights must be nonempty")]
    NoWeights,
    #[error("weights must be positive")]
    ZeroWeight,
    #[error("hypersurface degree must exceed 4, got {0}")]
    DegreeTooSmall(u64),
    #[error("factorial of {0} overflows")]
    FactorialOverflow(u32),
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A cyclic quotient singularity `1/m (1, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawQuotient")]
pub struct QuotientType {
    m: u64,
    q: u64,
}

#[derive(Deserialize)]
struct RawQuotient {
    m: u64,
    q: u64,
}

impl TryFrom<RawQuotient> for QuotientType {
    type Error = SingError;
    fn try_from(raw: RawQuotient) -> Result<Self, Self::Error> {
        QuotientType::new(raw.m, raw.q)
    }
}

impl QuotientType {
    pub fn new(m: u64, q: u64) -> Result<Self, SingError> {
        if q == 0 || q >= m {
            return Err(SingError::WeightOutOfRange { m, q });
        }
        if gcd(q, m) != 1 {
            return Err(SingError::NotCoprime { m, q });
        }
        Ok(QuotientType { m, q })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn weight(&self) -> u64 {
        self.q
    }

    /// Rational double point `A_{m-1}`, i.e. `q = m - 1`.
    pub fn is_du_val(&self) -> bool {
        self.q + 1 == self.m
    }
}

/// A Hirzebruch-Jung chain `(b_1, ..., b_k)`, every entry at least 2.
/// Serializes as the bare entry list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", try_from = "Vec<u64>")]
pub struct ChainData {
    entries: Vec<u64>,
}

impl From<ChainData> for Vec<u64> {
    fn from(c: ChainData) -> Vec<u64> {
        c.entries
    }
}

impl TryFrom<Vec<u64>> for ChainData {
    type Error = SingError;
    fn try_from(entries: Vec<u64>) -> Result<Self, Self::Error> {
        ChainData::new(entries)
    }
}

impl ChainData {
    pub fn new(entries: Vec<u64>) -> Result<Self, SingError> {
        if entries.is_empty() {
            return Err(SingError::EmptyChain);
        }
        if let Some(&bad) = entries.iter().find(|&&b| b < 2) {
            return Err(SingError::ChainEntryTooSmall(bad));
        }
        Ok(ChainData { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty chains
    }

    pub fn reversed(&self) -> ChainData {
        ChainData {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    pub fn is_du_val(&self) -> bool {
        self.entries.iter().all(|&b| b == 2)
    }
}

/// The class-T decomposition `m = d n^2`, `q = d n a - 1`, `gcd(a, n) = 1`.
/// Unique when it exists; `n = 1` exactly on the du Val chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TDecomposition {
    pub d: u64,
    pub n: u64,
    pub a: u64,
}

/// Hirzebruch-Jung expansion of `m/q`.
pub fn hj_expand(t: &QuotientType) -> ChainData {
    let (mut m, mut q) = (t.m, t.q);
    let mut entries = Vec::new();
    while q > 0 {
        let b = m.div_ceil(q);
        entries.push(b);
        (m, q) = (q, b * q - m);
    }
    ChainData { entries }
}

/// Inverse of [`hj_expand`]: evaluates the continued fraction back to
/// `(m, q)` in lowest terms.
pub fn hj_contract(c: &ChainData) -> Result<QuotientType, SingError> {
    // value = b - 1/value, folded from the right; track as m/q
    let mut m: u64 = 1;
    let mut q: u64 = 0;
    for &b in c.entries.iter().rev() {
        let next_m = b.checked_mul(m).and_then(|v| v.checked_sub(q)).ok_or(SingError::Overflow)?;
        q = m;
        m = next_m;
    }
    QuotientType::new(m, q)
}

/// Multiplicity of the singular point: `-Z^2` for the reduced fundamental
/// cycle of the chain, which is `sum b_i - 2 (k - 1)`.
pub fn multiplicity(c: &ChainData) -> u64 {
    let sum: u64 = c.entries.iter().sum();
    sum - 2 * (c.entries.len() as u64 - 1)
}

/// Class-T recognition by construction: with `e = q + 1` and
/// `h = gcd(e, m)`, set `n = m / h`; the decomposition exists iff `n | h`,
/// and then `d = h / n`, `a = e / h`. Equivalent to `m | (q + 1)^2`.
/// Du Val types (which have `n = 1`) are accepted only when
/// `include_du_val` is set.
pub fn t_recognize(t: &QuotientType, include_du_val: bool) -> Option<TDecomposition> {
    let e = t.q + 1;
    let h = gcd(e, t.m);
    let n = t.m / h;
    if h % n != 0 {
        return None;
    }
    let dec = TDecomposition {
        d: h / n,
        n,
        a: e / h,
    };
    debug_assert_eq!(dec.d * dec.n * dec.n, t.m);
    debug_assert_eq!(dec.d * dec.n * dec.a, t.q + 1);
    debug_assert_eq!(gcd(dec.a, dec.n), 1);
    if dec.n == 1 && !include_du_val {
        return None;
    }
    Some(dec)
}

/// Closed-form class-T criterion `m | (q + 1)^2` (du Val types always pass).
pub fn t_divisibility(t: &QuotientType) -> bool {
    ((t.q + 1) * (t.q + 1)) % t.m == 0
}

/// Membership in the recursively generated family of T-chains: bases `(4)`
/// and `(3, 2, ..., 2, 3)` (any number of interior 2s, including none); if
/// `(b_1, ..., b_k)` is in the family then so are
/// `(2, b_1, ..., b_{k-1}, b_k + 1)` and `(b_1 + 1, b_2, ..., b_k, 2)`.
/// The `(4)` base seeds the `d = 1` types and the two-ended-3 bases the
/// `d >= 2` types of the `1/(d n^2)(1, d n a - 1)` decomposition. All-2
/// chains (du Val) are outside the recursion and are accepted only when
/// `include_du_val` is set.
pub fn t_chain_check(c: &ChainData, include_du_val: bool) -> bool {
    if c.is_du_val() {
        return include_du_val;
    }
    fn is_base(chain: &[u64]) -> bool {
        match chain {
            [4] => true,
            [3, mid @ .., 3] => mid.iter().all(|&b| b == 2),
            _ => false,
        }
    }
    let mut work = c.entries.clone();
    // peel the recursion; the two inverse moves key on opposite ends, so at
    // most one applies at each step
    loop {
        if is_base(&work) {
            return true;
        }
        let k = work.len();
        if k < 2 {
            return false;
        }
        let (first, last) = (work[0], work[k - 1]);
        if first == 2 && last >= 3 {
            work.remove(0);
            *work.last_mut().unwrap() -= 1;
        } else if first >= 3 && last == 2 {
            work.pop();
            work[0] -= 1;
        } else {
            return false;
        }
    }
}

/// Indices of multiplicities violating the bound `mult <= (dim + 1)!`; a
/// nonempty answer rules out weak asymptotic Chow semistability.
pub fn mumford_check(dim: u32, mults: &[u64]) -> Result<Vec<usize>, SingError> {
    let bound = factorial(dim + 1)?;
    Ok(mults
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > bound)
        .map(|(i, _)| i)
        .collect())
}

pub fn factorial(n: u32) -> Result<u64, SingError> {
    let mut acc: u64 = 1;
    for k in 2..=u64::from(n) {
        acc = acc.checked_mul(k).ok_or(SingError::FactorialOverflow(n))?;
    }
    Ok(acc)
}

/// Order of a hypersurface along the exceptional divisor of a weighted
/// blowup at a smooth point: the minimum over the defining monomials of the
/// weighted exponent sum.
pub fn weighted_order(monomials: &[Vec<u64>], weights: &[u64]) -> Result<u64, SingError> {
    if weights.is_empty() {
        return Err(SingError::NoWeights);
    }
    if weights.contains(&0) {
        return Err(SingError::ZeroWeight);
    }
    if monomials.is_empty() {
        return Err(SingError::NoMonomials);
    }
    let mut best = u64::MAX;
    for mono in monomials {
        if mono.len() != weights.len() {
            return Err(SingError::ExponentLength {
                expected: weights.len(),
                got: mono.len(),
            });
        }
        let order: u64 = mono.iter().zip(weights).map(|(e, w)| e * w).sum();
        best = best.min(order);
    }
    Ok(best)
}

/// Discrepancy of the exceptional divisor of a weighted blowup with the
/// given weights at a smooth point: `sum w_j - 1`.
pub fn wb_discrepancy(weights: &[u64]) -> Result<u64, SingError> {
    if weights.is_empty() {
        return Err(SingError::NoWeights);
    }
    if weights.contains(&0) {
        return Err(SingError::ZeroWeight);
    }
    Ok(weights.iter().sum::<u64>() - 1)
}

/// Numerics of the degree-`m` hypersurface degeneration resolved by a
/// weighted blowup with weights `(1, 5, 6, 1)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KollarReport {
    pub degree: u64,
    pub weights: Vec<u64>,
    /// Discrepancy of the exceptional divisor over the smooth ambient point.
    pub discrepancy: u64,
    /// Order of the total family along the exceptional divisor.
    pub order: u64,
    /// Coefficient of `-E` in the adjoint bundle of the birational
    /// transform: `order - discrepancy`.
    pub adjoint_coefficient: u64,
    /// The transform's canonical class is ample once
    /// `degree > adjoint_coefficient + 4`.
    pub ampleness_threshold: u64,
    pub ample: bool,
    /// The T-singularity appearing on the exceptional surface.
    pub singularity: QuotientType,
    pub decomposition: TDecomposition,
    pub chain: ChainData,
    pub multiplicity: u64,
    pub mumford_bound: u64,
    pub mumford_violated: bool,
}

/// Builds the report for the standard family
/// `w^(m-6)(x y z^4 + y^6) + w^(m-10) z^10 + t^30 w^m + x^m + y^m + z^m`:
/// weights `(1, 5, 6, 1)` on `(x, y, z, t)` in the chart `w = 1`, where the
/// degeneration's leading monomials are `x y z^4`, `y^6`, `z^10`, `t^30`.
pub fn kollar_family_report(degree: u64) -> Result<KollarReport, SingError> {
    if degree <= 4 {
        return Err(SingError::DegreeTooSmall(degree));
    }
    let weights = vec![1, 5, 6, 1];
    let monomials = vec![
        vec![1, 1, 4, 0],  // x y z^4
        vec![0, 6, 0, 0],  // y^6
        vec![0, 0, 10, 0], // z^10
        vec![0, 0, 0, 30], // t^30
    ];
    let order = weighted_order(&monomials, &weights)?;
    let discrepancy = wb_discrepancy(&weights)?;
    let adjoint_coefficient = order - discrepancy;
    let ampleness_threshold = adjoint_coefficient + 4;
    let singularity = QuotientType::new(180, 29)?;
    let chain = hj_expand(&singularity);
    let mult = multiplicity(&chain);
    let dim = 2;
    let mumford_bound = factorial(dim + 1)?;
    let violated = !mumford_check(dim, &[mult])?.is_empty();
    Ok(KollarReport {
        degree,
        weights,
        discrepancy,
        order,
        adjoint_coefficient,
        ampleness_threshold,
        ample: degree > ampleness_threshold,
        singularity,
        decomposition: t_recognize(&singularity, true).expect("1/180(1,29) is class T"),
        chain,
        multiplicity: mult,
        mumford_bound,
        mumford_violated: violated,
    })
}
