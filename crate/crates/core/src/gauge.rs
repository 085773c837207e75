//! Arithmetic classification of higher-homotopy types of gauge groups of
//! principal SU(2)-bundles over the 4-sphere.
//!
//! Bundles are indexed by an integer `k` (the second Chern number). At
//! associativity level `n`, two gauge groups are equivalent when the
//! capped valuations `min{2n, v_2(k)}` and `min{[2n/(p-1)], v_p(k)}`
//! agree for all odd primes `p`; for `v_2(k) <= 1` the converse holds as
//! well, and otherwise a difference of invariants is inconclusive. The
//! module computes these invariants, the decision procedure, the gcd
//! criterion relative to a trivializing bundle, and the order data of the
//! least trivializing index (odd part exact, 2-exponent bounded).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaugeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("level n must be at least 1")]
    LevelOutOfRange,
}

/// A p-adic valuation; `Infinite` only for input 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// `min{cap, v}`, saturating at the cap for the infinite valuation.
    pub fn capped(self, cap: u32) -> u32 {
        match self {
            Valuation::Finite(v) => v.min(cap),
            Valuation::Infinite => cap,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes up to and including `bound`.
pub fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| is_prime(p)).collect()
}

/// Largest `e` with `p^e | k`, computed on `|k|`; infinite for `k = 0`.
pub fn p_adic_valuation(k: i64, p: u64) -> Result<Valuation, GaugeError> {
    if !is_prime(p) {
        return Err(GaugeError::NotPrime(p));
    }
    if k == 0 {
        return Ok(Valuation::Infinite);
    }
    let mut v = 0u32;
    let mut m = k.unsigned_abs();
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    Ok(Valuation::Finite(v))
}

/// The cap applied to `v_p(k)` at level `n`: `2n` for `p = 2`,
/// `[2n/(p-1)]` for odd `p`.
pub fn su2_cap(p: u64, n: u32) -> u32 {
    if p == 2 {
        2 * n
    } else {
        (2 * n as u64 / (p - 1)) as u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantEntry {
    pub p: u64,
    pub cap: u32,
    pub value: u32,
}

/// The tuple of capped valuations of `k` over `p = 2` and the odd primes
/// `p <= 2n + 1` (exactly the primes with a positive cap).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SU2Invariant {
    pub n: u32,
    pub entries: Vec<InvariantEntry>,
}

pub fn su2_invariant(k: i64, n: u32) -> SU2Invariant {
    let mut entries = Vec::new();
    let mut push = |p: u64| {
        let cap = su2_cap(p, n);
        debug_assert!(cap > 0);
        let value = p_adic_valuation(k, p).expect("prime").capped(cap);
        entries.push(InvariantEntry { p, cap, value });
    };
    push(2);
    for p in odd_primes_up_to(2 * n as u64 + 1) {
        push(p);
    }
    SU2Invariant { n, entries }
}

impl fmt::Display for SU2Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", e.p, e.value)?;
        }
        write!(f, "}}")
    }
}

/// What the equivalence criterion decides for a pair of bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Equal invariants: the gauge groups are equivalent at level `n`.
    Equivalent,
    /// Different invariants and some 2-adic valuation is at most 1, where
    /// the criterion is also necessary.
    NotEquivalent,
    /// Different invariants but both 2-adic valuations are at least 2;
    /// the criterion decides neither way.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Equivalent => "Equivalent",
            Verdict::NotEquivalent => "NotEquivalent",
            Verdict::Inconclusive => "Inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Decides level-`n` equivalence of the gauge groups of bundles `k` and
/// `k2`. The converse clause is applied when either 2-adic valuation is
/// at most 1 (the relation is symmetric, so requiring it of one side
/// suffices).
pub fn su2_an_equivalent(k: i64, k2: i64, n: u32) -> Verdict {
    if su2_invariant(k, n) == su2_invariant(k2, n) {
        return Verdict::Equivalent;
    }
    let v2k = p_adic_valuation(k, 2).expect("2 is prime");
    let v2k2 = p_adic_valuation(k2, 2).expect("2 is prime");
    if v2k.min(v2k2) <= Valuation::Finite(1) {
        Verdict::NotEquivalent
    } else {
        Verdict::Inconclusive
    }
}

/// gcd criterion relative to a trivializing index `N`: the gauge groups
/// of `k` and `k2` are equivalent when `gcd(N, k) = gcd(N, k2)`. The
/// caller asserts that the adjoint bundle of index `N` is trivial at the
/// relevant level; `gcd(N, 0) = N`.
pub fn gcd_equivalent(n_order: &BigUint, k: i64, k2: i64) -> bool {
    let g1 = n_order.gcd(&BigUint::from(k.unsigned_abs()));
    let g2 = n_order.gcd(&BigUint::from(k2.unsigned_abs()));
    g1 == g2
}

/// Order data of the least index whose adjoint bundle is trivial at
/// level `n`: the odd part is exact, the 2-exponent is only bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityOrder {
    pub n: u32,
    /// `prod p^([2n/(p-1)])` over odd primes `p <= 2n + 1`.
    pub odd_part: BigUint,
    pub v2_lower: u32,
    pub v2_upper: u32,
}

pub fn an_triviality_order(n: u32) -> Result<TrivialityOrder, GaugeError> {
    if n < 1 {
        return Err(GaugeError::LevelOutOfRange);
    }
    let mut odd_part = BigUint::one();
    for p in odd_primes_up_to(2 * n as u64 + 1) {
        odd_part *= BigUint::from(p).pow(su2_cap(p, n));
    }
    Ok(TrivialityOrder {
        n,
        odd_part,
        v2_lower: n,
        v2_upper: 2 * n,
    })
}

/// Whether the `p`-localized adjoint bundle of index `k` is trivial at
/// level `n`, for odd `p`: exactly when `v_p(k) >= [2n/(p-1)]`. The
/// 2-local answer is not computable from the known bounds, so `p = 2` is
/// rejected.
pub fn is_ad_p_trivial(k: i64, p: u64, n: u32) -> Result<bool, GaugeError> {
    if p == 2 || !is_prime(p) {
        return Err(GaugeError::NotOddPrime(p));
    }
    let cap = su2_cap(p, n);
    Ok(match p_adic_valuation(k, p)? {
        Valuation::Infinite => true,
        Valuation::Finite(v) => v >= cap,
    })
}

/// Number of distinct invariant tuples at level `n`:
/// `(2n + 1) * prod ([2n/(p-1)] + 1)` over odd primes `p <= 2n + 1`.
/// Every tuple is attained (choose `k` by the Chinese remainder theorem;
/// the saturated tuple by `k = 0`).
pub fn count_su2_classes(n: u32) -> BigUint {
    let mut count = BigUint::from(2 * n as u64 + 1);
    for p in odd_primes_up_to(2 * n as u64 + 1) {
        count *= BigUint::from(su2_cap(p, n) as u64 + 1);
    }
    count
}
