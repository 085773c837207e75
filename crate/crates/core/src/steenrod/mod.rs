//! Odd-primary reduced-power calculus.
//!
//! Elements are F_p-linear combinations of words `P^{a_1} ... P^{a_m}` in
//! the reduced powers, for an odd prime `p`. A word is *admissible* when
//! `a_i >= p * a_{i+1}` for all consecutive pairs; admissible words form a
//! basis, and [`SteenrodElement::adem_reduce`] rewrites any element onto
//! it using the Adem relation
//!
//! ```text
//! P^a P^b = sum_t (-1)^(a+t) C((p-1)(b-t) - 1, a - p t) P^(a+b-t) P^t
//! ```
//!
//! for `a < p b`, with binomial coefficients mod p computed by Lucas'
//! theorem. Only the Bockstein-free fragment is implemented: the
//! operations act on even-degree classes throughout, so no signs or
//! `beta` bookkeeping arise.

mod action;

pub use action::{
    act_element, act_power, act_word, cartan_expand, ActionTable, Algebra, GradedClass, Polynomial,
};

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("power exponents must be positive")]
    NonPositiveExponent,
    #[error("degree must be a positive even integer, got {0}")]
    BadDegree(u64),
    #[error("mixed primes: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("no action-table entry for P^{k} on `{class}` and the unstable rules do not force one")]
    MissingAction { class: String, k: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn check_odd_prime(p: u32) -> Result<(), SteenrodError> {
    if p < 3 || p % 2 == 0 {
        return Err(SteenrodError::NotOddPrime(p));
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Err(SteenrodError::NotOddPrime(p));
        }
        d += 2;
    }
    Ok(())
}

/// `C(m, k) mod p` by Lucas' theorem: the product of the base-p digit
/// binomials. Exact and overflow-free for any `m`, `k`.
pub fn binomial_mod_p(m: u64, k: u64, p: u32) -> u32 {
    fn binom_small(m: u64, k: u64, p: u64) -> u64 {
        // m, k < p: multiplicative formula with a Fermat inverse
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num = num * ((m - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        num * mod_pow(den, p - 2, p) % p
    }
    if k > m {
        return 0;
    }
    let p = p as u64;
    let (mut m, mut k) = (m, k);
    let mut result = 1u64;
    while m > 0 || k > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return 0;
        }
        result = result * binom_small(md, kd, p) % p;
        m /= p;
        k /= p;
    }
    result as u32
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// A word `P^{a_1} ... P^{a_m}` in the reduced powers at an odd prime.
/// The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerWord {
    p: u32,
    exponents: Vec<u32>,
}

impl PowerWord {
    pub fn new(p: u32, exponents: Vec<u32>) -> Result<Self, SteenrodError> {
        check_odd_prime(p)?;
        if exponents.contains(&0) {
            return Err(SteenrodError::NonPositiveExponent);
        }
        Ok(PowerWord { p, exponents })
    }

    /// Parses the dotted form `P^a.P^b.P^c`.
    pub fn parse(input: &str, p: u32) -> Result<Self, SteenrodError> {
        let mut exponents = Vec::new();
        for part in input.split('.') {
            let part = part.trim();
            let rest = part
                .strip_prefix("P^")
                .or_else(|| part.strip_prefix("p^"))
                .ok_or_else(|| {
                    SteenrodError::Parse(format!("`{part}` is not of the form P^a"))
                })?;
            let a: u32 = rest
                .parse()
                .map_err(|_| SteenrodError::Parse(format!("bad exponent `{rest}`")))?;
            exponents.push(a);
        }
        PowerWord::new(p, exponents)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `a_i >= p * a_{i+1}` for all adjacent pairs.
    pub fn is_admissible(&self) -> bool {
        word_is_admissible(self.p, &self.exponents)
    }

    /// `sum 2 a_i (p - 1)`.
    pub fn degree(&self) -> u64 {
        word_degree(self.p, &self.exponents)
    }
}

impl fmt::Display for PowerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.exponents.iter().map(|a| format!("P^{a}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn word_is_admissible(p: u32, word: &[u32]) -> bool {
    word.windows(2).all(|w| w[0] >= p * w[1])
}

fn word_degree(p: u32, word: &[u32]) -> u64 {
    word.iter()
        .map(|&a| 2 * a as u64 * (p as u64 - 1))
        .sum()
}

/// Expansion of an inadmissible adjacent pair `P^a P^b` (`a < p b`).
/// Returns the admissible-relation right-hand side as (word, coefficient)
/// pairs with nonzero coefficients mod p; the `t = 0` term is the single
/// power `P^{a+b}`.
fn adem_expand(p: u32, a: u32, b: u32) -> Vec<(Vec<u32>, u32)> {
    debug_assert!(a < p * b);
    let mut out = Vec::new();
    for t in 0..=(a / p) {
        let m = (p as u64 - 1) * (b - t) as u64 - 1;
        let c = binomial_mod_p(m, (a - p * t) as u64, p);
        if c == 0 {
            continue;
        }
        let coeff = if (a + t) % 2 == 1 { p - c } else { c };
        let word = if t == 0 {
            vec![a + b]
        } else {
            vec![a + b - t, t]
        };
        out.push((word, coeff));
    }
    out
}

/// Which adjacent inadmissible pair a reduction step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

fn find_inadmissible(p: u32, word: &[u32], strategy: RewriteStrategy) -> Option<usize> {
    let hit = |i: &usize| word[*i] < p * word[*i + 1];
    match strategy {
        RewriteStrategy::Leftmost => (0..word.len().saturating_sub(1)).find(hit),
        RewriteStrategy::Rightmost => (0..word.len().saturating_sub(1)).rev().find(hit),
    }
}

/// An F_p-linear combination of power words, all at the same odd prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteenrodElement {
    p: u32,
    terms: BTreeMap<Vec<u32>, u32>,
}

impl SteenrodElement {
    pub fn zero(p: u32) -> Result<Self, SteenrodError> {
        check_odd_prime(p)?;
        Ok(SteenrodElement {
            p,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_word(word: &PowerWord) -> Self {
        Self::from_word_scaled(word, 1)
    }

    pub fn from_word_scaled(word: &PowerWord, coeff: u32) -> Self {
        let mut e = SteenrodElement {
            p: word.p,
            terms: BTreeMap::new(),
        };
        e.add_term(word.exponents.clone(), coeff);
        e
    }

    fn add_term(&mut self, word: Vec<u32>, coeff: u32) {
        use std::collections::btree_map::Entry;
        let coeff = coeff % self.p;
        if coeff == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut slot) => {
                let sum = (*slot.get() + coeff) % self.p;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32)> {
        self.terms.iter().map(|(w, &c)| (w.as_slice(), c))
    }

    pub fn is_admissible(&self) -> bool {
        self.terms
            .keys()
            .all(|w| word_is_admissible(self.p, w))
    }

    /// Common degree of the terms; `None` for the zero element or a
    /// non-homogeneous combination.
    pub fn degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|w| word_degree(self.p, w));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Rewrites onto the admissible basis, replacing the leftmost
    /// inadmissible pair until none remains. The result represents the
    /// same element of the algebra.
    pub fn adem_reduce(&self) -> SteenrodElement {
        self.reduce_with_strategy(RewriteStrategy::Leftmost)
    }

    pub fn reduce_with_strategy(&self, strategy: RewriteStrategy) -> SteenrodElement {
        let mut result = SteenrodElement {
            p: self.p,
            terms: BTreeMap::new(),
        };
        let mut work: Vec<(Vec<u32>, u32)> =
            self.terms.iter().map(|(w, &c)| (w.clone(), c)).collect();
        while let Some((word, coeff)) = work.pop() {
            match find_inadmissible(self.p, &word, strategy) {
                None => result.add_term(word, coeff),
                Some(i) => {
                    for (frag, c) in adem_expand(self.p, word[i], word[i + 1]) {
                        let mut next = Vec::with_capacity(word.len() + frag.len() - 2);
                        next.extend_from_slice(&word[..i]);
                        next.extend_from_slice(&frag);
                        next.extend_from_slice(&word[i + 2..]);
                        work.push((next, (coeff as u64 * c as u64 % self.p as u64) as u32));
                    }
                }
            }
        }
        result
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let powers: Vec<String> = word.iter().map(|a| format!("P^{a}")).collect();
            if *coeff != 1 || word.is_empty() {
                write!(f, "{coeff}")?;
                if !word.is_empty() {
                    write!(f, " ")?;
                }
            }
            write!(f, "{}", powers.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of the randomized rewriting probe.
#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub prime: u32,
    pub trials: u64,
    pub max_len: usize,
    pub max_exp: u32,
    pub seed: u64,
    /// Trials where the leftmost and rightmost strategies reached
    /// different normal forms.
    pub disagreements: u64,
    /// Rewrite steps that failed to preserve the degree.
    pub degree_violations: u64,
    /// Admissible inputs that were not fixed points of both strategies.
    pub moved_fixed_points: u64,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.degree_violations == 0 && self.moved_fixed_points == 0
    }
}

/// Reduces random words with both strategies and compares the normal
/// forms, additionally replaying the leftmost rewrite chain step by step
/// to confirm each step preserves the degree.
pub fn confluence_probe(
    p: u32,
    trials: u64,
    max_len: usize,
    max_exp: u32,
    seed: u64,
) -> Result<ConfluenceReport, SteenrodError> {
    check_odd_prime(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConfluenceReport {
        prime: p,
        trials,
        max_len,
        max_exp,
        seed,
        disagreements: 0,
        degree_violations: 0,
        moved_fixed_points: 0,
    };
    for _ in 0..trials {
        let len = rng.gen_range(1..=max_len.max(1));
        let exponents: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=max_exp.max(1))).collect();
        let word = PowerWord::new(p, exponents.clone())?;
        let element = SteenrodElement::from_word(&word);

        let left = element.reduce_with_strategy(RewriteStrategy::Leftmost);
        let right = element.reduce_with_strategy(RewriteStrategy::Rightmost);
        if left != right {
            report.disagreements += 1;
        }
        if word.is_admissible() {
            let unchanged = left.terms.len() == 1
                && left.terms.get(&exponents) == Some(&1)
                && right.terms.get(&exponents) == Some(&1);
            if !unchanged {
                report.moved_fixed_points += 1;
            }
        }

        // independent step-by-step replay of the leftmost chain
        let mut stack = vec![exponents];
        while let Some(w) = stack.pop() {
            if let Some(i) = find_inadmissible(p, &w, RewriteStrategy::Leftmost) {
                let before = word_degree(p, &w);
                for (frag, _) in adem_expand(p, w[i], w[i + 1]) {
                    let mut next = Vec::with_capacity(w.len() + frag.len() - 2);
                    next.extend_from_slice(&w[..i]);
                    next.extend_from_slice(&frag);
                    next.extend_from_slice(&w[i + 2..]);
                    if word_degree(p, &next) != before {
                        report.degree_violations += 1;
                    }
                    stack.push(next);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(p: u32, exps: &[u32]) -> PowerWord {
        PowerWord::new(p, exps.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(word(3, &[3, 1]).is_admissible());
        assert!(!word(3, &[1, 1]).is_admissible());
        assert!(!word(5, &[2, 1]).is_admissible());
    }

    #[test]
    fn p1_p1_reduces_to_twice_p2() {
        for p in [3u32, 5, 7, 11] {
            let e = SteenrodElement::from_word(&word(p, &[1, 1]));
            let reduced = e.adem_reduce();
            let terms: Vec<(&[u32], u32)> = reduced.terms().collect();
            assert_eq!(terms, vec![(&[2u32][..], 2)], "p = {p}");
        }
    }

    #[test]
    fn admissible_words_are_fixed() {
        let e = SteenrodElement::from_word(&word(3, &[3, 1]));
        assert_eq!(e.adem_reduce(), e);
    }

    #[test]
    fn p1_pn_rule() {
        // P^1 P^n = (n+1) P^(n+1) mod p
        for p in [3u32, 5] {
            for n in 1..10u32 {
                if 1 >= p * n {
                    continue;
                }
                let e = SteenrodElement::from_word(&word(p, &[1, n]));
                let reduced = e.adem_reduce();
                let expected_coeff = (n + 1) % p;
                if expected_coeff == 0 {
                    assert!(reduced.is_zero(), "P^1P^{n} at p={p}");
                } else {
                    let terms: Vec<(&[u32], u32)> = reduced.terms().collect();
                    assert_eq!(terms, vec![(&[n + 1][..], expected_coeff)], "P^1P^{n} at p={p}");
                }
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_and_degree_preserving() {
        let e = SteenrodElement::from_word(&word(3, &[2, 3, 1]));
        let once = e.adem_reduce();
        assert!(once.is_admissible());
        assert_eq!(once.adem_reduce(), once);
        assert_eq!(once.degree(), e.degree());
    }

    #[test]
    fn lucas_binomials() {
        assert_eq!(binomial_mod_p(5, 2, 3), 10 % 3);
        assert_eq!(binomial_mod_p(10, 5, 3), 252 % 3);
        assert_eq!(binomial_mod_p(7, 3, 5), 35 % 5);
        assert_eq!(binomial_mod_p(4, 7, 5), 0);
        assert_eq!(binomial_mod_p(100, 0, 7), 1);
    }

    #[test]
    fn probe_is_quiet() {
        let report = confluence_probe(3, 300, 4, 9, 0xA11CE).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn parse_dotted_words() {
        let w = PowerWord::parse("P^1.P^1", 3).unwrap();
        assert_eq!(w.exponents(), &[1, 1]);
        assert!(PowerWord::parse("P^0", 3).is_err());
        assert!(PowerWord::parse("Q^1", 3).is_err());
        assert!(PowerWord::parse("P^1", 4).is_err());
    }

    #[test]
    fn display_forms() {
        let e = SteenrodElement::from_word(&word(3, &[1, 1]));
        assert_eq!(e.adem_reduce().to_string(), "2 P^2");
        assert_eq!(word(3, &[3, 1]).to_string(), "P^3 P^1");
    }
}
