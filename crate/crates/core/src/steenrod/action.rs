//! Unstable reduced-power actions on truncated polynomial algebras.
//!
//! An [`Algebra`] is a graded-commutative polynomial algebra over F_p on
//! even-degree generators, optionally truncated by the monomial ideal of
//! all products of at least `truncation` generator factors. The action of
//! a power `P^k` on a product is expanded by the Cartan formula (no signs:
//! everything is even), and on a generator `y` of degree `2d` it is
//!
//! * `P^0 y = y`,
//! * `P^d y = y^p` and `P^k y = 0` for `k > d` (the unstable rules), and
//! * a caller-supplied [`ActionTable`] entry otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{check_odd_prime, PowerWord, SteenrodElement, SteenrodError};

/// A named generator of even positive degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    pub name: String,
    pub degree: u64,
}

impl GradedClass {
    pub fn new(name: impl Into<String>, degree: u64) -> Result<Self, SteenrodError> {
        if degree == 0 || degree % 2 != 0 {
            return Err(SteenrodError::BadDegree(degree));
        }
        Ok(GradedClass {
            name: name.into(),
            degree,
        })
    }
}

/// Monomial: generator index -> positive exponent.
type Monomial = BTreeMap<usize, u32>;

/// Truncated polynomial algebra on even-degree generators over F_p.
#[derive(Debug, Clone)]
pub struct Algebra {
    p: u32,
    generators: Vec<GradedClass>,
    index: HashMap<String, usize>,
    /// Monomials with at least this many generator factors (counted with
    /// multiplicity) are zero; `None` means no truncation.
    truncation: Option<usize>,
}

impl Algebra {
    pub fn new(
        p: u32,
        generators: Vec<GradedClass>,
        truncation: Option<usize>,
    ) -> Result<Self, SteenrodError> {
        check_odd_prime(p)?;
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(SteenrodError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Algebra {
            p,
            generators,
            index,
            truncation,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn generators(&self) -> &[GradedClass] {
        &self.generators
    }

    fn generator_index(&self, name: &str) -> Result<usize, SteenrodError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| SteenrodError::UnknownGenerator(name.to_string()))
    }

    /// The generator as a polynomial.
    pub fn generator(&self, name: &str) -> Result<Polynomial, SteenrodError> {
        let i = self.generator_index(name)?;
        let mut mono = Monomial::new();
        mono.insert(i, 1);
        Ok(Polynomial {
            p: self.p,
            terms: BTreeMap::from([(mono, 1)]),
        })
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            p: self.p,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            p: self.p,
            terms: BTreeMap::from([(Monomial::new(), 1)]),
        }
    }

    fn monomial_factor_count(mono: &Monomial) -> u32 {
        mono.values().sum()
    }

    fn monomial_degree(&self, mono: &Monomial) -> u64 {
        mono.iter()
            .map(|(&g, &e)| self.generators[g].degree * e as u64)
            .sum()
    }

    fn truncated(&self, mono: &Monomial) -> bool {
        match self.truncation {
            Some(bound) => Self::monomial_factor_count(mono) as usize >= bound,
            None => false,
        }
    }

    /// Renders a polynomial with generator names, smallest monomials first.
    pub fn render(&self, poly: &Polynomial) -> String {
        if poly.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (mono, coeff) in &poly.terms {
            let mut s = String::new();
            if *coeff != 1 || mono.is_empty() {
                s.push_str(&coeff.to_string());
            }
            for (&g, &e) in mono {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&self.generators[g].name);
                if e > 1 {
                    s.push_str(&format!("^{e}"));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// An element of an [`Algebra`]: monomial -> nonzero coefficient mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    p: u32,
    terms: BTreeMap<Monomial, u32>,
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: Monomial, coeff: u64) {
        use std::collections::btree_map::Entry;
        let coeff = (coeff % self.p as u64) as u32;
        if coeff == 0 {
            return;
        }
        match self.terms.entry(mono) {
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

    pub fn add(&self, other: &Polynomial, alg: &Algebra) -> Polynomial {
        let mut out = self.clone();
        for (mono, &coeff) in &other.terms {
            if !alg.truncated(mono) {
                out.add_term(mono.clone(), coeff as u64);
            }
        }
        out
    }

    pub fn scale(&self, c: u32, alg: &Algebra) -> Polynomial {
        let mut out = alg.zero();
        for (mono, &coeff) in &self.terms {
            out.add_term(mono.clone(), coeff as u64 * c as u64);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial, alg: &Algebra) -> Polynomial {
        let mut out = alg.zero();
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let mut mono = m1.clone();
                for (&g, &e) in m2 {
                    *mono.entry(g).or_insert(0) += e;
                }
                // truncation is a monomial ideal: dropping early is exact
                if !alg.truncated(&mono) {
                    out.add_term(mono, c1 as u64 * c2 as u64);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32, alg: &Algebra) -> Polynomial {
        let mut out = alg.one();
        for _ in 0..e {
            out = out.mul(self, alg);
        }
        out
    }

    /// Common degree of the monomials, if homogeneous and nonzero.
    pub fn degree(&self, alg: &Algebra) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|m| alg.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, coeff)| {
                let factors: Vec<String> = mono
                    .iter()
                    .map(|(g, e)| {
                        if *e > 1 {
                            format!("g{g}^{e}")
                        } else {
                            format!("g{g}")
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    coeff.to_string()
                } else if *coeff == 1 {
                    factors.join(" ")
                } else {
                    format!("{coeff} {}", factors.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Caller-supplied values of `P^k` on generators, for the exponents the
/// unstable rules do not force.
#[derive(Debug, Clone, Default)]
pub struct ActionTable {
    entries: HashMap<(String, u32), Polynomial>,
}

impl ActionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, class: &str, k: u32, value: Polynomial) {
        self.entries.insert((class.to_string(), k), value);
    }

    fn get(&self, class: &str, k: u32) -> Option<&Polynomial> {
        self.entries.get(&(class.to_string(), k))
    }
}

/// All ways to write `k` as an ordered sum of `parts` non-negative
/// integers, in lexicographic order.
fn weak_compositions(k: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(k: u32, parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if k == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if parts == 1 {
            acc.push(k);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for first in 0..=k {
            acc.push(first);
            go(k - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, parts, &mut Vec::new(), &mut out);
    out
}

/// The Cartan expansion of `P^k` over an ordered list of factors: one
/// term `P^{i_1} x_1 ... P^{i_m} x_m` per composition `k = i_1 + .. + i_m`.
/// Signs are trivial because all degrees are even.
pub fn cartan_expand(k: u32, factors: &[GradedClass]) -> Vec<Vec<(GradedClass, u32)>> {
    weak_compositions(k, factors.len())
        .into_iter()
        .map(|comp| factors.iter().cloned().zip(comp).collect())
        .collect()
}

fn act_power_on_generator(
    alg: &Algebra,
    table: &ActionTable,
    k: u32,
    gen: usize,
    unstable: bool,
) -> Result<Polynomial, SteenrodError> {
    let class = &alg.generators()[gen];
    if k == 0 {
        return alg.generator(&class.name);
    }
    if unstable {
        let half = class.degree / 2;
        if (k as u64) == half {
            return Ok(alg.generator(&class.name)?.pow(alg.prime(), alg));
        }
        if (k as u64) > half {
            return Ok(alg.zero());
        }
    }
    table
        .get(&class.name, k)
        .cloned()
        .ok_or_else(|| SteenrodError::MissingAction {
            class: class.name.clone(),
            k,
        })
}

/// `P^k` on the `e`-th power of one generator, with the Cartan expansion
/// collapsed over the equal factors: the distributions `(c_0, c_1, ...)`
/// of the `e` factors among the powers `P^0, P^1, ...` with
/// `sum t c_t = k` each contribute `multinomial(e; c) prod (P^t g)^{c_t}`.
fn act_power_on_generator_power(
    alg: &Algebra,
    table: &ActionTable,
    k: u32,
    gen: usize,
    e: u32,
    unstable: bool,
) -> Result<Polynomial, SteenrodError> {
    // enumerate counts c_t for t >= 1 with sum t*c_t = k and sum c_t <= e
    fn distributions(k: u32, max_t: u32, slots: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        if max_t == 0 || slots == 0 {
            return;
        }
        for c in 0..=(k / max_t).min(slots) {
            acc.push(c);
            distributions(k - c * max_t, max_t - 1, slots - c, acc, out);
            acc.pop();
        }
    }
    let mut positive_counts = Vec::new();
    distributions(k, k, e, &mut Vec::new(), &mut positive_counts);

    let mut out = alg.zero();
    let gen_poly = alg.generator(&alg.generators()[gen].name)?;
    for counts in positive_counts {
        // counts[j] factors receive P^(k - j)
        let mut coeff = 1u64;
        let mut term = alg.one();
        let mut remaining = e;
        for (j, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = k - j as u32;
            coeff = coeff * super::binomial_mod_p(remaining as u64, c as u64, alg.prime()) as u64
                % alg.prime() as u64;
            remaining -= c;
            let acted = act_power_on_generator(alg, table, t, gen, unstable)?;
            term = term.mul(&acted.pow(c, alg), alg);
            if term.is_zero() || coeff == 0 {
                break;
            }
        }
        if coeff == 0 || term.is_zero() {
            continue;
        }
        // the untouched factors keep P^0
        term = term.mul(&gen_poly.pow(remaining, alg), alg);
        out = out.add(&term.scale(coeff as u32, alg), alg);
    }
    Ok(out)
}

/// `P^k` applied to a polynomial: Cartan expansion over the generator
/// groups of each monomial, unstable rules and the action table on each
/// generator, truncation applied to the result.
pub fn act_power(
    alg: &Algebra,
    table: &ActionTable,
    k: u32,
    x: &Polynomial,
    unstable: bool,
) -> Result<Polynomial, SteenrodError> {
    if x.p != alg.prime() {
        return Err(SteenrodError::PrimeMismatch(x.p, alg.prime()));
    }
    let mut out = alg.zero();
    for (mono, &coeff) in &x.terms {
        let groups: Vec<(usize, u32)> = mono.iter().map(|(&g, &e)| (g, e)).collect();
        if groups.is_empty() {
            // P^k on the unit: identity for k = 0, zero otherwise
            if k == 0 {
                out.add_term(Monomial::new(), coeff as u64);
            }
            continue;
        }
        for comp in weak_compositions(k, groups.len()) {
            let mut term = alg.one();
            for (&(g, e), &i) in groups.iter().zip(&comp) {
                term = term.mul(
                    &act_power_on_generator_power(alg, table, i, g, e, unstable)?,
                    alg,
                );
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term.scale(coeff, alg), alg);
        }
    }
    Ok(out)
}

/// A word `P^{a_1} ... P^{a_m}` applied right-to-left.
pub fn act_word(
    alg: &Algebra,
    table: &ActionTable,
    word: &PowerWord,
    x: &Polynomial,
    unstable: bool,
) -> Result<Polynomial, SteenrodError> {
    if word.prime() != alg.prime() {
        return Err(SteenrodError::PrimeMismatch(word.prime(), alg.prime()));
    }
    let mut acc = x.clone();
    for &a in word.exponents().iter().rev() {
        acc = act_power(alg, table, a, &acc, unstable)?;
    }
    Ok(acc)
}

/// A linear combination of words applied term by term.
pub fn act_element(
    alg: &Algebra,
    table: &ActionTable,
    e: &SteenrodElement,
    x: &Polynomial,
    unstable: bool,
) -> Result<Polynomial, SteenrodError> {
    if e.prime() != alg.prime() {
        return Err(SteenrodError::PrimeMismatch(e.prime(), alg.prime()));
    }
    let mut out = alg.zero();
    for (word, coeff) in e.terms() {
        let w = PowerWord::new(e.prime(), word.to_vec())?;
        let v = act_word(alg, table, &w, x, unstable)?;
        out = out.add(&v.scale(coeff, alg), alg);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_algebra(p: u32, truncation: Option<usize>) -> Algebra {
        // generators modeled on the transgression classes z_4, z_6, ..., z_{2p+2}
        let gens: Vec<GradedClass> = (2..=(p + 1))
            .map(|i| GradedClass::new(format!("z{}", 2 * i), 2 * i as u64).unwrap())
            .collect();
        Algebra::new(p, gens, truncation).unwrap()
    }

    #[test]
    fn unstable_top_power_is_pth_power() {
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        let res = act_power(&alg, &ActionTable::new(), 2, &z4, true).unwrap();
        assert_eq!(res, z4.pow(3, &alg));
    }

    #[test]
    fn unstable_overflow_vanishes() {
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        let res = act_power(&alg, &ActionTable::new(), 3, &z4, true).unwrap();
        assert!(res.is_zero());
    }

    #[test]
    fn p0_is_identity() {
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        let res = act_power(&alg, &ActionTable::new(), 0, &z4, true).unwrap();
        assert_eq!(res, z4);
    }

    #[test]
    fn missing_action_is_reported() {
        let alg = z4_algebra(5, None);
        let z4 = alg.generator("z4").unwrap();
        let err = act_power(&alg, &ActionTable::new(), 1, &z4, true).unwrap_err();
        assert!(matches!(err, SteenrodError::MissingAction { .. }));
    }

    #[test]
    fn cartan_term_counts() {
        let x = GradedClass::new("x", 4).unwrap();
        let y = GradedClass::new("y", 6).unwrap();
        // k = 0: the single term x y
        let expansion = cartan_expand(0, &[x.clone(), y.clone()]);
        assert_eq!(expansion, vec![vec![(x.clone(), 0), (y.clone(), 0)]]);
        // k = 1 on two factors: P^1 x . y + x . P^1 y
        let expansion = cartan_expand(1, &[x.clone(), y.clone()]);
        assert_eq!(
            expansion,
            vec![
                vec![(x.clone(), 0), (y.clone(), 1)],
                vec![(x.clone(), 1), (y.clone(), 0)],
            ]
        );
        // k = 1 on m factors: m terms
        let many = vec![x.clone(); 5];
        assert_eq!(cartan_expand(1, &many).len(), 5);
    }

    #[test]
    fn cartan_on_a_product_in_the_algebra() {
        // P^1 (z4 * z4) = 2 z4 P^1 z4 with a table entry P^1 z4 = z8
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        let z8 = alg.generator("z8").unwrap();
        let mut table = ActionTable::new();
        table.insert("z4", 1, z8.clone());
        let sq = z4.mul(&z4, &alg);
        let res = act_power(&alg, &table, 1, &sq, true).unwrap();
        let expected = z4.mul(&z8, &alg).scale(2, &alg);
        assert_eq!(res, expected);
    }

    #[test]
    fn truncation_kills_long_monomials() {
        let alg = z4_algebra(3, Some(3));
        let z4 = alg.generator("z4").unwrap();
        assert!(z4.pow(3, &alg).is_zero());
        assert!(!z4.pow(2, &alg).is_zero());
    }

    #[test]
    fn evaluation_commutes_with_adem_reduction() {
        // act(adem_reduce(P^1 P^1), z4) = act(P^1 P^1, z4) at p = 3, with
        // the table closing the composite: P^1 z4 = z8, P^1 z8 = 2 z4^3
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        let z8 = alg.generator("z8").unwrap();
        let mut table = ActionTable::new();
        table.insert("z4", 1, z8.clone());
        table.insert("z8", 1, z4.pow(3, &alg).scale(2, &alg));

        let word = PowerWord::new(3, vec![1, 1]).unwrap();
        let direct = act_word(&alg, &table, &word, &z4, true).unwrap();
        let reduced = SteenrodElement::from_word(&word).adem_reduce();
        let via_reduced = act_element(&alg, &table, &reduced, &z4, true).unwrap();
        assert_eq!(direct, via_reduced);
        assert_eq!(direct, z4.pow(3, &alg).scale(2, &alg));
    }

    #[test]
    fn render_names() {
        let alg = z4_algebra(3, None);
        let z4 = alg.generator("z4").unwrap();
        assert_eq!(alg.render(&z4.pow(3, &alg)), "z4^3");
        assert_eq!(alg.render(&alg.zero()), "0");
        assert_eq!(alg.render(&alg.one()), "1");
    }
}
