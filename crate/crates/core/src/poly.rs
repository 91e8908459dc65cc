//! Polynomial semirings `S[X]`, content ideals and the Gaussian property.
//!
//! Ideals of the base are carried as generator lists ([`IdealRep`]); each base
//! family decides membership and equality through [`IdealArithmetic`]. On ℕ
//! membership is a numerical-semigroup question and is answered by a
//! reachability table over the scaled generators.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::finite::{ideal_generated, FiniteSemiring, IdealLattice};
use crate::semiring::{
    nat, Boolean, Divisibility, ElementSyntax, MinPlus, Natural, Naturals, Semiring, Tropical,
};
use crate::verdict::Verdict;

pub const DEFAULT_CONTENT_EXPONENT_CAP: u64 = 8;
pub const DEFAULT_TRIALS: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot parse polynomial `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

/// A finitely generated ideal of a base semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealRep<E> {
    pub generators: Vec<E>,
}

impl<E> IdealRep<E> {
    pub fn new(generators: Vec<E>) -> Self {
        IdealRep { generators }
    }
}

/// Result of comparing two ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealComparison<E> {
    pub equal: bool,
    /// An element lying in exactly one of the two ideals.
    pub witness: Option<E>,
    /// Membership-agreement bound, for families that compare up to a bound.
    pub bound: Option<u64>,
}

/// Ideal membership and equality for finitely generated ideals.
pub trait IdealArithmetic: Semiring {
    fn ideal_contains(&self, gens: &[Self::Elem], x: &Self::Elem) -> bool;

    fn ideal_compare(&self, i: &[Self::Elem], j: &[Self::Elem]) -> IdealComparison<Self::Elem>;

    /// Whether every ideal of the family is subtractive.
    fn is_subtractive_family(&self) -> bool;

    /// Drops zeros, duplicates and generators generated by the others.
    fn minimalize(&self, gens: &[Self::Elem]) -> Vec<Self::Elem> {
        let mut out: Vec<Self::Elem> = gens
            .iter()
            .filter(|g| !self.is_zero(g))
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut i = 0;
        while i < out.len() {
            let others: Vec<Self::Elem> = out
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            if self.ideal_contains(&others, &out[i]) {
                out.remove(i);
            } else {
                i += 1;
            }
        }
        out
    }
}

/// Membership of `x` in the additive monoid generated by positive `gens`.
fn numerical_monoid_contains(gens: &[u64], x: u64) -> bool {
    if x == 0 {
        return true;
    }
    let g = gens.iter().fold(0u64, |acc, &v| acc.gcd(&v));
    if g == 0 || !x.is_multiple_of(g) {
        return false;
    }
    let scaled: Vec<u64> = gens.iter().map(|v| v / g).collect();
    let target = x / g;
    let largest = *scaled.iter().max().expect("nonempty");
    // past (largest)² every multiple of the gcd is reachable
    if target > largest.saturating_mul(largest) {
        return true;
    }
    let target = target as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for v in 1..=target {
        reach[v] = scaled
            .iter()
            .any(|&s| s as usize <= v && reach[v - s as usize]);
    }
    reach[target]
}

fn small(gens: &[Natural]) -> Option<Vec<u64>> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_u64())
        .collect()
}

impl IdealArithmetic for Naturals {
    fn ideal_contains(&self, gens: &[Natural], x: &Natural) -> bool {
        if x.is_zero() {
            return true;
        }
        let Some(g) = small(gens) else {
            panic!("ideal generators exceed the u64 range")
        };
        if g.is_empty() {
            return false;
        }
        match x.to_u64() {
            Some(x) => numerical_monoid_contains(&g, x),
            None => {
                let d = g.iter().fold(0u64, |acc, &v| acc.gcd(&v));
                (x % nat(d)).is_zero()
            }
        }
    }

    fn ideal_compare(&self, i: &[Natural], j: &[Natural]) -> IdealComparison<Natural> {
        let largest = i
            .iter()
            .chain(j)
            .filter_map(|g| g.to_u64())
            .max()
            .unwrap_or(0);
        let bound = largest * largest + largest;
        let gi = small(i).expect("u64 generators");
        let gj = small(j).expect("u64 generators");
        let witness = (0..=bound)
            .find(|&x| numerical_monoid_contains(&gi, x) != numerical_monoid_contains(&gj, x));
        let mutual = i.iter().all(|g| self.ideal_contains(j, g))
            && j.iter().all(|g| self.ideal_contains(i, g));
        debug_assert_eq!(mutual, witness.is_none());
        IdealComparison {
            equal: mutual && witness.is_none(),
            witness: witness.map(nat),
            bound: Some(bound),
        }
    }

    fn is_subtractive_family(&self) -> bool {
        false
    }
}

fn tropical_generator(gens: &[MinPlus]) -> MinPlus {
    gens.iter().copied().min().unwrap_or(MinPlus::Infinity)
}

impl IdealArithmetic for Tropical {
    fn ideal_contains(&self, gens: &[MinPlus], x: &MinPlus) -> bool {
        *x >= tropical_generator(gens)
    }

    fn ideal_compare(&self, i: &[MinPlus], j: &[MinPlus]) -> IdealComparison<MinPlus> {
        let (a, b) = (tropical_generator(i), tropical_generator(j));
        IdealComparison {
            equal: a == b,
            witness: (a != b).then(|| a.min(b)),
            bound: None,
        }
    }

    fn is_subtractive_family(&self) -> bool {
        true
    }

    fn minimalize(&self, gens: &[MinPlus]) -> Vec<MinPlus> {
        match tropical_generator(gens) {
            MinPlus::Infinity => Vec::new(),
            g => vec![g],
        }
    }
}

impl IdealArithmetic for Boolean {
    fn ideal_contains(&self, gens: &[bool], x: &bool) -> bool {
        !*x || gens.iter().any(|g| *g)
    }

    fn ideal_compare(&self, i: &[bool], j: &[bool]) -> IdealComparison<bool> {
        let (a, b) = (i.iter().any(|g| *g), j.iter().any(|g| *g));
        IdealComparison {
            equal: a == b,
            witness: (a != b).then_some(true),
            bound: None,
        }
    }

    fn is_subtractive_family(&self) -> bool {
        true
    }
}

impl IdealArithmetic for FiniteSemiring {
    fn ideal_contains(&self, gens: &[usize], x: &usize) -> bool {
        ideal_generated(self, gens).contains(*x)
    }

    fn ideal_compare(&self, i: &[usize], j: &[usize]) -> IdealComparison<usize> {
        let (a, b) = (ideal_generated(self, i), ideal_generated(self, j));
        let witness = a.members.symmetric_difference(&b.members).next().copied();
        IdealComparison {
            equal: a == b,
            witness,
            bound: None,
        }
    }

    fn is_subtractive_family(&self) -> bool {
        IdealLattice::new(self).all_subtractive()
    }
}

/// A polynomial `a₀ + a₁X + … + aₙXⁿ` with `aₙ ≠ 0`; the zero polynomial has
/// no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial<E> {
    coeffs: Vec<E>,
}

impl<E> Polynomial<E> {
    pub fn coefficients(&self) -> &[E] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The polynomial semiring over `base`.
#[derive(Debug, Clone, Default)]
pub struct Polynomials<S> {
    pub base: S,
}

impl<S: Semiring> Polynomials<S> {
    pub fn new(base: S) -> Self {
        Polynomials { base }
    }

    /// Builds a polynomial from `a₀, a₁, …`, stripping trailing zeros.
    pub fn poly(&self, mut coeffs: Vec<S::Elem>) -> Polynomial<S::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(&self, c: S::Elem) -> Polynomial<S::Elem> {
        self.poly(vec![c])
    }
}

impl<S: Semiring> Semiring for Polynomials<S> {
    type Elem = Polynomial<S::Elem>;

    fn name(&self) -> String {
        format!("{}[X]", self.base.name())
    }
    fn zero(&self) -> Self::Elem {
        Polynomial { coeffs: Vec::new() }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        let n = f.coeffs.len().max(g.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = f.coeffs.get(k).unwrap_or(&zero);
                let b = g.coeffs.get(k).unwrap_or(&zero);
                self.base.add(a, b)
            })
            .collect();
        self.poly(coeffs)
    }
    fn mul(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        poly_mul(&self.base, f, g)
    }
    fn is_unit(&self, f: &Self::Elem) -> bool {
        f.coeffs.len() == 1 && self.base.is_unit(&f.coeffs[0])
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
    /// Polynomials of degree ≤ `bound` whose coefficients have size ≤ `bound`.
    fn bounded_elements(&self, bound: u64) -> Vec<Self::Elem> {
        all_polynomials(
            &self.base,
            &self.base.bounded_elements(bound),
            bound as usize,
        )
    }
    fn is_semidomain(&self) -> Verdict {
        let pool = all_polynomials(&self.base, &self.base.bounded_elements(2), 2);
        match crate::semiring::cancellation_counterexample(self, &pool) {
            None => Verdict::holds(format!(
                "{}: no cancellation failure among polynomials of degree <= 2",
                self.name()
            ))
            .with_bound("degree", 2)
            .with_bound("coeff", 2),
            Some((a, b, c)) => Verdict::fails(
                format!(
                    "a={} b={} c={}",
                    self.render(&a),
                    self.render(&b),
                    self.render(&c)
                ),
                "ab = ac with a nonzero and b != c",
            ),
        }
    }
    fn render(&self, f: &Self::Elem) -> String {
        render_poly(&self.base, f)
    }
}

impl<S: Semiring> Divisibility for Polynomials<S> {
    /// Bounded search over quotients of degree ≤ deg(a) − deg(b) whose
    /// coefficients come from `a`'s coefficients, the base's small elements
    /// and `one`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if b.is_zero() {
            return a.is_zero().then(|| self.zero());
        }
        if a.is_zero() {
            return Some(self.zero());
        }
        let (da, db) = (a.degree()?, b.degree()?);
        if db > da {
            return None;
        }
        let mut pool: BTreeSet<S::Elem> = self.base.bounded_elements(4).into_iter().collect();
        pool.extend(a.coeffs.iter().cloned());
        let pool: Vec<S::Elem> = pool.into_iter().collect();
        all_polynomials(&self.base, &pool, da - db)
            .into_iter()
            .find(|q| self.mul(b, q) == *a)
    }
}

pub fn render_poly<S: Semiring>(base: &S, f: &Polynomial<S::Elem>) -> String {
    if f.is_zero() {
        return base.render(&base.zero());
    }
    let terms: Vec<String> = f
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !base.is_zero(c))
        .map(|(k, c)| match k {
            0 => base.render(c),
            1 => format!("{}X", base.render(c)),
            _ => format!("{}X^{k}", base.render(c)),
        })
        .collect();
    terms.join(" + ")
}

/// Parses `a0 + a1 X + a2 X^2 …`; a bare `X^k` has coefficient one.
pub fn parse_poly<S: ElementSyntax>(
    base: &S,
    text: &str,
) -> Result<Polynomial<S::Elem>, PolyError> {
    let fail = |reason: String| PolyError::Parse {
        text: text.to_string(),
        reason,
    };
    let mut coeffs: Vec<S::Elem> = Vec::new();
    for term in text.split('+') {
        let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(fail("empty term".into()));
        }
        let (coeff_text, degree) = match t.find(['X', 'x']) {
            None => (t.as_str(), 0usize),
            Some(pos) => {
                let rest = &t[pos + 1..];
                let degree = if rest.is_empty() {
                    1
                } else if let Some(d) = rest.strip_prefix('^') {
                    d.parse()
                        .map_err(|_| fail(format!("bad exponent in `{term}`")))?
                } else {
                    return Err(fail(format!("bad term `{term}`")));
                };
                (t[..pos].trim_end_matches('*'), degree)
            }
        };
        let coeff = if coeff_text.is_empty() {
            base.one()
        } else {
            base.parse_element(coeff_text)
                .ok_or_else(|| fail(format!("bad coefficient `{coeff_text}`")))?
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, base.zero());
        }
        coeffs[degree] = base.add(&coeffs[degree], &coeff);
    }
    Ok(Polynomials::new(base).poly(coeffs))
}

impl<S: Semiring> Semiring for &S {
    type Elem = S::Elem;
    fn name(&self) -> String {
        (*self).name()
    }
    fn zero(&self) -> S::Elem {
        (*self).zero()
    }
    fn one(&self) -> S::Elem {
        (*self).one()
    }
    fn add(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        (*self).add(a, b)
    }
    fn mul(&self, a: &S::Elem, b: &S::Elem) -> S::Elem {
        (*self).mul(a, b)
    }
    fn is_unit(&self, a: &S::Elem) -> bool {
        (*self).is_unit(a)
    }
    fn elements(&self) -> Option<Vec<S::Elem>> {
        (*self).elements()
    }
    fn bounded_elements(&self, bound: u64) -> Vec<S::Elem> {
        (*self).bounded_elements(bound)
    }
    fn is_semidomain(&self) -> Verdict {
        (*self).is_semidomain()
    }
    fn render(&self, a: &S::Elem) -> String {
        (*self).render(a)
    }
}

/// Coefficient `k` of `fg` is `Σ_{i+j=k} fᵢ·gⱼ` in the base.
pub fn poly_mul<S: Semiring>(
    base: &S,
    f: &Polynomial<S::Elem>,
    g: &Polynomial<S::Elem>,
) -> Polynomial<S::Elem> {
    if f.is_zero() || g.is_zero() {
        return Polynomial { coeffs: Vec::new() };
    }
    let mut coeffs = vec![base.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        for (j, b) in g.coeffs.iter().enumerate() {
            coeffs[i + j] = base.add(&coeffs[i + j], &base.mul(a, b));
        }
    }
    while coeffs.last().is_some_and(|c| base.is_zero(c)) {
        coeffs.pop();
    }
    Polynomial { coeffs }
}

/// Every polynomial of degree ≤ `degree` with coefficients from `pool`, each
/// exactly once, in lexicographic order of the coefficient tuple.
pub fn all_polynomials<S: Semiring>(
    base: &S,
    pool: &[S::Elem],
    degree: usize,
) -> Vec<Polynomial<S::Elem>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; degree + 1];
    loop {
        let mut coeffs: Vec<S::Elem> = idx.iter().map(|&i| pool[i].clone()).collect();
        while coeffs.last().is_some_and(|c| base.is_zero(c)) {
            coeffs.pop();
        }
        out.push(Polynomial { coeffs });
        // odometer over the tuple
        let mut k = 0;
        loop {
            if k > degree {
                return dedup_sorted(out);
            }
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn dedup_sorted<E: Ord>(mut v: Vec<Polynomial<E>>) -> Vec<Polynomial<E>> {
    v.sort();
    v.dedup();
    v
}

/// c(f): the ideal generated by the coefficients of `f`.
pub fn content<S: IdealArithmetic>(base: &S, f: &Polynomial<S::Elem>) -> IdealRep<S::Elem> {
    IdealRep::new(base.minimalize(&f.coeffs))
}

/// The ideal generated by all products of generators.
pub fn ideal_mul<S: IdealArithmetic>(
    base: &S,
    i: &IdealRep<S::Elem>,
    j: &IdealRep<S::Elem>,
) -> IdealRep<S::Elem> {
    let products: Vec<S::Elem> = i
        .generators
        .iter()
        .flat_map(|a| j.generators.iter().map(move |b| base.mul(a, b)))
        .collect();
    IdealRep::new(base.minimalize(&products))
}

/// `Iⁿ`, with `I⁰` the whole semiring.
pub fn ideal_pow<S: IdealArithmetic>(base: &S, i: &IdealRep<S::Elem>, n: u64) -> IdealRep<S::Elem> {
    let mut acc = IdealRep::new(vec![base.one()]);
    for _ in 0..n {
        acc = ideal_mul(base, &acc, i);
    }
    acc
}

pub fn ideal_equal<S: IdealArithmetic>(
    base: &S,
    i: &IdealRep<S::Elem>,
    j: &IdealRep<S::Elem>,
) -> IdealComparison<S::Elem> {
    base.ideal_compare(&i.generators, &j.generators)
}

pub fn ideal_contains_ideal<S: IdealArithmetic>(
    base: &S,
    outer: &IdealRep<S::Elem>,
    inner: &IdealRep<S::Elem>,
) -> bool {
    inner
        .generators
        .iter()
        .all(|g| base.ideal_contains(&outer.generators, g))
}

pub fn render_ideal<S: Semiring>(base: &S, i: &IdealRep<S::Elem>) -> String {
    let parts: Vec<String> = i.generators.iter().map(|g| base.render(g)).collect();
    format!("ideal{{{}}}", parts.join(","))
}

/// Least `n ≤ n_max` with `c(f)ⁿ·c(g) = c(f)ⁿ⁻¹·c(fg)`.
#[derive(Debug, Clone)]
pub struct ContentFormula {
    pub exponent: Option<u64>,
    pub hypothesis_holds: bool,
    pub verdict: Verdict,
}

pub fn check_content_formula<S: IdealArithmetic>(
    base: &S,
    f: &Polynomial<S::Elem>,
    g: &Polynomial<S::Elem>,
    n_max: u64,
) -> ContentFormula {
    let cf = content(base, f);
    let cg = content(base, g);
    let cfg = content(base, &poly_mul(base, f, g));
    let hypothesis_holds = base.is_subtractive_family();
    let exponent = (1..=n_max).find(|&n| {
        let lhs = ideal_mul(base, &ideal_pow(base, &cf, n), &cg);
        let rhs = ideal_mul(base, &ideal_pow(base, &cf, n - 1), &cfg);
        ideal_equal(base, &lhs, &rhs).equal
    });
    let warning = if hypothesis_holds {
        String::new()
    } else {
        format!("; warning: {} is not a subtractive family", base.name())
    };
    let pair = format!("f={} g={}", render_poly(base, f), render_poly(base, g));
    let verdict = match exponent {
        Some(n) => Verdict::holds_with(format!("n={n}"), format!("{pair}{warning}")),
        None => Verdict::fails(pair, format!("no exponent up to {n_max}{warning}")),
    }
    .with_bound("n_max", n_max);
    ContentFormula {
        exponent,
        hypothesis_holds,
        verdict,
    }
}

/// Contents of one polynomial pair.
#[derive(Debug, Clone)]
pub struct GaussianPair<E> {
    pub product_content: IdealRep<E>,
    pub content_product: IdealRep<E>,
    pub comparison: IdealComparison<E>,
    /// c(fg) ⊆ c(f)c(g), which holds in every semiring.
    pub contained: bool,
}

pub fn gaussian_pair<S: IdealArithmetic>(
    base: &S,
    f: &Polynomial<S::Elem>,
    g: &Polynomial<S::Elem>,
) -> GaussianPair<S::Elem> {
    let product_content = content(base, &poly_mul(base, f, g));
    let content_product = ideal_mul(base, &content(base, f), &content(base, g));
    let comparison = ideal_equal(base, &product_content, &content_product);
    let contained = ideal_contains_ideal(base, &content_product, &product_content);
    GaussianPair {
        product_content,
        content_product,
        comparison,
        contained,
    }
}

pub fn gaussian_pair_verdict<S: IdealArithmetic>(
    base: &S,
    f: &Polynomial<S::Elem>,
    g: &Polynomial<S::Elem>,
) -> Verdict {
    let p = gaussian_pair(base, f, g);
    let desc = format!(
        "f={} g={} c(fg)={} c(f)c(g)={}",
        render_poly(base, f),
        render_poly(base, g),
        render_ideal(base, &p.product_content),
        render_ideal(base, &p.content_product)
    );
    let mut v = if !p.contained {
        Verdict::fails(desc, "c(fg) is not contained in c(f)c(g)")
    } else if p.comparison.equal {
        Verdict::holds_with(desc, "c(fg) = c(f)c(g)")
    } else {
        let w = p
            .comparison
            .witness
            .as_ref()
            .map(|w| base.render(w))
            .unwrap_or_default();
        Verdict::fails(
            format!("{desc} separating={w}"),
            format!("{w} lies in c(f)c(g) but not in c(fg)"),
        )
    };
    if let Some(b) = p.comparison.bound {
        v = v.with_bound("agreement_bound", b);
    }
    v
}

/// How `check_gaussian` chooses polynomial pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianMode {
    /// Every unordered pair of polynomials within the bounds.
    Exhaustive,
    /// `trials` random pairs; trial `i` draws from its own stream of `seed`.
    Sampled { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianScope {
    pub degree_bound: usize,
    pub coeff_bound: u64,
    pub mode: GaussianMode,
}

/// `c(fg) = c(f)c(g)` over the pairs selected by `scope`. The containment
/// `c(fg) ⊆ c(f)c(g)` is checked on every pair as well.
pub fn check_gaussian<S: IdealArithmetic>(base: &S, scope: GaussianScope) -> Verdict {
    let pool = base.bounded_elements(scope.coeff_bound);
    let tag = |v: Verdict| {
        let v = v
            .with_bound("degree", scope.degree_bound as u64)
            .with_bound("coeff", scope.coeff_bound);
        match scope.mode {
            GaussianMode::Exhaustive => v,
            GaussianMode::Sampled { trials, seed } => {
                v.with_bound("trials", trials).with_bound("seed", seed)
            }
        }
    };
    let mut tested = 0u64;
    let mut check = |f: &Polynomial<S::Elem>, g: &Polynomial<S::Elem>| -> Option<Verdict> {
        tested += 1;
        let p = gaussian_pair(base, f, g);
        (!p.contained || !p.comparison.equal).then(|| gaussian_pair_verdict(base, f, g))
    };
    match scope.mode {
        GaussianMode::Exhaustive => {
            let polys = all_polynomials(base, &pool, scope.degree_bound);
            for (i, f) in polys.iter().enumerate() {
                for g in &polys[i..] {
                    if let Some(v) = check(f, g) {
                        return tag(v);
                    }
                }
            }
        }
        GaussianMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..trials {
                rng.set_stream(i);
                let draw = |rng: &mut ChaCha8Rng| {
                    let d = rng.gen_range(0..=scope.degree_bound);
                    let coeffs = (0..=d).map(|_| pool[rng.gen_range(0..pool.len())].clone());
                    Polynomials::new(base).poly(coeffs.collect())
                };
                let f = draw(&mut rng);
                let g = draw(&mut rng);
                if let Some(v) = check(&f, &g) {
                    return tag(v);
                }
            }
        }
    }
    tag(Verdict::holds(format!(
        "{}: c(fg) = c(f)c(g) on {tested} pairs",
        base.name()
    )))
}

impl<E: fmt::Display> fmt::Display for IdealRep<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "ideal{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nats(xs: &[u64]) -> Vec<Natural> {
        xs.iter().map(|&x| nat(x)).collect()
    }

    fn np(xs: &[u64]) -> Polynomial<Natural> {
        Polynomials::new(Naturals).poly(nats(xs))
    }

    fn tp(xs: &[MinPlus]) -> Polynomial<MinPlus> {
        Polynomials::new(Tropical).poly(xs.to_vec())
    }

    const F: fn(u64) -> MinPlus = MinPlus::Finite;

    #[test]
    fn convolution_examples() {
        assert_eq!(
            poly_mul(&Naturals, &np(&[1, 1]), &np(&[1, 1])),
            np(&[1, 2, 1])
        );
        let b = Polynomials::new(Boolean);
        let one_x = b.poly(vec![true, true]);
        assert_eq!(
            poly_mul(&Boolean, &one_x, &one_x),
            b.poly(vec![true, true, true])
        );
        let t = tp(&[F(0), F(1)]);
        assert_eq!(poly_mul(&Tropical, &t, &t), tp(&[F(0), F(1), F(2)]));
    }

    #[test]
    fn contents() {
        assert_eq!(content(&Naturals, &np(&[2, 3])).generators, nats(&[2, 3]));
        assert_eq!(content(&Naturals, &np(&[1, 1])).generators, nats(&[1]));
        assert!(content(&Naturals, &np(&[])).generators.is_empty());
        assert_eq!(
            content(&Naturals, &np(&[2, 3, 7])).generators,
            nats(&[2, 3])
        );
    }

    #[test]
    fn ideal_products_and_equality() {
        let i = IdealRep::new(nats(&[2, 3]));
        assert_eq!(ideal_mul(&Naturals, &i, &i).generators, nats(&[4, 6, 9]));
        let whole = IdealRep::new(nats(&[1]));
        assert!(ideal_equal(&Naturals, &ideal_mul(&Naturals, &i, &whole), &i).equal);
        let j = IdealRep::new(nats(&[2, 3, 7]));
        assert!(ideal_equal(&Naturals, &i, &j).equal);
        let c = ideal_equal(
            &Naturals,
            &IdealRep::new(nats(&[6, 13])),
            &IdealRep::new(nats(&[4, 6, 9])),
        );
        assert!(!c.equal);
        assert_eq!(c.witness, Some(nat(4)));
        assert_eq!(c.bound, Some(13 * 13 + 13));
    }

    #[test]
    fn finite_ideal_product_by_closure() {
        let c = FiniteSemiring::chain3();
        let i = IdealRep::new(vec![2]);
        let whole = IdealRep::new(vec![1]);
        assert_eq!(ideal_mul(&c, &i, &whole).generators, vec![2]);
        assert!(ideal_equal(&c, &ideal_mul(&c, &i, &i), &i).equal);
    }

    #[test]
    fn numerical_monoid_membership() {
        assert!(numerical_monoid_contains(&[2, 3], 7));
        assert!(!numerical_monoid_contains(&[2, 3], 1));
        assert!(!numerical_monoid_contains(&[6, 13], 4));
        assert!(numerical_monoid_contains(&[6, 13], 1000));
        assert!(!numerical_monoid_contains(&[4, 6], 1001));
        assert!(Naturals.ideal_contains(&nats(&[4, 6]), &(nat(1) << 80u32)));
    }

    #[test]
    fn content_formula_examples() {
        let b = Polynomials::new(Boolean);
        let f = b.poly(vec![true, false, true]);
        let g = b.poly(vec![false, true, true]);
        let r = check_content_formula(&Boolean, &f, &g, 8);
        assert_eq!(r.exponent, Some(1));
        let r = check_content_formula(&Tropical, &tp(&[F(0), F(1)]), &tp(&[F(0), F(2)]), 8);
        assert_eq!(r.exponent, Some(1));
        let r = check_content_formula(&Naturals, &np(&[2, 3]), &np(&[3, 2]), 8);
        assert_eq!(r.exponent, None);
        assert!(!r.hypothesis_holds);
        assert!(r.verdict.note.contains("not a subtractive family"));
    }

    #[test]
    fn naturals_are_not_gaussian() {
        let v = gaussian_pair_verdict(&Naturals, &np(&[2, 3]), &np(&[3, 2]));
        assert!(!v.holds);
        assert!(v.witness.unwrap().contains("separating=4"));
        let p = gaussian_pair(&Naturals, &np(&[2, 3]), &np(&[3, 2]));
        assert_eq!(p.product_content.generators, nats(&[6, 13]));
        assert_eq!(p.content_product.generators, nats(&[4, 6, 9]));
        assert!(p.contained);
    }

    #[test]
    fn boolean_gaussian_exhaustive() {
        let scope = GaussianScope {
            degree_bound: 3,
            coeff_bound: 1,
            mode: GaussianMode::Exhaustive,
        };
        assert!(check_gaussian(&Boolean, scope).holds);
    }

    #[test]
    fn sampled_gaussian_is_reproducible() {
        let scope = GaussianScope {
            degree_bound: 2,
            coeff_bound: 6,
            mode: GaussianMode::Sampled {
                trials: 200,
                seed: 7,
            },
        };
        let a = check_gaussian(&Naturals, scope);
        let b = check_gaussian(&Naturals, scope);
        assert_eq!(a, b);
        assert!(!a.holds);
    }

    #[test]
    fn parse_and_render() {
        let f = parse_poly(&Naturals, "2 + 3X + X^2").unwrap();
        assert_eq!(f, np(&[2, 3, 1]));
        assert_eq!(render_poly(&Naturals, &f), "2 + 3X + 1X^2");
        let t = parse_poly(&Tropical, "inf + 1X").unwrap();
        assert_eq!(t, tp(&[MinPlus::Infinity, F(1)]));
        assert!(parse_poly(&Naturals, "2 + ").is_err());
        assert!(parse_poly(&Naturals, "2 + 3Y").is_err());
    }

    #[test]
    fn polynomial_division_and_cancellation() {
        let p = Polynomials::new(Naturals);
        assert_eq!(
            p.exact_div(&np(&[1, 2, 1]), &np(&[1, 1])),
            Some(np(&[1, 1]))
        );
        assert_eq!(p.exact_div(&np(&[1, 2, 2]), &np(&[1, 1])), None);
        assert!(Polynomials::new(Naturals).is_semidomain().holds);
        // (1+X)(1+X²) = (1+X)(1+X+X²) over the Booleans
        assert!(!Polynomials::new(Boolean).is_semidomain().holds);
    }

    #[test]
    fn polynomial_enumeration_counts() {
        let polys = all_polynomials(&Boolean, &[false, true], 3);
        assert_eq!(polys.len(), 16);
        let polys = all_polynomials(&Tropical, &Tropical.bounded_elements(6), 3);
        assert_eq!(polys.len(), 8usize.pow(4));
    }
}
