//! Fractions and localizations of semidomains, integral elements,
//! nilpotent-freeness and Goldman-Krull detection.
//!
//! Prime spectra are not computed by a general algorithm. Each family
//! registers what it knows through [`SpectrumRegistry`]: the min-plus and
//! Boolean spectra and those of finite tables are complete, the ℕ list is a
//! partial sample.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::factor::{is_classical_prime, Factoring};
use crate::finite::{
    enumerate_ideals, localize_finite, nilpotent_witness, spectrum, FiniteError, FiniteSemiring,
    IdealLattice, McSet,
};
use crate::poly::{render_ideal, IdealArithmetic, IdealComparison, IdealRep};
use crate::semiring::{nat, Boolean, Divisibility, MinPlus, Natural, Naturals, Semiring, Tropical};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracError {
    #[error("not a multiplicatively closed set: {0}")]
    NotMcSet(String),
    #[error("the localization is the zero semiring")]
    ZeroSemiring,
    #[error("no spectrum procedure is registered for {0}")]
    UnregisteredSpectrum(String),
    #[error("{family} is not a principal ideal semidomain: {witness}")]
    NotPisd { family: String, witness: String },
    #[error("{0} is not an element of the localization")]
    NotMember(String),
}

/// Prime ideals a family knows about, the zero ideal included when prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRegistry<E> {
    pub primes: Vec<IdealRep<E>>,
    /// Whether `primes` is the whole spectrum.
    pub complete: bool,
}

pub trait SpectrumRegistry: Semiring {
    /// Registered primes; partial lists are sized by `bound`.
    fn registered_primes(&self, bound: u64) -> Result<PrimeRegistry<Self::Elem>, FracError>;

    /// A nonzero prime avoiding `u`, for families whose spectrum is only
    /// partially registered.
    fn refute_gk_candidate(&self, _u: &Self::Elem) -> Option<IdealRep<Self::Elem>> {
        None
    }

    /// Ideals probed when deciding whether every ideal is principal.
    fn probe_ideals(&self, bound: u64) -> Result<Vec<IdealRep<Self::Elem>>, FracError> {
        self.registered_primes(bound).map(|r| r.primes)
    }
}

impl SpectrumRegistry for Naturals {
    /// `(p)` for primes `p ≤ bound`, plus the maximal ideal `⟨2,3⟩ = ℕ∖{1}`.
    fn registered_primes(&self, bound: u64) -> Result<PrimeRegistry<Natural>, FracError> {
        let mut primes = vec![IdealRep::new(Vec::new())];
        primes.extend(
            (2..=bound.max(3))
                .filter(|&p| is_classical_prime(p))
                .map(|p| IdealRep::new(vec![nat(p)])),
        );
        primes.push(IdealRep::new(vec![nat(2), nat(3)]));
        Ok(PrimeRegistry {
            primes,
            complete: false,
        })
    }

    /// `(p)` for the least prime `p` not dividing `u`.
    fn refute_gk_candidate(&self, u: &Natural) -> Option<IdealRep<Natural>> {
        if u.is_zero() {
            return None;
        }
        let p = (2u64..)
            .filter(|&p| is_classical_prime(p))
            .find(|&p| !(u % nat(p)).is_zero())
            .expect("infinitely many primes");
        Some(IdealRep::new(vec![nat(p)]))
    }
}

impl SpectrumRegistry for Tropical {
    /// Ideals are the up-sets `{x ≥ m} ∪ {∞}`; the primes are the zero ideal
    /// and `(1)`.
    fn registered_primes(&self, _bound: u64) -> Result<PrimeRegistry<MinPlus>, FracError> {
        Ok(PrimeRegistry {
            primes: vec![
                IdealRep::new(Vec::new()),
                IdealRep::new(vec![MinPlus::Finite(1)]),
            ],
            complete: true,
        })
    }

    fn probe_ideals(&self, bound: u64) -> Result<Vec<IdealRep<MinPlus>>, FracError> {
        Ok((0..=bound)
            .map(|m| IdealRep::new(vec![MinPlus::Finite(m)]))
            .collect())
    }
}

impl SpectrumRegistry for Boolean {
    fn registered_primes(&self, _bound: u64) -> Result<PrimeRegistry<bool>, FracError> {
        Ok(PrimeRegistry {
            primes: vec![IdealRep::new(Vec::new())],
            complete: true,
        })
    }
}

impl SpectrumRegistry for FiniteSemiring {
    fn registered_primes(&self, _bound: u64) -> Result<PrimeRegistry<usize>, FracError> {
        Ok(PrimeRegistry {
            primes: spectrum(self)
                .into_iter()
                .map(|i| IdealRep::new(i.members.into_iter().collect()))
                .collect(),
            complete: true,
        })
    }

    fn probe_ideals(&self, _bound: u64) -> Result<Vec<IdealRep<usize>>, FracError> {
        Ok(enumerate_ideals(self)
            .into_iter()
            .map(|i| IdealRep::new(i.members.into_iter().collect()))
            .collect())
    }
}

/// Bases over which fractions have a gcd-reduced normal form.
pub trait FractionBase: Factoring + Clone {
    /// Whether `d` divides a product of powers of `gens`.
    fn divides_power_product(&self, d: &Self::Elem, gens: &[Self::Elem]) -> bool;

    /// Whether every nonzero element becomes invertible in `S_T`.
    fn localization_is_semifield(&self, t: &McSet<Self::Elem>) -> bool;

    /// Whether `d` divides some member of `T`.
    fn divides_member(&self, d: &Self::Elem, t: &McSet<Self::Elem>) -> bool {
        if self.is_zero(d) {
            return false;
        }
        match t {
            McSet::Units => self.is_unit(d),
            McSet::Nonzero => true,
            McSet::Members(m) => m.iter().any(|x| self.exact_div(x, d).is_some()),
            McSet::Generated(g) => self.divides_power_product(d, g),
        }
    }

    /// `num/den` divided through by a gcd; zero becomes `0/1`.
    fn reduce(&self, num: &Self::Elem, den: &Self::Elem) -> (Self::Elem, Self::Elem) {
        if self.is_zero(num) {
            return (self.zero(), self.one());
        }
        let g = self
            .gcd_set(&[num.clone(), den.clone()])
            .expect("nonzero numerator");
        (
            self.exact_div(num, &g).expect("gcd divides"),
            self.exact_div(den, &g).expect("gcd divides"),
        )
    }
}

impl FractionBase for Naturals {
    fn divides_power_product(&self, d: &Natural, gens: &[Natural]) -> bool {
        let mut rest = d.clone();
        for g in gens {
            loop {
                let c = rest.gcd(g);
                if c.is_one() {
                    break;
                }
                rest /= c;
            }
        }
        rest.is_one()
    }

    fn localization_is_semifield(&self, t: &McSet<Natural>) -> bool {
        matches!(t, McSet::Nonzero)
    }
}

impl FractionBase for Tropical {
    fn divides_power_product(&self, d: &MinPlus, gens: &[MinPlus]) -> bool {
        match d {
            MinPlus::Infinity => false,
            MinPlus::Finite(0) => true,
            // divisibility is ≤, and k-fold powers of a positive generator grow without bound
            MinPlus::Finite(_) => gens
                .iter()
                .any(|g| matches!(g, MinPlus::Finite(v) if *v > 0)),
        }
    }

    fn localization_is_semifield(&self, t: &McSet<MinPlus>) -> bool {
        self.divides_member(&MinPlus::Finite(1), t)
    }
}

impl FractionBase for Boolean {
    fn divides_power_product(&self, d: &bool, _gens: &[bool]) -> bool {
        *d
    }

    fn localization_is_semifield(&self, _t: &McSet<bool>) -> bool {
        true
    }
}

/// `num/den`, kept gcd-reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

/// The localization `S_T`; with `T` the nonzero elements, the semifield of
/// fractions `F(S)`.
#[derive(Debug, Clone)]
pub struct Fractions<S: FractionBase> {
    pub base: S,
    pub denominators: McSet<S::Elem>,
}

/// `S_T`, after checking that `T` is a usable MC-set.
pub fn localize<S: FractionBase>(base: S, t: McSet<S::Elem>) -> Result<Fractions<S>, FracError> {
    match &t {
        McSet::Generated(g) => {
            if g.iter().any(|x| base.is_zero(x)) {
                return Err(FracError::ZeroSemiring);
            }
        }
        McSet::Members(m) => {
            if m.iter().any(|x| base.is_zero(x)) {
                return Err(FracError::ZeroSemiring);
            }
            if !m.contains(&base.one()) {
                return Err(FracError::NotMcSet("does not contain 1".into()));
            }
            for a in m {
                for b in m {
                    let p = base.mul(a, b);
                    if !m.contains(&p) {
                        return Err(FracError::NotMcSet(format!(
                            "{}*{} = {} is not a member",
                            base.render(a),
                            base.render(b),
                            base.render(&p)
                        )));
                    }
                }
            }
        }
        McSet::Units | McSet::Nonzero => {}
    }
    Ok(Fractions {
        base,
        denominators: t,
    })
}

/// `F(S)`.
pub fn fraction_semifield<S: FractionBase>(base: S) -> Fractions<S> {
    Fractions {
        base,
        denominators: McSet::Nonzero,
    }
}

impl<S: FractionBase> Fractions<S> {
    /// `num/den` as an element of `S_T`.
    pub fn fraction(&self, num: S::Elem, den: S::Elem) -> Result<Fraction<S::Elem>, FracError> {
        let b = &self.base;
        let (n, d) = if b.is_zero(&num) {
            (b.zero(), b.one())
        } else {
            b.reduce(&num, &den)
        };
        if b.is_zero(&den) || !b.divides_member(&d, &self.denominators) {
            return Err(FracError::NotMember(format!(
                "{}/{}",
                b.render(&num),
                b.render(&den)
            )));
        }
        Ok(Fraction { num: n, den: d })
    }

    /// `a ↦ a/1`.
    pub fn embed(&self, a: &S::Elem) -> Fraction<S::Elem> {
        self.fraction(a.clone(), self.base.one())
            .expect("one is a denominator")
    }

    /// Whether a fraction of `F(S)` lies in this localization.
    pub fn contains(&self, x: &Fraction<S::Elem>) -> bool {
        let (n, d) = self.base.reduce(&x.num, &x.den);
        self.base.is_zero(&n) || self.base.divides_member(&d, &self.denominators)
    }

    pub fn is_semifield(&self) -> bool {
        self.base.localization_is_semifield(&self.denominators)
    }

    fn normalize(&self, num: S::Elem, den: S::Elem) -> Fraction<S::Elem> {
        let (num, den) = self.base.reduce(&num, &den);
        Fraction { num, den }
    }

    /// `num/den` in `F(S)`, without a membership check.
    pub fn quotient(&self, num: S::Elem, den: S::Elem) -> Fraction<S::Elem> {
        assert!(!self.base.is_zero(&den), "zero denominator");
        self.normalize(num, den)
    }
}

/// `a/s ≡ b/t` iff `a·t = b·s`.
pub fn fractions_equal<S: FractionBase>(
    f: &Fractions<S>,
    x: &Fraction<S::Elem>,
    y: &Fraction<S::Elem>,
) -> bool {
    let b = &f.base;
    b.mul(&x.num, &y.den) == b.mul(&y.num, &x.den)
}

impl<S: FractionBase> Semiring for Fractions<S> {
    type Elem = Fraction<S::Elem>;

    fn name(&self) -> String {
        match &self.denominators {
            McSet::Nonzero => format!("F({})", self.base.name()),
            t => format!("{}_[{}]", self.base.name(), render_mc_set(&self.base, t)),
        }
    }
    fn zero(&self) -> Self::Elem {
        Fraction {
            num: self.base.zero(),
            den: self.base.one(),
        }
    }
    fn one(&self) -> Self::Elem {
        Fraction {
            num: self.base.one(),
            den: self.base.one(),
        }
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        let num = b.add(&b.mul(&x.num, &y.den), &b.mul(&y.num, &x.den));
        self.normalize(num, b.mul(&x.den, &y.den))
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let b = &self.base;
        self.normalize(b.mul(&x.num, &y.num), b.mul(&x.den, &y.den))
    }
    fn is_unit(&self, x: &Self::Elem) -> bool {
        !self.base.is_zero(&x.num) && self.base.divides_member(&x.num, &self.denominators)
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        Some(self.collect_fractions(&base))
    }
    /// Reduced fractions whose numerator and denominator have size ≤ `bound`.
    fn bounded_elements(&self, bound: u64) -> Vec<Self::Elem> {
        self.collect_fractions(&self.base.bounded_elements(bound))
    }
    fn is_semidomain(&self) -> Verdict {
        let v = self.base.is_semidomain();
        if v.holds {
            Verdict::holds(format!("{}: localization of a semidomain", self.name()))
        } else {
            v
        }
    }
    fn render(&self, x: &Self::Elem) -> String {
        if self.base.is_one(&x.den) {
            self.base.render(&x.num)
        } else {
            format!("{}/{}", self.base.render(&x.num), self.base.render(&x.den))
        }
    }
}

impl<S: FractionBase> Fractions<S> {
    fn collect_fractions(&self, pool: &[S::Elem]) -> Vec<Fraction<S::Elem>> {
        let mut out = BTreeSet::new();
        for n in pool {
            for d in pool.iter().filter(|d| !self.base.is_zero(d)) {
                if let Ok(x) = self.fraction(n.clone(), d.clone()) {
                    out.insert(x);
                }
            }
        }
        out.into_iter().collect()
    }
}

impl<S: FractionBase> Divisibility for Fractions<S> {
    /// In a semidomain the only candidate quotient is `a/b` in `F(S)`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let base = &self.base;
        if base.is_zero(&b.num) {
            return base.is_zero(&a.num).then(|| self.zero());
        }
        let x = self.normalize(base.mul(&a.num, &b.den), base.mul(&a.den, &b.num));
        (self.contains(&x) && self.mul(b, &x) == *a).then_some(x)
    }
}

impl<S: FractionBase> SpectrumRegistry for Fractions<S> {
    /// Only semifield localizations are registered: their one prime is zero.
    fn registered_primes(&self, _bound: u64) -> Result<PrimeRegistry<Self::Elem>, FracError> {
        if self.is_semifield() {
            Ok(PrimeRegistry {
                primes: vec![IdealRep::new(Vec::new())],
                complete: true,
            })
        } else {
            Err(FracError::UnregisteredSpectrum(self.name()))
        }
    }
}

/// Semifield localizations have only the zero ideal and the whole semiring.
/// Elsewhere membership is decided for principal ideals only: `x` is reported
/// in the ideal when some generator divides it.
impl<S: FractionBase> IdealArithmetic for Fractions<S> {
    fn ideal_contains(&self, gens: &[Self::Elem], x: &Self::Elem) -> bool {
        if self.is_zero(x) {
            return true;
        }
        if self.is_semifield() {
            return gens.iter().any(|g| !self.is_zero(g));
        }
        gens.iter()
            .any(|g| !self.is_zero(g) && self.exact_div(x, g).is_some())
    }

    fn ideal_compare(&self, i: &[Self::Elem], j: &[Self::Elem]) -> IdealComparison<Self::Elem> {
        let missing = |a: &[Self::Elem], b: &[Self::Elem]| {
            a.iter().find(|g| !self.ideal_contains(b, g)).cloned()
        };
        let witness = missing(i, j).or_else(|| missing(j, i));
        IdealComparison {
            equal: witness.is_none(),
            witness,
            bound: None,
        }
    }

    fn is_subtractive_family(&self) -> bool {
        self.is_semifield()
    }
}

pub fn render_mc_set<S: Semiring>(s: &S, t: &McSet<S::Elem>) -> String {
    match t {
        McSet::Units => "units".into(),
        McSet::Nonzero => "nonzero".into(),
        McSet::Generated(g) => {
            let parts: Vec<String> = g.iter().map(|x| s.render(x)).collect();
            format!("powers:{}", parts.join(","))
        }
        McSet::Members(m) => {
            let parts: Vec<String> = m.iter().map(|x| s.render(x)).collect();
            format!("set:{{{}}}", parts.join(","))
        }
    }
}

// ---------------------------------------------------------------------------
// Integral elements

/// `uⁿ + a₁uⁿ⁻¹ + … + aₙ = b₁uⁿ⁻¹ + … + bₙ` with `n = lhs.len() = rhs.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralEquation<E> {
    pub lhs: Vec<E>,
    pub rhs: Vec<E>,
}

impl<E> IntegralEquation<E> {
    pub fn degree(&self) -> usize {
        self.lhs.len()
    }
}

fn powers<S: Semiring>(s: &S, u: &S::Elem, n: usize) -> Vec<S::Elem> {
    let mut out = vec![s.one()];
    for k in 1..=n {
        out.push(s.mul(&out[k - 1], u));
    }
    out
}

/// `Σ cᵢ·u^{n−i}` for `i = 1..=n`, given `pw[k] = uᵏ`.
fn tail_value<S: Semiring>(s: &S, coeffs: &[S::Elem], pw: &[S::Elem]) -> S::Elem {
    let n = coeffs.len();
    coeffs.iter().enumerate().fold(s.zero(), |acc, (i, c)| {
        s.add(&acc, &s.mul(c, &pw[n - 1 - i]))
    })
}

/// Evaluates both sides of `eq` at `u` in the fraction semiring `f`.
pub fn check_integral_equation<S: FractionBase>(
    f: &Fractions<S>,
    u: &Fraction<S::Elem>,
    eq: &IntegralEquation<Fraction<S::Elem>>,
) -> bool {
    assert_eq!(
        eq.lhs.len(),
        eq.rhs.len(),
        "coefficient lists differ in length"
    );
    assert!(eq.degree() >= 1, "degree must be positive");
    let pw = powers(f, u, eq.degree());
    let lhs = f.add(&pw[eq.degree()], &tail_value(f, &eq.lhs, &pw));
    lhs == tail_value(f, &eq.rhs, &pw)
}

fn tuples<E: Clone>(pool: &[E], n: usize) -> impl Iterator<Item = Vec<E>> + '_ {
    let total = pool
        .len()
        .checked_pow(n as u32)
        .expect("search space too large");
    (0..total).map(move |mut code| {
        let mut t = vec![pool[0].clone(); n];
        for slot in t.iter_mut().rev() {
            *slot = pool[code % pool.len()].clone();
            code /= pool.len();
        }
        t
    })
}

/// First equation (by degree, then lexicographic coefficient order) making `u`
/// integral over the subsemiring whose elements are `pool`. Both sides are
/// tabulated and matched in a hash map.
pub fn search_integral_witness_in<S: FractionBase>(
    f: &Fractions<S>,
    pool: &[Fraction<S::Elem>],
    u: &Fraction<S::Elem>,
    degree_bound: usize,
) -> Option<IntegralEquation<Fraction<S::Elem>>> {
    if pool.is_empty() {
        return None;
    }
    for n in 1..=degree_bound {
        let pw = powers(f, u, n);
        let mut rhs: HashMap<Fraction<S::Elem>, Vec<Fraction<S::Elem>>> = HashMap::new();
        for b in tuples(pool, n) {
            rhs.entry(tail_value(f, &b, &pw)).or_insert(b);
        }
        for a in tuples(pool, n) {
            let value = f.add(&pw[n], &tail_value(f, &a, &pw));
            if let Some(b) = rhs.get(&value) {
                return Some(IntegralEquation {
                    lhs: a,
                    rhs: b.clone(),
                });
            }
        }
    }
    None
}

/// Equation with coefficients in `base` of size ≤ `coeff_bound` and degree
/// ≤ `degree_bound` witnessing that `u ∈ F(base)` is integral.
pub fn search_integral_witness<S: FractionBase>(
    base: &S,
    u: &Fraction<S::Elem>,
    degree_bound: usize,
    coeff_bound: u64,
) -> Option<IntegralEquation<Fraction<S::Elem>>> {
    let f = fraction_semifield(base.clone());
    let pool: Vec<_> = base
        .bounded_elements(coeff_bound)
        .iter()
        .map(|a| f.embed(a))
        .collect();
    search_integral_witness_in(&f, &pool, u, degree_bound)
}

/// Search bounds for integral-closure checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureScope {
    pub degree_bound: usize,
    pub coeff_bound: u64,
    /// Candidate fractions have numerator and denominator ≤ `sample`; the
    /// principal-ideal sweep also runs to `sample`.
    pub sample: u64,
}

impl Default for ClosureScope {
    fn default() -> Self {
        ClosureScope {
            degree_bound: 2,
            coeff_bound: 6,
            sample: 4,
        }
    }
}

/// `a ∈ (n) ∧ a + b ∈ (n) ⇒ b ∈ (n)` for all elements of size ≤ `bound`.
pub fn check_principal_subtractive<S: Divisibility>(s: &S, bound: u64) -> Verdict {
    let elems = s.bounded_elements(bound);
    let div = |x: &S::Elem, n: &S::Elem| s.exact_div(x, n).is_some();
    for n in elems.iter().filter(|n| !s.is_zero(n)) {
        let multiples: Vec<&S::Elem> = elems.iter().filter(|a| div(a, n)).collect();
        for a in &multiples {
            for b in &elems {
                if div(&s.add(a, b), n) && !div(b, n) {
                    return Verdict::fails(
                        format!("n={} a={} b={}", s.render(n), s.render(a), s.render(b)),
                        "principal ideal is not subtractive",
                    )
                    .with_bound("bound", bound);
                }
            }
        }
    }
    Verdict::holds(format!("{}: principal ideals subtractive", s.name())).with_bound("bound", bound)
}

/// Fractions outside `f` with numerator and denominator ≤ `sample`.
fn non_members<S: FractionBase>(f: &Fractions<S>, sample: u64) -> Vec<Fraction<S::Elem>> {
    let pool = f.base.bounded_elements(sample);
    let mut out = BTreeSet::new();
    for n in &pool {
        for d in pool.iter().filter(|d| !f.base.is_zero(d)) {
            let x = f.quotient(n.clone(), d.clone());
            if !f.contains(&x) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// No sampled non-member of `f` is integral over `f`.
pub fn search_route<S: FractionBase>(f: &Fractions<S>, scope: ClosureScope) -> Verdict {
    let field = fraction_semifield(f.base.clone());
    let pool = f.bounded_elements(scope.coeff_bound);
    let candidates = non_members(f, scope.sample);
    for u in &candidates {
        if let Some(eq) = search_integral_witness_in(&field, &pool, u, scope.degree_bound) {
            let render = |cs: &[Fraction<S::Elem>]| {
                cs.iter()
                    .map(|c| field.render(c))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            return Verdict::fails(
                format!(
                    "u={} lhs=[{}] rhs=[{}]",
                    field.render(u),
                    render(&eq.lhs),
                    render(&eq.rhs)
                ),
                format!(
                    "{} is integral over {} but not a member",
                    field.render(u),
                    f.name()
                ),
            )
            .with_bound("degree", scope.degree_bound as u64)
            .with_bound("coeff", scope.coeff_bound);
        }
    }
    Verdict::holds(format!(
        "{}: {} non-members, none integral",
        f.name(),
        candidates.len()
    ))
    .with_bound("degree", scope.degree_bound as u64)
    .with_bound("coeff", scope.coeff_bound)
    .with_bound("sample", scope.sample)
}

#[derive(Debug, Clone)]
pub struct ClosureReport {
    /// GCD semidomain with subtractive principal ideals.
    pub structural: Verdict,
    pub search: Verdict,
    /// Search route on each listed localization.
    pub local: Vec<(String, Verdict)>,
    pub verdict: Verdict,
}

pub fn check_integrally_closed<S: FractionBase>(
    base: &S,
    t_list: &[McSet<S::Elem>],
    scope: ClosureScope,
) -> Result<ClosureReport, FracError> {
    let gcd_ok = base.bounded_elements(scope.sample).iter().all(|a| {
        base.bounded_elements(scope.sample).iter().all(|b| {
            base.is_zero(a) && base.is_zero(b) || base.gcd_set(&[a.clone(), b.clone()]).is_ok()
        })
    });
    let subtractive = check_principal_subtractive(base, scope.sample);
    let structural = if gcd_ok && subtractive.holds {
        Verdict::holds(format!(
            "{}: gcd semidomain with subtractive principal ideals",
            base.name()
        ))
        .with_bound("sample", scope.sample)
    } else if !gcd_ok {
        Verdict::fails(base.name(), "gcds missing at sample scope")
    } else {
        subtractive
    };
    let search = search_route(&localize(base.clone(), McSet::Units)?, scope);
    let mut local = Vec::new();
    for t in t_list {
        let l = localize(base.clone(), t.clone())?;
        local.push((l.name(), search_route(&l, scope)));
    }
    let verdict = if !search.holds {
        search.clone()
    } else if let Some((name, v)) = local.iter().find(|(_, v)| !v.holds) {
        Verdict::fails(
            v.witness.clone().unwrap_or_default(),
            format!("{name}: {}", v.note),
        )
    } else {
        Verdict::holds(format!(
            "{} and {} localizations integrally closed at scope",
            base.name(),
            local.len()
        ))
    };
    Ok(ClosureReport {
        structural,
        search,
        local,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// Nilpotents

/// `s² = 0 ⇒ s = 0`. Exhaustive on finite carriers; on infinite ones it follows
/// from cancellation (`s·s = s·0`).
pub fn is_nilpotent_free<S: Semiring>(s: &S) -> Verdict {
    match s.elements() {
        Some(all) => match all
            .iter()
            .find(|x| !s.is_zero(x) && s.is_zero(&s.mul(x, x)))
        {
            Some(x) => Verdict::fails(s.render(x), "nonzero element squaring to zero"),
            None => Verdict::holds(format!("{}: no nonzero square is zero", s.name())),
        },
        None => {
            let d = s.is_semidomain();
            if d.holds {
                Verdict::holds(format!("{}: semidomain", s.name()))
            } else {
                Verdict::fails(
                    d.witness.unwrap_or_default(),
                    "not a semidomain; nilpotent-freeness undecided",
                )
            }
        }
    }
}

/// Global nilpotent-freeness against the localizations at every maximal ideal.
pub fn check_nilpotent_local_global(s: &FiniteSemiring) -> Verdict {
    let global = nilpotent_witness(s).is_none();
    let lattice = IdealLattice::new(s);
    let mut local_ok = true;
    let mut witness = None;
    for m in lattice.maximal() {
        let complement: BTreeSet<usize> = s.carrier().filter(|x| !m.contains(*x)).collect();
        let free = match localize_finite(s, &McSet::Members(complement)) {
            Ok(l) => nilpotent_witness(&l.semiring).is_none(),
            // the zero semiring has no nonzero elements
            Err(FiniteError::ZeroSemiring) => true,
            Err(e) => panic!("complement of a prime is an MC-set: {e}"),
        };
        if !free && witness.is_none() {
            witness = Some(m.to_string());
        }
        local_ok &= free;
    }
    if global == local_ok {
        Verdict::holds(format!(
            "{}: nilpotent-free {} globally and locally",
            s.name(),
            if global { "both" } else { "neither" }
        ))
    } else {
        Verdict::fails(
            witness.unwrap_or_else(|| format!("{:?}", nilpotent_witness(s))),
            format!("global={global} local={local_ok}"),
        )
    }
}

// ---------------------------------------------------------------------------
// Goldman-Krull

fn nonzero_primes<S: SpectrumRegistry>(
    s: &S,
    reg: &PrimeRegistry<S::Elem>,
) -> Vec<IdealRep<S::Elem>> {
    reg.primes
        .iter()
        .filter(|p| p.generators.iter().any(|g| !s.is_zero(g)))
        .cloned()
        .collect()
}

fn in_ideal<S: IdealArithmetic>(s: &S, ideal: &IdealRep<S::Elem>, x: &S::Elem) -> bool {
    s.ideal_contains(&ideal.generators, x)
}

/// Outcome of a Goldman-Krull decision.
#[derive(Debug, Clone)]
pub struct GkReport<E> {
    /// A nonzero element in every nonzero prime.
    pub witness: Option<E>,
    /// For partially registered families: each candidate with a prime
    /// avoiding it.
    pub refuters: Vec<(E, IdealRep<E>)>,
    pub verdict: Verdict,
}

/// Searches nonzero candidates of size ≤ `bound` (nonunits first) for an
/// element in every nonzero prime. An empty family of nonzero primes
/// intersects to the whole semiring.
pub fn is_goldman_krull<S>(s: &S, bound: u64) -> Result<GkReport<S::Elem>, FracError>
where
    S: SpectrumRegistry + IdealArithmetic,
{
    let reg = s.registered_primes(bound)?;
    let primes = nonzero_primes(s, &reg);
    let mut candidates: Vec<S::Elem> = s
        .bounded_elements(bound)
        .into_iter()
        .filter(|x| !s.is_zero(x))
        .collect();
    candidates.sort_by_key(|x| s.is_unit(x));
    if reg.complete {
        let witness = candidates
            .iter()
            .find(|u| primes.iter().all(|p| in_ideal(s, p, u)))
            .cloned();
        let verdict = match &witness {
            Some(u) if primes.is_empty() => {
                Verdict::holds_with(s.render(u), format!("{}: no nonzero primes", s.name()))
            }
            Some(u) => Verdict::holds_with(
                s.render(u),
                format!("{}: in all {} nonzero primes", s.name(), primes.len()),
            ),
            None => Verdict::fails(
                s.name(),
                format!("no candidate of size <= {bound} lies in every nonzero prime"),
            ),
        };
        return Ok(GkReport {
            witness,
            refuters: Vec::new(),
            verdict: verdict.with_bound("bound", bound),
        });
    }
    let mut refuters = Vec::new();
    for u in &candidates {
        match s.refute_gk_candidate(u) {
            Some(p) => refuters.push((u.clone(), p)),
            None => {
                return Ok(GkReport {
                    witness: None,
                    refuters,
                    verdict: Verdict::fails(
                        s.render(u),
                        "spectrum only partially registered; candidate not refuted",
                    )
                    .with_bound("bound", bound),
                })
            }
        }
    }
    let sample = refuters
        .last()
        .map(|(u, p)| format!("u={} avoided by {}", s.render(u), render_ideal(s, p)))
        .unwrap_or_default();
    Ok(GkReport {
        witness: None,
        verdict: Verdict::fails(
            sample,
            format!("every candidate u <= {bound} avoided by a nonzero prime"),
        )
        .with_bound("bound", bound),
        refuters,
    })
}

/// The prime that refutes `u` as a Goldman-Krull element, if any.
pub fn gk_refuter<S>(s: &S, u: &S::Elem, bound: u64) -> Result<Option<IdealRep<S::Elem>>, FracError>
where
    S: SpectrumRegistry + IdealArithmetic,
{
    let reg = s.registered_primes(bound)?;
    if let Some(p) = nonzero_primes(s, &reg)
        .into_iter()
        .find(|p| !in_ideal(s, p, u))
    {
        return Ok(Some(p));
    }
    Ok(s.refute_gk_candidate(u))
}

/// The three equivalent conditions on `u`.
#[derive(Debug, Clone)]
pub struct GkEquivalences {
    /// Every nonzero prime contains `u`.
    pub primes_contain_u: Verdict,
    /// Every nonzero principal ideal `(s)` contains a power of `u`.
    pub ideals_contain_power: Verdict,
    /// Every `1/s` equals some `t/uⁿ`.
    pub fractions_generated: Verdict,
    pub verdict: Verdict,
}

pub fn check_gk_equivalences<S>(
    base: &S,
    u: &S::Elem,
    bound: u64,
) -> Result<GkEquivalences, FracError>
where
    S: FractionBase + SpectrumRegistry + IdealArithmetic,
{
    assert!(!base.is_zero(u), "u must be nonzero");
    let reg = base.registered_primes(bound)?;
    let primes = nonzero_primes(base, &reg);
    let c1 = match primes.iter().find(|p| !in_ideal(base, p, u)) {
        Some(p) => Verdict::fails(render_ideal(base, p), "nonzero prime missing u"),
        None => match base.refute_gk_candidate(u) {
            Some(p) if !reg.complete => {
                Verdict::fails(render_ideal(base, &p), "nonzero prime missing u")
            }
            _ => Verdict::holds(format!(
                "{} registered nonzero primes contain u",
                primes.len()
            )),
        },
    };

    let pw = powers(base, u, bound as usize);
    let nonzero: Vec<S::Elem> = base
        .bounded_elements(bound)
        .into_iter()
        .filter(|x| !base.is_zero(x))
        .collect();
    let c2 = match nonzero
        .iter()
        .find(|s| !pw.iter().any(|p| base.exact_div(p, s).is_some()))
    {
        Some(s) => Verdict::fails(base.render(s), "ideal contains no power of u"),
        None => Verdict::holds("every principal ideal contains a power of u"),
    };

    let f = fraction_semifield(base.clone());
    let pool = base.bounded_elements(bound);
    let c3 = match nonzero.iter().find(|s| {
        let target = f.quotient(base.one(), (*s).clone());
        !pw.iter().any(|p| {
            pool.iter()
                .any(|t| fractions_equal(&f, &f.quotient(t.clone(), p.clone()), &target))
        })
    }) {
        Some(s) => Verdict::fails(
            format!("1/{}", base.render(s)),
            "inverse not of the form t/u^n",
        ),
        None => Verdict::holds("every 1/s has the form t/u^n"),
    };

    let agree = c1.holds == c2.holds && c2.holds == c3.holds;
    let verdict = if agree {
        Verdict::holds(format!(
            "u={}: all three conditions {}",
            base.render(u),
            if c1.holds { "hold" } else { "fail" }
        ))
    } else {
        Verdict::fails(
            base.render(u),
            format!(
                "conditions disagree: primes={} powers={} fractions={}",
                c1.holds, c2.holds, c3.holds
            ),
        )
    }
    .with_bound("bound", bound);
    Ok(GkEquivalences {
        primes_contain_u: c1.with_bound("bound", bound),
        ideals_contain_power: c2.with_bound("bound", bound),
        fractions_generated: c3.with_bound("bound", bound),
        verdict,
    })
}

/// Principal ideal semidomains are Goldman-Krull exactly when their spectrum
/// is finite.
pub fn check_pisd_gk<S>(base: &S, bound: u64) -> Result<Verdict, FracError>
where
    S: SpectrumRegistry + IdealArithmetic,
{
    let sd = base.is_semidomain();
    if !sd.holds {
        return Err(FracError::NotPisd {
            family: base.name(),
            witness: sd.witness.unwrap_or_default(),
        });
    }
    for ideal in base.probe_ideals(bound)? {
        let largest = ideal.generators.iter().max().cloned();
        let candidates: Vec<S::Elem> = base
            .bounded_elements(bound)
            .into_iter()
            .filter(|c| largest.as_ref().is_none_or(|m| c <= m))
            .collect();
        let principal = ideal.generators.is_empty()
            || candidates.iter().any(|c| {
                base.ideal_compare(std::slice::from_ref(c), &ideal.generators)
                    .equal
            });
        if !principal {
            return Err(FracError::NotPisd {
                family: base.name(),
                witness: format!(
                    "{} has no single generator among {} candidates",
                    render_ideal(base, &ideal),
                    candidates.len()
                ),
            });
        }
    }
    let reg = base.registered_primes(bound)?;
    let gk = is_goldman_krull(base, bound)?;
    let finite = reg.complete;
    let v = if gk.verdict.holds == finite {
        Verdict::holds(format!(
            "{}: {} primes, goldman-krull {}",
            base.name(),
            reg.primes.len(),
            gk.verdict.holds
        ))
    } else {
        Verdict::fails(
            base.name(),
            format!(
                "finite spectrum={finite} but goldman-krull={}",
                gk.verdict.holds
            ),
        )
    };
    Ok(v.with_bound("primes", reg.primes.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: fn(u64) -> MinPlus = MinPlus::Finite;

    fn q(f: &Fractions<Naturals>, a: u64, b: u64) -> Fraction<Natural> {
        f.quotient(nat(a), nat(b))
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let f = fraction_semifield(Naturals);
        let raw = |a: u64, b: u64| Fraction {
            num: nat(a),
            den: nat(b),
        };
        assert!(fractions_equal(&f, &raw(1, 2), &raw(2, 4)));
        assert!(!fractions_equal(&f, &raw(1, 2), &raw(2, 3)));
        assert_eq!(q(&f, 2, 4), q(&f, 1, 2));
        let t = fraction_semifield(Tropical);
        let traw = |a: u64, b: u64| Fraction {
            num: F(a),
            den: F(b),
        };
        assert!(fractions_equal(&t, &traw(3, 1), &traw(4, 2)));
        assert_eq!(t.quotient(F(3), F(1)), t.quotient(F(4), F(2)));
    }

    #[test]
    fn dyadic_localization() {
        let l = localize(Naturals, McSet::Generated(vec![nat(2)])).unwrap();
        assert!(l.fraction(nat(3), nat(4)).is_ok());
        assert!(matches!(
            l.fraction(nat(1), nat(3)),
            Err(FracError::NotMember(_))
        ));
        assert!(!l.is_semifield());
        assert!(fraction_semifield(Naturals).is_semifield());
        assert!(matches!(
            localize(Naturals, McSet::Generated(vec![nat(0)])),
            Err(FracError::ZeroSemiring)
        ));
        assert!(matches!(
            localize(Naturals, McSet::Members(BTreeSet::from([nat(2)]))),
            Err(FracError::NotMcSet(_))
        ));
    }

    #[test]
    fn tropical_fractions_are_integers() {
        let t = fraction_semifield(Tropical);
        // a/s has normal form with one side zero
        assert_eq!(
            t.quotient(F(7), F(3)),
            Fraction {
                num: F(4),
                den: F(0)
            }
        );
        assert_eq!(
            t.quotient(F(3), F(7)),
            Fraction {
                num: F(0),
                den: F(4)
            }
        );
        let x = t.quotient(F(0), F(1));
        assert!(t.is_unit(&x));
        assert_eq!(t.mul(&x, &t.quotient(F(1), F(0))), t.one());
        assert!(localize(Tropical, McSet::Generated(vec![F(2)]))
            .unwrap()
            .is_semifield());
        assert!(!localize(Tropical, McSet::Units).unwrap().is_semifield());
    }

    #[test]
    fn integral_equations() {
        let f = fraction_semifield(Naturals);
        let e = |xs: &[u64]| xs.iter().map(|&x| f.embed(&nat(x))).collect::<Vec<_>>();
        let eq = IntegralEquation {
            lhs: e(&[0]),
            rhs: e(&[2]),
        };
        assert!(check_integral_equation(&f, &q(&f, 2, 1), &eq));
        let eq = IntegralEquation {
            lhs: e(&[1]),
            rhs: e(&[2]),
        };
        assert!(!check_integral_equation(&f, &q(&f, 3, 2), &eq));
        assert_eq!(search_integral_witness(&Naturals, &q(&f, 3, 2), 2, 6), None);
        let w = search_integral_witness(&Naturals, &q(&f, 4, 2), 3, 6).unwrap();
        assert_eq!(w.degree(), 1);
        let w = search_integral_witness(&Naturals, &q(&f, 5, 1), 3, 6).unwrap();
        assert!(check_integral_equation(&f, &q(&f, 5, 1), &w));
    }

    #[test]
    fn integrally_closed_naturals() {
        let t_list = [
            McSet::Generated(vec![nat(2)]),
            McSet::Generated(vec![nat(3)]),
        ];
        let r = check_integrally_closed(&Naturals, &t_list, ClosureScope::default()).unwrap();
        assert!(r.structural.holds && r.search.holds && r.verdict.holds);
        assert_eq!(r.local.len(), 2);
        let r = check_integrally_closed(&Boolean, &[], ClosureScope::default()).unwrap();
        assert!(r.verdict.holds);
    }

    #[test]
    fn nilpotents() {
        assert!(is_nilpotent_free(&Naturals).holds);
        assert!(is_nilpotent_free(&Boolean).holds);
        assert!(is_nilpotent_free(&FiniteSemiring::chain3()).holds);
    }

    #[test]
    fn goldman_krull_families() {
        let r = is_goldman_krull(&Tropical, 10).unwrap();
        assert!(r.verdict.holds);
        assert_eq!(r.witness, Some(F(1)));
        let r = is_goldman_krull(&Naturals, 30).unwrap();
        assert!(!r.verdict.holds);
        assert_eq!(r.refuters.len(), 30);
        assert_eq!(
            gk_refuter(&Naturals, &nat(30), 5).unwrap(),
            Some(IdealRep::new(vec![nat(7)]))
        );
        assert!(is_goldman_krull(&Boolean, 1).unwrap().verdict.holds);
    }

    #[test]
    fn goldman_krull_equivalences() {
        let r = check_gk_equivalences(&Tropical, &F(1), 30).unwrap();
        assert!(r.verdict.holds && r.primes_contain_u.holds);
        assert!(r.ideals_contain_power.holds && r.fractions_generated.holds);
        let r = check_gk_equivalences(&Naturals, &nat(2), 30).unwrap();
        assert!(r.verdict.holds);
        assert!(!r.primes_contain_u.holds && !r.ideals_contain_power.holds);
        assert!(!r.fractions_generated.holds);
        assert!(
            check_gk_equivalences(&Boolean, &true, 5)
                .unwrap()
                .verdict
                .holds
        );
    }

    #[test]
    fn pisd_goldman_krull() {
        let v = check_pisd_gk(&Tropical, 10).unwrap();
        assert!(v.holds);
        assert_eq!(v.bound("primes"), Some(2));
        assert!(check_pisd_gk(&Boolean, 1).unwrap().holds);
        assert!(matches!(
            check_pisd_gk(&Naturals, 3),
            Err(FracError::NotPisd { .. })
        ));
    }
}
