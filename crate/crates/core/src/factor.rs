//! Divisibility, associates, irreducible and prime elements, factorization
//! into irreducibles, gcds and the unique-factorization criteria.
//!
//! Checks over infinite carriers are bounded: every verdict records the bound
//! it was run with.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::euclid::{euclidean_gcd, NaturalNorm};
use crate::finite::FiniteSemiring;
use crate::frac::SpectrumRegistry;
use crate::poly::IdealArithmetic;
use crate::semiring::{nat, Boolean, Divisibility, MinPlus, Natural, Naturals, Semiring, Tropical};
use crate::verdict::Verdict;

pub const DEFAULT_PRIME_BOUND: u64 = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is zero or a unit and has no factorization")]
    NotFactorable(String),
    #[error("factorization of {0} did not terminate; the family may lack ACCP")]
    DepthExceeded(String),
    #[error("no gcd exists for {0}")]
    NoGcd(String),
    #[error("gcd of an all-zero set is undefined")]
    AllZero,
}

/// `subject = unit · ∏ factors`, each factor irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<E>,
    pub subject: E,
}

/// Outcome of a primality test in divisibility form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTest<E> {
    pub prime: bool,
    /// `(a, b)` with `p | ab`, `p ∤ a`, `p ∤ b`.
    pub witness: Option<(E, E)>,
    /// Set when the verdict comes from a bounded pair search.
    pub bound: Option<u64>,
}

/// Element arithmetic needed for factorization and gcds.
pub trait Factoring: Divisibility {
    /// The unit group (finite in every supported family).
    fn units(&self) -> Vec<Self::Elem>;

    /// Some `x = a·b` with `a, b` nonunits, or `None` if there is none.
    fn split(&self, x: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// Maximum nesting of splits before factorization is abandoned.
    fn descent_limit(&self, x: &Self::Elem) -> usize;

    fn prime_test(&self, p: &Self::Elem, bound: u64) -> PrimeTest<Self::Elem> {
        bounded_prime_test(self, p, bound)
    }

    /// A gcd of `items`, which must contain a nonzero element.
    fn gcd_set(&self, items: &[Self::Elem]) -> Result<Self::Elem, FactorError>;
}

fn nonzero_nonunit<S: Semiring + ?Sized>(s: &S, x: &S::Elem) -> bool {
    !s.is_zero(x) && !s.is_unit(x)
}

/// Exhaustive divisibility-form test over pairs drawn from the carrier (or
/// its elements of size ≤ `bound` when infinite).
pub fn bounded_prime_test<S: Factoring + ?Sized>(
    s: &S,
    p: &S::Elem,
    bound: u64,
) -> PrimeTest<S::Elem> {
    let finite = s.elements();
    let bound_used = finite.is_none().then_some(bound);
    if !nonzero_nonunit(s, p) {
        return PrimeTest {
            prime: false,
            witness: None,
            bound: None,
        };
    }
    let pool = finite.unwrap_or_else(|| s.bounded_elements(bound));
    let div = |x: &S::Elem| s.exact_div(x, p).is_some();
    for (i, a) in pool.iter().enumerate() {
        if div(a) {
            continue;
        }
        for b in &pool[i..] {
            if !div(b) && div(&s.mul(a, b)) {
                return PrimeTest {
                    prime: false,
                    witness: Some((a.clone(), b.clone())),
                    bound: bound_used,
                };
            }
        }
    }
    PrimeTest {
        prime: true,
        witness: None,
        bound: bound_used,
    }
}

fn least_divisor(x: u64) -> u64 {
    (2..)
        .take_while(|d| d * d <= x)
        .find(|d| x.is_multiple_of(*d))
        .unwrap_or(x)
}

fn least_divisor_big(x: &Natural) -> Natural {
    if let Some(v) = x.to_u64() {
        return nat(least_divisor(v));
    }
    let mut d = nat(2);
    while &d * &d <= *x {
        if (x % &d).is_zero() {
            return d;
        }
        d += 1u32;
    }
    x.clone()
}

pub fn is_classical_prime(x: u64) -> bool {
    x >= 2 && least_divisor(x) == x
}

impl Factoring for Naturals {
    fn units(&self) -> Vec<Natural> {
        vec![Natural::one()]
    }

    /// Splits at the least nontrivial divisor.
    fn split(&self, x: &Natural) -> Option<(Natural, Natural)> {
        if x <= &Natural::one() {
            return None;
        }
        let d = least_divisor_big(x);
        (d != *x).then(|| {
            let q = x / &d;
            (d, q)
        })
    }

    fn descent_limit(&self, x: &Natural) -> usize {
        x.bits() as usize + 1
    }

    fn prime_test(&self, p: &Natural, bound: u64) -> PrimeTest<Natural> {
        if p <= &Natural::one() {
            return PrimeTest {
                prime: false,
                witness: None,
                bound: None,
            };
        }
        match self.split(p) {
            None => PrimeTest {
                prime: true,
                witness: None,
                bound: None,
            },
            Some((d, q)) => {
                // the least pair (a ≤ b) is found below the split pair
                let limit = q.to_u64().unwrap_or(u64::MAX).min(bound.max(2));
                let found = (2..=limit).find_map(|a| {
                    let a = nat(a);
                    if (&a % p).is_zero() {
                        return None;
                    }
                    let mut b = a.clone();
                    while b <= q {
                        if !(&b % p).is_zero() && ((&a * &b) % p).is_zero() {
                            return Some((a.clone(), b));
                        }
                        b += 1u32;
                    }
                    None
                });
                PrimeTest {
                    prime: false,
                    witness: Some(found.unwrap_or((d, q))),
                    bound: None,
                }
            }
        }
    }

    /// Folds the Euclidean gcd over the nonzero members.
    fn gcd_set(&self, items: &[Natural]) -> Result<Natural, FactorError> {
        let mut acc: Option<Natural> = None;
        for x in items.iter().filter(|x| !x.is_zero()) {
            acc = Some(match acc {
                None => x.clone(),
                Some(g) => {
                    euclidean_gcd(&NaturalNorm, &g, x)
                        .expect("nonzero inputs")
                        .gcd
                }
            });
        }
        acc.ok_or(FactorError::AllZero)
    }
}

impl Factoring for Tropical {
    fn units(&self) -> Vec<MinPlus> {
        vec![MinPlus::Finite(0)]
    }

    /// `x = 1 ⊗ (x − 1)` for finite `x ≥ 2`.
    fn split(&self, x: &MinPlus) -> Option<(MinPlus, MinPlus)> {
        match x {
            MinPlus::Finite(v) if *v >= 2 => Some((MinPlus::Finite(1), MinPlus::Finite(v - 1))),
            _ => None,
        }
    }

    fn descent_limit(&self, x: &MinPlus) -> usize {
        x.finite().map_or(0, |v| v as usize + 1)
    }

    /// Only `1`: from `a + b ≥ p` one of `a, b` must reach `p`, which forces
    /// `p ≤ 1`, and `0` is the unit.
    fn prime_test(&self, p: &MinPlus, _bound: u64) -> PrimeTest<MinPlus> {
        match p.finite() {
            Some(1) => PrimeTest {
                prime: true,
                witness: None,
                bound: None,
            },
            Some(v) if v >= 2 => PrimeTest {
                prime: false,
                witness: Some((MinPlus::Finite(1), MinPlus::Finite(v - 1))),
                bound: None,
            },
            _ => PrimeTest {
                prime: false,
                witness: None,
                bound: None,
            },
        }
    }

    /// The least finite member.
    fn gcd_set(&self, items: &[MinPlus]) -> Result<MinPlus, FactorError> {
        items
            .iter()
            .copied()
            .filter(|x| *x != MinPlus::Infinity)
            .min()
            .ok_or(FactorError::AllZero)
    }
}

impl Factoring for Boolean {
    fn units(&self) -> Vec<bool> {
        vec![true]
    }
    fn split(&self, _x: &bool) -> Option<(bool, bool)> {
        None
    }
    fn descent_limit(&self, _x: &bool) -> usize {
        0
    }
    fn gcd_set(&self, items: &[bool]) -> Result<bool, FactorError> {
        items
            .iter()
            .any(|x| *x)
            .then_some(true)
            .ok_or(FactorError::AllZero)
    }
}

impl Factoring for FiniteSemiring {
    fn units(&self) -> Vec<usize> {
        FiniteSemiring::units(self)
    }

    /// Prefers splits that strictly enlarge both principal ideals.
    fn split(&self, x: &usize) -> Option<(usize, usize)> {
        let nonunits: Vec<usize> = self.carrier().filter(|a| !self.is_unit(a)).collect();
        let pairs = || {
            nonunits.iter().flat_map(|&a| {
                nonunits
                    .iter()
                    .filter(move |&&b| b >= a)
                    .map(move |&b| (a, b))
            })
        };
        let strict = |a: usize| self.exact_div(&a, x).is_none();
        pairs()
            .filter(|&(a, b)| self.times(a, b) == *x)
            .find(|&(a, b)| strict(a) && strict(b))
            .or_else(|| pairs().find(|&(a, b)| self.times(a, b) == *x))
    }

    fn descent_limit(&self, _x: &usize) -> usize {
        self.order()
    }

    fn gcd_set(&self, items: &[usize]) -> Result<usize, FactorError> {
        if items.iter().all(|&x| x == 0) {
            return Err(FactorError::AllZero);
        }
        let common: Vec<usize> = self
            .carrier()
            .filter(|&d| d != 0 && items.iter().all(|a| self.exact_div(a, &d).is_some()))
            .collect();
        common
            .iter()
            .copied()
            .find(|&d| common.iter().all(|c| self.exact_div(&d, c).is_some()))
            .ok_or_else(|| FactorError::NoGcd(format!("{items:?}")))
    }
}

/// `b | a`.
pub fn divides<S: Divisibility>(s: &S, b: &S::Elem, a: &S::Elem) -> Result<bool, FactorError> {
    if s.is_zero(b) {
        return Err(FactorError::DivisionByZero);
    }
    Ok(s.exact_div(a, b).is_some())
}

/// `a = u·b` for a unit `u`.
pub fn associates<S: Factoring>(s: &S, a: &S::Elem, b: &S::Elem) -> bool {
    s.units().iter().any(|u| s.mul(u, b) == *a)
}

/// `(a) = (b)`, i.e. mutual divisibility.
pub fn associates_by_ideals<S: Divisibility>(s: &S, a: &S::Elem, b: &S::Elem) -> bool {
    s.exact_div(a, b).is_some() && s.exact_div(b, a).is_some()
}

pub fn is_irreducible<S: Factoring>(s: &S, x: &S::Elem) -> bool {
    nonzero_nonunit(s, x) && s.split(x).is_none()
}

pub fn is_prime_element<S: Factoring>(s: &S, p: &S::Elem) -> bool {
    s.prime_test(p, DEFAULT_PRIME_BOUND).prime
}

pub fn prime_verdict<S: Factoring>(s: &S, p: &S::Elem, bound: u64) -> Verdict {
    let t = s.prime_test(p, bound);
    let mut v = match (&t.prime, &t.witness) {
        (true, _) => Verdict::holds(format!("{} is prime", s.render(p))),
        (false, Some((a, b))) => Verdict::fails(
            format!("({}, {})", s.render(a), s.render(b)),
            format!("{} divides the product but neither factor", s.render(p)),
        ),
        (false, None) => Verdict::fails(s.render(p), "zero and units are not prime"),
    };
    if let Some(b) = t.bound {
        v = v.with_bound("pair_bound", b);
    }
    v
}

/// Splits recursively into irreducibles. Leaves appear in the order the splits
/// produce them, so ℕ yields nondecreasing primes.
pub fn factor_accp<S: Factoring>(
    s: &S,
    x: &S::Elem,
) -> Result<Factorization<S::Elem>, FactorError> {
    if !nonzero_nonunit(s, x) {
        return Err(FactorError::NotFactorable(s.render(x)));
    }
    let limit = s.descent_limit(x);
    let mut factors = Vec::new();
    let mut stack = vec![(x.clone(), 0usize)];
    while let Some((y, depth)) = stack.pop() {
        if depth > limit {
            return Err(FactorError::DepthExceeded(s.render(x)));
        }
        match s.split(&y) {
            None => factors.push(y),
            Some((a, b)) => {
                stack.push((b, depth + 1));
                stack.push((a, depth + 1));
            }
        }
    }
    let unit = s.one();
    assert_eq!(
        s.mul(&unit, &s.product(&factors)),
        *x,
        "factorization does not multiply back"
    );
    Ok(Factorization {
        unit,
        factors,
        subject: x.clone(),
    })
}

/// Least counterexample `(a, b)` to the divisibility form of primality among
/// elements of size ≤ `bound`.
pub fn prime_counterexample<S: Factoring>(
    s: &S,
    p: &S::Elem,
    bound: u64,
) -> Option<(S::Elem, S::Elem)> {
    bounded_prime_test(s, p, bound).witness
}

fn gcd2<S: Factoring>(s: &S, a: &S::Elem, b: &S::Elem) -> Option<S::Elem> {
    s.gcd_set(&[a.clone(), b.clone()]).ok()
}

/// The three gcd identities over every triple of elements of size ≤ `bound`:
/// `gcd(ab, ac) ~ a·gcd(b, c)`; `gcd(a/d, b/d) ~ 1` for `d = gcd(a, b)`;
/// `gcd(a, b) ~ 1 ∧ gcd(a, c) ~ 1 ⇒ gcd(a, bc) ~ 1`. Equality is up to
/// associates; triples where a gcd is undefined are skipped.
pub fn check_gcd_identities<S>(s: &S, bound: u64) -> Verdict
where
    S: Factoring + Sync,
    S::Elem: Send + Sync,
{
    let elems = s.bounded_elements(bound);
    let one = s.one();
    let assoc_one = |x: &S::Elem| associates(s, x, &one);
    let failure = elems.par_iter().find_map_first(|a| {
        for b in &elems {
            if let Some(d) = gcd2(s, a, b) {
                let a_d = s.exact_div(a, &d).expect("gcd divides");
                let b_d = s.exact_div(b, &d).expect("gcd divides");
                if !gcd2(s, &a_d, &b_d).is_some_and(|g| assoc_one(&g)) {
                    return Some(format!("identity 2 at a={} b={}", s.render(a), s.render(b)));
                }
            }
            for c in &elems {
                if !s.is_zero(a) {
                    if let Some(g) = gcd2(s, b, c) {
                        let lhs = gcd2(s, &s.mul(a, b), &s.mul(a, c)).expect("nonzero");
                        if !associates(s, &lhs, &s.mul(a, &g)) {
                            return Some(format!(
                                "identity 1 at a={} b={} c={}",
                                s.render(a),
                                s.render(b),
                                s.render(c)
                            ));
                        }
                    }
                }
                let coprime = |x: &S::Elem| gcd2(s, a, x).is_some_and(|g| assoc_one(&g));
                if coprime(b) && coprime(c) && !coprime(&s.mul(b, c)) {
                    return Some(format!(
                        "identity 3 at a={} b={} c={}",
                        s.render(a),
                        s.render(b),
                        s.render(c)
                    ));
                }
            }
        }
        None
    });
    let v = match failure {
        None => Verdict::holds(format!("{}: gcd identities hold", s.name())),
        Some(w) => Verdict::fails(w, "gcd identity violated"),
    };
    v.with_bound("bound", bound)
}

/// Both sides of the Kaplansky criterion within a bound.
#[derive(Debug, Clone)]
pub struct KaplanskyReport {
    /// Irreducibles are prime and every nonzero nonunit factors.
    pub ufsd_side: Verdict,
    /// Every registered nonzero prime ideal contains a prime element.
    pub prime_side: Verdict,
    /// Holds when the two sides agree.
    pub verdict: Verdict,
}

pub fn check_kaplansky<S>(s: &S, bound: u64) -> KaplanskyReport
where
    S: Factoring + SpectrumRegistry + IdealArithmetic + Sync,
    S::Elem: Send + Sync,
{
    let elems = s.bounded_elements(bound);
    let candidates: Vec<&S::Elem> = elems.iter().filter(|x| nonzero_nonunit(s, x)).collect();
    let uf = candidates.par_iter().find_map_first(|x| {
        if is_irreducible(s, x) && !s.prime_test(x, bound).prime {
            return Some(Verdict::fails(
                s.render(x),
                "irreducible element that is not prime",
            ));
        }
        match factor_accp(s, x) {
            Err(e) => Some(Verdict::fails(s.render(x), e.to_string())),
            Ok(f) if !f.factors.iter().all(|p| is_irreducible(s, p)) => Some(Verdict::fails(
                s.render(x),
                "factorization has a reducible factor",
            )),
            Ok(_) => None,
        }
    });
    let ufsd_side = uf
        .unwrap_or_else(|| {
            Verdict::holds(format!(
                "{} nonzero nonunits factor into primes",
                candidates.len()
            ))
        })
        .with_bound("bound", bound);

    let prime_side = match s.registered_primes(bound) {
        Err(e) => Verdict::fails(s.name(), e.to_string()),
        Ok(reg) => {
            let nonzero: Vec<_> = reg
                .primes
                .iter()
                .filter(|p| p.generators.iter().any(|g| !s.is_zero(g)))
                .collect();
            let primes: Vec<&S::Elem> = candidates
                .iter()
                .copied()
                .filter(|p| s.prime_test(p, bound).prime)
                .collect();
            let missing = nonzero.iter().find(|ideal| {
                !primes
                    .iter()
                    .any(|p| s.ideal_contains(&ideal.generators, p))
            });
            match missing {
                Some(ideal) => Verdict::fails(
                    crate::poly::render_ideal(s, ideal),
                    "nonzero prime ideal without a prime element",
                ),
                None => Verdict::holds(format!(
                    "{} nonzero prime ideals each contain a prime element",
                    nonzero.len()
                )),
            }
        }
    }
    .with_bound("bound", bound);

    let semidomain = s.is_semidomain();
    let verdict = if !semidomain.holds {
        Verdict::fails(
            semidomain.witness.clone().unwrap_or_default(),
            "not a semidomain",
        )
    } else if ufsd_side.holds == prime_side.holds {
        Verdict::holds(format!(
            "{}: both sides {}",
            s.name(),
            if ufsd_side.holds { "hold" } else { "fail" }
        ))
    } else {
        let (bad, good) = if ufsd_side.holds {
            (&prime_side, "unique factorization")
        } else {
            (&ufsd_side, "prime ideals")
        };
        Verdict::fails(
            bad.witness.clone().unwrap_or_default(),
            format!("sides disagree: {good} holds but {}", bad.note),
        )
    }
    .with_bound("bound", bound);
    KaplanskyReport {
        ufsd_side,
        prime_side,
        verdict,
    }
}

/// `W` = units times products of primes. Checks that `W` is saturated on
/// pairs of elements of size ≤ `bound`.
pub fn check_saturated_prime_products<S>(s: &S, bound: u64) -> Verdict
where
    S: Factoring,
{
    let mut memo: HashMap<S::Elem, bool> = HashMap::new();
    let mut in_w = |x: &S::Elem| -> bool {
        if let Some(&v) = memo.get(x) {
            return v;
        }
        let v = if s.is_zero(x) {
            false
        } else if s.is_unit(x) {
            true
        } else {
            factor_accp(s, x).is_ok_and(|f| f.factors.iter().all(|p| is_prime_element(s, p)))
        };
        memo.insert(x.clone(), v);
        v
    };
    let elems = s.bounded_elements(bound);
    let mut members = 0usize;
    for (i, a) in elems.iter().enumerate() {
        if in_w(a) {
            members += 1;
        }
        for b in &elems[i..] {
            let ab = s.mul(a, b);
            if in_w(&ab) && !(in_w(a) && in_w(b)) {
                return Verdict::fails(
                    format!("a={} b={}", s.render(a), s.render(b)),
                    "product lies in W but a factor does not",
                )
                .with_bound("bound", bound);
            }
        }
    }
    Verdict::holds(format!("W saturated; {members} members within bound"))
        .with_bound("bound", bound)
}

/// Multiset of prime factors by trial division, for comparison with
/// [`factor_accp`].
pub fn trial_division(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        while x.is_multiple_of(d) {
            out.push(d);
            x /= d;
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: fn(u64) -> MinPlus = MinPlus::Finite;

    #[test]
    fn divisibility_examples() {
        assert_eq!(divides(&Naturals, &nat(3), &nat(12)), Ok(true));
        assert_eq!(divides(&Tropical, &F(3), &F(1)), Ok(false));
        assert_eq!(divides(&Tropical, &F(3), &F(5)), Ok(true));
        assert_eq!(Tropical.exact_div(&F(5), &F(3)), Some(F(2)));
        assert_eq!(
            divides(&Naturals, &nat(0), &nat(5)),
            Err(FactorError::DivisionByZero)
        );
    }

    #[test]
    fn associate_examples() {
        assert!(associates(&Naturals, &nat(5), &nat(5)));
        assert!(!associates(&Naturals, &nat(5), &nat(10)));
        assert!(associates(&Boolean, &true, &true));
    }

    #[test]
    fn associate_routes_agree_on_finite() {
        for s in [
            FiniteSemiring::boolean(),
            FiniteSemiring::z2(),
            FiniteSemiring::chain3(),
        ] {
            if !s.is_semidomain().holds {
                continue;
            }
            for a in s.carrier() {
                for b in s.carrier() {
                    assert_eq!(associates(&s, &a, &b), associates_by_ideals(&s, &a, &b));
                }
            }
        }
    }

    #[test]
    fn irreducible_and_prime_examples() {
        assert!(is_irreducible(&Naturals, &nat(7)));
        assert!(!is_irreducible(&Naturals, &nat(1)));
        assert!(is_irreducible(&Tropical, &F(1)));
        assert!(!is_irreducible(&Tropical, &F(2)));
        assert!(is_prime_element(&Naturals, &nat(5)));
        let t = Naturals.prime_test(&nat(4), DEFAULT_PRIME_BOUND);
        assert!(!t.prime);
        assert_eq!(t.witness, Some((nat(2), nat(2))));
        assert_eq!(Tropical.prime_test(&F(2), 0).witness, Some((F(1), F(1))));
        assert!(is_prime_element(&Tropical, &F(1)));
        assert!(!is_prime_element(&Tropical, &F(0)));
    }

    #[test]
    fn factorization_examples() {
        let f = factor_accp(&Naturals, &nat(12)).unwrap();
        assert_eq!(f.factors, vec![nat(2), nat(2), nat(3)]);
        assert_eq!(f.unit, nat(1));
        let f = factor_accp(&Tropical, &F(3)).unwrap();
        assert_eq!(f.factors, vec![F(1); 3]);
        assert_eq!(f.unit, F(0));
        assert!(matches!(
            factor_accp(&Naturals, &nat(1)),
            Err(FactorError::NotFactorable(_))
        ));
        assert!(matches!(
            factor_accp(&Naturals, &nat(0)),
            Err(FactorError::NotFactorable(_))
        ));
    }

    #[test]
    fn idempotent_nonunit_exceeds_depth() {
        // u·u = u in the three-element chain
        let c = FiniteSemiring::chain3();
        assert!(matches!(
            factor_accp(&c, &2),
            Err(FactorError::DepthExceeded(_))
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Naturals.gcd_set(&[nat(12), nat(18), nat(30)]), Ok(nat(6)));
        assert_eq!(Naturals.gcd_set(&[nat(0), nat(5)]), Ok(nat(5)));
        assert_eq!(Tropical.gcd_set(&[F(3), F(5), F(9)]), Ok(F(3)));
        assert_eq!(Naturals.gcd_set(&[nat(0)]), Err(FactorError::AllZero));
        assert_eq!(FiniteSemiring::z2().gcd_set(&[0, 1]), Ok(1));
    }

    #[test]
    fn gcd_identity_sweeps() {
        assert!(check_gcd_identities(&Naturals, 20).holds);
        assert!(check_gcd_identities(&Tropical, 15).holds);
        assert!(check_gcd_identities(&Boolean, 1).holds);
    }

    #[test]
    fn saturated_prime_products() {
        assert!(check_saturated_prime_products(&Naturals, 60).holds);
        assert!(check_saturated_prime_products(&Tropical, 30).holds);
        assert!(check_saturated_prime_products(&Boolean, 1).holds);
    }

    #[test]
    fn kaplansky_examples() {
        let r = check_kaplansky(&Naturals, 60);
        assert!(r.ufsd_side.holds && r.prime_side.holds && r.verdict.holds);
        let r = check_kaplansky(&Tropical, 50);
        assert!(r.ufsd_side.holds && r.prime_side.holds && r.verdict.holds);
        let r = check_kaplansky(&Boolean, 1);
        assert!(r.verdict.holds);
    }

    #[test]
    fn trial_division_oracle() {
        assert_eq!(trial_division(360), vec![2, 2, 2, 3, 3, 5]);
        assert_eq!(trial_division(97), vec![97]);
    }
}
