//! The commutative semiring abstraction and the infinite instances ℕ, the
//! Boolean semifield and the min-plus semiring ℕ ∪ {∞}.
//!
//! A semiring here always has commutative addition with identity `zero`,
//! commutative multiplication with identity `one ≠ zero`, distributivity and an
//! absorbing `zero`. The laws are exposed as checkable predicates: exhaustive on
//! finite carriers and sampled on infinite ones.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::verdict::Verdict;

/// Arbitrary-precision natural number.
pub type Natural = BigUint;

pub fn nat(n: u64) -> Natural {
    Natural::from(n)
}

/// A commutative semiring with decidable equality on canonical elements.
pub trait Semiring {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// True iff some `b` satisfies `a·b = one`.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// The whole carrier, when it is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// Every element whose canonical size is at most `bound`; the whole carrier
    /// for finite semirings.
    fn bounded_elements(&self, bound: u64) -> Vec<Self::Elem>;

    /// Cancellation by nonzero elements.
    fn is_semidomain(&self) -> Verdict;

    fn render(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    fn render_all(&self, items: &[Self::Elem]) -> String {
        let parts: Vec<String> = items.iter().map(|x| self.render(x)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Exact division: some `x` with `a = b·x`.
pub trait Divisibility: Semiring {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

/// Literal syntax for elements: decimal naturals, `0`/`1` for Booleans,
/// `inf` for the min-plus zero, indices for tables.
pub trait ElementSyntax: Semiring {
    fn parse_element(&self, text: &str) -> Option<Self::Elem>;
}

impl ElementSyntax for Naturals {
    fn parse_element(&self, text: &str) -> Option<Natural> {
        let t = text.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    }
}

impl ElementSyntax for Boolean {
    fn parse_element(&self, text: &str) -> Option<bool> {
        match text.trim() {
            "0" | "false" => Some(false),
            "1" | "true" => Some(true),
            _ => None,
        }
    }
}

impl ElementSyntax for Tropical {
    fn parse_element(&self, text: &str) -> Option<MinPlus> {
        match text.trim() {
            "inf" | "∞" => Some(MinPlus::Infinity),
            t => t.parse().ok().map(MinPlus::Finite),
        }
    }
}

/// ℕ with ordinary addition and multiplication.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Naturals;

impl Semiring for Naturals {
    type Elem = Natural;

    fn name(&self) -> String {
        "nat".into()
    }
    fn zero(&self) -> Natural {
        Natural::zero()
    }
    fn one(&self) -> Natural {
        Natural::one()
    }
    fn add(&self, a: &Natural, b: &Natural) -> Natural {
        a + b
    }
    fn mul(&self, a: &Natural, b: &Natural) -> Natural {
        a * b
    }
    fn is_unit(&self, a: &Natural) -> bool {
        a.is_one()
    }
    fn elements(&self) -> Option<Vec<Natural>> {
        None
    }
    fn bounded_elements(&self, bound: u64) -> Vec<Natural> {
        (0..=bound).map(nat).collect()
    }
    fn is_semidomain(&self) -> Verdict {
        Verdict::holds("nat: a product of positive naturals is positive and ab = ac forces b = c")
    }
    fn render(&self, a: &Natural) -> String {
        a.to_string()
    }
}

impl Divisibility for Naturals {
    fn exact_div(&self, a: &Natural, b: &Natural) -> Option<Natural> {
        if b.is_zero() {
            return a.is_zero().then(Natural::zero);
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

/// The two-element Boolean semifield: `or` as addition, `and` as multiplication.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Boolean;

impl Semiring for Boolean {
    type Elem = bool;

    fn name(&self) -> String {
        "bool".into()
    }
    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn is_unit(&self, a: &bool) -> bool {
        *a
    }
    fn elements(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
    fn bounded_elements(&self, _bound: u64) -> Vec<bool> {
        vec![false, true]
    }
    fn is_semidomain(&self) -> Verdict {
        Verdict::holds("bool: two-element semifield")
    }
    fn render(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.into()
    }
}

impl Divisibility for Boolean {
    fn exact_div(&self, a: &bool, b: &bool) -> Option<bool> {
        match (*a, *b) {
            (_, true) => Some(*a),
            (false, false) => Some(false),
            (true, false) => None,
        }
    }
}

/// Element of the min-plus semiring ℕ ∪ {∞}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinPlus {
    Finite(u64),
    Infinity,
}

impl MinPlus {
    pub fn finite(self) -> Option<u64> {
        match self {
            MinPlus::Finite(v) => Some(v),
            MinPlus::Infinity => None,
        }
    }
}

impl std::fmt::Display for MinPlus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinPlus::Finite(v) => write!(f, "{v}"),
            MinPlus::Infinity => write!(f, "inf"),
        }
    }
}

/// ℕ ∪ {∞} with `min` as addition (identity ∞) and `+` as multiplication
/// (identity 0).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tropical;

impl Semiring for Tropical {
    type Elem = MinPlus;

    fn name(&self) -> String {
        "trop".into()
    }
    fn zero(&self) -> MinPlus {
        MinPlus::Infinity
    }
    fn one(&self) -> MinPlus {
        MinPlus::Finite(0)
    }
    fn add(&self, a: &MinPlus, b: &MinPlus) -> MinPlus {
        *a.min(b)
    }
    fn mul(&self, a: &MinPlus, b: &MinPlus) -> MinPlus {
        match (a, b) {
            (MinPlus::Finite(x), MinPlus::Finite(y)) => {
                MinPlus::Finite(x.checked_add(*y).expect("min-plus value overflow"))
            }
            _ => MinPlus::Infinity,
        }
    }
    fn is_unit(&self, a: &MinPlus) -> bool {
        *a == MinPlus::Finite(0)
    }
    fn elements(&self) -> Option<Vec<MinPlus>> {
        None
    }
    fn bounded_elements(&self, bound: u64) -> Vec<MinPlus> {
        (0..=bound)
            .map(MinPlus::Finite)
            .chain(std::iter::once(MinPlus::Infinity))
            .collect()
    }
    fn is_semidomain(&self) -> Verdict {
        Verdict::holds("trop: a + b = a + c forces b = c for finite a")
    }
    fn render(&self, a: &MinPlus) -> String {
        a.to_string()
    }
}

impl Divisibility for Tropical {
    fn exact_div(&self, a: &MinPlus, b: &MinPlus) -> Option<MinPlus> {
        match (a, b) {
            (MinPlus::Infinity, _) => Some(if *b == MinPlus::Infinity {
                self.one()
            } else {
                MinPlus::Infinity
            }),
            (MinPlus::Finite(_), MinPlus::Infinity) => None,
            (MinPlus::Finite(x), MinPlus::Finite(y)) => x.checked_sub(*y).map(MinPlus::Finite),
        }
    }
}

/// First `(a, b, c)` with `a ≠ 0`, `ab = ac` and `b ≠ c`.
pub fn cancellation_counterexample<S: Semiring>(
    s: &S,
    elems: &[S::Elem],
) -> Option<(S::Elem, S::Elem, S::Elem)> {
    for a in elems.iter().filter(|a| !s.is_zero(a)) {
        for (i, b) in elems.iter().enumerate() {
            let ab = s.mul(a, b);
            for c in &elems[i + 1..] {
                if s.mul(a, c) == ab {
                    return Some((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

/// Exhaustive cancellation check for finite carriers.
pub fn exhaustive_semidomain<S: Semiring>(s: &S, elems: &[S::Elem]) -> Verdict {
    match cancellation_counterexample(s, elems) {
        None => Verdict::holds(format!(
            "{}: cancellation verified over all {} elements",
            s.name(),
            elems.len()
        )),
        Some((a, b, c)) => Verdict::fails(
            format!("a={} b={} c={}", s.render(&a), s.render(&b), s.render(&c)),
            "ab = ac with a nonzero and b != c",
        ),
    }
}

/// One failed semiring law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: String,
}

/// Checks every semiring law on one triple.
pub fn law_violation<S: Semiring>(
    s: &S,
    a: &S::Elem,
    b: &S::Elem,
    c: &S::Elem,
) -> Option<LawViolation> {
    let zero = s.zero();
    let one = s.one();
    let show = |items: &[&S::Elem]| {
        let parts: Vec<String> = items.iter().map(|x| s.render(x)).collect();
        format!("({})", parts.join(", "))
    };
    let checks: [(&'static str, bool, String); 9] = [
        ("zero-ne-one", zero != one, show(&[&zero, &one])),
        (
            "add-associative",
            s.add(&s.add(a, b), c) == s.add(a, &s.add(b, c)),
            show(&[a, b, c]),
        ),
        ("add-commutative", s.add(a, b) == s.add(b, a), show(&[a, b])),
        ("add-identity", s.add(a, &zero) == *a, show(&[a])),
        (
            "mul-associative",
            s.mul(&s.mul(a, b), c) == s.mul(a, &s.mul(b, c)),
            show(&[a, b, c]),
        ),
        ("mul-commutative", s.mul(a, b) == s.mul(b, a), show(&[a, b])),
        ("mul-identity", s.mul(a, &one) == *a, show(&[a])),
        (
            "distributive",
            s.mul(a, &s.add(b, c)) == s.add(&s.mul(a, b), &s.mul(a, c)),
            show(&[a, b, c]),
        ),
        ("absorbing-zero", s.mul(a, &zero) == zero, show(&[a])),
    ];
    checks
        .into_iter()
        .find(|(_, ok, _)| !ok)
        .map(|(law, _, witness)| LawViolation { law, witness })
}

/// Every law on every triple of `elems`.
pub fn check_laws_exhaustive<S: Semiring>(s: &S, elems: &[S::Elem]) -> Verdict {
    for a in elems {
        for b in elems {
            for c in elems {
                if let Some(v) = law_violation(s, a, b, c) {
                    return Verdict::fails(v.witness, v.law);
                }
            }
        }
    }
    Verdict::holds(format!(
        "{}: all laws over {} elements",
        s.name(),
        elems.len()
    ))
    .with_bound("triples", (elems.len() as u64).pow(3))
}

/// Every law on `samples` random triples drawn from `bounded_elements(bound)`.
pub fn check_laws_sampled<S: Semiring>(s: &S, bound: u64, samples: u64, seed: u64) -> Verdict {
    let pool = s.bounded_elements(bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let c = &pool[rng.gen_range(0..pool.len())];
        if let Some(v) = law_violation(s, a, b, c) {
            return Verdict::fails(v.witness, v.law);
        }
    }
    Verdict::holds(format!("{}: all laws on sampled triples", s.name()))
        .with_bound("samples", samples)
        .with_bound("bound", bound)
        .with_bound("seed", seed)
}

/// Exhaustive on finite carriers, sampled otherwise.
pub fn check_laws<S: Semiring>(s: &S, bound: u64, samples: u64, seed: u64) -> Verdict {
    match s.elements() {
        Some(elems) => check_laws_exhaustive(s, &elems),
        None => check_laws_sampled(s, bound, samples, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naturals_operations() {
        assert_eq!(Naturals.add(&nat(2), &nat(3)), nat(5));
        assert_eq!(Naturals.mul(&nat(2), &nat(3)), nat(6));
        assert!(Naturals.is_unit(&nat(1)));
        assert!(!Naturals.is_unit(&nat(2)));
        assert!(!Naturals.is_unit(&nat(0)));
    }

    #[test]
    fn naturals_do_not_overflow() {
        let big = nat(u64::MAX);
        let sq = Naturals.mul(&big, &big);
        assert!(sq > big);
        assert_eq!(Naturals.exact_div(&sq, &big), Some(big));
    }

    #[test]
    fn tropical_operations() {
        let t = Tropical;
        let f = MinPlus::Finite;
        assert_eq!(t.add(&f(2), &f(3)), f(2));
        assert_eq!(t.mul(&f(2), &f(3)), f(5));
        assert_eq!(t.mul(&MinPlus::Infinity, &f(3)), MinPlus::Infinity);
        assert!(t.is_unit(&f(0)));
        assert!(!t.is_unit(&f(1)));
        assert!(!t.is_unit(&MinPlus::Infinity));
        assert_eq!(t.pow(&f(3), 4), f(12));
    }

    #[test]
    fn boolean_operations() {
        assert!(Boolean.add(&true, &true));
        assert!(!Boolean.mul(&true, &false));
        assert!(Boolean.is_unit(&true));
        assert!(!Boolean.is_unit(&false));
    }

    #[test]
    fn tropical_cancellation_up_to_twenty() {
        let elems = Tropical.bounded_elements(20);
        assert!(cancellation_counterexample(&Tropical, &elems).is_none());
        assert!(Tropical.is_semidomain().holds);
        assert!(exhaustive_semidomain(&Boolean, &[false, true]).holds);
    }

    #[test]
    fn sampled_laws_hold_on_infinite_families() {
        assert!(check_laws_sampled(&Naturals, 1_000_000, 10_000, 0).holds);
        assert!(check_laws_sampled(&Tropical, 1_000_000, 10_000, 0).holds);
        assert!(check_laws(&Boolean, 0, 0, 0).holds);
    }

    #[test]
    fn tropical_divisibility() {
        let f = MinPlus::Finite;
        assert_eq!(Tropical.exact_div(&f(5), &f(3)), Some(f(2)));
        assert_eq!(Tropical.exact_div(&f(1), &f(3)), None);
        assert_eq!(
            Tropical.exact_div(&MinPlus::Infinity, &f(3)),
            Some(MinPlus::Infinity)
        );
    }
}
