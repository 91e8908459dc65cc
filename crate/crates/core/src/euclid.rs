//! Euclidean norms valued in ℕ ∪ {+∞}.
//!
//! Each family registers its own division procedure; [`div_rem`] re-checks the
//! identity `a = b·q + r` and the remainder condition before returning.
//! [`StarNorm`] wraps any structure with the minimized norm
//! `δ*(a) = min{δ(s·a) : s ∈ S}`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::finite::{is_subtractive, principal_generator, FiniteSemiring, IdealLattice};
use crate::semiring::{nat, Boolean, Divisibility, MinPlus, Natural, Naturals, Semiring, Tropical};
use crate::verdict::Verdict;

/// Sweep bound used to double-check closed-form minimizers on infinite carriers.
pub const DEFAULT_STAR_SWEEP: u64 = 1000;

/// A value of ℕ ∪ {+∞}; `Infinite` is greater than every natural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormValue {
    Finite(Natural),
    Infinite,
}

impl NormValue {
    pub fn of(n: u64) -> Self {
        NormValue::Finite(nat(n))
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Finite(n) => write!(f, "{n}"),
            NormValue::Infinite => f.write_str("+inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EuclidError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no valid decomposition of {a} by {b}: the norm is broken")]
    NoDecomposition { a: String, b: String },
    #[error("no registered minimizer for the star norm on an infinite carrier")]
    UnboundedSearch,
    #[error("registered minimizer for {a} is beaten by multiplier {s}")]
    MinimizerMismatch { a: String, s: String },
    #[error("gcd of two zeros is undefined")]
    ZeroInputs,
    #[error("remainder norms stopped decreasing at {0}")]
    NonTermination(String),
    #[error("gcd output {0} does not divide both inputs")]
    InvalidGcd(String),
}

/// A semiring together with a Euclidean norm and a division procedure.
pub trait EuclideanStructure {
    type Ring: Semiring + Divisibility;

    fn semiring(&self) -> &Self::Ring;

    fn norm(&self, a: &ElemOf<Self>) -> NormValue;

    /// Family-registered division; unchecked.
    fn divide(&self, a: &ElemOf<Self>, b: &ElemOf<Self>) -> Option<(ElemOf<Self>, ElemOf<Self>)>;

    /// A multiplier `s` attaining `δ*(a) = δ(s·a)`.
    fn star_multiplier(&self, a: &ElemOf<Self>) -> Result<ElemOf<Self>, EuclidError>;

    fn describe(&self) -> String {
        self.semiring().name()
    }
}

pub type ElemOf<E> = <<E as EuclideanStructure>::Ring as Semiring>::Elem;

fn exhaustive_star_multiplier<E: EuclideanStructure + ?Sized>(
    e: &E,
    a: &ElemOf<E>,
) -> Option<ElemOf<E>> {
    let s = e.semiring();
    let elems = s.elements()?;
    elems
        .into_iter()
        .min_by(|x, y| e.norm(&s.mul(x, a)).cmp(&e.norm(&s.mul(y, a))))
}

/// Identity norm on positive naturals.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalNorm;

impl EuclideanStructure for NaturalNorm {
    type Ring = Naturals;

    fn semiring(&self) -> &Naturals {
        &Naturals
    }
    fn norm(&self, a: &Natural) -> NormValue {
        if a.is_zero() {
            NormValue::Infinite
        } else {
            NormValue::Finite(a.clone())
        }
    }
    fn divide(&self, a: &Natural, b: &Natural) -> Option<(Natural, Natural)> {
        (!b.is_zero()).then(|| a.div_rem(b))
    }
    fn star_multiplier(&self, _a: &Natural) -> Result<Natural, EuclidError> {
        Ok(Natural::one())
    }
}

/// `δ(a) = a` on finite min-plus values.
#[derive(Debug, Clone, Copy, Default)]
pub struct TropicalNorm;

impl EuclideanStructure for TropicalNorm {
    type Ring = Tropical;

    fn semiring(&self) -> &Tropical {
        &Tropical
    }
    fn norm(&self, a: &MinPlus) -> NormValue {
        match a {
            MinPlus::Finite(v) => NormValue::of(*v),
            MinPlus::Infinity => NormValue::Infinite,
        }
    }
    fn divide(&self, a: &MinPlus, b: &MinPlus) -> Option<(MinPlus, MinPlus)> {
        let MinPlus::Finite(b) = *b else { return None };
        Some(match *a {
            MinPlus::Infinity => (MinPlus::Infinity, MinPlus::Infinity),
            MinPlus::Finite(a) if a >= b => (MinPlus::Finite(a - b), MinPlus::Infinity),
            // min(b + 0, a) = a with δ(a) < δ(b)
            MinPlus::Finite(a) => (MinPlus::Finite(0), MinPlus::Finite(a)),
        })
    }
    fn star_multiplier(&self, _a: &MinPlus) -> Result<MinPlus, EuclidError> {
        Ok(MinPlus::Finite(0))
    }
}

/// `δ(1) = 0`, `δ(0) = +∞`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BooleanNorm;

impl EuclideanStructure for BooleanNorm {
    type Ring = Boolean;

    fn semiring(&self) -> &Boolean {
        &Boolean
    }
    fn norm(&self, a: &bool) -> NormValue {
        if *a {
            NormValue::of(0)
        } else {
            NormValue::Infinite
        }
    }
    fn divide(&self, a: &bool, b: &bool) -> Option<(bool, bool)> {
        b.then_some((*a, false))
    }
    fn star_multiplier(&self, _a: &bool) -> Result<bool, EuclidError> {
        Ok(true)
    }
}

/// An explicit norm assignment on a finite semiring; division by exhaustive
/// search, preferring `r = 0`, then the least `r`, then the least `q`.
#[derive(Debug, Clone)]
pub struct TableNorm {
    pub semiring: FiniteSemiring,
    pub values: Vec<NormValue>,
}

impl EuclideanStructure for TableNorm {
    type Ring = FiniteSemiring;

    fn semiring(&self) -> &FiniteSemiring {
        &self.semiring
    }
    fn norm(&self, a: &usize) -> NormValue {
        self.values[*a].clone()
    }
    fn divide(&self, a: &usize, b: &usize) -> Option<(usize, usize)> {
        let s = &self.semiring;
        for r in s.carrier() {
            if r != 0 && self.values[r] >= self.values[*b] {
                continue;
            }
            if let Some(q) = s.carrier().find(|&q| s.plus(s.times(*b, q), r) == *a) {
                return Some((q, r));
            }
        }
        None
    }
    fn star_multiplier(&self, a: &usize) -> Result<usize, EuclidError> {
        exhaustive_star_multiplier(self, a).ok_or(EuclidError::UnboundedSearch)
    }
    fn describe(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("{} norm=[{}]", self.semiring.name(), parts.join(","))
    }
}

/// Replaces the norm of another structure, keeping its division procedure.
pub struct CustomNorm<E, F> {
    pub inner: E,
    pub norm: F,
}

impl<E, F> EuclideanStructure for CustomNorm<E, F>
where
    E: EuclideanStructure,
    F: Fn(&ElemOf<E>) -> NormValue,
{
    type Ring = E::Ring;

    fn semiring(&self) -> &E::Ring {
        self.inner.semiring()
    }
    fn norm(&self, a: &ElemOf<E>) -> NormValue {
        (self.norm)(a)
    }
    fn divide(&self, a: &ElemOf<E>, b: &ElemOf<E>) -> Option<(ElemOf<E>, ElemOf<E>)> {
        self.inner.divide(a, b)
    }
    fn star_multiplier(&self, a: &ElemOf<E>) -> Result<ElemOf<E>, EuclidError> {
        exhaustive_star_multiplier(self, a).ok_or(EuclidError::UnboundedSearch)
    }
}

/// The minimized norm `δ*(a) = min{δ(s·a)}` with the derived division: divide
/// `a` by the minimizing multiple `s·b` and fold `s` into the quotient.
pub struct StarNorm<E> {
    pub inner: E,
}

impl<E: EuclideanStructure> StarNorm<E> {
    pub fn new(inner: E) -> Self {
        StarNorm { inner }
    }
}

impl<E: EuclideanStructure> EuclideanStructure for StarNorm<E> {
    type Ring = E::Ring;

    fn semiring(&self) -> &E::Ring {
        self.inner.semiring()
    }
    fn norm(&self, a: &ElemOf<E>) -> NormValue {
        let s = self.inner.semiring();
        match self.inner.star_multiplier(a) {
            Ok(m) => self.inner.norm(&s.mul(&m, a)),
            Err(_) => self.inner.norm(a),
        }
    }
    fn divide(&self, a: &ElemOf<E>, b: &ElemOf<E>) -> Option<(ElemOf<E>, ElemOf<E>)> {
        let s = self.inner.semiring();
        let m = self.inner.star_multiplier(b).ok()?;
        let (q, r) = self.inner.divide(a, &s.mul(&m, b))?;
        Some((s.mul(&q, &m), r))
    }
    fn star_multiplier(&self, _a: &ElemOf<E>) -> Result<ElemOf<E>, EuclidError> {
        // δ** = δ*, attained at s = 1
        Ok(self.inner.semiring().one())
    }
    fn describe(&self) -> String {
        format!("star({})", self.inner.describe())
    }
}

/// Division with remainder, re-validated: `a = b·q + r` with `r = 0` or
/// `δ(r) < δ(b)`.
pub fn div_rem<E: EuclideanStructure>(
    e: &E,
    a: &ElemOf<E>,
    b: &ElemOf<E>,
) -> Result<(ElemOf<E>, ElemOf<E>), EuclidError> {
    let s = e.semiring();
    if s.is_zero(b) {
        return Err(EuclidError::DivisionByZero);
    }
    let broken = || EuclidError::NoDecomposition {
        a: s.render(a),
        b: s.render(b),
    };
    let (q, r) = e.divide(a, b).ok_or_else(broken)?;
    if s.add(&s.mul(b, &q), &r) != *a {
        return Err(broken());
    }
    if !s.is_zero(&r) && e.norm(&r) >= e.norm(b) {
        return Err(broken());
    }
    Ok((q, r))
}

/// `δ*(a)`. Exact on finite carriers; on infinite ones the registered
/// minimizer is confirmed against every multiplier of size ≤ `sweep`.
pub fn star_norm<E: EuclideanStructure>(
    e: &E,
    a: &ElemOf<E>,
    sweep: u64,
) -> Result<NormValue, EuclidError> {
    let s = e.semiring();
    let m = e.star_multiplier(a)?;
    let value = e.norm(&s.mul(&m, a));
    let candidates = s.elements().unwrap_or_else(|| s.bounded_elements(sweep));
    for t in candidates {
        if e.norm(&s.mul(&t, a)) < value {
            return Err(EuclidError::MinimizerMismatch {
                a: s.render(a),
                s: s.render(&t),
            });
        }
    }
    Ok(value)
}

/// The remainder chain of the Euclidean algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdChain<T> {
    pub gcd: T,
    /// `r₋₂ = a, r₋₁ = b, r₀, r₁, …` up to and including the final zero.
    pub remainders: Vec<T>,
    pub quotients: Vec<T>,
}

const MAX_CHAIN: usize = 1 << 20;

/// The last nonzero remainder of `r_{n−2} = r_{n−1}·q_n + r_n`, starting from
/// `a, b` (swapped so the divisor is nonzero). The output is checked to divide
/// both inputs.
pub fn euclidean_gcd<E: EuclideanStructure>(
    e: &E,
    a: &ElemOf<E>,
    b: &ElemOf<E>,
) -> Result<GcdChain<ElemOf<E>>, EuclidError> {
    let s = e.semiring();
    if s.is_zero(a) && s.is_zero(b) {
        return Err(EuclidError::ZeroInputs);
    }
    let (mut prev, mut cur) = if s.is_zero(b) {
        (b.clone(), a.clone())
    } else {
        (a.clone(), b.clone())
    };
    let mut remainders = vec![prev.clone(), cur.clone()];
    let mut quotients = Vec::new();
    while !s.is_zero(&cur) {
        if remainders.len() > MAX_CHAIN {
            return Err(EuclidError::NonTermination(s.render(&cur)));
        }
        let (q, r) = div_rem(e, &prev, &cur)?;
        if !s.is_zero(&r) && e.norm(&r) >= e.norm(&cur) {
            return Err(EuclidError::NonTermination(s.render(&r)));
        }
        quotients.push(q);
        remainders.push(r.clone());
        prev = cur;
        cur = r;
    }
    let gcd = prev;
    if s.exact_div(a, &gcd).is_none() || s.exact_div(b, &gcd).is_none() {
        return Err(EuclidError::InvalidGcd(s.render(&gcd)));
    }
    Ok(GcdChain {
        gcd,
        remainders,
        quotients,
    })
}

/// Backtracking search for a norm `δ: carrier → {0..=value_cap} ∪ {+∞}` with
/// `δ⁻¹(+∞) = {0}`. Assignments are tried in lexicographic order of
/// `(δ(1), δ(2), …)`; the first valid one is returned.
pub fn find_euclidean_norm(s: &FiniteSemiring, value_cap: u64) -> Option<TableNorm> {
    let n = s.order();
    // remainders[a][b]: every r with a = b·q + r for some q
    let remainders: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if b == 0 {
                        return Vec::new();
                    }
                    (0..n)
                        .filter(|&r| (0..n).any(|q| s.plus(s.times(b, q), r) == a))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut values: Vec<Option<u64>> = vec![None; n];
    if search(s, &remainders, &mut values, 1, value_cap) {
        let mut out = vec![NormValue::Infinite];
        out.extend(
            values[1..]
                .iter()
                .map(|v| NormValue::of(v.expect("assigned"))),
        );
        return Some(TableNorm {
            semiring: s.clone(),
            values: out,
        });
    }
    None
}

fn pair_alive(rs: &[usize], db: u64, values: &[Option<u64>]) -> bool {
    rs.iter()
        .any(|&r| r == 0 || values[r].is_none_or(|dr| dr < db))
}

fn search(
    s: &FiniteSemiring,
    remainders: &[Vec<Vec<usize>>],
    values: &mut Vec<Option<u64>>,
    k: usize,
    cap: u64,
) -> bool {
    let n = s.order();
    if k == n {
        return true;
    }
    for v in 0..=cap {
        values[k] = Some(v);
        let consistent = (1..n).all(|b| match values[b] {
            None => true,
            Some(db) => (0..n).all(|a| pair_alive(&remainders[a][b], db, values)),
        });
        if consistent && search(s, remainders, values, k + 1, cap) {
            return true;
        }
    }
    values[k] = None;
    false
}

/// Both norm conditions plus the two δ* inequalities, exhaustively on finite
/// carriers and for every element of size ≤ `bound` otherwise.
pub fn verify_structure<E: EuclideanStructure>(e: &E, bound: u64) -> Verdict {
    let s = e.semiring();
    let finite = s.elements();
    let elems = finite.clone().unwrap_or_else(|| s.bounded_elements(bound));
    let scoped = |v: Verdict| {
        if finite.is_some() {
            v
        } else {
            v.with_bound("bound", bound)
        }
    };
    for x in &elems {
        if (e.norm(x) == NormValue::Infinite) != s.is_zero(x) {
            return scoped(Verdict::fails(
                s.render(x),
                "condition (1): norm is +inf exactly at zero",
            ));
        }
    }
    for b in elems.iter().filter(|b| !s.is_zero(b)) {
        for a in &elems {
            let ok = match &finite {
                Some(all) => all.iter().any(|r| {
                    (s.is_zero(r) || e.norm(r) < e.norm(b))
                        && all.iter().any(|q| s.add(&s.mul(b, q), r) == *a)
                }),
                None => div_rem(e, a, b).is_ok(),
            };
            if !ok {
                return scoped(Verdict::fails(
                    format!("a={} b={}", s.render(a), s.render(b)),
                    "condition (2): no division with smaller remainder",
                ));
            }
        }
    }
    let mut note = format!("{}: both norm conditions", e.describe());
    let mut stars = Vec::with_capacity(elems.len());
    for a in &elems {
        match e.star_multiplier(a) {
            Ok(m) => stars.push(e.norm(&s.mul(&m, a))),
            Err(EuclidError::UnboundedSearch) => {
                note.push_str("; star properties skipped (no minimizer)");
                return scoped(Verdict::holds(note));
            }
            Err(err) => return scoped(Verdict::fails(s.render(a), err.to_string())),
        }
    }
    for (a, star) in elems.iter().zip(&stars) {
        if *star > e.norm(a) {
            return scoped(Verdict::fails(s.render(a), "star norm exceeds the norm"));
        }
    }
    for (b, star) in elems.iter().zip(&stars) {
        for m in &elems {
            if *star > e.norm(&s.mul(m, b)) {
                return scoped(Verdict::fails(
                    format!("s={} b={}", s.render(m), s.render(b)),
                    "star norm of b exceeds the norm of s*b",
                ));
            }
        }
    }
    note.push_str(" and star inequalities");
    scoped(Verdict::holds(note))
}

/// On a finite semiring with a norm: every subtractive ideal is principal, and
/// if every ideal is subtractive then every ideal is principal.
pub fn check_subtractive_principal(s: &FiniteSemiring, lattice: &IdealLattice) -> Verdict {
    for (ideal, flags) in lattice.iter() {
        if flags.subtractive && !flags.principal {
            return Verdict::fails(ideal.to_string(), "subtractive ideal is not principal");
        }
    }
    if lattice.all_subtractive() && !lattice.all_principal() {
        return Verdict::fails("all ideals", "subtractive semiring is not a PIS");
    }
    debug_assert!(lattice
        .ideals
        .iter()
        .filter(|i| is_subtractive(s, i))
        .all(|i| principal_generator(s, i).is_some()));
    Verdict::holds(format!(
        "{}: {} ideals, subtractive ones principal",
        s.name(),
        lattice.ideals.len()
    ))
}

/// Shortcut for natural-number gcd through the Euclidean chain.
pub fn nat_gcd(a: &BigUint, b: &BigUint) -> Result<BigUint, EuclidError> {
    euclidean_gcd(&NaturalNorm, a, b).map(|c| c.gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: u64) -> MinPlus {
        MinPlus::Finite(v)
    }

    #[test]
    fn natural_division() {
        assert_eq!(
            div_rem(&NaturalNorm, &nat(17), &nat(5)),
            Ok((nat(3), nat(2)))
        );
        assert_eq!(
            div_rem(&NaturalNorm, &nat(17), &nat(0)),
            Err(EuclidError::DivisionByZero)
        );
    }

    #[test]
    fn tropical_division() {
        assert_eq!(div_rem(&TropicalNorm, &f(1), &f(3)), Ok((f(0), f(1))));
        assert_eq!(
            div_rem(&TropicalNorm, &f(5), &f(3)),
            Ok((f(2), MinPlus::Infinity))
        );
    }

    #[test]
    fn broken_division_is_detected() {
        let liar = CustomNorm {
            inner: NaturalNorm,
            norm: |a: &Natural| {
                if a.is_zero() {
                    NormValue::Infinite
                } else {
                    NormValue::of(0)
                }
            },
        };
        // 7 = 5·1 + 2 but δ(2) = δ(5)
        assert!(matches!(
            div_rem(&liar, &nat(7), &nat(5)),
            Err(EuclidError::NoDecomposition { .. })
        ));
    }

    #[test]
    fn star_norm_values() {
        assert_eq!(star_norm(&NaturalNorm, &nat(7), 1000), Ok(NormValue::of(7)));
        assert_eq!(star_norm(&BooleanNorm, &true, 0), Ok(NormValue::of(0)));
        let unbounded = CustomNorm {
            inner: NaturalNorm,
            norm: |a: &Natural| NaturalNorm.norm(a),
        };
        assert_eq!(
            star_norm(&unbounded, &nat(3), 10),
            Err(EuclidError::UnboundedSearch)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(nat_gcd(&nat(12), &nat(18)), Ok(nat(6)));
        assert_eq!(nat_gcd(&nat(5), &nat(0)), Ok(nat(5)));
        assert_eq!(nat_gcd(&nat(0), &nat(5)), Ok(nat(5)));
        assert_eq!(nat_gcd(&nat(0), &nat(0)), Err(EuclidError::ZeroInputs));
        let chain = euclidean_gcd(&TropicalNorm, &f(3), &f(5)).unwrap();
        assert_eq!(chain.gcd, f(3));
        let chain = euclidean_gcd(&NaturalNorm, &nat(12), &nat(18)).unwrap();
        assert_eq!(
            chain.remainders,
            vec![nat(12), nat(18), nat(12), nat(6), nat(0)]
        );
    }

    #[test]
    fn norm_search_on_small_tables() {
        let b = find_euclidean_norm(&FiniteSemiring::boolean(), 2).unwrap();
        assert_eq!(b.values, vec![NormValue::Infinite, NormValue::of(0)]);
        let c = find_euclidean_norm(&FiniteSemiring::chain3(), 3).unwrap();
        assert_eq!(
            c.values,
            vec![NormValue::Infinite, NormValue::of(0), NormValue::of(1)]
        );
        assert!(verify_structure(&c, 0).holds);
        assert!(verify_structure(&StarNorm::new(c), 0).holds);
    }

    #[test]
    fn verify_detects_bad_norm() {
        let bad = CustomNorm {
            inner: NaturalNorm,
            norm: |a: &Natural| {
                if a.is_zero() || *a == nat(2) {
                    NormValue::Infinite
                } else {
                    NormValue::Finite(a.clone())
                }
            },
        };
        let v = verify_structure(&bad, 20);
        assert!(!v.holds);
        assert_eq!(v.witness.as_deref(), Some("2"));
    }

    #[test]
    fn verify_naturals_identity_norm() {
        let v = verify_structure(&NaturalNorm, 200);
        assert!(v.holds, "{v}");
        assert_eq!(v.bound("bound"), Some(200));
        assert!(verify_structure(&TropicalNorm, 200).holds);
        assert!(verify_structure(&StarNorm::new(NaturalNorm), 200).holds);
    }
}
