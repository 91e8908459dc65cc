//! Theorem-check suites over the registered families and the enumerated
//! finite semirings.
//!
//! Every check yields a named [`Verdict`]; names have the form
//! `suite.family.check`. An expectations table lists the checks that are
//! known to fail (ℕ is neither Gaussian nor Goldman-Krull) so that a run can
//! be judged as a whole.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::euclid::{
    check_subtractive_principal, euclidean_gcd, find_euclidean_norm, verify_structure, BooleanNorm,
    NaturalNorm, StarNorm, TropicalNorm,
};
use crate::factor::{
    check_gcd_identities, check_kaplansky, check_saturated_prime_products, factor_accp,
    is_irreducible, Factoring,
};
use crate::finite::{
    enumerate_mc_sets, enumerate_up_to, saturation_report, spectrum, FiniteError, FiniteSemiring,
    IdealLattice, McSet,
};
use crate::frac::{
    check_gk_equivalences, check_integrally_closed, check_nilpotent_local_global, check_pisd_gk,
    fraction_semifield, is_goldman_krull, is_nilpotent_free, localize, search_integral_witness,
    ClosureScope,
};
use crate::poly::{
    check_content_formula, check_gaussian, gaussian_pair_verdict, GaussianMode, GaussianScope,
    Polynomials, DEFAULT_CONTENT_EXPONENT_CAP,
};
use crate::semiring::{check_laws, nat, Boolean, MinPlus, Naturals, Semiring, Tropical};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Euclid,
    Pisd,
    Ufsd,
    Saturated,
    Gaussian,
    Closed,
    Gk,
    Nilpotent,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Euclid,
        Suite::Pisd,
        Suite::Ufsd,
        Suite::Saturated,
        Suite::Gaussian,
        Suite::Closed,
        Suite::Gk,
        Suite::Nilpotent,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Euclid => "euclid",
            Suite::Pisd => "pisd",
            Suite::Ufsd => "ufsd",
            Suite::Saturated => "saturated",
            Suite::Gaussian => "gaussian",
            Suite::Closed => "closed",
            Suite::Gk => "gk",
            Suite::Nilpotent => "nilpotent",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.tag() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Nat,
    Bool,
    Trop,
    Finite,
}

impl Family {
    pub const EACH: [Family; 4] = [Family::Nat, Family::Bool, Family::Trop, Family::Finite];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Nat => "nat",
            Family::Bool => "bool",
            Family::Trop => "trop",
            Family::Finite => "finite",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::EACH
            .into_iter()
            .find(|x| x.tag() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Search bounds shared by the suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    /// Finite semirings of order 2..=order are enumerated.
    pub order: usize,
    /// Element-size bound on infinite families.
    pub bound: u64,
    pub degree_bound: usize,
    pub coeff_bound: u64,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    /// Restricts the run to one family.
    pub family: Option<Family>,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            order: 3,
            bound: 30,
            degree_bound: 3,
            coeff_bound: 6,
            trials: 1000,
            seed: 0,
            workers: 0,
            family: None,
        }
    }
}

impl Scope {
    fn includes(&self, f: Family) -> bool {
        self.family.is_none_or(|x| x == f)
    }
}

/// Checks expected to fail; anything unlisted is expected to hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expectations {
    pub entries: BTreeMap<String, bool>,
}

impl Expectations {
    pub fn expected(&self, name: &str) -> bool {
        self.entries.get(name).copied().unwrap_or(true)
    }
}

/// One named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub verdict: Verdict,
    pub expected: bool,
}

impl Outcome {
    pub fn as_expected(&self) -> bool {
        self.verdict.holds == self.expected
    }
}

struct Collector<'a> {
    suite: Suite,
    expectations: &'a Expectations,
    out: Vec<Outcome>,
}

impl Collector<'_> {
    fn push(&mut self, family: Family, check: &str, verdict: Verdict) {
        let name = format!("{}.{}.{}", self.suite, family, check);
        let expected = self.expectations.expected(&name);
        self.out.push(Outcome {
            name,
            verdict,
            expected,
        });
    }
}

/// Runs one suite (or all of them, in a fixed order).
pub fn run_suite(
    suite: Suite,
    scope: &Scope,
    expectations: &Expectations,
) -> Result<Vec<Outcome>, FiniteError> {
    if suite == Suite::All {
        let finite = finite_family(scope)?;
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_one(s, scope, expectations, &finite));
        }
        return Ok(out);
    }
    let finite = finite_family(scope)?;
    Ok(run_one(suite, scope, expectations, &finite))
}

fn finite_family(scope: &Scope) -> Result<Vec<FiniteSemiring>, FiniteError> {
    if scope.includes(Family::Finite) {
        enumerate_up_to(scope.order, scope.workers)
    } else {
        Ok(Vec::new())
    }
}

fn run_one(
    suite: Suite,
    scope: &Scope,
    expectations: &Expectations,
    finite: &[FiniteSemiring],
) -> Vec<Outcome> {
    let mut c = Collector {
        suite,
        expectations,
        out: Vec::new(),
    };
    match suite {
        Suite::Euclid => euclid_suite(&mut c, scope, finite),
        Suite::Pisd => pisd_suite(&mut c, scope, finite),
        Suite::Ufsd => ufsd_suite(&mut c, scope, finite),
        Suite::Saturated => saturated_suite(&mut c, scope, finite),
        Suite::Gaussian => gaussian_suite(&mut c, scope, finite),
        Suite::Closed => closed_suite(&mut c, scope),
        Suite::Gk => gk_suite(&mut c, scope),
        Suite::Nilpotent => nilpotent_suite(&mut c, scope, finite),
        Suite::All => unreachable!("expanded by run_suite"),
    }
    c.out
}

fn tagged(s: &FiniteSemiring, v: Verdict) -> Verdict {
    if v.holds {
        v
    } else {
        let w = v.witness.clone().unwrap_or_default();
        Verdict {
            witness: Some(format!("{} {w}", s.name())),
            ..v
        }
    }
}

fn over_finite(
    finite: &[FiniteSemiring],
    what: &str,
    mut check: impl FnMut(&FiniteSemiring) -> Option<Verdict>,
) -> Verdict {
    let mut tested = 0usize;
    let verdicts: Vec<Verdict> = finite
        .iter()
        .filter_map(|s| {
            let v = check(s)?;
            tested += 1;
            Some(tagged(s, v))
        })
        .collect();
    let note = format!("{tested} of {} tables {what}", finite.len());
    Verdict::all(verdicts, note.trim_end())
}

fn euclid_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    let b = scope.bound;
    if scope.includes(Family::Nat) {
        c.push(Family::Nat, "norm", verify_structure(&NaturalNorm, b));
        c.push(
            Family::Nat,
            "star_norm",
            verify_structure(&StarNorm::new(NaturalNorm), b),
        );
        c.push(Family::Nat, "gcd", nat_gcd_sweep(b));
    }
    if scope.includes(Family::Bool) {
        c.push(Family::Bool, "norm", verify_structure(&BooleanNorm, b));
    }
    if scope.includes(Family::Trop) {
        c.push(Family::Trop, "norm", verify_structure(&TropicalNorm, b));
        c.push(
            Family::Trop,
            "star_norm",
            verify_structure(&StarNorm::new(TropicalNorm), b),
        );
        c.push(Family::Trop, "gcd", trop_gcd_sweep(b));
    }
    if scope.includes(Family::Finite) {
        let normed: Vec<_> = finite
            .iter()
            .filter_map(|s| find_euclidean_norm(s, s.order() as u64).map(|n| (s.clone(), n)))
            .collect();
        let find = |s: &FiniteSemiring| normed.iter().find(|(t, _)| t == s).map(|(_, n)| n.clone());
        c.push(
            Family::Finite,
            "norm",
            over_finite(finite, "with a norm", |s| {
                find(s).map(|n| verify_structure(&n, 0))
            }),
        );
        c.push(
            Family::Finite,
            "star_norm",
            over_finite(finite, "with a norm", |s| {
                find(s).map(|n| verify_structure(&StarNorm::new(n), 0))
            }),
        );
        c.push(
            Family::Finite,
            "subtractive_principal",
            over_finite(finite, "with a norm", |s| {
                find(s).map(|_| check_subtractive_principal(s, &IdealLattice::new(s)))
            }),
        );
    }
}

/// The Euclidean gcd divides both inputs and is divisible by every common
/// divisor.
fn nat_gcd_sweep(bound: u64) -> Verdict {
    for a in 0..=bound {
        for b in 0..=bound {
            if a == 0 && b == 0 {
                continue;
            }
            let g = euclidean_gcd(&NaturalNorm, &nat(a), &nat(b)).map(|ch| ch.gcd);
            let ok = g.as_ref().is_ok_and(|g| {
                (1..=a.max(b))
                    .filter(|d| a % d == 0 && b % d == 0)
                    .all(|d| (g % nat(d)) == nat(0))
            });
            if !ok {
                return Verdict::fails(format!("a={a} b={b}"), "gcd is not greatest");
            }
        }
    }
    Verdict::holds("euclidean gcd is a greatest common divisor").with_bound("bound", bound)
}

fn trop_gcd_sweep(bound: u64) -> Verdict {
    for a in 0..=bound {
        for b in 0..=bound {
            let g = euclidean_gcd(&TropicalNorm, &MinPlus::Finite(a), &MinPlus::Finite(b));
            if g.map(|ch| ch.gcd).ok() != Some(MinPlus::Finite(a.min(b))) {
                return Verdict::fails(format!("a={a} b={b}"), "gcd differs from min");
            }
        }
    }
    Verdict::holds("euclidean gcd equals min").with_bound("bound", bound)
}

/// Irreducible ⇔ prime on elements of size ≤ `bound`.
fn irreducible_prime_agree<S: Factoring>(s: &S, bound: u64) -> Verdict {
    for x in s.bounded_elements(bound) {
        let irr = is_irreducible(s, &x);
        let prime = s.prime_test(&x, bound).prime;
        if irr != prime {
            return Verdict::fails(s.render(&x), format!("irreducible={irr} prime={prime}"))
                .with_bound("bound", bound);
        }
    }
    Verdict::holds("irreducibles and primes coincide").with_bound("bound", bound)
}

/// Nonzero primes are maximal in a finite principal ideal semidomain.
fn prime_maximal(s: &FiniteSemiring) -> Verdict {
    let lattice = IdealLattice::new(s);
    for (ideal, flags) in lattice.iter() {
        if flags.prime && !ideal.is_zero() && !flags.maximal {
            return Verdict::fails(ideal.to_string(), "nonzero prime ideal is not maximal");
        }
    }
    Verdict::holds("nonzero primes are maximal")
}

fn is_finite_pisd(s: &FiniteSemiring) -> bool {
    s.is_semidomain().holds && IdealLattice::new(s).all_principal()
}

fn pisd_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    let b = scope.bound;
    let pisd = |r: Result<Verdict, crate::frac::FracError>| {
        r.unwrap_or_else(|e| Verdict::fails(e.to_string(), "not a principal ideal semidomain"))
    };
    if scope.includes(Family::Nat) {
        c.push(
            Family::Nat,
            "irreducible_prime",
            irreducible_prime_agree(&Naturals, b),
        );
    }
    if scope.includes(Family::Bool) {
        c.push(
            Family::Bool,
            "goldman_krull_finite_spectrum",
            pisd(check_pisd_gk(&Boolean, b)),
        );
    }
    if scope.includes(Family::Trop) {
        c.push(
            Family::Trop,
            "irreducible_prime",
            irreducible_prime_agree(&Tropical, b),
        );
        c.push(
            Family::Trop,
            "goldman_krull_finite_spectrum",
            pisd(check_pisd_gk(&Tropical, b)),
        );
        let accp = (1..=b).find_map(|x| factor_accp(&Tropical, &MinPlus::Finite(x)).err());
        c.push(
            Family::Trop,
            "accp",
            match accp {
                None => Verdict::holds("every finite nonunit factors").with_bound("bound", b),
                Some(e) => Verdict::fails(e.to_string(), "factorization failed"),
            },
        );
    }
    if scope.includes(Family::Finite) {
        c.push(
            Family::Finite,
            "prime_maximal",
            over_finite(finite, "principal ideal semidomains", |s| {
                is_finite_pisd(s).then(|| prime_maximal(s))
            }),
        );
        c.push(
            Family::Finite,
            "irreducible_prime",
            over_finite(finite, "principal ideal semidomains", |s| {
                is_finite_pisd(s).then(|| irreducible_prime_agree(s, 0))
            }),
        );
    }
}

fn ufsd_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    let b = scope.bound;
    if scope.includes(Family::Nat) {
        c.push(
            Family::Nat,
            "kaplansky",
            check_kaplansky(&Naturals, b).verdict,
        );
    }
    if scope.includes(Family::Bool) {
        c.push(
            Family::Bool,
            "kaplansky",
            check_kaplansky(&Boolean, b).verdict,
        );
    }
    if scope.includes(Family::Trop) {
        c.push(
            Family::Trop,
            "kaplansky",
            check_kaplansky(&Tropical, b).verdict,
        );
    }
    if scope.includes(Family::Finite) {
        c.push(
            Family::Finite,
            "kaplansky",
            over_finite(finite, "semidomains", |s| {
                s.is_semidomain()
                    .holds
                    .then(|| check_kaplansky(s, 0).verdict)
            }),
        );
    }
}

fn saturated_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    let b = scope.bound;
    if scope.includes(Family::Nat) {
        c.push(
            Family::Nat,
            "prime_products",
            check_saturated_prime_products(&Naturals, b),
        );
    }
    if scope.includes(Family::Bool) {
        c.push(
            Family::Bool,
            "prime_products",
            check_saturated_prime_products(&Boolean, b),
        );
    }
    if scope.includes(Family::Trop) {
        c.push(
            Family::Trop,
            "prime_products",
            check_saturated_prime_products(&Tropical, b),
        );
    }
    if scope.includes(Family::Finite) {
        c.push(
            Family::Finite,
            "complement",
            over_finite(finite, "", |s| Some(saturation_sweep(s))),
        );
    }
}

/// Saturated ⇔ complement covered by disjoint primes, for every MC-set.
pub fn saturation_sweep(s: &FiniteSemiring) -> Verdict {
    let primes = spectrum(s);
    let sets = enumerate_mc_sets(s);
    let count = sets.len();
    let verdicts = sets
        .into_iter()
        .map(|w| saturation_report(s, &w, &primes).verdict);
    let v = Verdict::all(verdicts, format!("{count} MC-sets"));
    if v.holds {
        Verdict::holds(format!("{count} MC-sets"))
    } else {
        v
    }
}

/// Every ideal subtractive and principal.
pub fn is_subtractive_pis(s: &FiniteSemiring) -> bool {
    let l = IdealLattice::new(s);
    l.all_subtractive() && l.all_principal()
}

fn gaussian_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    let exhaustive = GaussianScope {
        degree_bound: scope.degree_bound,
        coeff_bound: scope.coeff_bound,
        mode: GaussianMode::Exhaustive,
    };
    if scope.includes(Family::Nat) {
        let sampled = GaussianScope {
            mode: GaussianMode::Sampled {
                trials: scope.trials,
                seed: scope.seed,
            },
            ..exhaustive
        };
        c.push(Family::Nat, "gaussian", check_gaussian(&Naturals, sampled));
        let p = Polynomials::new(Naturals);
        let (f, g) = (p.poly(vec![nat(2), nat(3)]), p.poly(vec![nat(3), nat(2)]));
        c.push(
            Family::Nat,
            "recorded_pair",
            gaussian_pair_verdict(&Naturals, &f, &g),
        );
        c.push(
            Family::Nat,
            "content_formula",
            check_content_formula(&Naturals, &f, &g, DEFAULT_CONTENT_EXPONENT_CAP).verdict,
        );
    }
    if scope.includes(Family::Bool) {
        c.push(
            Family::Bool,
            "gaussian",
            check_gaussian(&Boolean, exhaustive),
        );
        let p = Polynomials::new(Boolean);
        let (f, g) = (
            p.poly(vec![true, false, true]),
            p.poly(vec![false, true, true]),
        );
        c.push(
            Family::Bool,
            "content_formula",
            check_content_formula(&Boolean, &f, &g, DEFAULT_CONTENT_EXPONENT_CAP).verdict,
        );
    }
    if scope.includes(Family::Trop) {
        c.push(
            Family::Trop,
            "gaussian",
            check_gaussian(&Tropical, exhaustive),
        );
        let p = Polynomials::new(Tropical);
        let f = p.poly(vec![MinPlus::Finite(0), MinPlus::Finite(1)]);
        let g = p.poly(vec![MinPlus::Finite(0), MinPlus::Finite(2)]);
        c.push(
            Family::Trop,
            "content_formula",
            check_content_formula(&Tropical, &f, &g, DEFAULT_CONTENT_EXPONENT_CAP).verdict,
        );
    }
    if scope.includes(Family::Finite) {
        let small = GaussianScope {
            degree_bound: scope.degree_bound.min(2),
            coeff_bound: 0,
            mode: GaussianMode::Exhaustive,
        };
        c.push(
            Family::Finite,
            "subtractive_pis",
            over_finite(finite, "subtractive principal ideal semirings", |s| {
                is_subtractive_pis(s).then(|| check_gaussian(s, small))
            }),
        );
    }
}

fn closed_suite(c: &mut Collector, scope: &Scope) {
    let b = scope.bound;
    let closure = ClosureScope::default();
    if scope.includes(Family::Nat) {
        let t_list = [
            McSet::Generated(vec![nat(2)]),
            McSet::Generated(vec![nat(3)]),
        ];
        let v = match check_integrally_closed(&Naturals, &t_list, closure) {
            Ok(r) => {
                let parts = std::iter::once(r.structural)
                    .chain([r.search])
                    .chain(r.local.into_iter().map(|(_, v)| v));
                Verdict::all(parts, "structural, search and local routes")
            }
            Err(e) => Verdict::fails(e.to_string(), "localization failed"),
        };
        c.push(Family::Nat, "integrally_closed", v);
        let f = fraction_semifield(Naturals);
        let u = f.quotient(nat(3), nat(2));
        c.push(
            Family::Nat,
            "three_halves",
            match search_integral_witness(
                &Naturals,
                &u,
                closure.degree_bound + 1,
                closure.coeff_bound,
            ) {
                None => Verdict::holds("3/2 is not integral")
                    .with_bound("degree", closure.degree_bound as u64 + 1)
                    .with_bound("coeff", closure.coeff_bound),
                Some(eq) => Verdict::fails(format!("{eq:?}"), "3/2 satisfies an integral equation"),
            },
        );
        c.push(
            Family::Nat,
            "gcd_identities",
            check_gcd_identities(&Naturals, b),
        );
    }
    if scope.includes(Family::Bool) {
        let v = check_integrally_closed(&Boolean, &[], closure)
            .map(|r| r.verdict)
            .unwrap_or_else(|e| Verdict::fails(e.to_string(), "localization failed"));
        c.push(Family::Bool, "integrally_closed", v);
        c.push(
            Family::Bool,
            "gcd_identities",
            check_gcd_identities(&Boolean, b),
        );
    }
    if scope.includes(Family::Trop) {
        c.push(
            Family::Trop,
            "gcd_identities",
            check_gcd_identities(&Tropical, b),
        );
    }
}

fn gk_suite(c: &mut Collector, scope: &Scope) {
    let b = scope.bound;
    let report = |r: Result<Verdict, crate::frac::FracError>| {
        r.unwrap_or_else(|e| Verdict::fails(e.to_string(), "no spectrum"))
    };
    if scope.includes(Family::Nat) {
        c.push(
            Family::Nat,
            "goldman_krull",
            report(is_goldman_krull(&Naturals, b).map(|r| r.verdict)),
        );
        c.push(
            Family::Nat,
            "equivalences",
            report(check_gk_equivalences(&Naturals, &nat(2), b).map(|r| r.verdict)),
        );
    }
    if scope.includes(Family::Bool) {
        c.push(
            Family::Bool,
            "goldman_krull",
            report(is_goldman_krull(&Boolean, b).map(|r| r.verdict)),
        );
        c.push(
            Family::Bool,
            "equivalences",
            report(check_gk_equivalences(&Boolean, &true, b).map(|r| r.verdict)),
        );
    }
    if scope.includes(Family::Trop) {
        let one = MinPlus::Finite(1);
        c.push(
            Family::Trop,
            "goldman_krull",
            report(is_goldman_krull(&Tropical, b).map(|r| r.verdict)),
        );
        c.push(
            Family::Trop,
            "equivalences",
            report(check_gk_equivalences(&Tropical, &one, b).map(|r| r.verdict)),
        );
        // semirings between the base and its fraction semifield
        let between = (1..=3).map(|m| {
            let v = localize(Tropical, McSet::Generated(vec![MinPlus::Finite(m)]))
                .map_err(|e| e.to_string())
                .and_then(|l| {
                    let witness = l.embed(&one);
                    let primes =
                        crate::frac::gk_refuter(&l, &witness, b).map_err(|e| e.to_string())?;
                    Ok(match primes {
                        None => Verdict::holds_with(l.render(&witness), l.name()),
                        Some(p) => Verdict::fails(
                            crate::poly::render_ideal(&l, &p),
                            format!("{}: prime avoids the witness", l.name()),
                        ),
                    })
                });
            v.unwrap_or_else(|e| Verdict::fails(e, "localization failed"))
        });
        c.push(
            Family::Trop,
            "intermediate",
            Verdict::all(between, "localizations at powers of 1, 2, 3"),
        );
    }
}

fn nilpotent_suite(c: &mut Collector, scope: &Scope, finite: &[FiniteSemiring]) {
    if scope.includes(Family::Nat) {
        c.push(Family::Nat, "nilpotent_free", is_nilpotent_free(&Naturals));
    }
    if scope.includes(Family::Bool) {
        c.push(Family::Bool, "nilpotent_free", is_nilpotent_free(&Boolean));
    }
    if scope.includes(Family::Trop) {
        c.push(Family::Trop, "nilpotent_free", is_nilpotent_free(&Tropical));
    }
    if scope.includes(Family::Finite) {
        c.push(
            Family::Finite,
            "local_global",
            over_finite(finite, "", |s| Some(check_nilpotent_local_global(s))),
        );
    }
}

/// Law checks for each registered family; used by the `validate` path and
/// the acceptance suite.
pub fn law_suite(samples: u64, seed: u64) -> Vec<(String, Verdict)> {
    vec![
        (Naturals.name(), check_laws(&Naturals, 1000, samples, seed)),
        (Boolean.name(), check_laws(&Boolean, 1, samples, seed)),
        (Tropical.name(), check_laws(&Tropical, 1000, samples, seed)),
    ]
}

/// Names of every check a suite can produce under a scope, in run order.
pub fn check_names(outcomes: &[Outcome]) -> BTreeSet<&str> {
    outcomes.iter().map(|o| o.name.as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expectations() -> Expectations {
        Expectations {
            entries: [
                ("gaussian.nat.gaussian", false),
                ("gaussian.nat.recorded_pair", false),
                ("gaussian.nat.content_formula", false),
                ("gk.nat.goldman_krull", false),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("gk".parse::<Suite>(), Ok(Suite::Gk));
        assert!("bogus".parse::<Suite>().is_err());
        assert_eq!("trop".parse::<Family>(), Ok(Family::Trop));
    }

    #[test]
    fn gk_suite_matches_expectations() {
        let out = run_suite(Suite::Gk, &Scope::default(), &expectations()).unwrap();
        for o in &out {
            assert!(o.as_expected(), "{} {}", o.name, o.verdict);
        }
        let nat = out
            .iter()
            .find(|o| o.name == "gk.nat.goldman_krull")
            .unwrap();
        assert!(!nat.verdict.holds);
    }

    #[test]
    fn gaussian_suite_on_nat_only() {
        let scope = Scope {
            family: Some(Family::Nat),
            trials: 100,
            ..Scope::default()
        };
        let out = run_suite(Suite::Gaussian, &scope, &expectations()).unwrap();
        assert!(out.iter().all(|o| o.name.starts_with("gaussian.nat.")));
        assert!(out.iter().all(Outcome::as_expected));
    }

    #[test]
    fn finite_suites_at_order_two() {
        let scope = Scope {
            order: 2,
            family: Some(Family::Finite),
            ..Scope::default()
        };
        for suite in Suite::EACH {
            for o in run_suite(suite, &scope, &expectations()).unwrap() {
                assert!(o.as_expected(), "{} {}", o.name, o.verdict);
            }
        }
    }
}
