//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.
//!
//! Each criterion runs against oracles written here rather than the library's
//! own helpers, and must finish inside its runtime budget.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use semiring_core::euclid::{
    euclidean_gcd, find_euclidean_norm, star_norm, verify_structure, EuclideanStructure,
    NaturalNorm, NormValue, StarNorm, TropicalNorm,
};
use semiring_core::factor::{check_gcd_identities, check_kaplansky, factor_accp};
use semiring_core::finite::{
    check_saturated_complement, enumerate_mc_sets, enumerate_up_to, localize_finite,
    principal_ideal, spectrum, FiniteSemiring, IdealLattice, McSet,
};
use semiring_core::frac::{
    check_gk_equivalences, check_integrally_closed, check_nilpotent_local_global, check_pisd_gk,
    check_principal_subtractive, fraction_semifield, gk_refuter, is_goldman_krull, localize,
    search_integral_witness, ClosureScope,
};
use semiring_core::poly::{
    check_gaussian, gaussian_pair_verdict, GaussianMode, GaussianScope, Polynomials,
};
use semiring_core::semiring::{check_laws_exhaustive, check_laws_sampled, MinPlus};
use semiring_core::{nat, Boolean, Natural, Naturals, Semiring, Tropical};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gcd_oracle(a: u64, b: u64) -> u64 {
    (1..=a.max(b))
        .rev()
        .find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d))
        .expect("one input is nonzero")
}

fn small(x: &Natural) -> u64 {
    u64::try_from(x).expect("fits in u64")
}

fn f(v: u64) -> MinPlus {
    MinPlus::Finite(v)
}

fn axioms() -> Outcome {
    const SAMPLES: u64 = 10_000;
    let fam = [
        ("nat", check_laws_sampled(&Naturals, 1_000_000, SAMPLES, 1)),
        ("bool", check_laws_sampled(&Boolean, 1, SAMPLES, 1)),
        ("trop", check_laws_sampled(&Tropical, 1_000_000, SAMPLES, 1)),
        (
            "nat[X]",
            check_laws_sampled(&Polynomials::new(Naturals), 5, SAMPLES, 1),
        ),
        (
            "trop[X]",
            check_laws_sampled(&Polynomials::new(Tropical), 5, SAMPLES, 1),
        ),
        (
            "F(nat)",
            check_laws_sampled(&fraction_semifield(Naturals), 30, SAMPLES, 1),
        ),
    ];
    for (name, v) in &fam {
        ensure(v.holds, || format!("{name}: {v}"))?;
    }
    let tables = enumerate_up_to(3, 0).map_err(|e| e.to_string())?;
    for s in &tables {
        let elems: Vec<usize> = s.carrier().collect();
        let v = check_laws_exhaustive(s, &elems);
        ensure(v.holds, || format!("{}: {v}", s.name()))?;
    }
    Ok(format!(
        "{} families x {SAMPLES} samples, {} tables exhaustive",
        fam.len(),
        tables.len()
    ))
}

fn gcd_oracles() -> Outcome {
    for a in 0..=200u64 {
        for b in 0..=200u64 {
            if a == 0 && b == 0 {
                continue;
            }
            let g = euclidean_gcd(&NaturalNorm, &nat(a), &nat(b))
                .map_err(|e| format!("nat {a} {b}: {e}"))?;
            ensure(small(&g.gcd) == gcd_oracle(a, b), || {
                format!("nat gcd({a},{b}) = {}", g.gcd)
            })?;
        }
    }
    for a in 0..=100u64 {
        for b in 0..=100u64 {
            let g = euclidean_gcd(&TropicalNorm, &f(a), &f(b))
                .map_err(|e| format!("trop {a} {b}: {e}"))?;
            ensure(g.gcd == f(a.min(b)), || {
                format!("trop gcd({a},{b}) = {}", g.gcd)
            })?;
        }
    }
    Ok("40400 nat pairs, 10201 trop pairs".into())
}

fn finite_norms(
    max_order: usize,
) -> Result<Vec<(FiniteSemiring, semiring_core::euclid::TableNorm)>, String> {
    Ok(enumerate_up_to(max_order, 0)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter_map(|s| find_euclidean_norm(&s, s.order() as u64).map(|n| (s, n)))
        .collect())
}

fn star_norms() -> Outcome {
    let e = NaturalNorm;
    let s = Naturals;
    let stars: Vec<NormValue> = (0..=200u64)
        .map(|a| star_norm(&e, &nat(a), 200).map_err(|err| err.to_string()))
        .collect::<Result<_, _>>()?;
    for a in 0..=200u64 {
        ensure(stars[a as usize] <= e.norm(&nat(a)), || {
            format!("nat a={a}")
        })?;
        for m in 0..=200u64 {
            let sb = s.mul(&nat(m), &nat(a));
            ensure(stars[a as usize] <= e.norm(&sb), || {
                format!("nat b={a} s={m}")
            })?;
        }
    }
    let v = verify_structure(&StarNorm::new(NaturalNorm), 200);
    ensure(v.holds, || format!("nat star structure: {v}"))?;
    let normed = finite_norms(3)?;
    for (s, n) in &normed {
        for a in s.carrier() {
            let st = star_norm(n, &a, 0).map_err(|e| e.to_string())?;
            ensure(st <= n.norm(&a), || format!("{} a={a}", s.name()))?;
            for m in s.carrier() {
                ensure(st <= n.norm(&s.times(m, a)), || {
                    format!("{} b={a} s={m}", s.name())
                })?;
            }
        }
        let v = verify_structure(&StarNorm::new(n.clone()), 0);
        ensure(v.holds, || format!("{} star structure: {v}", s.name()))?;
    }
    Ok(format!("nat up to 200, {} finite norms", normed.len()))
}

/// Ideals of a finite semiring, found by filtering every subset.
fn ideal_oracle(s: &FiniteSemiring) -> Vec<BTreeSet<usize>> {
    let n = s.order();
    (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .collect::<BTreeSet<_>>()
        })
        .filter(|i| {
            i.contains(&0)
                && i.iter()
                    .all(|&a| i.iter().all(|&b| i.contains(&s.plus(a, b))))
                && i.iter()
                    .all(|&a| s.carrier().all(|r| i.contains(&s.times(r, a))))
        })
        .collect()
}

fn subtractive(s: &FiniteSemiring, i: &BTreeSet<usize>) -> bool {
    i.iter().all(|&a| {
        s.carrier()
            .all(|x| !i.contains(&s.plus(a, x)) || i.contains(&x))
    })
}

fn principal(s: &FiniteSemiring, i: &BTreeSet<usize>) -> bool {
    s.carrier().any(|a| principal_ideal(s, a).members == *i)
}

fn subtractive_principal() -> Outcome {
    let normed = finite_norms(3)?;
    let mut ideals = 0;
    let mut all_sub = 0;
    for (s, _) in &normed {
        let list = ideal_oracle(s);
        for i in &list {
            if subtractive(s, i) {
                ideals += 1;
                ensure(principal(s, i), || format!("{} ideal {i:?}", s.name()))?;
            }
        }
        if list.iter().all(|i| subtractive(s, i)) {
            all_sub += 1;
            ensure(list.iter().all(|i| principal(s, i)), || s.name())?;
        }
    }
    Ok(format!(
        "{} normed tables, {ideals} subtractive ideals, {all_sub} fully subtractive",
        normed.len()
    ))
}

fn prime_oracle(s: &FiniteSemiring, i: &BTreeSet<usize>) -> bool {
    i.len() < s.order()
        && s.carrier().all(|a| {
            s.carrier()
                .all(|b| !i.contains(&s.times(a, b)) || i.contains(&a) || i.contains(&b))
        })
}

fn saturation() -> Outcome {
    let tables = enumerate_up_to(3, 0).map_err(|e| e.to_string())?;
    let mut sets = 0;
    for s in &tables {
        let primes: Vec<_> = ideal_oracle(s)
            .into_iter()
            .filter(|i| prime_oracle(s, i))
            .collect();
        let lib: Vec<BTreeSet<usize>> = spectrum(s).into_iter().map(|i| i.members).collect();
        ensure(
            lib.len() == primes.len() && primes.iter().all(|p| lib.contains(p)),
            || format!("{} spectrum", s.name()),
        )?;
        for w in enumerate_mc_sets(s) {
            sets += 1;
            let saturated = s.carrier().all(|a| {
                s.carrier()
                    .all(|b| !w.contains(&s.times(a, b)) || (w.contains(&a) && w.contains(&b)))
            });
            let covered: BTreeSet<usize> = primes
                .iter()
                .filter(|p| p.is_disjoint(&w))
                .flat_map(|p| p.iter().copied())
                .collect();
            let complement: BTreeSet<usize> = s.carrier().filter(|x| !w.contains(x)).collect();
            ensure(saturated == (covered == complement), || {
                format!("{} W={w:?}", s.name())
            })?;
            let v = check_saturated_complement(s, &McSet::Members(w.clone()))
                .map_err(|e| e.to_string())?
                .verdict;
            ensure(v.holds, || format!("{} W={w:?}: {v}", s.name()))?;
        }
    }
    Ok(format!("{} tables, {sets} MC-sets", tables.len()))
}

fn kaplansky() -> Outcome {
    let nat = check_kaplansky(&Naturals, 200);
    let trop = check_kaplansky(&Tropical, 50);
    let boolean = check_kaplansky(&Boolean, 1);
    for (name, r) in [("nat", &nat), ("trop", &trop), ("bool", &boolean)] {
        ensure(
            r.ufsd_side.holds && r.prime_side.holds && r.verdict.holds,
            || format!("{name}: {} / {} / {}", r.ufsd_side, r.prime_side, r.verdict),
        )?;
    }
    Ok("nat 200, trop 50, bool".into())
}

fn trial_division_oracle(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while x > 1 {
        while x.is_multiple_of(d) {
            out.push(d);
            x /= d;
        }
        d += 1;
    }
    out
}

fn factorization() -> Outcome {
    for x in 2..=10_000u64 {
        let fz = factor_accp(&Naturals, &nat(x)).map_err(|e| format!("{x}: {e}"))?;
        let mut got: Vec<u64> = fz.factors.iter().map(small).collect();
        got.sort_unstable();
        ensure(
            got == trial_division_oracle(x) && small(&fz.unit) == 1,
            || format!("{x}: {got:?}"),
        )?;
    }
    for m in 1..=200u64 {
        let fz = factor_accp(&Tropical, &f(m)).map_err(|e| format!("trop {m}: {e}"))?;
        ensure(fz.factors == vec![f(1); m as usize], || format!("trop {m}"))?;
    }
    Ok("nat 2..=10000, trop 1..=200".into())
}

fn gcd_identities() -> Outcome {
    // independent check on nat with the divisor oracle (associates are equal)
    let g = |a: u64, b: u64| (a != 0 || b != 0).then(|| gcd_oracle(a, b));
    for a in 0..=50u64 {
        for b in 0..=50u64 {
            if let Some(d) = g(a, b) {
                ensure(g(a / d, b / d) == Some(1), || {
                    format!("identity 2 a={a} b={b}")
                })?;
            }
            for c in 0..=50u64 {
                if a != 0 {
                    if let Some(e) = g(b, c) {
                        ensure(g(a * b, a * c) == Some(a * e), || {
                            format!("identity 1 a={a} b={b} c={c}")
                        })?;
                    }
                }
                if g(a, b) == Some(1) && g(a, c) == Some(1) {
                    ensure(g(a, b * c) == Some(1), || {
                        format!("identity 3 a={a} b={b} c={c}")
                    })?;
                }
            }
        }
    }
    // tropical gcd is the minimum; units are exactly 0
    for a in 0..=30u64 {
        for b in 0..=30u64 {
            ensure(a + b.min(30) == (a + b).min(a + 30), || {
                format!("trop identity 1 a={a}")
            })?;
            let d = a.min(b);
            ensure((a - d).min(b - d) == 0, || {
                format!("trop identity 2 a={a} b={b}")
            })?;
        }
    }
    for (name, v) in [
        ("nat", check_gcd_identities(&Naturals, 50)),
        ("trop", check_gcd_identities(&Tropical, 30)),
    ] {
        ensure(v.holds, || format!("{name}: {v}"))?;
    }
    Ok("nat a,b,c <= 50, trop <= 30".into())
}

/// Numerical-semigroup membership by direct enumeration.
fn in_monoid(gens: &[u64], x: u64) -> bool {
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for v in 1..=x as usize {
        reach[v] = gens
            .iter()
            .any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[x as usize]
}

fn gaussian() -> Outcome {
    let scope = GaussianScope {
        degree_bound: 3,
        coeff_bound: 6,
        mode: GaussianMode::Exhaustive,
    };
    for (name, v) in [
        ("bool", check_gaussian(&Boolean, scope)),
        ("trop", check_gaussian(&Tropical, scope)),
    ] {
        ensure(v.holds, || format!("{name}: {v}"))?;
    }
    // (2+3X)(3+2X) = 6 + 13X + 6X²; c(f)c(g) contains 2·2 = 4, c(fg) does not
    ensure(!in_monoid(&[6, 13], 4) && in_monoid(&[4, 6, 9], 4), || {
        "oracle".into()
    })?;
    let p = Polynomials::new(Naturals);
    let v = gaussian_pair_verdict(
        &Naturals,
        &p.poly(vec![nat(2), nat(3)]),
        &p.poly(vec![nat(3), nat(2)]),
    );
    let w = v.witness.clone().unwrap_or_default();
    ensure(!v.holds && w.contains('4'), || format!("nat pair: {v}"))?;
    let small = GaussianScope {
        coeff_bound: 0,
        ..scope
    };
    let mut pis = 0;
    for s in enumerate_up_to(3, 0).map_err(|e| e.to_string())? {
        let list = ideal_oracle(&s);
        if list.iter().all(|i| subtractive(&s, i) && principal(&s, i)) {
            pis += 1;
            let v = check_gaussian(&s, small);
            ensure(v.holds, || format!("{}: {v}", s.name()))?;
        }
    }
    Ok(format!(
        "bool, trop exhaustive; nat witness {w}; {pis} finite subtractive PIS"
    ))
}

fn integral_closure() -> Outcome {
    let fr = fraction_semifield(Naturals);
    let u = fr.quotient(nat(3), nat(2));
    ensure(
        search_integral_witness(&Naturals, &u, 3, 20).is_none(),
        || "3/2 found integral".into(),
    )?;
    let v = check_principal_subtractive(&Naturals, 100);
    ensure(v.holds, || format!("principal subtractive: {v}"))?;
    // oracle: (a) is subtractive in nat since a | x + y and a | x give a | y
    for a in 1..=100u64 {
        for x in 0..=100u64 {
            for y in 0..=100u64 {
                if (x + y) % a == 0 && x % a == 0 {
                    ensure(y % a == 0, || format!("({a}) at {x}+{y}"))?;
                }
            }
        }
    }
    let t = [
        McSet::Generated(vec![nat(2)]),
        McSet::Generated(vec![nat(3)]),
    ];
    let r = check_integrally_closed(&Naturals, &t, ClosureScope::default())
        .map_err(|e| e.to_string())?;
    ensure(r.local.len() == 2, || "expected two localizations".into())?;
    for (name, v) in &r.local {
        ensure(v.holds == r.structural.holds, || format!("{name}: {v}"))?;
    }
    ensure(r.verdict.holds, || format!("{}", r.verdict))?;
    Ok("3/2 not integral at degree 3, coeffs 20; two localizations agree".into())
}

fn nilpotent_free(s: &FiniteSemiring) -> bool {
    s.carrier().all(|a| a == 0 || s.times(a, a) != 0)
}

fn nilpotent() -> Outcome {
    let tables = enumerate_up_to(4, 0).map_err(|e| e.to_string())?;
    for s in &tables {
        let lattice = IdealLattice::new(s);
        let maximal: Vec<BTreeSet<usize>> = ideal_oracle(s)
            .into_iter()
            .filter(|i| {
                i.len() < s.order()
                    && !ideal_oracle(s)
                        .iter()
                        .any(|j| j.len() < s.order() && j.len() > i.len() && i.is_subset(j))
            })
            .collect();
        ensure(maximal.len() == lattice.maximal().len(), || {
            format!("{} maximal", s.name())
        })?;
        let local = maximal.iter().all(|m| {
            let w: BTreeSet<usize> = s.carrier().filter(|x| !m.contains(x)).collect();
            localize_finite(s, &McSet::Members(w))
                .map(|l| nilpotent_free(&l.semiring))
                .unwrap_or(true)
        });
        ensure(nilpotent_free(s) == local, || {
            format!("{} oracle", s.name())
        })?;
        let v = check_nilpotent_local_global(s);
        ensure(v.holds, || format!("{}: {v}", s.name()))?;
    }
    Ok(format!("{} tables of order <= 4", tables.len()))
}

fn goldman_krull() -> Outcome {
    let one = f(1);
    let eq = check_gk_equivalences(&Tropical, &one, 30).map_err(|e| e.to_string())?;
    for (name, v) in [
        ("primes contain u", &eq.primes_contain_u),
        ("ideals contain a power", &eq.ideals_contain_power),
        ("fractions generated", &eq.fractions_generated),
    ] {
        ensure(v.holds, || format!("trop {name}: {v}"))?;
    }
    let pisd = check_pisd_gk(&Tropical, 30).map_err(|e| e.to_string())?;
    ensure(pisd.holds && pisd.bound("primes") == Some(2), || {
        format!("trop pisd: {pisd}")
    })?;
    // every prime p with p ∤ u refutes u; the library's refuter must be one
    for u in 1..=100u64 {
        let r = gk_refuter(&Naturals, &nat(u), 100)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no refuter for {u}"))?;
        let ok = r.generators.len() == 1 && {
            let p = small(&r.generators[0]);
            trial_division_oracle(p) == vec![p] && u % p != 0
        };
        ensure(ok, || format!("refuter for {u}: {:?}", r.generators))?;
    }
    let nat = is_goldman_krull(&Naturals, 100).map_err(|e| e.to_string())?;
    ensure(!nat.verdict.holds, || format!("nat: {}", nat.verdict))?;
    let boolean = is_goldman_krull(&Boolean, 30).map_err(|e| e.to_string())?;
    ensure(boolean.verdict.holds, || {
        format!("bool: {}", boolean.verdict)
    })?;
    for m in 1..=3 {
        let l = localize(Tropical, McSet::Generated(vec![f(m)])).map_err(|e| e.to_string())?;
        let w = l.embed(&one);
        ensure(
            gk_refuter(&l, &w, 30).map_err(|e| e.to_string())?.is_none(),
            || l.name(),
        )?;
    }
    Ok("trop u=1 (2 primes); nat refuted for u <= 100; bool holds".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_semiring"))
            .args(["check", "all", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || {
        format!(
            "exit {:?}: {}",
            a.status.code(),
            String::from_utf8_lossy(&a.stdout)
        )
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

const CRITERIA: [Criterion; 13] = [
    Criterion {
        id: 1,
        title: "axiom suite",
        budget: Duration::from_secs(10),
        run: axioms,
    },
    Criterion {
        id: 2,
        title: "euclidean gcd oracles",
        budget: Duration::from_secs(5),
        run: gcd_oracles,
    },
    Criterion {
        id: 3,
        title: "star norm",
        budget: Duration::from_secs(10),
        run: star_norms,
    },
    Criterion {
        id: 4,
        title: "subtractive ideals principal",
        budget: Duration::from_secs(60),
        run: subtractive_principal,
    },
    Criterion {
        id: 5,
        title: "saturated complements",
        budget: Duration::from_secs(60),
        run: saturation,
    },
    Criterion {
        id: 6,
        title: "kaplansky",
        budget: Duration::from_secs(10),
        run: kaplansky,
    },
    Criterion {
        id: 7,
        title: "factorization soundness",
        budget: Duration::from_secs(10),
        run: factorization,
    },
    Criterion {
        id: 8,
        title: "gcd identities",
        budget: Duration::from_secs(10),
        run: gcd_identities,
    },
    Criterion {
        id: 9,
        title: "gaussian",
        budget: Duration::from_secs(60),
        run: gaussian,
    },
    Criterion {
        id: 10,
        title: "integral closure",
        budget: Duration::from_secs(30),
        run: integral_closure,
    },
    Criterion {
        id: 11,
        title: "nilpotent local-global",
        budget: Duration::from_secs(300),
        run: nilpotent,
    },
    Criterion {
        id: 12,
        title: "goldman-krull",
        budget: Duration::from_secs(10),
        run: goldman_krull,
    },
    Criterion {
        id: 13,
        title: "determinism",
        budget: Duration::from_secs(600),
        run: determinism,
    },
];

fn main() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if took <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        println!(
            "{} {:>2} {:<30} {:>8.2?} / {:?}  {detail}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            took,
            c.budget
        );
        if !pass {
            failed.push(c.id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
