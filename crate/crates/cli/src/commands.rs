use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use semiring_core::euclid::{
    euclidean_gcd, find_euclidean_norm, BooleanNorm, EuclideanStructure, NaturalNorm, TropicalNorm,
};
use semiring_core::factor::{factor_accp, FactorError, Factoring};
use semiring_core::finite::{
    canonical_form, dedup_isomorphic, enumerate_semirings, format_tables, localize_finite,
    parse_tables, spectrum, validate_tables, FiniteSemiring, IdealLattice, TableError,
    DEFAULT_ENUMERATION_CAP,
};
use semiring_core::frac::{
    check_nilpotent_local_global, fraction_semifield, is_goldman_krull, is_nilpotent_free,
    localize, search_integral_witness, FractionBase, SpectrumRegistry,
};
use semiring_core::harness::{run_suite, Expectations, Family, Scope, Suite};
use semiring_core::poly::{
    check_content_formula, check_gaussian, content, gaussian_pair_verdict, ideal_mul, parse_poly,
    poly_mul, render_ideal, render_poly, GaussianMode, GaussianScope, IdealArithmetic,
    DEFAULT_CONTENT_EXPONENT_CAP,
};
use semiring_core::{Boolean, ElementSyntax, Naturals, Semiring, Tropical, Verdict};
use serde::Deserialize;

use crate::report::{Report, VerdictRow};
use crate::target::{load, parse_mc_set, Target};
use crate::{Cli, Command, Flags};

const SHIPPED_EXPECTATIONS: &str = include_str!("expectations.toml");

#[derive(Debug, Deserialize)]
struct ExpectationFile {
    #[serde(default)]
    expected: BTreeMap<String, bool>,
}

fn parse_expectations(text: &str) -> anyhow::Result<BTreeMap<String, bool>> {
    Ok(toml::from_str::<ExpectationFile>(text)?.expected)
}

/// The shipped table, overridden entry by entry by `--expectations`.
pub fn expectations(path: Option<&Path>) -> anyhow::Result<Expectations> {
    let mut entries = parse_expectations(SHIPPED_EXPECTATIONS).expect("shipped table parses");
    if let Some(p) = path {
        let text =
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
        entries.extend(parse_expectations(&text).with_context(|| format!("{}", p.display()))?);
    }
    Ok(Expectations { entries })
}

/// Dispatches a closure over the three infinite families.
macro_rules! infinite {
    ($target:expr, |$s:ident| $body:expr, |$t:ident| $table:expr) => {
        match $target {
            Target::Nat => {
                let $s = &Naturals;
                $body
            }
            Target::Bool => {
                let $s = &Boolean;
                $body
            }
            Target::Trop => {
                let $s = &Tropical;
                $body
            }
            Target::Table($t) => $table,
        }
    };
}

pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    let f = &cli.flags;
    let report = match &cli.command {
        Command::Validate { path } => validate(path)?,
        Command::Ideals { target } => ideals(target)?,
        Command::Spec { target } => spec(target, f)?,
        Command::Gcd { target, a, b } => gcd(target, a, b)?,
        Command::Factor { target, x } => factor(target, x)?,
        Command::Content { target, f: p, g } => content_cmd(target, p, g.as_deref())?,
        Command::Gaussian { target, f: p, g } => gaussian(target, p.as_deref(), g.as_deref(), f)?,
        Command::Localize { target, mc_set } => localize_cmd(target, mc_set)?,
        Command::Integral { target, u } => integral(target, u, f)?,
        Command::Gk { target } => gk(target, f)?,
        Command::Nilpotent { target } => nilpotent(target, f)?,
        Command::Enumerate {
            order,
            output,
            dedup,
        } => enumerate(*order, output.as_deref(), *dedup, f)?,
        Command::Check { suite } => check(suite, f)?,
    };
    Ok(report.finish())
}

fn parse<S: ElementSyntax>(s: &S, text: &str) -> anyhow::Result<S::Elem> {
    s.parse_element(text.trim())
        .ok_or_else(|| anyhow!("`{text}` is not an element of {}", s.name()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(path: &Path) -> anyhow::Result<Report> {
    let mut r = Report::new("validate");
    r.input("path", path.display());
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let tables = parse_tables(&text).with_context(|| format!("{}", path.display()))?;
    for (i, t) in tables.iter().enumerate() {
        let name = format!("validate.table{i}.axioms");
        let v = match validate_tables(t.order, &t.add, &t.mul) {
            Ok(s) => Verdict::holds(format!("order {}, {}", s.order(), s.name())),
            Err(TableError::AxiomViolations(vs)) => {
                let first = vs.first().map(ToString::to_string).unwrap_or_default();
                let axioms: BTreeSet<String> = vs.iter().map(|v| v.axiom.to_string()).collect();
                let axioms: Vec<String> = axioms.into_iter().collect();
                Verdict::fails(first, format!("violated: {}", axioms.join(", ")))
            }
            Err(e) => Verdict::fails(e.to_string(), "malformed table"),
        };
        r.verdict(VerdictRow::new(name, &v, true));
    }
    Ok(r)
}

fn table(target: &str) -> anyhow::Result<FiniteSemiring> {
    match load(target)? {
        Target::Table(s) => Ok(s),
        _ => bail!("`{target}` is infinite; pass a table file"),
    }
}

fn ideals(target: &str) -> anyhow::Result<Report> {
    let s = table(target)?;
    let mut r = Report::new("ideals");
    r.input("target", target);
    let lattice = IdealLattice::new(&s);
    for (ideal, fl) in lattice.iter() {
        r.line(format!(
            "ideal {ideal} subtractive={} prime={} maximal={} principal={}",
            yes(fl.subtractive),
            yes(fl.prime),
            yes(fl.maximal),
            yes(fl.principal)
        ));
    }
    r.line(summary_line(&s));
    Ok(r)
}

/// `# ideals=.. primes=.. subtractive=.. principal=..`
fn summary_line(s: &FiniteSemiring) -> String {
    let l = IdealLattice::new(s);
    format!(
        "# ideals={} primes={} subtractive={} principal={}",
        l.ideals.len(),
        l.primes().len(),
        yes(l.all_subtractive()),
        yes(l.all_principal())
    )
}

fn spec(target: &str, f: &Flags) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("spec");
    r.input("target", target).input("bound", f.bound);
    fn registered<S: SpectrumRegistry>(s: &S, bound: u64, r: &mut Report) -> anyhow::Result<()> {
        let reg = s.registered_primes(bound)?;
        for p in &reg.primes {
            r.line(format!("prime {}", render_ideal(s, p)));
        }
        r.line(format!("complete={}", yes(reg.complete)));
        Ok(())
    }
    infinite!(&t, |s| registered(s, f.bound, &mut r)?, |s| {
        let maximal = IdealLattice::new(s).maximal();
        for p in spectrum(s) {
            r.line(format!("prime {p} maximal={}", yes(maximal.contains(&p))));
        }
        r.line("complete=yes");
    });
    Ok(r)
}

fn gcd(target: &str, a: &str, b: &str) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("gcd");
    r.input("target", target).input("a", a).input("b", b);
    fn chain<E>(e: &E, a: &str, b: &str, r: &mut Report) -> anyhow::Result<()>
    where
        E: EuclideanStructure,
        E::Ring: ElementSyntax,
    {
        let s = e.semiring();
        let (a, b) = (parse(s, a)?, parse(s, b)?);
        let ch = euclidean_gcd(e, &a, &b)?;
        r.line(format!("gcd={}", s.render(&ch.gcd)));
        r.line(format!("chain={}", s.render_all(&ch.remainders)));
        r.line(format!("quotients={}", s.render_all(&ch.quotients)));
        Ok(())
    }
    match &t {
        Target::Nat => chain(&NaturalNorm, a, b, &mut r)?,
        Target::Bool => chain(&BooleanNorm, a, b, &mut r)?,
        Target::Trop => chain(&TropicalNorm, a, b, &mut r)?,
        Target::Table(s) => {
            let norm = find_euclidean_norm(s, s.order() as u64)
                .ok_or_else(|| anyhow!("{} admits no Euclidean norm", s.name()))?;
            r.line(format!("norm={}", norm.describe()));
            chain(&norm, a, b, &mut r)?;
        }
    }
    Ok(r)
}

fn factor(target: &str, x: &str) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("factor");
    r.input("target", target).input("x", x);
    fn run<S: Factoring + ElementSyntax>(s: &S, x: &str, r: &mut Report) -> anyhow::Result<()> {
        let x = parse(s, x)?;
        match factor_accp(s, &x) {
            Ok(f) => {
                r.line(format!("unit={}", s.render(&f.unit)));
                r.line(format!("factors={}", s.render_all(&f.factors)));
            }
            Err(e @ FactorError::DepthExceeded { .. }) => r.line(format!("no factorization: {e}")),
            Err(e) => return Err(e.into()),
        }
        Ok(())
    }
    infinite!(&t, |s| run(s, x, &mut r)?, |s| run(s, x, &mut r)?);
    Ok(r)
}

fn content_cmd(target: &str, f: &str, g: Option<&str>) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("content");
    r.input("target", target).input("f", f);
    if let Some(g) = g {
        r.input("g", g);
    }
    fn run<S: IdealArithmetic + ElementSyntax>(
        s: &S,
        f: &str,
        g: Option<&str>,
        r: &mut Report,
    ) -> anyhow::Result<()> {
        let f = parse_poly(s, f)?;
        r.line(format!("c(f)={}", render_ideal(s, &content(s, &f))));
        if let Some(g) = g {
            let g = parse_poly(s, g)?;
            r.line(format!("c(g)={}", render_ideal(s, &content(s, &g))));
            r.line(format!("fg={}", render_poly(s, &poly_mul(s, &f, &g))));
            r.line(format!(
                "c(fg)={}",
                render_ideal(s, &content(s, &poly_mul(s, &f, &g)))
            ));
            let cc = ideal_mul(s, &content(s, &f), &content(s, &g));
            r.line(format!("c(f)c(g)={}", render_ideal(s, &cc)));
            let cf = check_content_formula(s, &f, &g, DEFAULT_CONTENT_EXPONENT_CAP);
            r.line(format!("content_formula {}", cf.verdict));
        }
        Ok(())
    }
    infinite!(&t, |s| run(s, f, g, &mut r)?, |s| run(s, f, g, &mut r)?);
    Ok(r)
}

/// Runs the named suite restricted to one infinite family.
fn family_suite(r: &mut Report, suite: Suite, family: Family, f: &Flags) -> anyhow::Result<()> {
    let scope = Scope {
        family: Some(family),
        ..f.scope()?
    };
    let exp = expectations(f.expectations.as_deref())?;
    for o in run_suite(suite, &scope, &exp)? {
        r.verdict(VerdictRow::from(&o));
    }
    Ok(())
}

fn gaussian(target: &str, p: Option<&str>, q: Option<&str>, f: &Flags) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("gaussian");
    r.input("target", target);
    match (p, q) {
        (Some(p), Some(q)) => {
            r.input("f", p).input("g", q);
            fn pair<S: IdealArithmetic + ElementSyntax>(
                s: &S,
                p: &str,
                q: &str,
                r: &mut Report,
            ) -> anyhow::Result<()> {
                let v = gaussian_pair_verdict(s, &parse_poly(s, p)?, &parse_poly(s, q)?);
                r.line(format!("c(fg)=c(f)c(g) {v}"));
                Ok(())
            }
            infinite!(&t, |s| pair(s, p, q, &mut r)?, |s| pair(s, p, q, &mut r)?);
        }
        (None, None) => {
            r.input("degree_bound", f.degree_bound)
                .input("coeff_bound", f.coeff_bound)
                .input("trials", f.trials)
                .input("seed", f.seed);
            match &t {
                Target::Table(s) => {
                    let scope = GaussianScope {
                        degree_bound: f.degree_bound,
                        coeff_bound: 0,
                        mode: GaussianMode::Exhaustive,
                    };
                    let v = check_gaussian(s, scope);
                    let l = IdealLattice::new(s);
                    if l.all_subtractive() && l.all_principal() {
                        r.verdict(VerdictRow::new("gaussian.finite.subtractive_pis", &v, true));
                    } else {
                        r.line(format!("gaussian {v}"));
                        r.line("not a subtractive principal ideal semiring; no verdict expected");
                    }
                }
                other => family_suite(&mut r, Suite::Gaussian, other.family(), f)?,
            }
        }
        _ => bail!("give both polynomials or neither"),
    }
    Ok(r)
}

fn localize_cmd(target: &str, mc: &str) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("localize");
    r.input("target", target).input("mc_set", mc);
    fn family<S: FractionBase + ElementSyntax>(
        s: &S,
        mc: &str,
        r: &mut Report,
    ) -> anyhow::Result<()> {
        let set = parse_mc_set(mc, |x| s.parse_element(x))?;
        let l = localize(s.clone(), set)?;
        r.line(format!("name={}", l.name()));
        r.line(format!("semifield={}", yes(l.is_semifield())));
        r.line(format!("semidomain={}", yes(l.is_semidomain().holds)));
        Ok(())
    }
    infinite!(&t, |s| family(s, mc, &mut r)?, |s| {
        let set = parse_mc_set(mc, |x| s.parse_element(x))?;
        let l = localize_finite(s, &set)?;
        r.line(format!("order={}", l.semiring.order()));
        for line in format_tables(&l.semiring).lines() {
            r.line(line);
        }
        let map: Vec<String> = l.canonical_map.iter().map(ToString::to_string).collect();
        r.line(format!("canonical_map={}", map.join(" ")));
        for (i, class) in l.classes.iter().enumerate() {
            let members: Vec<String> = class.iter().map(|(a, b)| format!("{a}/{b}")).collect();
            r.line(format!("class {i} = {}", members.join(" ")));
        }
    });
    Ok(r)
}

fn integral(target: &str, u: &str, f: &Flags) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("integral");
    r.input("target", target)
        .input("u", u)
        .input("degree_bound", f.degree_bound)
        .input("coeff_bound", f.coeff_bound);
    fn run<S: FractionBase + ElementSyntax>(
        s: &S,
        u: &str,
        f: &Flags,
        r: &mut Report,
    ) -> anyhow::Result<()> {
        let (n, d) = u.split_once('/').unwrap_or((u, "1"));
        let (n, d) = (parse(s, n)?, parse(s, d)?);
        if s.is_zero(&d) {
            bail!("zero denominator in `{u}`");
        }
        let fr = fraction_semifield(s.clone());
        let x = fr.quotient(n, d);
        match search_integral_witness(s, &x, f.degree_bound, f.coeff_bound) {
            Some(eq) => {
                r.line(format!("integral=yes degree={}", eq.degree()));
                r.line(format!("lhs={}", fr.render_all(&eq.lhs)));
                r.line(format!("rhs={}", fr.render_all(&eq.rhs)));
            }
            None => r.line("integral=no within the bounds"),
        }
        Ok(())
    }
    infinite!(&t, |s| run(s, u, f, &mut r)?, |_s| bail!(
        "integral search needs nat, bool or trop"
    ));
    Ok(r)
}

fn gk(target: &str, f: &Flags) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("gk");
    r.input("target", target).input("bound", f.bound);
    match &t {
        Target::Table(s) => {
            let rep = is_goldman_krull(s, f.bound)?;
            r.line(format!("goldman_krull {}", rep.verdict));
        }
        other => family_suite(&mut r, Suite::Gk, other.family(), f)?,
    }
    Ok(r)
}

fn nilpotent(target: &str, f: &Flags) -> anyhow::Result<Report> {
    let t = load(target)?;
    let mut r = Report::new("nilpotent");
    r.input("target", target);
    match &t {
        Target::Table(s) => {
            r.line(format!("nilpotent_free {}", is_nilpotent_free(s)));
            let v = check_nilpotent_local_global(s);
            r.verdict(VerdictRow::new("nilpotent.finite.local_global", &v, true));
        }
        other => family_suite(&mut r, Suite::Nilpotent, other.family(), f)?,
    }
    Ok(r)
}

fn enumerate(order: usize, out: Option<&Path>, dedup: bool, f: &Flags) -> anyhow::Result<Report> {
    let mut r = Report::new("enumerate");
    r.input("order", order).input("dedup", yes(dedup));
    let mut list = enumerate_semirings(order, DEFAULT_ENUMERATION_CAP, f.workers)?;
    if dedup {
        list = dedup_isomorphic(list).iter().map(canonical_form).collect();
    }
    let mut text = String::new();
    for s in &list {
        text.push_str(&format_tables(s));
        text.push_str(&summary_line(s));
        text.push_str("\n\n");
    }
    match out {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("cannot write {}", p.display()))?;
            r.input("output", p.display());
        }
        None => text.lines().for_each(|l| r.line(l)),
    }
    r.line(format!("count={}", list.len()));
    Ok(r)
}

fn check(suite: &str, f: &Flags) -> anyhow::Result<Report> {
    let s: Suite = suite.parse().map_err(anyhow::Error::msg)?;
    let scope = f.scope()?;
    let exp = expectations(f.expectations.as_deref())?;
    let mut r = Report::new("check");
    r.input("suite", s)
        .input("order", scope.order)
        .input("bound", scope.bound)
        .input("degree_bound", scope.degree_bound)
        .input("coeff_bound", scope.coeff_bound)
        .input("trials", scope.trials)
        .input("seed", scope.seed)
        .input(
            "family",
            scope.family.map_or("all".to_string(), |x| x.to_string()),
        );
    for o in run_suite(s, &scope, &exp)? {
        r.verdict(VerdictRow::from(&o));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_expectations_list_the_known_negatives() {
        let e = expectations(None).unwrap();
        assert!(!e.expected("gaussian.nat.gaussian"));
        assert!(!e.expected("gk.nat.goldman_krull"));
        assert!(e.expected("gk.trop.goldman_krull"));
    }

    #[test]
    fn mc_set_syntax() {
        use semiring_core::finite::McSet;
        let p = |x: &str| x.parse::<u64>().ok();
        assert_eq!(parse_mc_set("units", p).unwrap(), McSet::Units);
        assert_eq!(
            parse_mc_set("powers:2,3", p).unwrap(),
            McSet::Generated(vec![2, 3])
        );
        assert_eq!(
            parse_mc_set("set:{1, 2}", p).unwrap(),
            McSet::Members([1, 2].into_iter().collect())
        );
        assert!(parse_mc_set("powers:x", p).is_err());
        assert!(parse_mc_set("bogus", p).is_err());
    }
}
