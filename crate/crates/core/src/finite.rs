//! Table-defined finite semirings.
//!
//! Element `0` is always index 0 and element `1` is index 1. Ideals, prime
//! ideals, MC-sets and localizations are all computed by exhaustive search
//! over the carrier, which is what makes these semirings the test universe for
//! the theorem checks elsewhere in the crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::semiring::{exhaustive_semidomain, Divisibility, ElementSyntax, Semiring};
use crate::verdict::Verdict;

/// Largest order `enumerate_semirings` accepts unless the caller raises it.
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    Absorption,
    Distributive,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::Absorption => "absorption",
            Axiom::Distributive => "distributive",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.witness.iter().map(|i| i.to_string()).collect();
        write!(f, "{} at ({})", self.axiom, parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("zero equals one: a semiring needs at least two elements")]
    ZeroEqualsOne,
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("axiom violations: {}", render_violations(.0))]
    AxiomViolations(Vec<AxiomViolation>),
}

fn render_violations(v: &[AxiomViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("not an MC-set: {0}")]
    NotMcSet(String),
    #[error("localization collapses to the zero semiring")]
    ZeroSemiring,
    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("element index {0} is outside the carrier")]
    OutOfRange(usize),
}

/// A validated finite commutative semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSemiring {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteSemiring {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn times(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn carrier(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The Boolean semifield {0, 1} with 1 + 1 = 1.
    pub fn boolean() -> Self {
        validate_tables(2, &[vec![0, 1], vec![1, 1]], &[vec![0, 0], vec![0, 1]])
            .expect("boolean tables are valid")
    }

    /// The two-element field viewed as a semiring (1 + 1 = 0).
    pub fn z2() -> Self {
        validate_tables(2, &[vec![0, 1], vec![1, 0]], &[vec![0, 0], vec![0, 1]])
            .expect("z2 tables are valid")
    }

    /// The chain 0 < u < 1 with max as addition and min as multiplication;
    /// `u` is index 2.
    pub fn chain3() -> Self {
        validate_tables(
            3,
            &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]],
            &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
        )
        .expect("chain3 tables are valid")
    }

    pub fn units(&self) -> Vec<usize> {
        self.carrier().filter(|&a| self.is_unit(&a)).collect()
    }

    pub fn nonzero(&self) -> Vec<usize> {
        (1..self.order).collect()
    }
}

impl Semiring for FiniteSemiring {
    type Elem = usize;

    fn name(&self) -> String {
        format!("table{}", self.order)
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        1
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.plus(*a, *b)
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.times(*a, *b)
    }
    fn is_unit(&self, a: &usize) -> bool {
        self.carrier().any(|b| self.times(*a, b) == 1)
    }
    fn elements(&self) -> Option<Vec<usize>> {
        Some(self.carrier().collect())
    }
    fn bounded_elements(&self, _bound: u64) -> Vec<usize> {
        self.carrier().collect()
    }
    fn is_semidomain(&self) -> Verdict {
        exhaustive_semidomain(self, &self.carrier().collect::<Vec<_>>())
    }
    fn render(&self, a: &usize) -> String {
        a.to_string()
    }
}

impl Divisibility for FiniteSemiring {
    fn exact_div(&self, a: &usize, b: &usize) -> Option<usize> {
        self.carrier().find(|&x| self.times(*b, x) == *a)
    }
}

impl ElementSyntax for FiniteSemiring {
    fn parse_element(&self, text: &str) -> Option<usize> {
        text.trim().parse().ok().filter(|&i| i < self.order)
    }
}

/// Validates a pair of Cayley tables against every semiring axiom.
///
/// All violations are reported, one (the first found) per axiom.
pub fn validate_tables(
    order: usize,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
) -> Result<FiniteSemiring, TableError> {
    if order < 2 {
        return Err(TableError::ZeroEqualsOne);
    }
    for (label, table) in [("add", add), ("mul", mul)] {
        if table.len() != order {
            return Err(TableError::Shape(format!(
                "{label} table has {} rows, expected {order}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(TableError::Shape(format!(
                    "{label} row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(TableError::Shape(format!(
                    "{label} row {i} contains index {bad} outside 0..{order}"
                )));
            }
        }
    }
    let a = |x: usize, y: usize| add[x][y];
    let m = |x: usize, y: usize| mul[x][y];
    let mut found: BTreeMap<Axiom, Vec<usize>> = BTreeMap::new();
    let mut note = |axiom: Axiom, witness: Vec<usize>| {
        found.entry(axiom).or_insert(witness);
    };
    for x in 0..order {
        if a(0, x) != x {
            note(Axiom::AddIdentity, vec![0, x]);
        }
        if m(1, x) != x {
            note(Axiom::MulIdentity, vec![1, x]);
        }
        if m(0, x) != 0 {
            note(Axiom::Absorption, vec![0, x]);
        }
        for y in 0..order {
            if a(x, y) != a(y, x) {
                note(Axiom::AddCommutative, vec![x, y]);
            }
            if m(x, y) != m(y, x) {
                note(Axiom::MulCommutative, vec![x, y]);
            }
            for z in 0..order {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    note(Axiom::AddAssociative, vec![x, y, z]);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    note(Axiom::MulAssociative, vec![x, y, z]);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    note(Axiom::Distributive, vec![x, y, z]);
                }
            }
        }
    }
    if !found.is_empty() {
        let violations = found
            .into_iter()
            .map(|(axiom, witness)| AxiomViolation { axiom, witness })
            .collect();
        return Err(TableError::AxiomViolations(violations));
    }
    Ok(FiniteSemiring {
        order,
        add: add.concat(),
        mul: mul.concat(),
    })
}

/// An ideal of a finite semiring, as its member set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet {
    pub members: BTreeSet<usize>,
}

impl IdealSet {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1 && self.members.contains(&0)
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.members.len(), self.members.iter().copied().collect())
    }
}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealFlags {
    pub subtractive: bool,
    pub prime: bool,
    pub maximal: bool,
    pub principal: bool,
    pub proper: bool,
}

pub fn is_ideal(s: &FiniteSemiring, members: &BTreeSet<usize>) -> bool {
    members.contains(&0)
        && members
            .iter()
            .all(|&a| members.iter().all(|&b| members.contains(&s.plus(a, b))))
        && members
            .iter()
            .all(|&a| s.carrier().all(|r| members.contains(&s.times(r, a))))
}

/// The least ideal containing `gens`, by closure to a fixpoint.
pub fn ideal_generated(s: &FiniteSemiring, gens: &[usize]) -> IdealSet {
    let mut members: BTreeSet<usize> = gens.iter().copied().collect();
    members.insert(0);
    loop {
        let mut next = members.clone();
        for &a in &members {
            for r in s.carrier() {
                next.insert(s.times(r, a));
            }
            for &b in &members {
                next.insert(s.plus(a, b));
            }
        }
        if next.len() == members.len() {
            return IdealSet { members };
        }
        members = next;
    }
}

pub fn principal_ideal(s: &FiniteSemiring, a: usize) -> IdealSet {
    IdealSet {
        members: s.carrier().map(|r| s.times(r, a)).collect(),
    }
}

/// All ideals, sorted by size and then by sorted membership.
pub fn enumerate_ideals(s: &FiniteSemiring) -> Vec<IdealSet> {
    let n = s.order();
    assert!(n <= 20, "subset filtering is limited to order 20");
    let mut ideals: Vec<IdealSet> = (0u32..(1 << (n - 1)))
        .map(|mask| {
            let mut members: BTreeSet<usize> =
                (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            members.insert(0);
            members
        })
        .filter(|m| is_ideal(s, m))
        .map(|members| IdealSet { members })
        .collect();
    ideals.sort_by_key(IdealSet::sort_key);
    ideals
}

pub fn is_subtractive(s: &FiniteSemiring, ideal: &IdealSet) -> bool {
    ideal.members.iter().all(|&a| {
        s.carrier()
            .all(|b| !ideal.contains(s.plus(a, b)) || ideal.contains(b))
    })
}

pub fn is_prime_ideal(s: &FiniteSemiring, ideal: &IdealSet) -> bool {
    ideal.len() < s.order()
        && s.carrier().all(|a| {
            s.carrier()
                .all(|b| !ideal.contains(s.times(a, b)) || ideal.contains(a) || ideal.contains(b))
        })
}

/// Some `a` with `(a) = I`.
pub fn principal_generator(s: &FiniteSemiring, ideal: &IdealSet) -> Option<usize> {
    s.carrier().find(|&a| principal_ideal(s, a) == *ideal)
}

/// Every ideal of a finite semiring together with its classification.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub ideals: Vec<IdealSet>,
    pub flags: Vec<IdealFlags>,
}

impl IdealLattice {
    pub fn new(s: &FiniteSemiring) -> Self {
        let ideals = enumerate_ideals(s);
        let flags = ideals
            .iter()
            .map(|i| classify_against(s, i, &ideals))
            .collect();
        IdealLattice { ideals, flags }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IdealSet, &IdealFlags)> {
        self.ideals.iter().zip(self.flags.iter())
    }

    pub fn primes(&self) -> Vec<IdealSet> {
        self.iter()
            .filter(|(_, f)| f.prime)
            .map(|(i, _)| i.clone())
            .collect()
    }

    pub fn maximal(&self) -> Vec<IdealSet> {
        self.iter()
            .filter(|(_, f)| f.maximal)
            .map(|(i, _)| i.clone())
            .collect()
    }

    pub fn all_subtractive(&self) -> bool {
        self.flags.iter().all(|f| f.subtractive)
    }

    pub fn all_principal(&self) -> bool {
        self.flags.iter().all(|f| f.principal)
    }
}

fn classify_against(s: &FiniteSemiring, ideal: &IdealSet, all: &[IdealSet]) -> IdealFlags {
    let proper = ideal.len() < s.order();
    let maximal = proper
        && !all.iter().any(|j| {
            j.len() > ideal.len() && j.len() < s.order() && ideal.members.is_subset(&j.members)
        });
    IdealFlags {
        subtractive: is_subtractive(s, ideal),
        prime: is_prime_ideal(s, ideal),
        maximal,
        principal: principal_generator(s, ideal).is_some(),
        proper,
    }
}

pub fn classify_ideal(s: &FiniteSemiring, ideal: &IdealSet) -> IdealFlags {
    classify_against(s, ideal, &enumerate_ideals(s))
}

/// Spec(S): every prime ideal.
pub fn spectrum(s: &FiniteSemiring) -> Vec<IdealSet> {
    enumerate_ideals(s)
        .into_iter()
        .filter(|i| is_prime_ideal(s, i))
        .collect()
}

/// A multiplicatively closed set, given by members or by generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum McSet<E> {
    /// The unit group.
    Units,
    /// Every nonzero element.
    Nonzero,
    /// The multiplicative monoid generated by the listed elements.
    Generated(Vec<E>),
    /// An explicit member list (finite carriers).
    Members(BTreeSet<E>),
}

impl<E: fmt::Display> fmt::Display for McSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McSet::Units => f.write_str("units"),
            McSet::Nonzero => f.write_str("nonzero"),
            McSet::Generated(g) => {
                let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                write!(f, "powers:{}", parts.join(","))
            }
            McSet::Members(m) => {
                let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                write!(f, "set:{{{}}}", parts.join(","))
            }
        }
    }
}

pub fn is_mc_set(s: &FiniteSemiring, w: &BTreeSet<usize>) -> bool {
    w.contains(&1)
        && w.iter()
            .all(|&a| w.iter().all(|&b| w.contains(&s.times(a, b))))
}

/// Resolves an MC-set description to its members, verifying closure.
pub fn resolve_mc_set(
    s: &FiniteSemiring,
    t: &McSet<usize>,
) -> Result<BTreeSet<usize>, FiniteError> {
    let members: BTreeSet<usize> = match t {
        McSet::Units => s.units().into_iter().collect(),
        McSet::Nonzero => s.nonzero().into_iter().collect(),
        McSet::Members(m) => m.clone(),
        McSet::Generated(gens) => {
            let mut m: BTreeSet<usize> = BTreeSet::from([1]);
            let mut frontier: Vec<usize> = vec![1];
            while let Some(x) = frontier.pop() {
                for &g in gens {
                    if g >= s.order() {
                        return Err(FiniteError::OutOfRange(g));
                    }
                    let y = s.times(x, g);
                    if m.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            m
        }
    };
    if let Some(&bad) = members.iter().find(|&&x| x >= s.order()) {
        return Err(FiniteError::OutOfRange(bad));
    }
    if !members.contains(&1) {
        return Err(FiniteError::NotMcSet("does not contain 1".into()));
    }
    for &a in &members {
        for &b in &members {
            let p = s.times(a, b);
            if !members.contains(&p) {
                return Err(FiniteError::NotMcSet(format!(
                    "{a}*{b} = {p} is not a member"
                )));
            }
        }
    }
    Ok(members)
}

/// Every MC-set of `s`, in increasing bitmask order.
pub fn enumerate_mc_sets(s: &FiniteSemiring) -> Vec<BTreeSet<usize>> {
    let n = s.order();
    let others: Vec<usize> = (0..n).filter(|&i| i != 1).collect();
    (0u32..(1 << others.len()))
        .map(|mask| {
            let mut w: BTreeSet<usize> = others
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &x)| x)
                .collect();
            w.insert(1);
            w
        })
        .filter(|w| is_mc_set(s, w))
        .collect()
}

/// `ab ∈ W` forces `a, b ∈ W`.
pub fn is_saturated(s: &FiniteSemiring, w: &BTreeSet<usize>) -> bool {
    s.carrier().all(|a| {
        s.carrier()
            .all(|b| !w.contains(&s.times(a, b)) || (w.contains(&a) && w.contains(&b)))
    })
}

/// Outcome of the saturated-complement check, with both sides exposed.
#[derive(Debug, Clone)]
pub struct SaturationReport {
    pub saturated: bool,
    pub covered: bool,
    pub covering_primes: Vec<IdealSet>,
    pub uncovered: Option<usize>,
    pub verdict: Verdict,
}

/// W is saturated iff its complement is the union of the primes disjoint from W.
pub fn check_saturated_complement(
    s: &FiniteSemiring,
    w: &McSet<usize>,
) -> Result<SaturationReport, FiniteError> {
    let w = resolve_mc_set(s, w)?;
    Ok(saturation_report(s, &w, &spectrum(s)))
}

pub fn saturation_report(
    s: &FiniteSemiring,
    w: &BTreeSet<usize>,
    primes: &[IdealSet],
) -> SaturationReport {
    let saturated = is_saturated(s, w);
    let covering_primes: Vec<IdealSet> = primes
        .iter()
        .filter(|p| p.members.is_disjoint(w))
        .cloned()
        .collect();
    let union: BTreeSet<usize> = covering_primes
        .iter()
        .flat_map(|p| p.members.iter().copied())
        .collect();
    let uncovered = s.carrier().find(|x| !w.contains(x) && !union.contains(x));
    let covered = uncovered.is_none();
    let primes_text = covering_primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let w_text = IdealSet { members: w.clone() }.to_string();
    let detail = match uncovered {
        None => format!("complement covered by [{primes_text}]"),
        Some(x) => format!("element {x} of the complement lies in no disjoint prime"),
    };
    let verdict = if saturated == covered {
        Verdict::holds_with(
            format!("W={w_text} saturated={saturated} primes=[{primes_text}]"),
            detail,
        )
    } else {
        Verdict::fails(
            format!("W={w_text} saturated={saturated} covered={covered}"),
            detail,
        )
    };
    SaturationReport {
        saturated,
        covered,
        covering_primes,
        uncovered,
        verdict,
    }
}

/// Some nonzero `s` with `s² = 0`.
pub fn nilpotent_witness(s: &FiniteSemiring) -> Option<usize> {
    (1..s.order()).find(|&x| s.times(x, x) == 0)
}

// ---------------------------------------------------------------------------
// Enumeration

fn partial_associative(table: &[Option<usize>], n: usize) -> bool {
    let at = |x: usize, y: usize| table[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = at(x, y) else { continue };
            for z in 0..n {
                let (Some(l), Some(yz)) = (at(xy, z), at(y, z)) else {
                    continue;
                };
                if let Some(r) = at(x, yz) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every commutative associative table on `0..n` with the given fixed rows,
/// by backtracking over the free upper-triangle entries in lexicographic order.
fn monoid_tables(n: usize, fixed: impl Fn(usize, usize) -> Option<usize>) -> Vec<Vec<usize>> {
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    let mut free = Vec::new();
    for i in 0..n {
        for j in i..n {
            match fixed(i, j) {
                Some(v) => {
                    table[i * n + j] = Some(v);
                    table[j * n + i] = Some(v);
                }
                None => free.push((i, j)),
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut table, &free, 0, n, &mut out);
    out
}

fn fill(
    table: &mut Vec<Option<usize>>,
    free: &[(usize, usize)],
    k: usize,
    n: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if k == free.len() {
        out.push(table.iter().map(|x| x.expect("complete table")).collect());
        return;
    }
    let (i, j) = free[k];
    for v in 0..n {
        table[i * n + j] = Some(v);
        table[j * n + i] = Some(v);
        if partial_associative(table, n) {
            fill(table, free, k + 1, n, out);
        }
    }
    table[i * n + j] = None;
    table[j * n + i] = None;
}

fn distributive(add: &[usize], mul: &[usize], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = mul[x * n + add[y * n + z]];
                let rhs = add[mul[x * n + y] * n + mul[x * n + z]];
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Every semiring of the given order with the fixed labeling of 0 and 1, in
/// deterministic order: additive tables lexicographically, then multiplicative
/// tables lexicographically. Not deduplicated by isomorphism.
///
/// `workers = 0` uses the global thread pool.
pub fn enumerate_semirings(
    order: usize,
    cap: usize,
    workers: usize,
) -> Result<Vec<FiniteSemiring>, FiniteError> {
    if order > cap {
        return Err(FiniteError::CapExceeded { order, cap });
    }
    if order < 2 {
        return Ok(Vec::new());
    }
    let n = order;
    let adds = monoid_tables(n, |i, j| (i == 0).then_some(j));
    let muls = monoid_tables(n, |i, j| match i {
        0 => Some(0),
        1 => Some(j),
        _ => None,
    });
    let job = || -> Vec<FiniteSemiring> {
        adds.par_iter()
            .map(|add| {
                muls.iter()
                    .filter(|mul| distributive(add, mul, n))
                    .map(|mul| FiniteSemiring {
                        order: n,
                        add: add.clone(),
                        mul: mul.clone(),
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    if workers == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    Ok(pool.install(job))
}

/// Every semiring of order `2..=max_order`.
pub fn enumerate_up_to(
    max_order: usize,
    workers: usize,
) -> Result<Vec<FiniteSemiring>, FiniteError> {
    let mut all = Vec::new();
    for n in 2..=max_order {
        all.extend(enumerate_semirings(
            n,
            max_order.max(DEFAULT_ENUMERATION_CAP),
            workers,
        )?);
    }
    Ok(all)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Least relabeling of the tables over permutations fixing 0 and 1.
pub fn canonical_form(s: &FiniteSemiring) -> FiniteSemiring {
    let n = s.order();
    let tail: Vec<usize> = (2..n).collect();
    permutations(&tail)
        .into_iter()
        .map(|p| {
            let mut perm = vec![0, 1];
            perm.extend(p);
            relabel(s, &perm)
        })
        .min()
        .expect("at least the identity permutation")
}

fn relabel(s: &FiniteSemiring, perm: &[usize]) -> FiniteSemiring {
    let n = s.order();
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            add[perm[x] * n + perm[y]] = perm[s.plus(x, y)];
            mul[perm[x] * n + perm[y]] = perm[s.times(x, y)];
        }
    }
    FiniteSemiring { order: n, add, mul }
}

/// Keeps the first member of each isomorphism class, preserving order.
pub fn dedup_isomorphic(list: Vec<FiniteSemiring>) -> Vec<FiniteSemiring> {
    let mut seen = BTreeSet::new();
    list.into_iter()
        .filter(|s| seen.insert(canonical_form(s)))
        .collect()
}

// ---------------------------------------------------------------------------
// Localization

/// A finite localization `S_T` and its canonical map `a ↦ a/1`.
#[derive(Debug, Clone)]
pub struct Localization {
    pub semiring: FiniteSemiring,
    pub canonical_map: Vec<usize>,
    /// Members of each class as `(numerator, denominator)` pairs.
    pub classes: Vec<Vec<(usize, usize)>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// `(S × T)/∼` with `(a,s) ∼ (b,t)` iff `u·a·t = u·b·s` for some `u ∈ T`.
pub fn localize_finite(s: &FiniteSemiring, t: &McSet<usize>) -> Result<Localization, FiniteError> {
    let t = resolve_mc_set(s, t)?;
    if t.contains(&0) {
        return Err(FiniteError::ZeroSemiring);
    }
    let dens: Vec<usize> = t.iter().copied().collect();
    let pairs: Vec<(usize, usize)> = s
        .carrier()
        .flat_map(|a| dens.iter().map(move |&d| (a, d)))
        .collect();
    let index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let equivalent = |(a, x): (usize, usize), (b, y): (usize, usize)| {
        dens.iter()
            .any(|&u| s.times(u, s.times(a, y)) == s.times(u, s.times(b, x)))
    };
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            if equivalent(pairs[i], pairs[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let zero_root = find(&mut parent, index[&(0, 1)]);
    let one_root = find(&mut parent, index[&(1, 1)]);
    if zero_root == one_root {
        return Err(FiniteError::ZeroSemiring);
    }
    // Classes ordered: zero, one, then by least member pair.
    let mut order_of_roots = vec![zero_root, one_root];
    for i in 0..pairs.len() {
        let r = find(&mut parent, i);
        if !order_of_roots.contains(&r) {
            order_of_roots.push(r);
        }
    }
    let class_of: Vec<usize> = (0..pairs.len())
        .map(|i| {
            let r = find(&mut parent, i);
            order_of_roots.iter().position(|&x| x == r).expect("root")
        })
        .collect();
    let m = order_of_roots.len();
    let mut classes = vec![Vec::new(); m];
    for (i, &p) in pairs.iter().enumerate() {
        classes[class_of[i]].push(p);
    }
    let class = |p: (usize, usize)| class_of[index[&p]];
    let mut add = vec![vec![0; m]; m];
    let mut mul = vec![vec![0; m]; m];
    for x in 0..m {
        for y in 0..m {
            let (a, sa) = classes[x][0];
            let (b, sb) = classes[y][0];
            let den = s.times(sa, sb);
            add[x][y] = class((s.plus(s.times(a, sb), s.times(b, sa)), den));
            mul[x][y] = class((s.times(a, b), den));
        }
    }
    let semiring = validate_tables(m, &add, &mul)
        .expect("localization of a valid semiring satisfies the axioms");
    let canonical_map = s.carrier().map(|a| class((a, 1))).collect();
    Ok(Localization {
        semiring,
        canonical_map,
        classes,
    })
}

/// True iff `map` is a bijection from `s` onto `target` respecting both tables.
pub fn is_isomorphism(s: &FiniteSemiring, target: &FiniteSemiring, map: &[usize]) -> bool {
    if s.order() != target.order() || map.len() != s.order() {
        return false;
    }
    let image: BTreeSet<usize> = map.iter().copied().collect();
    image.len() == s.order()
        && s.carrier().all(|x| {
            s.carrier().all(|y| {
                map[s.plus(x, y)] == target.plus(map[x], map[y])
                    && map[s.times(x, y)] == target.times(map[x], map[y])
            })
        })
}

// ---------------------------------------------------------------------------
// Table file format

/// Tables as read from a file, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Parses one or more table documents:
///
/// ```text
/// order 2
/// add
/// 0 1
/// 1 1
/// mul
/// 0 0
/// 0 1
/// ```
///
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_tables(text: &str) -> Result<Vec<RawTables>, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect();
    let mut docs = Vec::new();
    let mut pos = 0;
    let last_line = text.lines().count().max(1);
    while pos < lines.len() {
        let (ln, line) = lines[pos];
        let mut words = line.split_whitespace();
        if words.next() != Some("order") {
            return Err(parse_error(ln, column_of(line, 0), "expected `order <n>`"));
        }
        let order: usize = match words.next() {
            Some(w) => w
                .parse()
                .map_err(|_| parse_error(ln, column_of(line, 1), format!("bad order `{w}`")))?,
            None => return Err(parse_error(ln, line.len() + 1, "missing order value")),
        };
        pos += 1;
        let mut tables = Vec::new();
        for label in ["add", "mul"] {
            let Some(&(ln, line)) = lines.get(pos) else {
                return Err(parse_error(
                    last_line,
                    1,
                    format!("missing `{label}` section"),
                ));
            };
            if line.trim() != label {
                return Err(parse_error(
                    ln,
                    column_of(line, 0),
                    format!("expected `{label}`"),
                ));
            }
            pos += 1;
            let mut rows = Vec::with_capacity(order);
            for r in 0..order {
                let Some(&(ln, line)) = lines.get(pos) else {
                    return Err(parse_error(
                        last_line,
                        1,
                        format!("{label} table ends after {r} of {order} rows"),
                    ));
                };
                if line.trim() == "mul" || line.trim_start().starts_with("order") {
                    return Err(parse_error(
                        ln,
                        column_of(line, 0),
                        format!("{label} table has {r} rows, expected {order}"),
                    ));
                }
                let mut row = Vec::with_capacity(order);
                for (k, w) in line.split_whitespace().enumerate() {
                    let v: usize = w.parse().map_err(|_| {
                        parse_error(ln, column_of(line, k), format!("bad index `{w}`"))
                    })?;
                    if v >= order {
                        return Err(parse_error(
                            ln,
                            column_of(line, k),
                            format!("index {v} outside 0..{order}"),
                        ));
                    }
                    row.push(v);
                }
                if row.len() != order {
                    return Err(parse_error(
                        ln,
                        line.len() + 1,
                        format!("row has {} entries, expected {order}", row.len()),
                    ));
                }
                rows.push(row);
                pos += 1;
            }
            tables.push(rows);
        }
        let mul = tables.pop().expect("mul");
        let add = tables.pop().expect("add");
        docs.push(RawTables { order, add, mul });
    }
    if docs.is_empty() {
        return Err(parse_error(1, 1, "no table document found"));
    }
    Ok(docs)
}

fn column_of(line: &str, word: usize) -> usize {
    let mut in_word = false;
    let mut seen = 0;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            in_word = false;
        } else if !in_word {
            in_word = true;
            if seen == word {
                return i + 1;
            }
            seen += 1;
        }
    }
    line.len() + 1
}

pub fn format_tables(s: &FiniteSemiring) -> String {
    let mut out = format!("order {}\n", s.order());
    for (label, rows) in [("add", s.add_rows()), ("mul", s.mul_rows())] {
        out.push_str(label);
        out.push('\n');
        for row in rows {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
    }
    out
}

impl RawTables {
    pub fn validate(&self) -> Result<FiniteSemiring, TableError> {
        validate_tables(self.order, &self.add, &self.mul)
    }
}
