use num_bigint::BigUint;
use proptest::prelude::*;
use semiring_core::finite::{
    enumerate_up_to, is_isomorphism, localize_finite, FiniteSemiring, McSet,
};
use semiring_core::semiring::{check_laws_exhaustive, MinPlus};
use semiring_core::{nat, Boolean, Naturals, Semiring, Tropical};

fn trop() -> impl Strategy<Value = MinPlus> {
    prop_oneof![
        9 => (0u64..1_000).prop_map(MinPlus::Finite),
        1 => Just(MinPlus::Infinity),
    ]
}

fn laws<S: Semiring>(s: &S, a: &S::Elem, b: &S::Elem, c: &S::Elem) -> Result<(), TestCaseError>
where
    S::Elem: std::fmt::Debug + PartialEq,
{
    prop_assert_eq!(s.add(a, &s.add(b, c)), s.add(&s.add(a, b), c));
    prop_assert_eq!(s.mul(a, &s.mul(b, c)), s.mul(&s.mul(a, b), c));
    prop_assert_eq!(s.add(a, b), s.add(b, a));
    prop_assert_eq!(s.mul(a, b), s.mul(b, a));
    prop_assert_eq!(s.mul(a, &s.add(b, c)), s.add(&s.mul(a, b), &s.mul(a, c)));
    prop_assert_eq!(s.add(a, &s.zero()), a.clone());
    prop_assert_eq!(s.mul(a, &s.one()), a.clone());
    prop_assert!(s.is_zero(&s.mul(a, &s.zero())));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn naturals_satisfy_laws(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        laws(&Naturals, &nat(a), &nat(b), &nat(c))?;
    }

    #[test]
    fn tropical_satisfies_laws(a in trop(), b in trop(), c in trop()) {
        laws(&Tropical, &a, &b, &c)?;
    }

    #[test]
    fn boolean_satisfies_laws(a: bool, b: bool, c: bool) {
        laws(&Boolean, &a, &b, &c)?;
    }

    #[test]
    fn naturals_are_cancellative(a in 1u64..10_000, b in 0u64..10_000, c in 0u64..10_000) {
        let s = Naturals;
        prop_assert_eq!(s.mul(&nat(a), &nat(b)) == s.mul(&nat(a), &nat(c)), b == c);
    }
}

#[test]
fn naturals_do_not_wrap() {
    let big = nat(u64::MAX);
    assert_eq!(
        Naturals.mul(&big, &big),
        BigUint::from(u64::MAX) * BigUint::from(u64::MAX)
    );
}

fn semidomain_oracle(s: &FiniteSemiring) -> bool {
    let n = s.order();
    (1..n).all(|a| (0..n).all(|b| (0..n).all(|c| s.times(a, b) != s.times(a, c) || b == c)))
}

#[test]
fn enumerated_tables_pass_laws_and_semidomain_oracle() {
    for s in enumerate_up_to(4, 0).unwrap() {
        let elems: Vec<usize> = s.carrier().collect();
        let v = check_laws_exhaustive(&s, &elems);
        assert!(v.holds, "{} {v}", s.name());
        assert_eq!(
            s.is_semidomain().holds,
            semidomain_oracle(&s),
            "{}",
            s.name()
        );
    }
}

#[test]
fn localization_at_units_is_an_isomorphism() {
    for s in enumerate_up_to(3, 0).unwrap() {
        let l = localize_finite(&s, &McSet::Units).unwrap();
        assert!(
            is_isomorphism(&s, &l.semiring, &l.canonical_map),
            "{}",
            s.name()
        );
    }
}
