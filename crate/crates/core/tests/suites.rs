use semiring_core::harness::{run_suite, Expectations, Scope, Suite};

fn known_failures() -> Expectations {
    Expectations {
        entries: [
            "gaussian.nat.gaussian",
            "gaussian.nat.recorded_pair",
            "gaussian.nat.content_formula",
            "gk.nat.goldman_krull",
        ]
        .into_iter()
        .map(|k| (k.to_string(), false))
        .collect(),
    }
}

#[test]
fn every_suite_at_default_scope() {
    let out = run_suite(Suite::All, &Scope::default(), &known_failures()).unwrap();
    let bad: Vec<_> = out
        .iter()
        .filter(|o| !o.as_expected())
        .map(|o| format!("{} {}", o.name, o.verdict))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}
