use tlfc::verify::{run_all, select, SUITES};

fn suite(name: &str) {
    let selected = select(name);
    assert!(!selected.is_empty());
    for outcome in run_all(&selected, usize::MAX) {
        assert!(
            outcome.passed(),
            "{}: {}",
            outcome.name,
            outcome.counterexample.unwrap()
        );
        assert!(outcome.checks > 0, "{} checked nothing", outcome.name);
    }
}

#[test]
fn fc_core_suite() {
    suite("fc_core");
}

#[test]
fn counting_suite() {
    suite("counting");
}

#[test]
fn diagram_suite() {
    suite("diagram");
}

#[test]
fn bijection_suite() {
    suite("bijection");
}

#[test]
fn tl_algebra_suite() {
    suite("tl_algebra");
}

#[test]
fn lattice_suite() {
    suite("lattice");
}

#[test]
fn max_n_caps_every_property() {
    let all: Vec<_> = SUITES.iter().flat_map(|s| select(s)).collect();
    for outcome in run_all(&all, 2) {
        assert!(outcome.bound <= 2);
        assert!(outcome.passed());
    }
}
