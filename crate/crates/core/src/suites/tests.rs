use super::*;

fn quick() -> RunParams {
    RunParams { truncation: 3, seed: 7, window: Window::default(), samples: 8 }
}

#[test]
fn names_parse() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    for b in BuiltIn::ALL {
        assert_eq!(b.name().parse::<BuiltIn>().unwrap(), b);
    }
    assert_eq!("ut".parse::<BuiltIn>().unwrap(), BuiltIn::UpperTriangular);
    assert!(matches!("cobra".parse::<Suite>(), Err(RunError::UnknownSuite(_))));
    assert!(matches!("z3".parse::<BuiltIn>(), Err(RunError::UnknownAlgebra(_))));
}

#[test]
fn check_streams_depend_on_seed_and_id() {
    use rand::Rng;
    let p = quick();
    let draw = |p: &RunParams, id: &str| p.rng(id).gen::<u64>();
    assert_eq!(draw(&p, "a"), draw(&p, "a"));
    assert_ne!(draw(&p, "a"), draw(&p, "b"));
    assert_ne!(draw(&p, "a"), draw(&RunParams { seed: 8, ..p }, "a"));
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let p = quick();
    let first = BuiltIn::Sweedler.run(Suite::Cobar, &p);
    assert!(first.passed(), "{}", first.render_text());
    let ids: Vec<&str> = first.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let again = BuiltIn::Sweedler.run(Suite::Cobar, &p);
    assert_eq!(first.render_text(), again.render_text());
    assert_eq!(first.render_kv(), again.render_kv());
    // a check sees the same inputs inside a larger run
    let all = BuiltIn::Sweedler.run(Suite::All, &p);
    for c in &first.checks {
        assert_eq!(all.get(&c.id), Some(c));
    }
}

#[test]
fn ext_example_only_on_upper_triangular() {
    let p = quick();
    let ut = BuiltIn::UpperTriangular.run(Suite::ExtExample, &p);
    assert_eq!(ut.checks.len(), 4);
    assert!(ut.checks.iter().all(|c| c.status == Status::Pass), "{}", ut.render_text());
    let z2 = BuiltIn::Z2.run(Suite::ExtExample, &p);
    assert_eq!(z2.checks.len(), 4);
    assert!(z2.checks.iter().all(|c| c.status == Status::Skip));
    assert!(z2.passed());
}

#[test]
fn failures_are_reported_with_witnesses() {
    use crate::graded::{TableBialgebra, TableLabel};
    use crate::linear::{int, SparseVector};
    let z2 = TableBialgebra::tabulate(&FiniteGroupFunctionHopf::cyclic(2)).unwrap();
    let e1 = TableLabel::new("e1");
    let broken = z2.with_coproduct(&e1, SparseVector::single(vec![TableLabel::new("e0"), e1.clone()], int(1)));
    let report = run_suite(&broken, Suite::Axioms, &quick());
    assert!(!report.passed());
    let c = report.get("axioms.coassociativity").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(!c.detail.is_empty());
    assert!(report.render_kv().contains("summary.result=fail"));
    assert!(report.render_text().contains("fail  axioms.coassociativity"));
}
