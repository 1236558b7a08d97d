use indpoly::classify::{admissibility_certificate, analyze_tree};
use indpoly::construct::{
    impossibility_report, recipe_reproduces, tree_of_degree, tree_on_n_vertices, ConstructError,
    ImpossibilityKind, UNREPRESENTABLE_ORDERS,
};
use indpoly::tree::{bridge, Builtin};

#[test]
fn order_sweep() {
    for n in 1..=60 {
        match tree_on_n_vertices(n) {
            Ok(r) => {
                assert!(!UNREPRESENTABLE_ORDERS.contains(&n));
                assert_eq!(r.tree.order(), n);
                let record = analyze_tree(&r.tree);
                assert!(record.symmetric && record.unimodal == Some(true), "n = {n}");
                assert!(recipe_reproduces(&r), "n = {n}");
            }
            Err(ConstructError::Unrepresentable(report)) => {
                assert!(UNREPRESENTABLE_ORDERS.contains(&n));
                assert_eq!(report.witnesses, 0);
            }
            Err(e) => panic!("n = {n}: {e}"),
        }
    }
}

#[test]
fn degree_sweep() {
    for d in 1..=60 {
        match tree_of_degree(d) {
            Ok(r) => {
                let record = analyze_tree(&r.tree);
                assert_eq!(record.poly.degree(), Ok(d));
                assert!(record.symmetric && record.unimodal == Some(true), "d = {d}");
                assert!(recipe_reproduces(&r), "d = {d}");
            }
            Err(ConstructError::Unrepresentable(_)) => assert_eq!(d, 3),
            Err(e) => panic!("d = {d}: {e}"),
        }
    }
}

#[test]
fn chains_stay_admissible() {
    let r3 = Builtin::R3.rooted();
    for base in [Builtin::R3, Builtin::R19, Builtin::R20] {
        let mut t = base.rooted();
        for _ in 0..6 {
            t = bridge(&r3, &t);
            assert!(admissibility_certificate(&t).is_ok(), "{base}");
        }
    }
}

#[test]
fn impossibility_reports() {
    let expected_totals = [(2, 1), (4, 2), (5, 3), (7, 11), (10, 106)];
    for (n, total) in expected_totals {
        let report = impossibility_report(ImpossibilityKind::Order(n)).unwrap();
        assert_eq!(report.trees_scanned, total);
        assert!(report.confirmed());
    }
    let three = impossibility_report(ImpossibilityKind::Degree(3)).unwrap();
    assert!(three.confirmed());
    assert_eq!(three.quadratic_checked_to, Some(1_000_000));
}

#[test]
fn zero_requests_are_invalid() {
    assert!(matches!(
        tree_on_n_vertices(0),
        Err(ConstructError::InvalidRequest(_))
    ));
    assert!(matches!(
        tree_of_degree(0),
        Err(ConstructError::InvalidRequest(_))
    ));
}
