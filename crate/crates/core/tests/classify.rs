use indpoly::classify::{
    admissibility_certificate, analyze_tree, scan_order, scan_order_with_records,
    summarize_records, TreeRecord,
};
use indpoly::enumerate::free_trees_stream;
use indpoly::tree::{bridge, vertex_orbits, RootedTree};

#[test]
fn orbit_members_share_verdicts() {
    for n in 1..=10 {
        for t in free_trees_stream(n) {
            for orbit in vertex_orbits(&t) {
                let verdicts: Vec<_> = orbit
                    .members
                    .iter()
                    .map(|&v| admissibility_certificate(&RootedTree::new(t.clone(), v).unwrap()))
                    .collect();
                assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{}", t.to_text());
            }
        }
    }
}

#[test]
fn orbit_sizes_count_admissible_vertices() {
    for n in 1..=10 {
        for t in free_trees_stream(n) {
            let record = analyze_tree(&t);
            let admissible = (0..n)
                .filter(|&v| {
                    admissibility_certificate(&RootedTree::new(t.clone(), v).unwrap()).is_ok()
                })
                .count();
            assert_eq!(record.admissible_root_count(), admissible);
        }
    }
}

#[test]
fn admissible_trees_are_symmetric_and_unimodal() {
    for n in 1..=15 {
        let mut records = Vec::new();
        scan_order_with_records(n, 2, &mut |r| records.push(r));
        for r in records.iter().filter(|r| r.is_gamma_admissible()) {
            assert!(r.symmetric && r.unimodal == Some(true), "{:?}", r.code);
        }
    }
}

#[test]
fn every_symmetric_tree_is_unimodal_through_twenty() {
    for n in 1..=20 {
        let mut records: Vec<TreeRecord> = Vec::new();
        indpoly::classify::scan_order_symmetric_records(n, 2, &mut |r| records.push(r));
        assert!(records.iter().all(|r| r.unimodal == Some(true)), "n = {n}");
    }
}

#[test]
fn worker_count_does_not_change_the_summary() {
    for n in [12, 15, 16] {
        let one = scan_order(n, 1);
        for jobs in [2, 3, 8] {
            assert_eq!(scan_order(n, jobs), one, "n = {n}, jobs = {jobs}");
        }
    }
}

#[test]
fn record_stream_matches_summary() {
    let mut records = Vec::new();
    let summary = scan_order_with_records(12, 3, &mut |r| records.push(r));
    assert_eq!(records.len() as u64, summary.total_trees);
    assert_eq!(
        summarize_records(12, summary.total_trees, &records),
        summary
    );
}

#[test]
fn single_worker_records_follow_enumeration_order() {
    let mut codes = Vec::new();
    scan_order_with_records(9, 1, &mut |r| codes.push(r.code));
    let expected: Vec<_> = free_trees_stream(9)
        .map(|t| indpoly::tree::free_canonical(&t).code)
        .collect();
    assert_eq!(codes, expected);
}

#[test]
fn bridging_preserves_admissibility() {
    let mut roots = Vec::new();
    for n in 1..=12 {
        for t in free_trees_stream(n) {
            for o in analyze_tree(&t).admissible_orbits {
                roots.push((RootedTree::new(t.clone(), o.rep).unwrap(), o.certificate()));
            }
        }
    }
    for (l, lc) in roots.iter().filter(|(_, c)| c.is_bridge_ready()) {
        for (r, rc) in &roots {
            let w = bridge(l, r);
            assert_eq!(admissibility_certificate(&w).unwrap(), lc.bridge(rc));
        }
    }
}
