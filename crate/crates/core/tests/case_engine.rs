use cprank_core::case_engine::{
    diagnostics, lemma_h_plus_0, load_table1, run_case, verify_certificate, verify_theorem_main, Strategy, Witness,
    TABLE1_ROWS,
};
use cprank_core::cp_decomp::max_cpr_order;
use serde_json::Value;

#[test]
fn every_case_certifies_and_reverifies() {
    let table = load_table1().unwrap();
    assert_eq!(table.len(), TABLE1_ROWS);
    for entry in &table {
        let cert = run_case(entry).unwrap_or_else(|e| panic!("case {}: {e}", entry.id));
        assert_eq!(cert.case_id, entry.id);
        assert_eq!(cert.strategy, entry.strategy);
        assert!(cert.bound <= 9, "case {} bound {}", entry.id, cert.bound);
        assert!(!cert.uses_open_order, "case {} relies on an open p_m", entry.id);
        verify_certificate(entry, &cert).unwrap();
    }
}

#[test]
fn diagnostics_never_repeat_the_assigned_strategy() {
    let table = load_table1().unwrap();
    for entry in &table {
        for d in diagnostics(entry) {
            assert!(d.bound.is_some() != d.reason.is_some(), "case {}: {d:?}", entry.id);
            if d.strategy == entry.strategy {
                assert_ne!(d.pivot, entry.pivot, "case {}", entry.id);
            }
        }
    }
}

#[test]
fn certificates_round_trip_as_json() {
    let report = verify_theorem_main().unwrap();
    for case in &report.cases {
        let value = serde_json::to_value(&case.certificate).unwrap();
        let reparsed: Value = serde_json::from_str(&serde_json::to_string_pretty(&value).unwrap()).unwrap();
        assert_eq!(reparsed, value);
        assert_eq!(value["strategy"], Value::String(case.certificate.strategy.tag().into()));
    }
}

#[test]
fn witness_kinds_follow_strategy() {
    let table = load_table1().unwrap();
    for entry in &table {
        let cert = run_case(entry).unwrap();
        let ok = matches!(
            (entry.strategy, &cert.witness),
            (Strategy::Dd, Witness::PairUnions { .. })
                | (Strategy::LowDegree, Witness::LowDegree { .. })
                | (Strategy::OmegaSplit, Witness::OmegaSplit { .. })
                | (Strategy::Tf, Witness::TriangleFree { .. })
                | (Strategy::PruneHorn, Witness::Horn(_))
                | (Strategy::PruneForest, Witness::Forest { .. })
                | (Strategy::PruneCube, Witness::Cube { .. })
        );
        assert!(ok, "case {}: {} with {:?}", entry.id, entry.strategy, cert.witness);
    }
}

#[test]
fn zero_diagonal_lemma_and_scope() {
    let h = lemma_h_plus_0();
    assert_eq!((h.horn_bound, h.hildebrand_bound), (7, 6));
    assert!(max_cpr_order(6).1);
    let report = verify_theorem_main().unwrap();
    assert_eq!(report.coverage.zero_diagonal_bound, 7);
    assert_eq!(report.coverage.positive_diagonal_bound, 9);
    assert_eq!(report.coverage.uncovered, "matrices with some zero entries");
    assert!(report.render().contains("max bound 9 over 44 cases"));
}
