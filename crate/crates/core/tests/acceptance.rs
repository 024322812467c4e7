//! Acceptance suite: one line per criterion, each run at its stated tolerance.
//!
//! Criteria that are known not to reproduce are listed in `KNOWN_FAILURES`;
//! the test fails if that set changes in either direction.

mod common;

use common::*;
use cprank_core::case_engine::{lemma_h_plus_0, load_table1, verify_certificate, verify_theorem_main};
use cprank_core::copositive::{
    horn_matrix, irreducibility, is_copositive, minimal_zeros, simplex_minimum, spn_connected_test, zero_supports,
};
use cprank_core::cp_decomp::{
    cpr_wheel, dd_decomposition, distinct_supports, max_cpr_order, nearly_positive_witness, orthogonality_defect,
    pairmove, WeightedCpDecomposition,
};
use cprank_core::matrix_core::rational::{rat, to_f64};
use cprank_core::matrix_core::{dd_orbit_witness, is_psd};
use cprank_core::zero_structure::{apply_inference_rules, graph_gm, tf_exact, SupportFamily};
use cprank_core::{IndexSet, LabeledGraph, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use std::time::{Duration, Instant};

/// Case 38: its `G(M)` has the edge {1,3,5}–{3,5,6} (union of size 4), which
/// the published drawing omits; with it tf is 9, not 8.
const KNOWN_FAILURES: &[u32] = &[2, 3];

struct Outcome {
    criterion: u32,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(criterion: u32) -> Self {
        Outcome { criterion, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.notes.push(format!("{:.2}s", elapsed.as_secs_f64()));
        self.check(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"));
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {}: {status}", self.criterion);
        if !self.notes.is_empty() {
            s += &format!(" [{}]", self.notes.join(", "));
        }
        for f in &self.failures {
            s += &format!("\n    {f}");
        }
        s
    }
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn property<S: Strategy>(
    out: &mut Outcome,
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) {
    let start = Instant::now();
    let result = runner(cases).run(&strategy, test);
    out.notes.push(format!("{name} x{cases} {:.1}s", start.elapsed().as_secs_f64()));
    out.check(result.is_ok(), format!("{name}: {}", result.err().map(|e| e.to_string()).unwrap_or_default()));
}

fn horn_suite() -> Outcome {
    let mut out = Outcome::new(1);
    let start = Instant::now();
    let h = horn_matrix();
    out.check(is_copositive(&h).unwrap(), "H not copositive");
    out.check(!spn_connected_test(&h).unwrap(), "H reported SPN");
    let z = zero_supports(&h).unwrap();
    let pairs: Vec<IndexSet> = [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]].iter().map(|p| set(5, p)).collect();
    let triples: Vec<IndexSet> =
        [[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]].iter().map(|t| set(5, t)).collect();
    let mut minimal = z.minimal_supports();
    minimal.sort();
    let mut want_minimal = pairs.clone();
    want_minimal.sort();
    out.check(minimal == want_minimal, format!("minimal supports {minimal:?}"));
    let mut want_all: Vec<IndexSet> = pairs.iter().chain(&triples).copied().collect();
    want_all.sort();
    out.check(z.supports == want_all, format!("zero supports {:?}", z.supports));
    let w = minimal_zeros(&h).unwrap();
    for col in &w.columns {
        let ones = col.vector.iter().filter(|v| **v == rat(1, 1)).count();
        let zeros = col.vector.iter().filter(|v| v.is_zero()).count();
        out.check(ones == 2 && zeros == 3 && pairs.contains(&col.support), format!("minimal zero {:?}", col.vector));
    }
    out.check(w.k() == 5, "W should have 5 columns");
    let irr = irreducibility(&h).unwrap();
    out.check(irr.n_irreducible && irr.flags.iter().flatten().all(|&f| f), "H not N-irreducible");
    out.within(start.elapsed(), Duration::from_secs(1));
    out
}

fn tf_captions() -> Outcome {
    let mut out = Outcome::new(2);
    let start = Instant::now();
    let table = load_table1().unwrap();
    for (case, caption) in [(5, 8), (37, 9), (38, 8), (39, 8), (40, 8), (41, 7), (42, 7)] {
        let entry = &table[case - 1];
        let g = graph_gm(&entry.family);
        let tf = tf_exact(&g).unwrap().value;
        out.check(tf == caption, format!("case {case}: tf {tf}, caption {caption} ({} edges)", g.edge_count()));
    }
    out.check(tf_exact(&LabeledGraph::complete(6)).unwrap().value == 9, "tf(K6) != 9");
    out.within(start.elapsed(), Duration::from_secs(1));
    out
}

fn published_bound(case: u32) -> usize {
    let tf_caption = |c: u32| [9, 8, 8, 8, 7, 7][(c - 37) as usize];
    match case {
        1 | 2 | 5 => 8,
        3 | 4 | 6..=36 => 9,
        37..=42 => 7.max(tf_caption(case)),
        _ => 8,
    }
}

fn theorem() -> Outcome {
    let mut out = Outcome::new(3);
    let start = Instant::now();
    let report = verify_theorem_main().unwrap();
    let table = load_table1().unwrap();
    out.check(report.cases.len() == 44, "expected 44 cases");
    for (entry, case) in table.iter().zip(&report.cases) {
        let cert = &case.certificate;
        let want = published_bound(entry.id);
        out.check(cert.bound == want, format!("case {}: bound {}, expected {want}", entry.id, cert.bound));
        out.check(verify_certificate(entry, cert).is_ok(), format!("case {} does not re-verify", entry.id));
    }
    out.notes.push(format!("max bound {}", report.max_bound));
    out.check(report.all_within_target(), "a bound exceeds 9");
    let h = lemma_h_plus_0();
    out.check(h.horn_bound == 7 && cpr_wheel(6) == 7, format!("Horn+0 bound {}", h.horn_bound));
    out.check(h.hildebrand_bound == 6, format!("Hildebrand+0 bound {}", h.hildebrand_bound));
    out.within(start.elapsed(), Duration::from_secs(30));
    out
}

fn conservation() -> Outcome {
    let mut out = Outcome::new(4);
    property(&mut out, "pairmove", 1000, (3usize..=6).prop_flat_map(nested_pair), |(b, d)| {
        let (bt, dt) = pairmove(&b, &d).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let n = b.vector.len();
        let before = WeightedCpDecomposition::new(n, vec![b.clone(), d.clone()]).unwrap().realize();
        let mut terms = vec![dt.clone()];
        terms.extend(bt.clone());
        let after = WeightedCpDecomposition::new(n, terms).unwrap().realize();
        prop_assert_eq!(before, after);
        let (sb, sd) = (b.support(), d.support());
        let sbt = bt.as_ref().map_or(IndexSet::empty(n), |t| t.support());
        prop_assert_eq!(dt.support(), sd);
        prop_assert!(sbt.is_subset(&sd));
        prop_assert!(sd.difference(&sb).is_subset(&sbt));
        let r0: Rational = sb.iter().map(|i| &d.vector[i] / &b.vector[i]).min().unwrap();
        for i in sb.iter().filter(|&i| &d.vector[i] / &b.vector[i] == r0) {
            prop_assert!(!sbt.contains(i));
        }
        Ok(())
    });
    property(&mut out, "distinct_supports", 1000, (2usize..=5).prop_flat_map(decomposition), |dec| {
        let out = distinct_supports(&dec);
        prop_assert_eq!(out.realize(), dec.realize());
        prop_assert!(out.len() <= dec.len());
        let s = out.supports();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                prop_assert_ne!(s[i], s[j]);
            }
        }
        Ok(())
    });
    property(&mut out, "dd_decomposition", 1000, (2usize..=6).prop_flat_map(pair_supported), |dec| {
        let a = dec.realize();
        let d = dd_orbit_witness(&a).unwrap();
        prop_assert!(d.is_some(), "pair-supported matrix not in the DD orbit");
        let dd = dd_decomposition(&a, &d.unwrap()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(dd.realize(), a);
        prop_assert!(dd.supports().iter().all(|s| s.len() <= 2));
        Ok(())
    });
    out
}

fn corpus_graphs() -> Vec<LabeledGraph> {
    let mut graphs: Vec<LabeledGraph> = load_table1().unwrap().iter().map(|e| graph_gm(&e.family)).collect();
    graphs.extend((3..=5).map(LabeledGraph::complete));
    graphs.extend((3..=8).map(LabeledGraph::cycle));
    graphs.extend((4..=7).map(LabeledGraph::wheel));
    graphs.push(LabeledGraph::complete_bipartite(3, 3));
    graphs.push(LabeledGraph::complete_bipartite(2, 4));
    graphs.retain(|g| g.edge_count() <= 12);
    graphs
}

fn oracles() -> Outcome {
    let mut out = Outcome::new(5);
    property(&mut out, "simplex_minimum", 200, sym_matrix(4), |a| {
        let exact = to_f64(&simplex_minimum(&a).unwrap().value);
        let float = float_simplex_min(&a);
        prop_assert!((exact - float).abs() <= 1e-6, "exact {} vs oracle {}", exact, float);
        Ok(())
    });
    let psd_input = prop_oneof![psd_plus_nonneg(4), psd_plus_nonneg(5), sym_matrix(4), sym_matrix(5)];
    property(&mut out, "is_psd", 1000, psd_input, |a| {
        prop_assert_eq!(is_psd(&a).psd, psd_by_minors(&a));
        Ok(())
    });
    let graphs = corpus_graphs();
    for g in &graphs {
        let (fast, slow) = (tf_exact(g).unwrap().value, brute_tf(g));
        out.check(fast == slow, format!("tf {fast} vs brute force {slow} on {} edges", g.edge_count()));
    }
    out.notes.push(format!("tf on {} graphs", graphs.len()));
    out
}

fn horn_inference() -> Outcome {
    let mut out = Outcome::new(6);
    let z = zero_supports(&horn_matrix()).unwrap();
    let family = SupportFamily::new(5, z.minimal_supports()).unwrap();
    let k = apply_inference_rules(&family).unwrap();
    let mut confirmed = k.confirmed();
    confirmed.sort();
    out.check(confirmed == z.supports, format!("confirmed {confirmed:?}"));
    for s in IndexSet::all_nonempty(5).filter(|s| s.len() >= 2 && !z.supports.contains(s)) {
        out.check(k.is_excluded(&s), format!("{s:?} not excluded"));
    }
    out
}

fn nearly_positive() -> Outcome {
    let mut out = Outcome::new(7);
    let y = proptest::collection::vec(proptest::collection::vec(0i64..=4, 3), 3).prop_filter("YYᵀ > 0", |y| {
        (0..3).all(|i| (0..3).all(|j| (0..3).map(|t| y[i][t] * y[j][t]).sum::<i64>() > 0))
    });
    property(&mut out, "nearly_positive_witness", 100, y, |y| {
        let y: Vec<Vec<Rational>> = y.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect();
        let q = nearly_positive_witness(&y, 1e-6, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(orthogonality_defect(&q) <= 1e-12);
        for row in &y {
            for qk in &q {
                let v: f64 = (0..3).map(|t| to_f64(&row[t]) * qk[t]).sum();
                prop_assert!(v >= 1e-6, "entry {}", v);
            }
        }
        Ok(())
    });
    out
}

fn scope() -> Outcome {
    let mut out = Outcome::new(8);
    let report = verify_theorem_main().unwrap();
    let (_, p6_open) = max_cpr_order(6);
    out.check(p6_open, "p_6 should be flagged as open");
    out.check(report.open_order_audit_clean, "a certificate relies on p_m for m >= 6");
    out.check(!report.coverage.uncovered.is_empty(), "coverage gap not stated");
    out.notes.push(format!("conditional bound {}, not covered: {}", report.max_bound, report.coverage.uncovered));
    out
}

// Plain binary (no libtest harness) so the criterion lines always reach stdout.
fn main() {
    let outcomes =
        [horn_suite(), tf_captions(), theorem(), conservation(), oracles(), horn_inference(), nearly_positive(), scope()];
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.criterion).collect();
    if failed != KNOWN_FAILURES {
        eprintln!("failing criteria {failed:?} differ from the documented set {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
    println!("known failures {KNOWN_FAILURES:?} unchanged");
}
