//! Re-checks a certificate from its payload, using only the inference rules,
//! graph predicates and bound rules, never the strategy code.

use super::certificate::{BoundCertificate, HornWitness, Witness};
use super::horn_case::{cycle_order, minus_one_graph, plus_one_forced};
use super::table::{Strategy, Table1Entry};
use crate::cp_decomp::{cpr_bound_rules, max_cpr_order};
use crate::error::{Error, Result};
use crate::matrix_core::{rational::int, IndexSet, LabeledGraph};
use crate::zero_structure::{
    apply_inference_rules, apply_inference_rules_with, graph_gm, pair_graph, tf_exact, Rule, SupportFamily,
    TriangleFreeWitness, ZeroSupportKnowledge,
};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn support_of(family: &SupportFamily, label: &str) -> std::result::Result<IndexSet, String> {
    family
        .supports
        .iter()
        .find(|s| s.to_string() == label)
        .copied()
        .ok_or_else(|| format!("vertex {label} is not a minimal support"))
}

/// `g` has members as vertices, only edges of `G(M)`, and every missing `G(M)` edge is excluded.
fn check_over(family: &SupportFamily, knowledge: &ZeroSupportKnowledge, g: &LabeledGraph) -> Check {
    let s: Vec<IndexSet> =
        g.labels().iter().map(|l| support_of(family, l)).collect::<std::result::Result<_, _>>()?;
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            let u = s[a].union(&s[b]);
            let in_gm = u.len() <= family.max_zero_support();
            if g.has_edge(a, b) {
                ensure(in_gm, || format!("edge {}–{} is not in G(M)", s[a], s[b]))?;
            } else if in_gm {
                ensure(knowledge.is_excluded(&u), || format!("missing edge {}–{} is not excluded", s[a], s[b]))?;
            }
        }
    }
    Ok(())
}

/// Every set not listed is excluded, and no listed set holds three members.
fn check_pair_unions(family: &SupportFamily, knowledge: &ZeroSupportKnowledge, listed: &[IndexSet]) -> Check {
    for s in IndexSet::all_nonempty(family.n).filter(|s| s.len() >= 2) {
        if listed.contains(&s) {
            ensure(family.members_within(&s).len() <= 2, || format!("{s} holds three or more members"))?;
        } else {
            let ruled_out =
                knowledge.is_excluded(&s) || s.len() > family.max_zero_support() || !family.is_union_of_members(&s);
            ensure(ruled_out, || format!("{s} is neither listed nor excluded"))?;
        }
    }
    Ok(())
}

fn check_tf(g: &LabeledGraph, tf: &TriangleFreeWitness) -> Check {
    ensure(tf.subgraph.is_subgraph_of(g), || "tf witness is not a subgraph".into())?;
    ensure(tf.subgraph.is_triangle_free(), || "tf witness has a triangle".into())?;
    ensure(tf.subgraph.edge_count() == tf.value, || "tf witness size differs from value".into())?;
    let exact = tf_exact(g).map_err(|e| e.to_string())?.value;
    ensure(exact == tf.value, || format!("tf is {exact}, certificate says {}", tf.value))
}

fn vertex(family: &SupportFamily, pivot: &IndexSet) -> std::result::Result<usize, String> {
    family.supports.iter().position(|s| s == pivot).ok_or_else(|| format!("pivot {pivot} is not a member"))
}

fn check_horn(family: &SupportFamily, knowledge: &ZeroSupportKnowledge, w: &HornWitness) -> std::result::Result<usize, String> {
    let neg = minus_one_graph(family);
    for b in &w.horn_blocks {
        let sub = neg.induced(b.five_subset.bits());
        ensure(cycle_order(&sub).is_some(), || format!("{} is not a Horn pattern", b.five_subset))?;
        let closes = (0..5).all(|i| neg.has_edge(b.cycle[i] - 1, b.cycle[(i + 1) % 5] - 1));
        ensure(closes, || "cycle order does not follow the pattern".into())?;
    }
    let n = family.n;
    for i in 0..n {
        ensure(*w.pattern.get(i, i) == int(1), || "pattern diagonal is not 1".into())?;
        for j in i + 1..n {
            let v = w.pattern.get(i, j);
            if neg.has_edge(i, j) {
                ensure(*v == int(-1), || format!("entry ({}, {}) should be -1", i + 1, j + 1))?;
            } else {
                ensure(*v == int(1) && plus_one_forced(&neg, &w.horn_blocks, i, j), || {
                    format!("entry ({}, {}) is not forced to +1", i + 1, j + 1)
                })?;
            }
        }
    }
    ensure(knowledge.is_confirmed(&w.block), || format!("{} is not a confirmed zero support", w.block))?;
    let inside = family.members_within(&w.block);
    ensure(inside.len() == 4 && pair_graph(family, &w.block).complete_bipartition().is_some(), || {
        format!("{} is not a K_{{2,2}} block", w.block)
    })?;
    ensure(w.block.len() == family.max_zero_support(), || "block is not a maximal zero support".into())?;
    let (d0, d1) = w.dropped;
    let smallest = inside.iter().map(|&i| family.supports[i]).min_by_key(|s| s.labels()).expect("nonempty");
    ensure(
        d0.is_subset(&w.block) && d1.is_subset(&w.block) && !d0.intersects(&d1) && d0.intersects(&smallest)
            && d1.intersects(&smallest),
        || "dropped pair is not the matching avoiding the smallest member".into(),
    )?;
    let (a, b) = (vertex(family, &d0)?, vertex(family, &d1)?);
    ensure(!w.graph.has_edge(a, b), || "dropped edge still present".into())?;
    let mut restored = w.graph.clone();
    restored.add_edge(a, b);
    check_over(family, knowledge, &restored)?;
    let v = vertex(family, &w.pivot)?;
    ensure(w.graph.degree(v) == w.degree && (1..=2).contains(&w.degree), || "pivot degree".into())?;
    ensure(w.remainder == w.graph.remove_vertex(v), || "remainder is not graph minus pivot".into())?;
    ensure(w.remainder.is_connected() && w.remainder.is_outerplanar(), || "remainder not connected outerplanar".into())?;
    check_tf(&w.remainder, &w.remainder_tf)?;
    ensure(w.remainder_tf.value >= w.remainder.vertex_count(), || "tf below vertex count".into())?;
    Ok(w.degree + w.remainder_tf.value)
}

fn expected_bound(entry: &Table1Entry, cert: &BoundCertificate) -> std::result::Result<usize, String> {
    let family = &entry.family;
    let knowledge = apply_inference_rules(family).map_err(|e| e.to_string())?;
    match &cert.witness {
        Witness::PairUnions { k, possible_zero_supports } => {
            ensure(*k == family.k(), || "member count".into())?;
            check_pair_unions(family, &knowledge, possible_zero_supports)?;
            Ok(k * k / 4)
        }
        Witness::TriangleFree { k, possible_zero_supports, graph, tf } => {
            ensure(*k == family.k(), || "member count".into())?;
            check_pair_unions(family, &knowledge, possible_zero_supports)?;
            ensure(*graph == graph_gm(family), || "graph is not G(M)".into())?;
            check_tf(graph, tf)?;
            Ok((*k).max(tf.value))
        }
        Witness::LowDegree { pivot, degree, exclusions, graph, remainder, remainder_bound, .. } => {
            check_over(family, &knowledge, graph)?;
            ensure(graph.labels().len() == family.k(), || "graph misses members".into())?;
            for f in exclusions {
                ensure(knowledge.is_excluded(&f.set), || format!("{} is not excluded", f.set))?;
            }
            let v = vertex(family, pivot)?;
            ensure(graph.degree(v) == *degree && (1..=2).contains(degree), || "pivot degree".into())?;
            ensure(*remainder == graph.remove_vertex(v), || "remainder is not graph minus pivot".into())?;
            let (p, open) = max_cpr_order(remainder.vertex_count());
            ensure(p == *remainder_bound && (cert.uses_open_order || !open), || "remainder bound".into())?;
            Ok(degree + p)
        }
        Witness::OmegaSplit { pivot, proper_supersets, remainder, remainder_bound } => {
            vertex(family, pivot)?;
            for s in IndexSet::all_nonempty(family.n).filter(|s| pivot.is_proper_subset(s)) {
                let listed = proper_supersets.contains(&s);
                let ruled_out = knowledge.is_excluded(&s)
                    || s.len() > family.max_zero_support()
                    || !family.is_union_of_members(&s);
                ensure(listed || ruled_out, || format!("{s} contains the pivot but is not listed"))?;
            }
            ensure(proper_supersets.len() <= 3, || "more than three supersets".into())?;
            let labels: Vec<String> =
                family.supports.iter().filter(|s| *s != pivot).map(|s| s.to_string()).collect();
            ensure(remainder.labels() == labels.as_slice(), || "remainder vertices".into())?;
            check_over(family, &knowledge, remainder)?;
            let (p, open) = max_cpr_order(remainder.vertex_count());
            ensure(p == *remainder_bound && (cert.uses_open_order || !open), || "remainder bound".into())?;
            Ok(proper_supersets.len().max(1) + p)
        }
        Witness::Horn(w) => check_horn(family, &knowledge, w),
        Witness::Forest { exclusions, graph, derivation } => {
            for f in exclusions {
                let five = f.premises.first().ok_or("exclusion without its 5-set")?;
                ensure(
                    f.rule == Rule::IrreducibleFiveSubset
                        && five.len() == 5
                        && f.set.len() == 4
                        && f.set.is_subset(five)
                        && family.covers_pairs(five, &[]),
                    || format!("exclusion of {} is not justified", f.set),
                )?;
            }
            let pruned = apply_inference_rules_with(family, exclusions).map_err(|e| e.to_string())?;
            check_over(family, &pruned, graph)?;
            ensure(graph.is_forest(), || "graph is not a forest".into())?;
            let b = graph.vertex_count().max(graph.edge_count());
            ensure(derivation.bound == b, || "forest bound".into())?;
            Ok(b)
        }
        Witness::Cube { nogoods, graph, configurations } => {
            check_over(family, &knowledge, graph)?;
            for g in nogoods {
                ensure(
                    g.sets.iter().all(|s| s.len() == 4 && s.is_subset(&g.five_subset))
                        && family.covers_pairs(&g.five_subset, &g.sets),
                    || format!("nogood in {} does not cover its pairs", g.five_subset),
                )?;
            }
            let uncertain = super::prune::uncertain_sets(nogoods);
            for m in 0u32..1 << uncertain.len() {
                let pick: Vec<IndexSet> =
                    (0..uncertain.len()).filter(|i| m >> i & 1 == 1).map(|i| uncertain[i]).collect();
                if super::prune::admissible(&pick, nogoods) {
                    let covered = configurations.iter().any(|c| pick.iter().all(|s| c.kept.contains(s)));
                    ensure(covered, || "an admissible configuration is not covered".into())?;
                }
            }
            let mut best = 0;
            for c in configurations {
                ensure(super::prune::admissible(&c.kept, nogoods), || "configuration holds a nogood".into())?;
                let g = super::prune::configuration_graph(family, graph, &uncertain, &c.kept);
                let b = cpr_bound_rules(&g);
                ensure(b == c.derivation.bound && g.edge_count() == c.edges, || "configuration bound".into())?;
                best = best.max(b);
            }
            Ok(best)
        }
        Witness::HPlusZero(_) => Err("not a table case".into()),
    }
}

/// Re-derives the bound of `cert` for `entry` from its payload.
pub fn verify_certificate(entry: &Table1Entry, cert: &BoundCertificate) -> Result<()> {
    let fail = |reason: String| Error::CaseFailed { case: entry.id, reason };
    if cert.case_id != entry.id {
        return Err(fail(format!("certificate is for case {}", cert.case_id)));
    }
    let strategy_matches = matches!(
        (cert.strategy, &cert.witness),
        (Strategy::Dd, Witness::PairUnions { .. })
            | (Strategy::Tf, Witness::TriangleFree { .. })
            | (Strategy::LowDegree, Witness::LowDegree { .. })
            | (Strategy::OmegaSplit, Witness::OmegaSplit { .. })
            | (Strategy::PruneHorn, Witness::Horn(_))
            | (Strategy::PruneForest, Witness::Forest { .. })
            | (Strategy::PruneCube, Witness::Cube { .. })
    );
    if !strategy_matches {
        return Err(fail(format!("{} certificate carries the wrong witness", cert.strategy)));
    }
    let b = expected_bound(entry, cert).map_err(fail)?;
    if b != cert.bound {
        return Err(fail(format!("payload gives {b}, certificate claims {}", cert.bound)));
    }
    Ok(())
}
