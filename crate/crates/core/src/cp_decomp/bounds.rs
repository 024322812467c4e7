//! Graph-based cp-rank values and upper bounds.

use crate::error::{Error, Result};
use crate::matrix_core::{graph_of, LabeledGraph, SymMatrix};
use crate::zero_structure::tf_exact;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Known maximal cp-ranks `p_m` of `m × m` completely positive matrices.
const SMALL_ORDER_MAX_CPR: [usize; 6] = [0, 1, 2, 3, 4, 6];

/// cp-rank of a completely positive matrix with triangle-free graph: `max(n, |E|)`.
pub fn cpr_triangle_free(a: &SymMatrix) -> Result<usize> {
    let g = graph_of(a);
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    Ok(a.n().max(g.edge_count()))
}

/// `cpr(W_n)` for the wheel on `n ≥ 4` vertices.
pub fn cpr_wheel(n: usize) -> usize {
    assert!(n >= 4, "wheels have at least 4 vertices");
    if n % 2 == 1 {
        (3 * n - 3) / 2
    } else {
        (3 * n - 4) / 2
    }
}

/// Upper bound on `p_m`; flagged when it is not a known exact value.
pub fn max_cpr_order(m: usize) -> (usize, bool) {
    if m < SMALL_ORDER_MAX_CPR.len() {
        (SMALL_ORDER_MAX_CPR[m], false)
    } else {
        (m * (m + 1) / 2 - 4, true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum BoundRule {
    Empty,
    TriangleFree { edges: usize },
    Outerplanar { tf: usize },
    /// Subgraph of the wheel on the same vertex count.
    Wheel { order: usize },
    /// Sum over connected components.
    Components,
    /// `d(v) + cpr(G − v)` for a non-isolated vertex of degree at most 2.
    LowDegree { vertex: String, degree: usize },
    /// Subgraph of `K_m`, bounded by `p_m`.
    CompleteGraph { order: usize },
}

/// A bound together with the rule that produced it and the sub-derivations it uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundDerivation {
    pub vertices: Vec<String>,
    pub edges: usize,
    pub bound: usize,
    pub rule: BoundRule,
    /// Set when some step relies on `p_m` for `m ≥ 6`, whose exact value is unknown.
    pub flagged: bool,
    pub children: Vec<BoundDerivation>,
}

impl BoundDerivation {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let rule = match &self.rule {
            BoundRule::Empty => "empty graph".to_string(),
            BoundRule::TriangleFree { edges } => format!("triangle-free, max(n, |E|={edges})"),
            BoundRule::Outerplanar { tf } => format!("connected outerplanar, tf = {tf}"),
            BoundRule::Wheel { order } => format!("subgraph of W_{order}"),
            BoundRule::Components => "sum over components".to_string(),
            BoundRule::LowDegree { vertex, degree } => format!("delete {vertex} (degree {degree})"),
            BoundRule::CompleteGraph { order } => format!("subgraph of K_{order}"),
        };
        let flag = if self.flagged { " [depends on p_m, m >= 6]" } else { "" };
        let _ = writeln!(
            out,
            "{}{} on {} vertices, {} edges: {}{}",
            "  ".repeat(depth),
            self.bound,
            self.vertices.len(),
            self.edges,
            rule,
            flag
        );
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}

struct RuleEngine<'a> {
    graph: &'a LabeledGraph,
    memo: HashMap<u64, BoundDerivation>,
}

impl RuleEngine<'_> {
    fn node(&self, sub: &LabeledGraph, bound: usize, rule: BoundRule, flagged: bool, children: Vec<BoundDerivation>) -> BoundDerivation {
        BoundDerivation { vertices: sub.labels().to_vec(), edges: sub.edge_count(), bound, rule, flagged, children }
    }

    fn solve(&mut self, mask: u64) -> BoundDerivation {
        if let Some(d) = self.memo.get(&mask) {
            return d.clone();
        }
        let sub = self.graph.induced(mask);
        let n = sub.vertex_count();
        let mut options = Vec::new();
        if n == 0 {
            options.push(self.node(&sub, 0, BoundRule::Empty, false, vec![]));
        }
        if n > 0 && sub.is_triangle_free() {
            let edges = sub.edge_count();
            options.push(self.node(&sub, n.max(edges), BoundRule::TriangleFree { edges }, false, vec![]));
        }
        if n > 0 && sub.is_connected() && sub.is_outerplanar() {
            if let Ok(w) = tf_exact(&sub) {
                if w.value >= n {
                    options.push(self.node(&sub, w.value, BoundRule::Outerplanar { tf: w.value }, false, vec![]));
                }
            }
        }
        if n >= 4 && sub.embedding_into(&LabeledGraph::wheel(n)).is_some() {
            options.push(self.node(&sub, cpr_wheel(n), BoundRule::Wheel { order: n }, false, vec![]));
        }
        let positions: Vec<usize> = (0..64).filter(|v| mask >> v & 1 == 1).collect();
        let components = sub.components();
        if components.len() > 1 {
            let children: Vec<BoundDerivation> = components
                .iter()
                .map(|&c| {
                    let lifted = (0..n).filter(|v| c >> v & 1 == 1).fold(0u64, |acc, v| acc | 1 << positions[v]);
                    self.solve(lifted)
                })
                .collect();
            let bound = children.iter().map(|c| c.bound).sum();
            let flagged = children.iter().any(|c| c.flagged);
            options.push(self.node(&sub, bound, BoundRule::Components, flagged, children));
        }
        for v in 0..n {
            let degree = sub.degree(v);
            if (1..=2).contains(&degree) {
                let child = self.solve(mask & !(1 << positions[v]));
                let rule = BoundRule::LowDegree { vertex: sub.label(v).to_string(), degree };
                options.push(self.node(&sub, degree + child.bound, rule, child.flagged, vec![child]));
            }
        }
        let (pm, flagged) = max_cpr_order(n);
        options.push(self.node(&sub, pm, BoundRule::CompleteGraph { order: n }, flagged, vec![]));

        let best = options
            .into_iter()
            .min_by_key(|d| (d.bound, d.flagged))
            .expect("the complete-graph rule always applies");
        self.memo.insert(mask, best.clone());
        best
    }
}

/// Best upper bound on `cpr(G)` obtainable by composing the graph rules.
///
/// Intended for graphs on at most 8 vertices.
pub fn cpr_bound_derivation(g: &LabeledGraph) -> BoundDerivation {
    let n = g.vertex_count();
    assert!(n < 64);
    let mut engine = RuleEngine { graph: g, memo: HashMap::new() };
    engine.solve((1u64 << n) - 1)
}

pub fn cpr_bound_rules(g: &LabeledGraph) -> usize {
    cpr_bound_derivation(g).bound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn triangle_free_values() {
        let k33 = LabeledGraph::complete_bipartite(3, 3);
        let mut a = SymMatrix::identity(6).scale(&crate::matrix_core::rational::int(3));
        for (u, v) in k33.edges() {
            a.set(u, v, crate::matrix_core::rational::int(1));
        }
        assert_eq!(cpr_triangle_free(&a).unwrap(), 9);
        assert_eq!(cpr_triangle_free(&SymMatrix::identity(5)).unwrap(), 5);
        assert_eq!(cpr_triangle_free(&SymMatrix::ones(3)).unwrap_err(), Error::NotTriangleFree);
    }

    #[test]
    fn wheel_values() {
        assert_eq!(cpr_wheel(6), 7);
        assert_eq!(cpr_wheel(5), 6);
        assert_eq!(cpr_bound_rules(&LabeledGraph::wheel(6)), 7);
    }

    #[test]
    fn star_and_forest() {
        assert_eq!(cpr_bound_rules(&LabeledGraph::complete_bipartite(5, 1)), 6);
        let forest = LabeledGraph::with_edges(labels(8), &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(cpr_bound_rules(&forest), 8);
    }

    #[test]
    fn small_complete_graphs() {
        assert_eq!(cpr_bound_rules(&LabeledGraph::complete(4)), 4);
        assert_eq!(cpr_bound_rules(&LabeledGraph::complete(5)), 6);
        let d = cpr_bound_derivation(&LabeledGraph::complete(6));
        assert_eq!(d.bound, 17);
        assert!(d.flagged);
    }

    #[test]
    fn low_degree_deletion_beats_fallback() {
        // K_5 plus a pendant vertex: 1 + p_5.
        let mut g = LabeledGraph::complete(5);
        let mut h = LabeledGraph::numbered(6);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(4, 5);
        g = h;
        let d = cpr_bound_derivation(&g);
        assert_eq!(d.bound, 7);
        assert!(!d.flagged);
        assert!(matches!(d.rule, BoundRule::LowDegree { degree: 1, .. }));
    }

    #[test]
    fn outerplanar_rule() {
        // A hexagon with a triangle glued on one side: tf = 7 = n.
        let g = LabeledGraph::with_edges(
            labels(7),
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6), (1, 6)],
        );
        let d = cpr_bound_derivation(&g);
        assert_eq!(d.bound, 7);
        assert_eq!(d.rule, BoundRule::Outerplanar { tf: 7 });
    }
}
