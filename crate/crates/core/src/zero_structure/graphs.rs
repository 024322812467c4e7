use super::family::SupportFamily;
use super::knowledge::ZeroSupportKnowledge;
use crate::matrix_core::LabeledGraph;

fn support_vertices(family: &SupportFamily) -> LabeledGraph {
    LabeledGraph::new(family.supports.iter().map(|s| s.to_string()).collect())
}

/// `G(M)`: members joined when their union has at most `n − 2` elements.
pub fn graph_gm(family: &SupportFamily) -> LabeledGraph {
    let mut g = support_vertices(family);
    let s = &family.supports;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i].union(&s[j]).len() <= family.max_zero_support() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// `G(M)` without the edges whose union is known not to be a zero support.
///
/// Always contains the true `G_V(M)`.
pub fn graph_gv_over(family: &SupportFamily, knowledge: &ZeroSupportKnowledge) -> LabeledGraph {
    let mut g = graph_gm(family);
    for (i, j) in g.edges() {
        if knowledge.is_excluded(&family.supports[i].union(&family.supports[j])) {
            g.remove_edge(i, j);
        }
    }
    g
}

/// Members joined when their union is a confirmed zero support.
///
/// Always contained in the true `G_V(M)`.
pub fn graph_confirmed(family: &SupportFamily, knowledge: &ZeroSupportKnowledge) -> LabeledGraph {
    let mut g = support_vertices(family);
    let s = &family.supports;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if knowledge.is_confirmed(&s[i].union(&s[j])) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zero_structure::apply_inference_rules;

    #[test]
    fn nesting() {
        let f = SupportFamily::from_labels(6, &[&[1, 2], &[1, 3], &[2, 4], &[3, 4, 5], &[1, 5, 6], &[4, 5, 6]]).unwrap();
        let k = apply_inference_rules(&f).unwrap();
        let gm = graph_gm(&f);
        let over = graph_gv_over(&f, &k);
        let conf = graph_confirmed(&f, &k);
        assert_eq!(gm.edge_count(), 10);
        assert!(conf.is_subgraph_of(&over));
        assert!(over.is_subgraph_of(&gm));
        assert_eq!(gm.label(0), "{1,2}");
    }
}
