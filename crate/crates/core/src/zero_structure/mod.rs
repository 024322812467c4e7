//! Combinatorics of minimal-support families: inference of zero supports,
//! the support graphs, and maximum triangle-free subgraphs.

mod family;
mod graphs;
mod knowledge;
mod prune;
mod tf;

pub use family::SupportFamily;
pub use graphs::{graph_confirmed, graph_gm, graph_gv_over};
pub use knowledge::{apply_inference_rules, apply_inference_rules_with, Fact, Rule, Status, ZeroSupportKnowledge};
pub use prune::{irreducibility_nogoods, irreducibility_prune, Nogood};
pub use tf::{tf_exact, TriangleFreeWitness, TF_EDGE_LIMIT};

pub(crate) use family::pair_graph;
