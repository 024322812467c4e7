//! Small undirected simple graphs with labelled vertices.

use super::sym_matrix::SymMatrix;
use crate::error::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, VecDeque};

/// Undirected simple graph on at most 64 labelled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl LabeledGraph {
    pub fn new(labels: Vec<String>) -> Self {
        assert!(labels.len() <= 64, "at most 64 vertices supported");
        let n = labels.len();
        LabeledGraph { labels, adj: vec![0; n] }
    }

    /// Vertices labelled `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn with_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(labels);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::numbered(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::numbered(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::numbered(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// `K_{m,k}` with parts `0..m` and `m..m+k`.
    pub fn complete_bipartite(m: usize, k: usize) -> Self {
        let mut g = Self::numbered(m + k);
        for u in 0..m {
            for v in m..(m + k) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Wheel `W_n`: a cycle on vertices `0..n-1` and hub `n-1`.
    pub fn wheel(n: usize) -> Self {
        assert!(n >= 4, "wheels need at least 4 vertices");
        let mut g = Self::numbered(n);
        let rim = n - 1;
        for u in 0..rim {
            g.add_edge(u, (u + 1) % rim);
            g.add_edge(u, rim);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.labels.len() && v < self.labels.len());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Same vertices, only the given edges.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Self {
        Self::with_edges(self.labels.clone(), edges)
    }

    /// Subgraph induced on the vertices whose bit is set in `mask`.
    pub fn induced(&self, mask: u64) -> Self {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| mask & (1 << v) != 0).collect();
        let mut g = Self::new(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// `G − v`.
    pub fn remove_vertex(&self, v: usize) -> Self {
        let all = if self.vertex_count() == 64 { u64::MAX } else { (1u64 << self.vertex_count()) - 1 };
        self.induced(all & !(1 << v))
    }

    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.labels == other.labels && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    fn all_mask(&self) -> u64 {
        let n = self.vertex_count();
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    fn component_mask(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.all_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_mask(v, self.all_mask());
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        self.component_mask(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let mut common = self.adj[u] & self.adj[v] & !((2u64 << v) - 1);
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                common &= common - 1;
                out.push((u, v, w));
            }
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Proper 2-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        q.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    q.push_back(u);
                }
            }
        }
        dist
    }

    /// The two parts if the graph is `K_{m,k}` with `m, k ≥ 1` (every vertex used).
    pub fn complete_bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return None;
        }
        let color = self.bipartition()?;
        let a: Vec<usize> = (0..n).filter(|&v| color[v] == 0).collect();
        let b: Vec<usize> = (0..n).filter(|&v| color[v] == 1).collect();
        if self.edge_count() == a.len() * b.len() {
            Some((a, b))
        } else {
            None
        }
    }

    /// Whether `h` is a minor of `self`, by brute-force branch-set assignment.
    ///
    /// `classes[i]` groups the vertices of `h` that are interchangeable under
    /// its automorphisms; assignments are enumerated in first-use order within
    /// each class.
    fn has_minor(&self, h: &LabeledGraph, classes: &[usize]) -> bool {
        let n = self.vertex_count();
        let k = h.vertex_count();
        if k > n || h.edge_count() > self.edge_count() {
            return false;
        }
        let mut branch = vec![0u64; k];
        self.minor_search(h, classes, 0, &mut branch)
    }

    fn minor_search(&self, h: &LabeledGraph, classes: &[usize], v: usize, branch: &mut Vec<u64>) -> bool {
        let k = h.vertex_count();
        if v == self.vertex_count() {
            if branch.iter().any(|&b| b == 0) {
                return false;
            }
            if !branch.iter().all(|&b| self.is_connected_within(b)) {
                return false;
            }
            return h.edges().iter().all(|&(a, b)| {
                let mut m = branch[a];
                let mut touches = false;
                while m != 0 {
                    let x = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if self.adj[x] & branch[b] != 0 {
                        touches = true;
                        break;
                    }
                }
                touches
            });
        }
        // Remaining vertices must be able to fill the empty branch sets.
        let empty = branch.iter().filter(|&&b| b == 0).count();
        if empty > self.vertex_count() - v {
            return false;
        }
        // Leave v unused.
        if self.minor_search(h, classes, v + 1, branch) {
            return true;
        }
        for b in 0..k {
            // First-use symmetry breaking inside a class.
            if branch[b] == 0 && (0..b).any(|c| classes[c] == classes[b] && branch[c] == 0) {
                continue;
            }
            branch[b] |= 1 << v;
            let found = self.minor_search(h, classes, v + 1, branch);
            branch[b] &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }

    pub fn has_k4_minor(&self) -> bool {
        self.has_minor(&LabeledGraph::complete(4), &[0, 0, 0, 0])
    }

    pub fn has_k23_minor(&self) -> bool {
        self.has_minor(&LabeledGraph::complete_bipartite(2, 3), &[0, 0, 1, 1, 1])
    }

    /// Outerplanarity via exclusion of `K_4` and `K_{2,3}` minors.
    pub fn is_outerplanar(&self) -> bool {
        let n = self.vertex_count();
        if n >= 2 && self.edge_count() > 2 * n - 3 {
            return false;
        }
        !self.has_k4_minor() && !self.has_k23_minor()
    }

    /// Injective map of `self`'s vertices into `host` that carries edges to edges.
    pub fn embedding_into(&self, host: &LabeledGraph) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n > host.vertex_count() || self.edge_count() > host.edge_count() {
            return None;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut map = vec![usize::MAX; n];
        let mut used = 0u64;
        if self.embed_search(host, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn embed_search(&self, host: &LabeledGraph, order: &[usize], i: usize, map: &mut Vec<usize>, used: &mut u64) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for x in 0..host.vertex_count() {
            if *used & (1 << x) != 0 || host.degree(x) < self.degree(v) {
                continue;
            }
            let ok = order[..i]
                .iter()
                .all(|&u| !self.has_edge(u, v) || host.has_edge(map[u], x));
            if !ok {
                continue;
            }
            map[v] = x;
            *used |= 1 << x;
            if self.embed_search(host, order, i + 1, map, used) {
                return true;
            }
            *used &= !(1 << x);
            map[v] = usize::MAX;
        }
        false
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            connected: self.is_connected(),
            triangle_free: self.is_triangle_free(),
            forest: self.is_forest(),
            complete_bipartite: self.complete_bipartition(),
            outerplanar: self.is_outerplanar(),
            degrees: self.degrees(),
        }
    }

    /// DOT rendering with quoted labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{}\" {{\n", escape(name));
        for l in &self.labels {
            s.push_str(&format!("  \"{}\";\n", escape(l)));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  \"{}\" -- \"{}\";\n", escape(&self.labels[u]), escape(&self.labels[v])));
        }
        s.push_str("}\n");
        s
    }

    /// Parses the subset of DOT produced by [`LabeledGraph::to_dot`]: node
    /// statements and `--` edge chains, quoted or bare identifiers.
    pub fn from_dot(text: &str) -> Result<Self> {
        let open = text.find('{').ok_or_else(|| Error::Parse("missing '{' in DOT".into()))?;
        let close = text.rfind('}').ok_or_else(|| Error::Parse("missing '}' in DOT".into()))?;
        if !text[..open].trim_start().starts_with("graph") && !text[..open].trim_start().starts_with("strict graph") {
            return Err(Error::Parse("only undirected 'graph' is supported".into()));
        }
        let body = &text[open + 1..close];
        let mut labels: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut edges = Vec::new();
        let mut intern = |name: String, labels: &mut Vec<String>| -> usize {
            *index.entry(name.clone()).or_insert_with(|| {
                labels.push(name);
                labels.len() - 1
            })
        };
        for stmt in split_statements(body)? {
            let stmt = strip_attributes(&stmt);
            if stmt.is_empty() {
                continue;
            }
            let parts = split_edge_chain(&stmt)?;
            if parts.iter().any(|p| p.contains('=')) {
                continue;
            }
            let ids: Vec<usize> = parts.into_iter().map(|p| intern(p, &mut labels)).collect();
            for w in ids.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::Parse("self-loop in DOT input".into()));
                }
                edges.push((w[0], w[1]));
            }
        }
        Ok(Self::with_edges(labels, &edges))
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn split_statements(body: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_quote = false;
    let mut chars = body.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\\' if in_quote => {
                cur.push(c);
                if let Some(n) = chars.next() {
                    cur.push(n);
                }
            }
            '"' => {
                in_quote = !in_quote;
                cur.push(c);
            }
            ';' | '\n' if !in_quote => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    if in_quote {
        return Err(Error::Parse("unterminated quote in DOT".into()));
    }
    out.push(cur);
    Ok(out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
}

fn strip_attributes(stmt: &str) -> String {
    let mut out = String::new();
    let mut depth = 0;
    let mut in_quote = false;
    for c in stmt.chars() {
        match c {
            '"' => {
                in_quote = !in_quote;
                if depth == 0 {
                    out.push(c);
                }
            }
            '[' if !in_quote => depth += 1,
            ']' if !in_quote => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out.trim().to_string()
}

fn split_edge_chain(stmt: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut rest = stmt.trim();
    loop {
        let (id, tail) = if let Some(r) = rest.strip_prefix('"') {
            let mut end = None;
            let mut escaped = false;
            for (i, c) in r.char_indices() {
                if escaped {
                    escaped = false;
                } else if c == '\\' {
                    escaped = true;
                } else if c == '"' {
                    end = Some(i);
                    break;
                }
            }
            let end = end.ok_or_else(|| Error::Parse("unterminated quote".into()))?;
            (r[..end].replace("\\\"", "\"").replace("\\\\", "\\"), &r[end + 1..])
        } else {
            let end = rest.find("--").unwrap_or(rest.len());
            (rest[..end].trim().to_string(), &rest[end..])
        };
        if id.is_empty() {
            return Err(Error::Parse(format!("empty identifier in '{stmt}'")));
        }
        parts.push(id);
        let tail = tail.trim_start();
        if tail.is_empty() {
            break;
        }
        rest = tail
            .strip_prefix("--")
            .ok_or_else(|| Error::Parse(format!("expected '--' in '{stmt}'")))?
            .trim_start();
    }
    Ok(parts)
}

/// Structural facts about a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub connected: bool,
    pub triangle_free: bool,
    pub forest: bool,
    pub complete_bipartite: Option<(Vec<usize>, Vec<usize>)>,
    pub outerplanar: bool,
    pub degrees: Vec<usize>,
}

/// `G(A)`: edge `ij` iff `a_ij ≠ 0`.
pub fn graph_of(a: &SymMatrix) -> LabeledGraph {
    let mut g = LabeledGraph::numbered(a.n());
    for i in 0..a.n() {
        for j in (i + 1)..a.n() {
            if !a.get(i, j).is_zero() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// `G_{-1}(A)`: edge `ij` iff `a_ij = -1`.
pub fn graph_minus_one(a: &SymMatrix) -> LabeledGraph {
    let minus_one = -super::rational::one();
    let mut g = LabeledGraph::numbered(a.n());
    for i in 0..a.n() {
        for j in (i + 1)..a.n() {
            if a.get(i, j) == &minus_one {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Serialize for LabeledGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GraphJson::deserialize(d)?;
        if raw.vertices.len() > 64 {
            return Err(D::Error::custom("at most 64 vertices supported"));
        }
        let mut g = LabeledGraph::new(raw.vertices);
        for (a, b) in raw.edges {
            let u = g.index_of(&a).ok_or_else(|| D::Error::custom(format!("unknown vertex {a}")))?;
            let v = g.index_of(&b).ok_or_else(|| D::Error::custom(format!("unknown vertex {b}")))?;
            if u == v {
                return Err(D::Error::custom("self-loop"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph[{} vertices; {}]", self.vertex_count(), edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_predicates() {
        let p = LabeledGraph::cycle(5).predicates();
        assert!(p.connected && p.triangle_free && p.outerplanar);
        assert!(!p.forest);
        assert_eq!(p.complete_bipartite, None);
        assert_eq!(p.degrees, vec![2; 5]);
    }

    #[test]
    fn k22_bipartition() {
        // 1-3, 1-4, 2-3, 2-4
        let g = LabeledGraph::with_edges(
            (1..=4).map(|i| i.to_string()).collect(),
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        );
        assert_eq!(g.complete_bipartition(), Some((vec![0, 1], vec![2, 3])));
    }

    #[test]
    fn path_is_not_complete_bipartite() {
        let p = LabeledGraph::path(4).predicates();
        assert!(p.connected);
        assert!(p.forest);
        assert_eq!(p.complete_bipartite, None);
    }

    #[test]
    fn outerplanarity_by_minors() {
        assert!(!LabeledGraph::complete(4).is_outerplanar());
        assert!(!LabeledGraph::complete_bipartite(2, 3).is_outerplanar());
        assert!(LabeledGraph::cycle(6).is_outerplanar());
        // K4 minus an edge is outerplanar
        let mut g = LabeledGraph::complete(4);
        g.remove_edge(0, 1);
        assert!(g.is_outerplanar());
        // Subdivided K4 is not
        let mut s = LabeledGraph::numbered(5);
        for &(u, v) in &[(0, 1), (0, 2), (0, 4), (4, 3), (1, 2), (1, 3), (2, 3)] {
            s.add_edge(u, v);
        }
        assert!(s.has_k4_minor());
        assert!(!LabeledGraph::wheel(6).is_outerplanar());
    }

    #[test]
    fn wheel_and_embedding() {
        let w = LabeledGraph::wheel(6);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(w.degree(5), 5);
        assert!(LabeledGraph::cycle(5).embedding_into(&w).is_some());
        assert!(LabeledGraph::complete(4).embedding_into(&w).is_none());
    }

    #[test]
    fn dot_roundtrip() {
        let g = LabeledGraph::with_edges(
            vec!["{1,2}".into(), "{2,3}".into(), "x \"y\"".into()],
            &[(0, 1), (1, 2)],
        );
        let back = LabeledGraph::from_dot(&g.to_dot("t")).unwrap();
        assert_eq!(back, g);
        let chain = LabeledGraph::from_dot("graph { a -- b -- c; d [shape=box]; }").unwrap();
        assert_eq!(chain.edge_count(), 2);
        assert_eq!(chain.vertex_count(), 4);
        assert!(LabeledGraph::from_dot("digraph { a -> b }").is_err());
    }

    #[test]
    fn matrix_graphs() {
        let j = SymMatrix::ones(6);
        assert_eq!(graph_of(&j), LabeledGraph::complete(6));
        assert_eq!(graph_minus_one(&SymMatrix::identity(3)).edge_count(), 0);
    }
}
