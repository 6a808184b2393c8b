//! Immutable simple undirected graphs and exact connectivity algorithms.

mod connectivity;
mod flow;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub use connectivity::stoer_wagner;
pub use flow::FlowNetwork;

/// Graphs with at most this many vertices also keep a dense bitset adjacency
/// matrix; larger ones answer adjacency queries from sorted neighbor lists.
pub const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix { words_per_row, bits: vec![0; words_per_row * n] }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
    }
}

/// Simple undirected graph on vertices `0..n` with a display label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    neighbors: Vec<Vec<usize>>,
    matrix: Option<BitMatrix>,
    edge_count: usize,
}

/// Unordered vertex pairs, stored as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        self.0.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut set = EdgeSet::new();
        for (u, v) in iter {
            set.insert(u, v);
        }
        set
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse, self-loops
    /// and out-of-range endpoints are rejected. Labels default to indices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].push(v);
            sets[v].push(u);
        }
        for list in &mut sets {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists((0..n).map(|v| v.to_string()).collect(), sets))
    }

    /// Builds a graph from a symmetric adjacency predicate over `0..n`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut lists = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    lists[u].push(v);
                    lists[v].push(u);
                }
            }
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        Self::from_sorted_lists((0..n).map(|v| v.to_string()).collect(), lists)
    }

    /// Neighbor lists must be sorted, deduplicated, loop-free and symmetric.
    pub(crate) fn from_sorted_lists(labels: Vec<String>, neighbors: Vec<Vec<usize>>) -> Graph {
        let n = neighbors.len();
        debug_assert_eq!(labels.len(), n);
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= DENSE_LIMIT).then(|| {
            let mut m = BitMatrix::new(n);
            for (u, list) in neighbors.iter().enumerate() {
                for &v in list {
                    m.set(u, v);
                }
            }
            m
        });
        Graph { labels, neighbors, matrix, edge_count }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| false)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_dense(&self) -> bool {
        self.matrix.is_some()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return false;
        }
        match &self.matrix {
            Some(m) => m.get(u, v),
            None => self.neighbors[u].binary_search(&v).is_ok(),
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].len())
    }

    /// Minimum degree and the lowest-indexed vertex attaining it.
    pub fn min_degree(&self) -> Result<(usize, usize)> {
        self.neighbors
            .iter()
            .enumerate()
            .map(|(v, list)| (list.len(), v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.neighbors.iter().all(|list| list.len() + 1 == n)
    }

    /// Number of common neighbors of `u` and `v` (dense graphs use popcounts).
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        match &self.matrix {
            Some(m) => m.row(u).iter().zip(m.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum(),
            None => self.neighbors[u].iter().filter(|w| self.neighbors[v].binary_search(w).is_ok()).count(),
        }
    }

    /// Connected components, each listed in ascending vertex order, ordered
    /// by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_filtered(|_| true, |_, _| true)
    }

    fn components_filtered(
        &self,
        keep_vertex: impl Fn(usize) -> bool,
        keep_edge: impl Fn(usize, usize) -> bool,
    ) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] || !keep_vertex(start) {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = VertexSet::new();
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.neighbors[u] {
                    if !seen[w] && keep_vertex(w) && keep_edge(u, w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff removing the edges of `s` increases the number of components.
    pub fn is_disconnecting(&self, s: &EdgeSet) -> Result<bool> {
        for (u, v) in s.iter() {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let before = self.components().len();
        let after = self.components_filtered(|_| true, |u, v| !s.contains(u, v)).len();
        Ok(after > before)
    }

    /// True iff removing `s` leaves a nonempty graph with more components
    /// than the original.
    pub fn is_separating(&self, s: &VertexSet) -> Result<bool> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        if s.len() >= self.vertex_count() {
            return Ok(false);
        }
        let before = self.components().len();
        let after = self.components_filtered(|v| !s.contains(v), |_, _| true).len();
        Ok(after > before)
    }

    /// Edges between `v` and its neighborhood, i.e. `E[v, N(v)]`.
    pub fn incident_edges(&self, v: usize) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].iter().map(|&w| (v, w)).collect())
    }

    /// Induced subgraph on `keep` (any order, duplicates ignored); vertex `k`
    /// of the result is the `k`-th smallest kept vertex and keeps its label.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        let n = self.vertex_count();
        let mut new_index = vec![usize::MAX; n];
        for (k, v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            new_index[v] = k;
        }
        let mut labels = Vec::with_capacity(keep.len());
        let mut lists = Vec::with_capacity(keep.len());
        for v in keep.iter() {
            labels.push(self.labels[v].clone());
            lists.push(
                self.neighbors[v]
                    .iter()
                    .filter_map(|&w| (new_index[w] != usize::MAX).then_some(new_index[w]))
                    .collect(),
            );
        }
        Ok(Graph::from_sorted_lists(labels, lists))
    }

    /// The graph with the vertices of `s` deleted.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        let keep: VertexSet = (0..self.vertex_count()).filter(|v| !s.contains(*v)).collect();
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        self.induced_subgraph(&keep)
    }

    pub fn remove_edges(&self, s: &EdgeSet) -> Result<Graph> {
        for (u, v) in s.iter() {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        let lists = (0..self.vertex_count())
            .map(|u| self.neighbors[u].iter().copied().filter(|&w| !s.contains(u, w)).collect())
            .collect();
        Ok(Graph::from_sorted_lists(self.labels.clone(), lists))
    }

    /// Graphviz DOT with vertex labels, vertices and edges in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", escape(name));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(label));
        }
        for u in 0..self.vertex_count() {
            for &v in self.neighbors[u].iter().filter(|&&v| v > u) {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }

    /// Closed-neighborhood twin classes: `u` and `v` share a class iff
    /// `N[u] = N[v]`. Classes are ordered by smallest member.
    pub fn closed_twin_classes(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for u in 0..n {
            if class_of[u] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[u] = id;
            let mut members = vec![u];
            let du = self.neighbors[u].len();
            for &v in &self.neighbors[u] {
                if v > u
                    && class_of[v] == usize::MAX
                    && self.neighbors[v].len() == du
                    && self.common_neighbors(u, v) + 1 == du
                {
                    class_of[v] = id;
                    members.push(v);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Set of edges as normalized pairs, mainly for tests.
    pub fn edge_set(&self) -> HashSet<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_examples() {
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| k4.degree(v) == Ok(3)));
        assert_eq!(Graph::empty(1).degree(0), Ok(0));
        assert_eq!(k4.degree(4), Err(Error::VertexOutOfRange { vertex: 4, count: 4 }));
    }

    #[test]
    fn min_degree_tie_breaks_low() {
        assert_eq!(Graph::complete(5).min_degree(), Ok((4, 0)));
        assert_eq!(Graph::path(4).min_degree(), Ok((1, 0)));
        assert_eq!(Graph::empty(0).min_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn components_examples() {
        let comps = Graph::empty(3).components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let comps: Vec<Vec<usize>> = g.components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn from_edges_validation() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, count: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn disconnecting_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.is_disconnecting(&[(0, 1)].into_iter().collect()), Ok(false));
        assert_eq!(k3.is_disconnecting(&[(0, 1), (0, 2)].into_iter().collect()), Ok(true));
        let p = Graph::path(3);
        assert_eq!(p.is_disconnecting(&[(0, 2)].into_iter().collect()), Err(Error::NotAnEdge(0, 2)));
        assert_eq!(p.is_disconnecting(&EdgeSet::new()), Ok(false));
    }

    #[test]
    fn separating_examples() {
        let p = Graph::path(3);
        assert_eq!(p.is_separating(&[1].into_iter().collect()), Ok(true));
        assert_eq!(p.is_separating(&VertexSet::new()), Ok(false));
        assert_eq!(p.is_separating(&[0].into_iter().collect()), Ok(false));
        assert_eq!(Graph::complete(4).is_separating(&[0, 1, 2].into_iter().collect()), Ok(false));
        assert!(p.is_separating(&[7].into_iter().collect()).is_err());
    }

    #[test]
    fn induced_and_removal() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced_subgraph(&[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.labels(), &["1", "2", "3"]);
        assert_eq!(h.edge_count(), 2);
        let r = g.remove_edges(&[(0, 1)].into_iter().collect()).unwrap();
        assert_eq!(r.edge_count(), 3);
        assert!(!r.has_edge(1, 0));
    }

    #[test]
    fn dot_output_is_deterministic() {
        let g = Graph::path(3).with_labels(vec!["e".into(), "a\"b".into(), "x".into()]).unwrap();
        let dot = g.to_dot("P3");
        assert_eq!(
            dot,
            "graph \"P3\" {\n  0 [label=\"e\"];\n  1 [label=\"a\\\"b\"];\n  2 [label=\"x\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn twin_classes() {
        // triangle 0-1-2 with a pendant 3 hanging off 2
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.closed_twin_classes(), vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(Graph::complete(4).closed_twin_classes(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn sparse_graphs_answer_adjacency_from_lists() {
        let n = DENSE_LIMIT + 1;
        let g = Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap();
        assert!(!g.is_dense());
        assert!(g.has_edge(0, n - 1) && !g.has_edge(1, 2));
        assert_eq!(g.common_neighbors(1, 2), 1);
    }
}
