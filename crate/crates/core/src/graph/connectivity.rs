//! Exact edge- and vertex-connectivity.
//!
//! Edge-connectivity has two independent routes: a Stoer-Wagner global
//! minimum cut and a family of unit-capacity maximum flows from a fixed
//! vertex. Vertex connectivity uses vertex-split maximum flows over the
//! Esfahanian-Hakimi pair family, optionally on the quotient by closed-twin
//! classes.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::flow::{FlowNetwork, UNBOUNDED};
use super::{EdgeSet, Graph, VertexSet};

/// Stoer-Wagner minimum cut of a symmetric weight matrix.
///
/// Returns the cut weight and the vertices on one side. Graphs with fewer
/// than two vertices have cut weight 0 and an empty side.
pub fn stoer_wagner(weights: &[Vec<u64>]) -> (u64, Vec<usize>) {
    let n = weights.len();
    if n < 2 {
        return (0, Vec::new());
    }
    let mut w: Vec<Vec<u64>> = weights.to_vec();
    // members[v]: original vertices merged into super-vertex v
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = (u64::MAX, Vec::new());

    while alive.len() > 1 {
        let m = alive.len();
        let mut key = vec![0u64; m];
        let mut added = vec![false; m];
        let mut prev = 0;
        let mut last = 0;
        for step in 0..m {
            let mut pick = usize::MAX;
            for i in 0..m {
                if !added[i] && (pick == usize::MAX || key[i] > key[pick]) {
                    pick = i;
                }
            }
            added[pick] = true;
            if step == m - 1 {
                last = pick;
                if key[pick] < best.0 {
                    best = (key[pick], members[alive[pick]].clone());
                }
            } else {
                prev = pick;
                let row = &w[alive[pick]];
                for i in 0..m {
                    if !added[i] {
                        key[i] += row[alive[i]];
                    }
                }
            }
        }
        let (s, t) = (alive[prev], alive[last]);
        let moved = std::mem::take(&mut members[t]);
        members[s].extend(moved);
        for &v in &alive {
            let add = w[t][v];
            w[s][v] += add;
            w[v][s] = w[s][v];
        }
        w[s][s] = 0;
        alive.remove(last);
    }
    best.1.sort_unstable();
    best
}

impl Graph {
    fn weight_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut w = vec![vec![0u64; n]; n];
        for (u, row) in w.iter_mut().enumerate() {
            for &v in self.neighbors(u) {
                row[v] = 1;
            }
        }
        w
    }

    /// Edge-connectivity via Stoer-Wagner; 0 for trivial or disconnected
    /// graphs.
    pub fn edge_connectivity(&self) -> usize {
        if self.vertex_count() < 2 {
            return 0;
        }
        stoer_wagner(&self.weight_matrix()).0 as usize
    }

    /// A minimum disconnecting set read off the Stoer-Wagner cut, or `None`
    /// for graphs with fewer than two vertices.
    pub fn min_edge_cut(&self) -> Option<EdgeSet> {
        if self.vertex_count() < 2 {
            return None;
        }
        let (_, side) = stoer_wagner(&self.weight_matrix());
        let mut inside = vec![false; self.vertex_count()];
        side.iter().for_each(|&v| inside[v] = true);
        Some(
            side.iter()
                .flat_map(|&u| self.neighbors(u).iter().filter(|&&v| !inside[v]).map(move |&v| (u, v)))
                .collect(),
        )
    }

    fn edge_network(&self) -> FlowNetwork {
        let mut net = FlowNetwork::new(self.vertex_count());
        for u in 0..self.vertex_count() {
            for &v in self.neighbors(u).iter().filter(|&&v| v > u) {
                net.add_undirected(u, v, 1);
            }
        }
        net
    }

    /// Edge-connectivity as the minimum over `t` of the unit-capacity
    /// maximum flow between vertex 0 and `t`.
    pub fn edge_connectivity_by_flows(&self) -> usize {
        let n = self.vertex_count();
        if n < 2 {
            return 0;
        }
        let mut net = self.edge_network();
        let mut best = self.min_degree().map(|(d, _)| d as u64).unwrap_or(0);
        for t in 1..n {
            if best == 0 {
                break;
            }
            net.reset();
            best = best.min(net.max_flow(0, t, best));
        }
        best as usize
    }

    /// Vertex-split network: vertex `v` becomes `2v -> 2v + 1` with capacity
    /// `weight[v]`, and each edge `{u, v}` becomes unbounded arcs
    /// `2u + 1 -> 2v` and `2v + 1 -> 2u`.
    fn split_network(&self, weight: impl Fn(usize) -> u64) -> FlowNetwork {
        let n = self.vertex_count();
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, weight(v));
        }
        for u in 0..n {
            for &v in self.neighbors(u).iter().filter(|&&v| v > u) {
                net.add_arc(2 * u + 1, 2 * v, UNBOUNDED);
                net.add_arc(2 * v + 1, 2 * u, UNBOUNDED);
            }
        }
        net
    }

    /// Minimum number of vertices separating non-adjacent `s` and `t`.
    pub fn local_vertex_connectivity(&self, s: usize, t: usize) -> crate::Result<usize> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t || self.has_edge(s, t) {
            return Err(crate::Error::Precondition(format!("vertices {s} and {t} must be distinct and non-adjacent")));
        }
        let mut net = self.split_network(|_| 1);
        Ok(net.max_flow(2 * s + 1, 2 * t, UNBOUNDED) as usize)
    }

    /// Pairs whose local connectivities have the vertex connectivity as
    /// their minimum: a minimum-degree vertex `v` against each non-neighbor,
    /// plus each non-adjacent pair of neighbors of `v`.
    fn esfahanian_hakimi_pairs(&self) -> Vec<(usize, usize)> {
        let Ok((_, v)) = self.min_degree() else { return Vec::new() };
        let mut pairs: Vec<(usize, usize)> =
            (0..self.vertex_count()).filter(|&w| w != v && !self.has_edge(v, w)).map(|w| (v, w)).collect();
        let nb = self.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !self.has_edge(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        pairs
    }

    fn min_over_pairs(&self, net: &FlowNetwork, pairs: &[(usize, usize)], start: u64) -> u64 {
        let best = AtomicU64::new(start);
        pairs.par_iter().for_each_init(
            || net.clone(),
            |net, &(s, t)| {
                let limit = best.load(Ordering::Relaxed);
                if limit == 0 {
                    return;
                }
                net.reset();
                let f = net.max_flow(2 * s + 1, 2 * t, limit);
                best.fetch_min(f, Ordering::Relaxed);
            },
        );
        best.into_inner()
    }

    /// Vertex connectivity: 0 for disconnected or trivial graphs, `n - 1`
    /// for `K_n`, otherwise the minimum vertex-split max flow over the
    /// Esfahanian-Hakimi pairs. Pairs are processed in parallel, each flow
    /// capped by the best value found so far.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let net = self.split_network(|_| 1);
        let delta = self.min_degree().map(|(d, _)| d as u64).unwrap_or(0);
        self.min_over_pairs(&net, &self.esfahanian_hakimi_pairs(), delta) as usize
    }

    /// Same value as [`Graph::vertex_connectivity`], computed on the quotient
    /// by closed-twin classes with class sizes as vertex capacities.
    ///
    /// Minimal separators never split a closed-twin class, so the weighted
    /// quotient has the same minimum separator weight. Power graphs collapse
    /// to a handful of classes, which makes this route much cheaper there.
    pub fn vertex_connectivity_twin_reduced(&self) -> usize {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        let classes = self.closed_twin_classes();
        let mut class_of = vec![0; n];
        for (c, members) in classes.iter().enumerate() {
            members.iter().for_each(|&v| class_of[v] = c);
        }
        let lists: Vec<Vec<usize>> = classes
            .iter()
            .map(|members| {
                let mut l: Vec<usize> = self.neighbors(members[0]).iter().map(|&w| class_of[w]).collect();
                l.sort_unstable();
                l.dedup();
                l.retain(|&c| c != class_of[members[0]]);
                l
            })
            .collect();
        let labels = (0..classes.len()).map(|c| c.to_string()).collect();
        let quotient = Graph::from_sorted_lists(labels, lists);
        let net = quotient.split_network(|c| classes[c].len() as u64);
        let delta = self.min_degree().map(|(d, _)| d as u64).unwrap_or(0);
        quotient.min_over_pairs(&net, &quotient.esfahanian_hakimi_pairs(), delta) as usize
    }

    /// A minimum separating set, extracted from the residual network of a
    /// pair attaining the vertex connectivity. `None` for complete graphs
    /// and graphs with fewer than two vertices; empty for disconnected ones.
    pub fn minimum_separating_set(&self) -> Option<VertexSet> {
        let n = self.vertex_count();
        if n < 2 || self.is_complete() {
            return None;
        }
        if !self.is_connected() {
            return Some(VertexSet::new());
        }
        let kappa = self.vertex_connectivity() as u64;
        let mut net = self.split_network(|_| 1);
        for (s, t) in self.esfahanian_hakimi_pairs() {
            net.reset();
            if net.max_flow(2 * s + 1, 2 * t, kappa + 1) == kappa {
                let side = net.source_side(2 * s + 1);
                return Some((0..n).filter(|&v| side[2 * v] && !side[2 * v + 1]).collect());
            }
        }
        unreachable!("some pair attains the vertex connectivity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    #[test]
    fn trivial_and_complete() {
        assert_eq!(Graph::empty(1).edge_connectivity(), 0);
        assert_eq!(Graph::empty(1).vertex_connectivity(), 0);
        assert_eq!(Graph::complete(4).edge_connectivity(), 3);
        assert_eq!(Graph::complete(5).vertex_connectivity(), 4);
        assert_eq!(Graph::complete(5).vertex_connectivity_twin_reduced(), 4);
        assert_eq!(Graph::empty(3).edge_connectivity(), 0);
        assert_eq!(Graph::empty(3).vertex_connectivity(), 0);
        assert_eq!(Graph::complete(2).vertex_connectivity(), 1);
    }

    #[test]
    fn cycles_and_paths() {
        let c6 = cycle(6);
        assert_eq!(c6.edge_connectivity(), 2);
        assert_eq!(c6.edge_connectivity_by_flows(), 2);
        assert_eq!(c6.vertex_connectivity(), 2);
        assert_eq!(Graph::path(5).vertex_connectivity(), 1);
        assert_eq!(Graph::path(5).edge_connectivity(), 1);
    }

    #[test]
    fn petersen_graph() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(g.edge_connectivity(), 3);
        assert_eq!(g.vertex_connectivity(), 3);
        assert_eq!(g.vertex_connectivity_twin_reduced(), 3);
    }

    #[test]
    fn stoer_wagner_weighted() {
        // two heavy triangles joined by a light bridge of weight 2
        let mut w = vec![vec![0u64; 6]; 6];
        let mut put = |u: usize, v: usize, x: u64| {
            w[u][v] = x;
            w[v][u] = x;
        };
        put(0, 1, 5);
        put(1, 2, 5);
        put(0, 2, 5);
        put(3, 4, 5);
        put(4, 5, 5);
        put(3, 5, 5);
        put(2, 3, 2);
        let (cut, side) = stoer_wagner(&w);
        assert_eq!(cut, 2);
        assert!(side == vec![0, 1, 2] || side == vec![3, 4, 5]);
    }

    #[test]
    fn min_edge_cut_disconnects() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let cut = g.min_edge_cut().unwrap();
        assert_eq!(cut.iter().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(g.is_disconnecting(&cut), Ok(true));
    }

    #[test]
    fn separating_set_witness() {
        // two K3's sharing vertex 2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(g.vertex_connectivity(), 1);
        let s = g.minimum_separating_set().unwrap();
        assert_eq!(s.to_vec(), vec![2]);
        assert_eq!(g.is_separating(&s), Ok(true));
        assert_eq!(Graph::complete(3).minimum_separating_set(), None);
    }

    #[test]
    fn local_connectivity() {
        let c6 = cycle(6);
        assert_eq!(c6.local_vertex_connectivity(0, 3), Ok(2));
        assert!(c6.local_vertex_connectivity(0, 1).is_err());
        assert!(c6.local_vertex_connectivity(0, 0).is_err());
    }
}
