//! Dinic's maximum flow on integer capacities.

use std::collections::VecDeque;

/// Capacity used for arcs that must never be cut.
pub const UNBOUNDED: u64 = u64::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    initial: u64,
}

/// Residual network with paired arcs: arc `2k` and `2k + 1` are mutual reverses.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes], level: vec![0; nodes], cursor: vec![0; nodes] }
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    /// Adds `from -> to` with capacity `cap` and its zero-capacity reverse.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        self.add_pair(from, to, cap, 0);
    }

    /// Adds an undirected unit of capacity `cap` in each direction.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: u64) {
        self.add_pair(u, v, cap, cap);
    }

    fn add_pair(&mut self, from: usize, to: usize, forward: u64, backward: u64) {
        let k = self.arcs.len();
        self.arcs.push(Arc { to, cap: forward, initial: forward });
        self.arcs.push(Arc { to: from, cap: backward, initial: backward });
        self.out[from].push(k);
        self.out[to].push(k + 1);
    }

    /// Restores every arc to its initial capacity.
    pub fn reset(&mut self) {
        for arc in &mut self.arcs {
            arc.cap = arc.initial;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] == u32::MAX {
                    self.level[arc.to] = self.level[u] + 1;
                    if arc.to == t {
                        return true;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u64) -> u64 {
        if u == t {
            return pushed;
        }
        while self.cursor[u] < self.out[u].len() {
            let a = self.out[u][self.cursor[u]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    /// Maximum `s`-`t` flow, stopping early once it reaches `limit`.
    ///
    /// The result is `min(maxflow, limit)`; residual capacities are left in
    /// place so [`FlowNetwork::source_side`] can read the cut afterwards.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        assert_ne!(s, t, "source and sink coincide");
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            while flow < limit {
                let got = self.dfs(s, t, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}
