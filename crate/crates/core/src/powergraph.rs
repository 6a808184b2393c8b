//! Power graph construction and the derived graphs used by the closed forms.

use crate::arith;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::groups::{Element, GroupSpec};

pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// The power graph of a group together with its element labelling.
#[derive(Debug, Clone)]
pub struct PowerGraphBundle {
    spec: GroupSpec,
    elements: Vec<Element>,
    graph: Graph,
    identity_vertex: usize,
    /// `{0} ∪ generators` for cyclic groups.
    s_set: Option<VertexSet>,
}

/// Builds the power graph of `spec`: distinct `u`, `v` are adjacent iff one
/// lies in the cyclic subgroup generated by the other. Vertex `k` is the
/// `k`-th element of [`GroupSpec::elements`].
pub fn build_power_graph(spec: &GroupSpec, vertex_cap: usize) -> Result<PowerGraphBundle> {
    spec.validate()?;
    let order = spec.order()?;
    if order > vertex_cap as u64 {
        return Err(Error::VertexCapExceeded { order, cap: vertex_cap });
    }
    let elements = spec.elements()?;
    let n = elements.len();
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; words * n];
    for (u, x) in elements.iter().enumerate() {
        for y in spec.cyclic_subgroup(x)? {
            let v = spec.index_of(&y).expect("subgroup elements belong to the group");
            if v != u {
                bits[u * words + v / 64] |= 1 << (v % 64);
                bits[v * words + u / 64] |= 1 << (u % 64);
            }
        }
    }
    let lists = (0..n)
        .map(|u| (0..n).filter(|&v| bits[u * words + v / 64] >> (v % 64) & 1 == 1).collect())
        .collect();
    let labels = elements.iter().map(|x| spec.label(x)).collect();
    let graph = Graph::from_sorted_lists(labels, lists);
    let identity_vertex = spec.index_of(&spec.identity()).expect("identity belongs to the group");
    let s_set = match spec {
        GroupSpec::Cyclic { n } => Some((0..*n).filter(|&a| arith::gcd(a, *n) == 1 || a == 0).map(|a| a as usize).collect()),
        _ => None,
    };
    Ok(PowerGraphBundle { spec: spec.clone(), elements, graph, identity_vertex, s_set })
}

impl PowerGraphBundle {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, v: usize) -> &Element {
        &self.elements[v]
    }

    pub fn vertex_of(&self, x: &Element) -> Option<usize> {
        self.spec.index_of(x)
    }

    pub fn identity_vertex(&self) -> usize {
        self.identity_vertex
    }

    /// `{0} ∪ {generators}` for cyclic groups, `None` otherwise.
    pub fn s_set(&self) -> Option<&VertexSet> {
        self.s_set.as_ref()
    }

    pub fn label(&self, v: usize) -> &str {
        self.graph.label(v)
    }

    /// The power graph with the identity removed.
    pub fn proper_power_graph(&self) -> Graph {
        let keep: VertexSet = (0..self.graph.vertex_count()).filter(|&v| v != self.identity_vertex).collect();
        self.graph.induced_subgraph(&keep).expect("indices in range")
    }

    /// The subgraph induced on the non-generators other than `0`, for a
    /// cyclic group of composite order.
    pub fn tilde_graph(&self) -> Result<Graph> {
        let (GroupSpec::Cyclic { n }, Some(s)) = (&self.spec, &self.s_set) else {
            return Err(Error::Precondition(format!("{} is not cyclic", self.spec)));
        };
        if *n == 1 || arith::is_prime(*n) {
            return Err(Error::Precondition(format!("Z_{n} has no non-generators besides 0")));
        }
        let keep: VertexSet = (0..self.graph.vertex_count()).filter(|&v| !s.contains(v)).collect();
        self.graph.induced_subgraph(&keep)
    }
}
