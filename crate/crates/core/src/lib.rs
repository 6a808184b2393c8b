//! Power graphs of finite groups: minimum degree, edge-connectivity and
//! vertex connectivity, with every closed form checked against exact graph
//! algorithms.
//!
//! The power graph of a group `G` has the elements of `G` as vertices, and
//! two distinct elements are adjacent when one is a positive power of the
//! other. Supported groups are cyclic groups, abelian p-groups, dihedral
//! groups and dicyclic groups.

pub mod arith;
pub mod error;
pub mod graph;
pub mod groups;
pub mod powergraph;
pub mod sweep;
pub mod theory;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use groups::{Element, Family, GroupSpec};
pub use powergraph::{build_power_graph, PowerGraphBundle, DEFAULT_VERTEX_CAP};
pub use theory::{analyze, AnalysisReport, AnalyzeOptions, KappaMode};

/// Integer type used for group orders, degrees and closed forms.
pub type Int = u64;

/// Factorization over [`Int`].
pub type Factors = arith::Factorization<Int>;
