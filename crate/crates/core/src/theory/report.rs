use serde::Serialize;

use crate::error::Result;
use crate::graph::VertexSet;
use crate::groups::GroupSpec;
use crate::powergraph::{build_power_graph, PowerGraphBundle, DEFAULT_VERTEX_CAP};

use super::cyclic;
use super::families::{self, KappaDeltaClass};

pub const SCHEMA_VERSION: u32 = 1;

/// Vertex connectivity is computed unprompted up to this order.
pub const KAPPA_AUTO_LIMIT: u64 = 300;

/// Edge connectivity is computed by min cut up to this order; above it the
/// value is taken from `edge connectivity = minimum degree`.
pub const EDGE_CONNECTIVITY_LIMIT: u64 = 1000;

/// Where a reported value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Algorithmic,
    BothAgree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProvenanceMap {
    pub delta: Provenance,
    pub kappa_prime: Provenance,
    pub kappa: Option<Provenance>,
    pub eta1: Option<Provenance>,
    pub eta2: Option<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Edges of a minimum disconnecting set, as label pairs.
    pub min_disconnecting: Option<Vec<[String; 2]>>,
    /// Vertices of a minimum separating set, as labels.
    pub min_separating: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub spec: GroupSpec,
    pub delta: u64,
    pub delta_witness: String,
    pub kappa_prime: u64,
    pub kappa: Option<u64>,
    pub eta1: Option<u64>,
    pub eta2: Option<u64>,
    pub kappa_equals_delta: KappaDeltaClass,
    pub witnesses: Witnesses,
    pub provenance: ProvenanceMap,
    pub notes: Vec<String>,
    /// Disagreements between a closed form and the graph; empty when all
    /// checks pass.
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaMode {
    /// Compute up to [`KAPPA_AUTO_LIMIT`].
    Auto,
    Always,
    Never,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub vertex_cap: usize,
    pub kappa: KappaMode,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { vertex_cap: DEFAULT_VERTEX_CAP, kappa: KappaMode::Auto }
    }
}

fn agree(closed: Option<u64>, computed: u64, what: &str, violations: &mut Vec<String>) -> Provenance {
    match closed {
        None => Provenance::Algorithmic,
        Some(c) if c == computed => Provenance::BothAgree,
        Some(c) => {
            violations.push(format!("{what}: closed form {c}, graph {computed}"));
            Provenance::Algorithmic
        }
    }
}

/// Builds the power graph of `spec` and reports its minimum degree, edge
/// and vertex connectivity with witnesses, cross-checking every closed
/// form that applies against the graph.
pub fn analyze(spec: &GroupSpec, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let bundle = build_power_graph(spec, options.vertex_cap)?;
    analyze_bundle(&bundle, options.kappa)
}

pub fn analyze_bundle(bundle: &PowerGraphBundle, kappa_mode: KappaMode) -> Result<AnalysisReport> {
    let spec = bundle.spec();
    let g = bundle.graph();
    let order = g.vertex_count() as u64;
    let mut notes = Vec::new();
    let mut violations = Vec::new();

    if g.is_complete() {
        notes.push("complete graph".to_string());
    }

    // minimum degree
    let (delta_graph, _) = g.min_degree()?;
    let delta_graph = delta_graph as u64;
    let mut delta_closed = families::min_degree_closed_form(spec)?;
    if let (GroupSpec::Cyclic { n }, None) = (spec, delta_closed) {
        delta_closed = Some(cyclic::min_degree_cyclic(*n)?.0);
    }
    let delta_prov = agree(delta_closed, delta_graph, "minimum degree", &mut violations);
    let delta = delta_graph;

    // edge connectivity
    let (kappa_prime, kappa_prime_prov) = if order <= EDGE_CONNECTIVITY_LIMIT {
        let kp = g.edge_connectivity() as u64;
        (kp, agree(Some(delta), kp, "edge connectivity vs minimum degree", &mut violations))
    } else {
        notes.push(format!("edge connectivity taken equal to minimum degree above {EDGE_CONNECTIVITY_LIMIT} vertices"));
        (delta, Provenance::ClosedForm)
    };

    // vertex connectivity
    let kappa_closed = families::kappa_closed_form(spec)?;
    let run_kappa = match kappa_mode {
        KappaMode::Auto => order <= KAPPA_AUTO_LIMIT,
        KappaMode::Always => true,
        KappaMode::Never => false,
    };
    let (kappa, kappa_prov) = if run_kappa {
        // the quotient by closed twins gives the same value much faster on large graphs
        let k = if order <= KAPPA_AUTO_LIMIT { g.vertex_connectivity() } else { g.vertex_connectivity_twin_reduced() } as u64;
        if k > kappa_prime {
            violations.push(format!("vertex connectivity {k} exceeds edge connectivity {kappa_prime}"));
        }
        (Some(k), Some(agree(kappa_closed, k, "vertex connectivity", &mut violations)))
    } else if let Some(k) = kappa_closed {
        (Some(k), Some(Provenance::ClosedForm))
    } else {
        notes.push("vertex connectivity not computed; pass the kappa option to force it".to_string());
        (None, None)
    };

    // eta bounds
    let (mut eta1, mut eta2, mut eta1_prov, mut eta2_prov) = (None, None, None, None);
    if let GroupSpec::Cyclic { n } = spec {
        let f = crate::arith::factorize(*n)?;
        if f.distinct() >= 2 {
            let (e1, e2) = cyclic::eta_bounds(*n)?;
            let r = f.distinct();
            let v1 = f.prime_power(r - 1) % n;
            let v2 = f.pairs()[r - 2].0 * f.pairs()[r - 1].0 % n;
            eta1_prov = Some(agree(Some(e1), g.degree(v1 as usize)? as u64, "eta1", &mut violations));
            eta2_prov = Some(agree(Some(e2), g.degree(v2 as usize)? as u64, "eta2", &mut violations));
            for (name, e) in [("eta1", e1), ("eta2", e2)] {
                if delta > e {
                    violations.push(format!("minimum degree {delta} exceeds {name} = {e}"));
                }
            }
            (eta1, eta2) = (Some(e1), Some(e2));
        }
    }

    // equality of vertex connectivity and minimum degree
    let kappa_equals_delta = families::kappa_delta_equal(spec)?;
    if let (Some(k), Some(Provenance::Algorithmic | Provenance::BothAgree)) = (kappa, kappa_prov) {
        if (k == delta) != kappa_equals_delta.value {
            violations.push(format!(
                "classification says equality is {}, graph has connectivity {k} and minimum degree {delta}",
                kappa_equals_delta.value
            ));
        }
    }

    // witnesses
    let mut delta_witness = g.label(g.min_degree()?.1).to_string();
    let mut min_disconnecting = None;
    if order >= 2 {
        let w = families::min_disconnecting_set(bundle)?;
        delta_witness = g.label(w.vertex).to_string();
        if w.edges.len() as u64 != kappa_prime || !g.is_disconnecting(&w.edges)? {
            violations.push(format!("edges at {delta_witness} do not form a minimum disconnecting set"));
        }
        if let (GroupSpec::Cyclic { n }, Some(desc)) = (spec, &w.description) {
            if let Some((c, set, _)) = families::cyclic_witness_neighbourhood(*n)? {
                let got: Vec<u64> = g.neighbors(c as usize).iter().map(|&v| v as u64).collect();
                if got != set {
                    violations.push(format!("neighbourhood of {c} differs from {desc}"));
                }
            }
        }
        if let Some(desc) = w.description {
            notes.push(desc);
        }
        min_disconnecting = Some(w.edges.iter().map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]).collect());
    }

    let separating: Option<VertexSet> = match families::min_separating_set_closed_form(bundle)? {
        Some(set) => {
            if !g.is_separating(&set)? {
                violations.push("closed-form separating set does not disconnect the graph".to_string());
            }
            if let Some(k) = kappa {
                if set.len() as u64 != k {
                    violations.push(format!("closed-form separating set has {} vertices, connectivity is {k}", set.len()));
                }
            }
            Some(set)
        }
        None if run_kappa && order <= KAPPA_AUTO_LIMIT => g.minimum_separating_set().filter(|s| !s.is_empty()),
        None => None,
    };
    let min_separating = separating.map(|s| s.iter().map(|v| g.label(v).to_string()).collect());

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        spec: spec.clone(),
        delta,
        delta_witness,
        kappa_prime,
        kappa,
        eta1,
        eta2,
        kappa_equals_delta,
        witnesses: Witnesses { min_disconnecting, min_separating },
        provenance: ProvenanceMap { delta: delta_prov, kappa_prime: kappa_prime_prov, kappa: kappa_prov, eta1: eta1_prov, eta2: eta2_prov },
        notes,
        violations,
    })
}

impl AnalysisReport {
    /// Plain `key: value` lines.
    pub fn to_text(&self) -> String {
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
        line("spec", self.spec.to_string());
        line("delta", format!("{} at {}", self.delta, self.delta_witness));
        line("kappa_prime", self.kappa_prime.to_string());
        line("kappa", opt(self.kappa));
        line("eta1", opt(self.eta1));
        line("eta2", opt(self.eta2));
        line("kappa_equals_delta", format!("{} ({})", self.kappa_equals_delta.value, self.kappa_equals_delta.reason));
        if let Some(edges) = &self.witnesses.min_disconnecting {
            let parts: Vec<String> = edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            line("min_disconnecting", parts.join(" "));
        }
        if let Some(set) = &self.witnesses.min_separating {
            line("min_separating", set.join(" "));
        }
        for note in &self.notes {
            line("note", note.clone());
        }
        for v in &self.violations {
            line("violation", v.clone());
        }
        out
    }
}
