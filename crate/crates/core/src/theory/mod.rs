//! Closed forms for minimum degree and connectivity of power graphs, and
//! the report that checks them against the graph.

pub mod cyclic;
pub mod families;
mod report;

pub use cyclic::{
    cyclic_min_degree_closed_form, degcompare_check, degree_formula_cyclic, eta_bounds, four_prime_threshold_holds,
    kappa_closed_form_cyclic, kappa_delta_classify_cyclic, min_degree_cyclic, min_separating_set_cyclic,
    residue_class, CyclicMinDegree, DegCompareClause, DegreeComparison, MinDegreeClause,
};
pub use families::{
    cyclic_witness_neighbourhood, kappa_closed_form, kappa_delta_equal, min_degree_closed_form,
    min_disconnecting_set, min_separating_set_closed_form, DisconnectingWitness, KappaDeltaClass,
};
pub use report::{
    analyze, analyze_bundle, AnalysisReport, AnalyzeOptions, KappaMode, Provenance, ProvenanceMap, Witnesses,
    EDGE_CONNECTIVITY_LIMIT, KAPPA_AUTO_LIMIT, SCHEMA_VERSION,
};
