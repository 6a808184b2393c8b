//! Minimum degree, connectivity and minimum cut sets across the supported
//! group families.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, VertexSet};
use crate::groups::{Element, GroupSpec};
use crate::powergraph::PowerGraphBundle;

use super::cyclic::{self, MinDegreeClause};

/// Closed-form minimum degree, where the family has one.
pub fn min_degree_closed_form(spec: &GroupSpec) -> Result<Option<u64>> {
    spec.validate()?;
    Ok(match spec {
        GroupSpec::Cyclic { n } => cyclic::cyclic_min_degree_closed_form(*n)?.map(|c| c.value),
        GroupSpec::AbelianP { .. } => spec.tau().map(|t| t - 1),
        GroupSpec::Dihedral { .. } => Some(1),
        GroupSpec::Dicyclic { .. } => Some(3),
    })
}

/// Closed-form vertex connectivity, where the family has one.
pub fn kappa_closed_form(spec: &GroupSpec) -> Result<Option<u64>> {
    spec.validate()?;
    Ok(match spec {
        GroupSpec::Cyclic { n } => {
            let f = arith::factorize(*n)?;
            match f.distinct() {
                0 | 1 => Some(n - 1),
                2 => Some(cyclic::kappa_closed_form_cyclic(*n)?),
                _ => None,
            }
        }
        GroupSpec::AbelianP { .. } if spec.is_cyclic() => Some(spec.order()? - 1),
        GroupSpec::AbelianP { .. } | GroupSpec::Dihedral { .. } => Some(1),
        GroupSpec::Dicyclic { .. } => Some(2),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaDeltaClass {
    pub value: bool,
    pub reason: String,
}

/// Decides whether vertex connectivity equals minimum degree.
pub fn kappa_delta_equal(spec: &GroupSpec) -> Result<KappaDeltaClass> {
    spec.validate()?;
    let class = |value, reason: &str| Ok(KappaDeltaClass { value, reason: reason.to_string() });
    if spec.is_cyclic_prime_power() || spec.order()? == 1 {
        return class(true, "cyclic of prime-power order: the power graph is complete");
    }
    if spec.order()? % 2 == 1 {
        return class(false, "odd order and not cyclic of prime-power order: no vertex of order 2 attains the minimum degree");
    }
    match spec {
        GroupSpec::Cyclic { n } => {
            if cyclic::kappa_delta_classify_cyclic(*n)?.0 {
                class(true, "cyclic of order 2q^b with q an odd prime")
            } else {
                class(false, "cyclic of order neither a prime power nor 2q^b")
            }
        }
        GroupSpec::AbelianP { .. } if spec.is_cyclic() => class(true, "cyclic p-group: the power graph is complete"),
        GroupSpec::AbelianP { .. } if spec.tau() == Some(2) => {
            class(true, "non-cyclic abelian 2-group with a Z_2 factor: connectivity 1 = tau - 1")
        }
        GroupSpec::AbelianP { .. } => class(false, "non-cyclic abelian p-group with tau > 2: connectivity 1 < tau - 1"),
        GroupSpec::Dihedral { .. } => class(true, "dihedral: connectivity and minimum degree are both 1"),
        GroupSpec::Dicyclic { .. } => class(false, "dicyclic: connectivity 2 < minimum degree 3"),
    }
}

/// A minimum disconnecting set `E[x, N(x)]` around a minimum-degree vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectingWitness {
    pub vertex: usize,
    pub edges: EdgeSet,
    /// How `N(x)` decomposes into cyclic subgroups and generator classes,
    /// when a closed form describes it.
    pub description: Option<String>,
}

/// The witness vertex of the family's closed form, falling back to the
/// lowest-index minimum-degree vertex.
fn closed_form_vertex(bundle: &PowerGraphBundle) -> Result<Option<usize>> {
    let spec = bundle.spec();
    let v = match spec {
        GroupSpec::Cyclic { n } => cyclic::cyclic_min_degree_closed_form(*n)?.map(|c| (c.witness % n) as usize),
        GroupSpec::AbelianP { exponents, .. } => {
            // generator of the smallest cyclic factor, exponents being ascending
            let mut coords = vec![0; exponents.len()];
            coords[0] = 1;
            bundle.vertex_of(&Element::AbelianP(coords))
        }
        GroupSpec::Dihedral { .. } => bundle.vertex_of(&Element::Dihedral { i: 0, flip: true }),
        GroupSpec::Dicyclic { .. } => bundle.vertex_of(&Element::Dicyclic { i: 0, flip: true }),
    };
    Ok(v)
}

/// The neighbourhood of the closed-form witness as the union of cyclic
/// subgroups and generator classes it is built from, for cyclic groups.
pub fn cyclic_witness_neighbourhood(n: u64) -> Result<Option<(u64, Vec<u64>, String)>> {
    let Some(cf) = cyclic::cyclic_min_degree_closed_form(n)? else {
        return Ok(None);
    };
    if cf.clause == MinDegreeClause::PrimePower {
        return Ok(None);
    }
    let f = arith::factorize(n)?;
    let c = cf.witness;
    let subgroup = |d: u64| (0..n).filter(move |x| x % d == 0);
    let mut classes: Vec<u64> = match cf.clause {
        MinDegreeClause::TwoPrimePowers => {
            let (p2, a2) = f.pairs()[1];
            (0..a2).map(|i| p2.pow(i)).collect()
        }
        MinDegreeClause::FourPrimesTopPair => {
            let (p3, p4) = (f.pairs()[2].0, f.pairs()[3].0);
            vec![1, p3, p4]
        }
        _ => vec![1],
    };
    classes.sort_unstable();
    let mut set: Vec<u64> = subgroup(c).collect();
    for &d in &classes {
        set.extend(cyclic::residue_class(n, d));
    }
    set.retain(|&x| x != c);
    set.sort_unstable();
    set.dedup();
    let parts: Vec<String> = classes.iter().map(|d| format!("[{d}]")).collect();
    let description = format!("N({c}) = <{c}> ∪ {} - {c}", parts.join(" ∪ "));
    Ok(Some((c, set, description)))
}

/// A minimum disconnecting set: all edges at a minimum-degree vertex.
pub fn min_disconnecting_set(bundle: &PowerGraphBundle) -> Result<DisconnectingWitness> {
    let g = bundle.graph();
    if g.vertex_count() < 2 {
        return Err(Error::Precondition(format!("{} has a single vertex and no edges", bundle.spec())));
    }
    let (delta, fallback) = g.min_degree()?;
    let vertex = match closed_form_vertex(bundle)? {
        Some(v) if g.degree(v)? == delta => v,
        _ => fallback,
    };
    let description = match bundle.spec() {
        GroupSpec::Cyclic { n } => cyclic_witness_neighbourhood(*n)?.map(|(_, _, d)| d),
        GroupSpec::AbelianP { .. } => Some(format!("N({0}) = <{0}> - {0}", g.label(vertex))),
        GroupSpec::Dihedral { .. } => Some(format!("N({}) = {{e}}", g.label(vertex))),
        GroupSpec::Dicyclic { n } => Some(format!("N({}) = {{e, a^{n}, a^{n}*b}}", g.label(vertex))),
    };
    Ok(DisconnectingWitness { vertex, edges: g.incident_edges(vertex)?, description })
}

/// A minimum separating set from the family's closed form: the literal
/// set `{0} ∪ ⋃[a]` for cyclic `Z_(2q^b)`, `{e}` for dihedral groups and
/// non-cyclic abelian p-groups, `{e, a^n}` for dicyclic groups. `None`
/// when the graph is complete or no closed form applies.
pub fn min_separating_set_closed_form(bundle: &PowerGraphBundle) -> Result<Option<VertexSet>> {
    let spec = bundle.spec();
    if bundle.graph().is_complete() {
        return Ok(None);
    }
    let e = bundle.identity_vertex();
    Ok(match spec {
        GroupSpec::Cyclic { n } => match cyclic::min_separating_set_cyclic(*n) {
            Ok(set) => Some(set.into_iter().map(|x| x as usize).collect()),
            Err(_) => None,
        },
        GroupSpec::AbelianP { .. } | GroupSpec::Dihedral { .. } => Some([e].into_iter().collect()),
        GroupSpec::Dicyclic { n } => {
            let an = bundle.vertex_of(&Element::Dicyclic { i: *n, flip: false }).expect("a^n is in the group");
            Some([e, an].into_iter().collect())
        }
    })
}
