//! Range sweeps that check every closed form against the constructed graphs.

use std::cell::OnceCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, VertexSet};
use crate::groups::{abelian_p_groups, Element, Family, GroupSpec};
use crate::powergraph::{build_power_graph, PowerGraphBundle};
use crate::theory;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Degree formula against graph degrees for every non-generator.
    DegreeFormula,
    /// Min cut against minimum degree.
    EdgeConnectivity,
    /// Closed-form minimum degree against the graph.
    MinDegree,
    /// `delta >= phi(n) + 1`, with equality exactly at `n = 2p`.
    MinDegreeBound,
    /// Whether vertex connectivity equals minimum degree, and its value.
    KappaClassification,
    /// Vertex connectivity of `Z_(p^a q^b)`.
    ConnValue,
    /// Degree comparison clauses and the eta bounds.
    Inequalities,
    /// Connectedness, completeness and the components of the reduced graph.
    Structure,
    /// Minimum disconnecting and separating sets.
    Witnesses,
    /// Generator classes, element orders and coset partitions.
    GeneratorClasses,
    /// The divisor sum of phi against its closed form.
    EulerSum,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::DegreeFormula,
        Check::EdgeConnectivity,
        Check::MinDegree,
        Check::MinDegreeBound,
        Check::KappaClassification,
        Check::ConnValue,
        Check::Inequalities,
        Check::Structure,
        Check::Witnesses,
        Check::GeneratorClasses,
        Check::EulerSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DegreeFormula => "degree-formula",
            Check::EdgeConnectivity => "edge-connectivity",
            Check::MinDegree => "min-degree",
            Check::MinDegreeBound => "min-degree-bound",
            Check::KappaClassification => "kappa-classification",
            Check::ConnValue => "conn-value",
            Check::Inequalities => "inequalities",
            Check::Structure => "structure",
            Check::Witnesses => "witnesses",
            Check::GeneratorClasses => "generator-classes",
            Check::EulerSum => "euler-sum",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown check '{s}'")))
    }
}

/// One disagreement found by a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The family parameter: `n` for cyclic, dihedral and dicyclic groups,
    /// the group order for abelian p-groups.
    pub n: u64,
    pub spec: GroupSpec,
    pub invariant: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub n: u64,
    pub spec: GroupSpec,
    pub passed: Vec<Check>,
    /// Checks that do not apply to this instance, or need a graph above
    /// the vertex cap.
    pub skipped: Vec<Check>,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub family: Family,
    pub min: u64,
    pub max: u64,
    pub checks: Vec<Check>,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub vertex_cap: usize,
    /// Largest order for which vertex connectivity is computed.
    pub kappa_limit: u64,
    /// Instances evaluated in parallel before their results are emitted.
    pub batch: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { vertex_cap: crate::DEFAULT_VERTEX_CAP, kappa_limit: theory::KAPPA_AUTO_LIMIT, batch: 64 }
    }
}

/// The groups of `family` whose parameter lies in `[min, max]`, paired with
/// that parameter. Dihedral groups start at 3 and dicyclic groups at 2.
pub fn family_instances(family: Family, min: u64, max: u64) -> Result<Vec<(u64, GroupSpec)>> {
    if min > max {
        return Err(Error::Precondition(format!("range {min}..={max} is empty")));
    }
    let specs = match family {
        Family::Cyclic => (min.max(1)..=max).map(|n| (n, GroupSpec::Cyclic { n })).collect(),
        Family::Dihedral => (min.max(3)..=max).map(|n| (n, GroupSpec::Dihedral { n })).collect(),
        Family::Dicyclic => (min.max(2)..=max).map(|n| (n, GroupSpec::Dicyclic { n })).collect(),
        Family::AbelianP => abelian_p_groups(min, max)
            .into_iter()
            .map(|s| Ok((s.order()?, s)))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(specs)
}

/// Runs `checks` over the instances of `family` in `[min, max]`.
///
/// Instances are evaluated in parallel batches; `on_result` sees them in
/// increasing order of the family parameter.
pub fn sweep(
    family: Family,
    min: u64,
    max: u64,
    checks: &[Check],
    options: &SweepOptions,
    mut on_result: impl FnMut(&InstanceResult),
) -> Result<SweepSummary> {
    let instances = family_instances(family, min, max)?;
    let mut summary = SweepSummary {
        family,
        min,
        max,
        checks: checks.to_vec(),
        instances: instances.len(),
        passed: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for batch in instances.chunks(options.batch.max(1)) {
        let results: Vec<InstanceResult> =
            batch.par_iter().map(|(n, spec)| run_instance(*n, spec, checks, options)).collect();
        for r in results {
            on_result(&r);
            summary.passed += r.passed.len();
            summary.skipped += r.skipped.len();
            summary.failures.extend(r.failures);
        }
    }
    Ok(summary)
}

enum Outcome {
    Pass,
    Skip,
}

/// Lazily built state shared by the checks of one instance.
struct Instance<'a> {
    n: u64,
    spec: &'a GroupSpec,
    options: &'a SweepOptions,
    bundle: OnceCell<Option<PowerGraphBundle>>,
    kappa: OnceCell<Option<u64>>,
    failures: Vec<Failure>,
}

impl<'a> Instance<'a> {
    fn bundle(&self) -> Option<&PowerGraphBundle> {
        self.bundle.get_or_init(|| build_power_graph(self.spec, self.options.vertex_cap).ok()).as_ref()
    }

    fn order(&self) -> Result<u64> {
        self.spec.order()
    }

    fn delta(&self) -> Option<u64> {
        self.bundle().map(|b| b.graph().min_degree().map_or(0, |(d, _)| d as u64))
    }

    /// Exact vertex connectivity by vertex-split flows, cross-checked
    /// against the twin quotient.
    fn kappa(&mut self) -> Option<u64> {
        if let Some(k) = self.kappa.get() {
            return *k;
        }
        let limit = self.options.kappa_limit;
        let value = match self.bundle() {
            Some(b) if b.graph().vertex_count() as u64 <= limit => {
                let g = b.graph();
                let plain = g.vertex_connectivity() as u64;
                Some((plain, g.vertex_connectivity_twin_reduced() as u64))
            }
            _ => None,
        };
        if let Some((plain, twin)) = value {
            self.expect("vertex connectivity via twin quotient", plain, twin);
        }
        let k = value.map(|(plain, _)| plain);
        let _ = self.kappa.set(k);
        k
    }

    fn fail(&mut self, invariant: impl Into<String>, expected: impl ToString, got: impl ToString) {
        self.failures.push(Failure {
            n: self.n,
            spec: self.spec.clone(),
            invariant: invariant.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    fn expect<T: PartialEq + fmt::Display>(&mut self, invariant: impl Into<String>, expected: T, got: T) {
        if expected != got {
            self.fail(invariant, expected, got);
        }
    }
}

fn run_instance(n: u64, spec: &GroupSpec, checks: &[Check], options: &SweepOptions) -> InstanceResult {
    let mut inst = Instance {
        n,
        spec,
        options,
        bundle: OnceCell::new(),
        kappa: OnceCell::new(),
        failures: Vec::new(),
    };
    let mut passed = Vec::new();
    let mut skipped = Vec::new();
    for &check in checks {
        let before = inst.failures.len();
        match run_check(&mut inst, check) {
            Ok(Outcome::Skip) => skipped.push(check),
            Ok(Outcome::Pass) if inst.failures.len() == before => passed.push(check),
            Ok(Outcome::Pass) => {}
            Err(e) => inst.fail(format!("{check}: error"), "no error", e),
        }
    }
    InstanceResult { n, spec: spec.clone(), passed, skipped, failures: inst.failures }
}

fn run_check(inst: &mut Instance, check: Check) -> Result<Outcome> {
    match check {
        Check::DegreeFormula => degree_formula(inst),
        Check::EdgeConnectivity => edge_connectivity(inst),
        Check::MinDegree => min_degree(inst),
        Check::MinDegreeBound => min_degree_bound(inst),
        Check::KappaClassification => kappa_classification(inst),
        Check::ConnValue => conn_value(inst),
        Check::Inequalities => inequalities(inst),
        Check::Structure => structure(inst),
        Check::Witnesses => witnesses(inst),
        Check::GeneratorClasses => generator_classes(inst),
        Check::EulerSum => euler_sum(inst),
    }
}

fn cyclic_n(spec: &GroupSpec) -> Option<u64> {
    match spec {
        GroupSpec::Cyclic { n } => Some(*n),
        _ => None,
    }
}

fn is_composite(n: u64) -> bool {
    n > 1 && !arith::is_prime(n)
}

fn degree_formula(inst: &mut Instance) -> Result<Outcome> {
    let Some(n) = cyclic_n(inst.spec) else { return Ok(Outcome::Skip) };
    if n < 2 || arith::factorize(n)?.distinct() < 2 {
        return Ok(Outcome::Skip);
    }
    let Some(bundle) = inst.bundle() else { return Ok(Outcome::Skip) };
    let g = bundle.graph();
    let mut by_gcd = HashMap::new();
    let mut bad = Vec::new();
    for a in (1..n).filter(|&a| arith::gcd(a, n) > 1) {
        let b = arith::gcd(a, n);
        let formula = match by_gcd.get(&b) {
            Some(&d) => d,
            None => {
                let d = theory::degree_formula_cyclic(n, a)?;
                by_gcd.insert(b, d);
                d
            }
        };
        let got = g.degree(a as usize)? as u64;
        if formula != got {
            bad.push((a, formula, got));
        }
    }
    for (a, formula, got) in bad {
        inst.fail(format!("degree-formula: deg({a})"), formula, got);
    }
    Ok(Outcome::Pass)
}

fn edge_connectivity(inst: &mut Instance) -> Result<Outcome> {
    let Some(bundle) = inst.bundle() else { return Ok(Outcome::Skip) };
    let g = bundle.graph();
    let (delta, kp) = (g.min_degree()?.0, g.edge_connectivity());
    inst.expect("edge-connectivity: min cut = minimum degree", delta, kp);
    Ok(Outcome::Pass)
}

fn min_degree(inst: &mut Instance) -> Result<Outcome> {
    let Some(bundle) = inst.bundle() else { return Ok(Outcome::Skip) };
    let g = bundle.graph();
    let (delta, witness) = g.min_degree()?;
    let delta = delta as u64;
    let closed = theory::min_degree_closed_form(inst.spec)?;
    let mut checks: Vec<(String, u64, u64)> = Vec::new();
    if let Some(c) = closed {
        checks.push(("min-degree: closed form".into(), c, delta));
    }
    if let Some(n) = cyclic_n(inst.spec).filter(|&n| n >= 2) {
        let (value, divisor) = theory::min_degree_cyclic(n)?;
        checks.push(("min-degree: minimum over divisors".into(), value, delta));
        checks.push(("min-degree: smallest minimizing divisor".into(), divisor % n, witness as u64));
        if let Some(cf) = theory::cyclic_min_degree_closed_form(n)? {
            let v = (cf.witness % n) as usize;
            checks.push((format!("min-degree: degree of closed-form witness {}", cf.witness), delta, g.degree(v)? as u64));
        }
    }
    for (name, expected, got) in checks {
        inst.expect(name, expected, got);
    }
    Ok(Outcome::Pass)
}

fn is_twice_prime(n: u64) -> bool {
    n.is_multiple_of(2) && arith::is_prime(n / 2)
}

fn min_degree_bound(inst: &mut Instance) -> Result<Outcome> {
    let Some(n) = cyclic_n(inst.spec).filter(|&n| is_composite(n)) else { return Ok(Outcome::Skip) };
    let (delta, _) = theory::min_degree_cyclic(n)?;
    let bound = arith::euler_phi(n)? + 1;
    if delta < bound {
        inst.fail("min-degree-bound: delta >= phi(n) + 1", format!(">= {bound}"), delta);
    }
    inst.expect("min-degree-bound: delta = phi(n) + 1 iff n = 2p", is_twice_prime(n), delta == bound);
    Ok(Outcome::Pass)
}

fn kappa_classification(inst: &mut Instance) -> Result<Outcome> {
    if inst.order()? < 2 {
        return Ok(Outcome::Skip);
    }
    let Some(kappa) = inst.kappa() else { return Ok(Outcome::Skip) };
    let delta = inst.delta().expect("kappa implies a graph");
    let equal = kappa == delta;
    if let Some(n) = cyclic_n(inst.spec) {
        let (classified, value) = theory::kappa_delta_classify_cyclic(n)?;
        inst.expect("kappa-classification: kappa = delta", classified, equal);
        if let Some(v) = value {
            inst.expect("kappa-classification: common value", v, kappa);
        }
    }
    let class = theory::kappa_delta_equal(inst.spec)?;
    inst.expect(format!("kappa-classification: {}", class.reason), class.value, equal);
    if let Some(k) = theory::kappa_closed_form(inst.spec)? {
        inst.expect("kappa-classification: closed-form connectivity", k, kappa);
    }
    if equal && !inst.spec.is_cyclic_prime_power() {
        // some minimum-degree vertex has order 2
        let bundle = inst.bundle().expect("kappa implies a graph");
        let g = bundle.graph();
        let mut found = false;
        for v in 0..g.vertex_count() {
            if g.degree(v)? as u64 == delta && inst.spec.element_order(bundle.element(v))? == 2 {
                found = true;
                break;
            }
        }
        inst.expect("kappa-classification: order-2 vertex of minimum degree", true, found);
    }
    Ok(Outcome::Pass)
}

fn conn_value(inst: &mut Instance) -> Result<Outcome> {
    let Some(n) = cyclic_n(inst.spec) else { return Ok(Outcome::Skip) };
    if n < 2 || arith::factorize(n)?.distinct() != 2 {
        return Ok(Outcome::Skip);
    }
    let Some(kappa) = inst.kappa() else { return Ok(Outcome::Skip) };
    inst.expect("conn-value: phi(n) + p^(a-1) q^(b-1)", theory::kappa_closed_form_cyclic(n)?, kappa);
    Ok(Outcome::Pass)
}

fn inequalities(inst: &mut Instance) -> Result<Outcome> {
    let Some(n) = cyclic_n(inst.spec) else { return Ok(Outcome::Skip) };
    if n < 2 {
        return Ok(Outcome::Skip);
    }
    let r = arith::factorize(n)?.distinct();
    if r < 2 {
        return Ok(Outcome::Skip);
    }
    for row in theory::degcompare_check(n)?.into_iter().filter(|row| !row.holds()) {
        inst.fail(
            format!("inequalities: {:?} deg({}) >= deg({})", row.clause, row.larger_vertex, row.smaller_vertex),
            format!(">= {}", row.smaller_degree),
            row.larger_degree,
        );
    }
    let (delta, _) = theory::min_degree_cyclic(n)?;
    let (eta1, eta2) = theory::eta_bounds(n)?;
    for (name, eta) in [("eta1", eta1), ("eta2", eta2)] {
        if eta < delta {
            inst.fail(format!("inequalities: {name} >= delta"), format!(">= {delta}"), eta);
        }
    }
    if r == 2 {
        inst.expect("inequalities: eta1 = delta for two primes", delta, eta1);
    }
    Ok(Outcome::Pass)
}

fn structure(inst: &mut Instance) -> Result<Outcome> {
    let Some(bundle) = inst.bundle() else { return Ok(Outcome::Skip) };
    let g = bundle.graph();
    let connected = g.is_connected();
    let complete = g.is_complete();
    let tilde = match cyclic_n(inst.spec).filter(|&n| is_composite(n)) {
        Some(n) => {
            let f = arith::factorize(n)?;
            let pq = f.distinct() == 2 && f.pairs().iter().all(|&(_, a)| a == 1);
            Some((pq, !bundle.tilde_graph()?.is_connected()))
        }
        None => None,
    };
    inst.expect("structure: connected", true, connected);
    inst.expect("structure: complete iff cyclic of prime-power order", inst.spec.is_cyclic_prime_power(), complete);
    if let Some((pq, disconnected)) = tilde {
        inst.expect("structure: reduced graph disconnected iff n = pq", pq, disconnected);
    }
    Ok(Outcome::Pass)
}

fn witnesses(inst: &mut Instance) -> Result<Outcome> {
    if inst.order()? < 2 {
        return Ok(Outcome::Skip);
    }
    let Some(bundle) = inst.bundle() else { return Ok(Outcome::Skip) };
    let g = bundle.graph();
    let delta = g.min_degree()?.0;
    let mut checks: Vec<(String, String, String)> = Vec::new();
    let mut check = |name: String, expected: String, got: String| checks.push((name, expected, got));
    let tf = |b: bool| b.to_string();

    let w = theory::min_disconnecting_set(bundle)?;
    check("witnesses: disconnecting set size".into(), delta.to_string(), w.edges.len().to_string());
    check("witnesses: disconnecting set disconnects".into(), tf(true), tf(g.is_disconnecting(&w.edges)?));

    let e = bundle.identity_vertex();
    let vertex = |x: Element| bundle.vertex_of(&x).expect("element of the group");
    match inst.spec {
        GroupSpec::Cyclic { n } => {
            if let Some((c, set, desc)) = theory::cyclic_witness_neighbourhood(*n)? {
                let got: Vec<u64> = g.neighbors(c as usize).iter().map(|&v| v as u64).collect();
                check(format!("witnesses: {desc}"), format!("{set:?}"), format!("{got:?}"));
            }
            if let Some(set) = theory::min_separating_set_closed_form(bundle)? {
                let half = (*n / 2) as usize;
                let neighbours: VertexSet = g.neighbors(half).iter().copied().collect();
                check("witnesses: separating set equals N(n/2)".into(), format!("{:?}", neighbours.to_vec()), format!("{:?}", set.to_vec()));
                check("witnesses: separating set separates".into(), tf(true), tf(g.is_separating(&set)?));
                if let Some(k) = theory::kappa_closed_form(inst.spec)? {
                    check("witnesses: separating set size".into(), k.to_string(), set.len().to_string());
                }
                if g.vertex_count() as u64 <= inst.options.kappa_limit {
                    let oracle = g.minimum_separating_set().map_or(0, |s| s.len());
                    check("witnesses: separating set size against flows".into(), oracle.to_string(), set.len().to_string());
                }
            }
        }
        GroupSpec::AbelianP { exponents, .. } => {
            let mut coords = vec![0; exponents.len()];
            coords[0] = 1;
            let gv = vertex(Element::AbelianP(coords.clone()));
            let mut sub: Vec<usize> = inst.spec.cyclic_subgroup(&Element::AbelianP(coords))?.into_iter().map(&vertex).collect();
            sub.retain(|&v| v != gv);
            sub.sort_unstable();
            let tau = inst.spec.tau().expect("abelian p-group");
            let edges: EdgeSet = sub.iter().map(|&v| (gv, v)).collect();
            check("witnesses: <g> - g is N(g)".into(), format!("{sub:?}"), format!("{:?}", g.neighbors(gv)));
            check("witnesses: E[g, <g> - g] has tau - 1 edges".into(), (tau - 1).to_string(), edges.len().to_string());
            check("witnesses: E[g, <g> - g] disconnects".into(), tf(true), tf(g.is_disconnecting(&edges)?));
        }
        GroupSpec::Dihedral { n } => {
            for i in 0..*n {
                let r = vertex(Element::Dihedral { i, flip: true });
                let edge: EdgeSet = [(e, r)].into_iter().collect();
                check(format!("witnesses: a^{i}*b pendant at e"), format!("{:?}", [e]), format!("{:?}", g.neighbors(r)));
                check(format!("witnesses: e - a^{i}*b is a cut edge"), tf(true), tf(g.is_disconnecting(&edge)?));
            }
        }
        GroupSpec::Dicyclic { n } => {
            let an = vertex(Element::Dicyclic { i: *n, flip: false });
            for i in 0..2 * n {
                let x = vertex(Element::Dicyclic { i, flip: true });
                let partner = vertex(Element::Dicyclic { i: (n + i) % (2 * n), flip: true });
                let expect: BTreeSet<usize> = [e, an, partner].into_iter().collect();
                let got: BTreeSet<usize> = g.neighbors(x).iter().copied().collect();
                check(format!("witnesses: N(a^{i}*b)"), format!("{expect:?}"), format!("{got:?}"));
                let edges: EdgeSet = expect.iter().map(|&v| (x, v)).collect();
                check(format!("witnesses: E[a^{i}*b, N] disconnects"), tf(true), tf(g.is_disconnecting(&edges)?));
            }
            if let Some(set) = theory::min_separating_set_closed_form(bundle)? {
                check("witnesses: {e, a^n} separates".into(), tf(true), tf(g.is_separating(&set)?));
            }
        }
    }
    for (name, expected, got) in checks {
        inst.expect(name, expected, got);
    }
    Ok(Outcome::Pass)
}

fn generator_classes(inst: &mut Instance) -> Result<Outcome> {
    let spec = inst.spec;
    let elements = spec.elements()?;
    let mut checks: Vec<(String, u64, u64)> = Vec::new();
    let mut order_counts: HashMap<u64, u64> = HashMap::new();
    for x in &elements {
        let o = spec.element_order(x)?;
        checks.push((format!("generator-classes: order of {}", spec.label(x)), spec.element_order_by_powering(x)?, o));
        checks.push((format!("generator-classes: |[{}]| = phi(o)", spec.label(x)), arith::euler_phi(o)?, spec.gen_class(x)?.len() as u64));
        *order_counts.entry(o).or_default() += 1;
    }
    if let Some(n) = cyclic_n(spec) {
        for d in arith::divisors(n)? {
            checks.push((format!("generator-classes: elements of order {d}"), arith::euler_phi(d)?, order_counts.get(&d).copied().unwrap_or(0)));
        }
    }
    if let GroupSpec::Dicyclic { n } = spec {
        // <a> together with <a^i b> for i < n covers the group
        let mut covered: BTreeSet<Element> = spec.cyclic_subgroup(&Element::Dicyclic { i: 1, flip: false })?.into_iter().collect();
        for i in 0..*n {
            covered.extend(spec.cyclic_subgroup(&Element::Dicyclic { i, flip: true })?);
        }
        checks.push(("generator-classes: <a> and <a^i b> cover the group".into(), elements.len() as u64, covered.len() as u64));
    }
    for (name, expected, got) in checks {
        inst.expect(name, expected, got);
    }
    Ok(Outcome::Pass)
}

fn euler_sum(inst: &mut Instance) -> Result<Outcome> {
    let Some(n) = cyclic_n(inst.spec).filter(|&n| n >= 2) else { return Ok(Outcome::Skip) };
    for &(p, alpha) in arith::factorize(n)?.pairs() {
        for beta in 1..=alpha {
            let literal = arith::divisor_phi_sum(n, p, beta)?;
            let closed = arith::divisor_phi_sum_closed_form(n, p, beta)?;
            inst.expect(format!("euler-sum: p = {p}, beta = {beta}"), closed, literal);
        }
    }
    Ok(Outcome::Pass)
}
