//! Acceptance gate: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use powergraph::sweep::{sweep, Check, SweepOptions, SweepSummary};
use powergraph::theory::{self, MinDegreeClause};
use powergraph::{arith, build_power_graph, Family, GroupSpec, DEFAULT_VERTEX_CAP};

struct Gate {
    failed: usize,
}

impl Gate {
    fn report(&mut self, id: &str, title: &str, started: Instant, problems: Vec<String>, detail: String) {
        let secs = started.elapsed().as_secs_f64();
        if problems.is_empty() {
            println!("[PASS] {id} {title}: {detail} ({secs:.1}s)");
        } else {
            self.failed += 1;
            println!("[FAIL] {id} {title}: {} problem(s) ({secs:.1}s)", problems.len());
            for p in problems.iter().take(10) {
                println!("       {p}");
            }
        }
    }
}

fn run(family: Family, min: u64, max: u64, checks: &[Check], problems: &mut Vec<String>) -> SweepSummary {
    let summary = sweep(family, min, max, checks, &SweepOptions::default(), |_| {}).expect("valid range");
    for f in &summary.failures {
        problems.push(format!("{} {}: expected {}, got {}", f.spec, f.invariant, f.expected, f.got));
    }
    summary
}

/// Every family with group order at most 200.
fn all_orders_to_200(checks: &[Check], problems: &mut Vec<String>) -> (usize, usize) {
    let runs = [
        run(Family::Cyclic, 1, 200, checks, problems),
        run(Family::AbelianP, 1, 200, checks, problems),
        run(Family::Dihedral, 3, 100, checks, problems),
        run(Family::Dicyclic, 2, 50, checks, problems),
    ];
    (runs.iter().map(|s| s.instances).sum(), runs.iter().map(|s| s.passed).sum())
}

fn ac1(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let s = run(Family::Cyclic, 1, 2000, &[Check::DegreeFormula], &mut problems);
    if s.passed == 0 {
        problems.push("no instance was checked".into());
    }
    let detail = format!("{} composite non-prime-power n <= 2000 checked at every non-generator", s.passed);
    gate.report("AC1", "degree formula", t, problems, detail);
}

fn ac2(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let (instances, passed) = all_orders_to_200(&[Check::EdgeConnectivity], &mut problems);
    if passed != instances {
        problems.push(format!("{} of {instances} instances skipped", instances - passed));
    }
    let detail = format!("edge connectivity = minimum degree on {passed} groups of order <= 200");
    gate.report("AC2", "edge connectivity", t, problems, detail);
}

fn ac3(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    for (n, delta, witness) in [(12u64, 7u64, 3u64), (30, 13, 5), (210, 73, 35), (330, 109, 11)] {
        let b = build_power_graph(&GroupSpec::Cyclic { n }, DEFAULT_VERTEX_CAP).unwrap();
        let (d, v) = b.graph().min_degree().unwrap();
        if (d as u64, v as u64) != (delta, witness) {
            problems.push(format!("Z_{n}: expected ({delta}, {witness}), graph gives ({d}, {v})"));
        }
        match theory::cyclic_min_degree_closed_form(n).unwrap() {
            Some(cf) if cf.value == delta && cf.witness == witness => {}
            other => problems.push(format!("Z_{n}: closed form {other:?}")),
        }
    }
    let s = run(Family::Cyclic, 1, 2000, &[Check::MinDegree], &mut problems);
    let mut counts = std::collections::BTreeMap::new();
    for n in 1..=2000u64 {
        if let Some(cf) = theory::cyclic_min_degree_closed_form(n).unwrap() {
            *counts.entry(format!("{:?}", cf.clause)).or_insert(0usize) += 1;
        }
    }
    for clause in [
        MinDegreeClause::TwoPrimePowers,
        MinDegreeClause::ThreePrimes,
        MinDegreeClause::FourPrimesLargest,
        MinDegreeClause::FourPrimesTopPair,
    ] {
        if !counts.contains_key(&format!("{clause:?}")) {
            problems.push(format!("clause {clause:?} never exercised"));
        }
    }
    let detail = format!(
        "Z12, Z30, Z210, Z330 frozen; {} n <= 2000 against the graph; clauses {counts:?}",
        s.passed
    );
    gate.report("AC3", "minimum degree closed forms", t, problems, detail);
}

fn ac4(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let s = run(Family::Cyclic, 1, 2000, &[Check::MinDegreeBound], &mut problems);
    let mut equal = 0;
    for n in (4..=2000u64).filter(|&n| !arith::is_prime(n)) {
        let (delta, _) = theory::min_degree_cyclic(n).unwrap();
        if delta == arith::euler_phi(n).unwrap() + 1 {
            equal += 1;
        }
    }
    let twice_primes = (2..=1000u64).filter(|&p| arith::is_prime(p)).count();
    if equal != twice_primes {
        problems.push(format!("{equal} n attain phi(n) + 1, {twice_primes} values of 2p"));
    }
    let detail = format!("{} composite n <= 2000, equality at exactly the {equal} values n = 2p", s.passed);
    gate.report("AC4", "minimum degree lower bound", t, problems, detail);
}

fn ac5(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let checks = [Check::MinDegree, Check::Witnesses];
    let d = run(Family::Dihedral, 3, 100, &checks, &mut problems);
    let q = run(Family::Dicyclic, 2, 50, &checks, &mut problems);
    let a = run(Family::AbelianP, 1, 512, &checks, &mut problems);
    for s in [&d, &q, &a] {
        if s.passed != 2 * s.instances {
            problems.push(format!("{}: {} of {} checks ran", s.family, s.passed, 2 * s.instances));
        }
    }
    let detail = format!("{} dihedral, {} dicyclic, {} abelian p-groups", d.instances, q.instances, a.instances);
    gate.report("AC5", "family constants", t, problems, detail);
}

fn ac6(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let s = run(Family::Cyclic, 2, 300, &[Check::KappaClassification], &mut problems);
    if s.passed != 299 {
        problems.push(format!("{} of 299 instances checked", s.passed));
    }
    let equal = (2..=300u64).filter(|&n| theory::kappa_delta_classify_cyclic(n).unwrap().0).count();
    let detail = format!("exact connectivity for 2 <= n <= 300; equality at {equal} n");
    gate.report("AC6", "connectivity classification", t, problems, detail);
}

fn ac7(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let s = run(Family::Cyclic, 1, 300, &[Check::ConnValue], &mut problems);
    let expected = (1..=300u64).filter(|&n| arith::factorize(n).unwrap().distinct() == 2).count();
    if s.passed != expected {
        problems.push(format!("{} of {expected} two-prime n checked", s.passed));
    }
    gate.report("AC7", "connectivity of p^a q^b", t, problems, format!("{} n = p^a q^b <= 300", s.passed));
}

fn ac8(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let s = run(Family::Cyclic, 1, 5000, &[Check::Inequalities], &mut problems);
    let rows: usize = (2..=5000u64)
        .filter(|&n| arith::factorize(n).unwrap().distinct() >= 2)
        .map(|n| theory::degcompare_check(n).unwrap().len())
        .sum();
    let detail = format!("{} composite n <= 5000, {rows} comparison instances", s.passed);
    gate.report("AC8", "inequality suite", t, problems, detail);
}

fn ac9(gate: &mut Gate) {
    let t = Instant::now();
    let mut problems = Vec::new();
    let (instances, _) = all_orders_to_200(&[Check::Structure], &mut problems);
    let s = run(Family::Cyclic, 201, 1000, &[Check::Structure], &mut problems);
    let detail = format!("{} groups of order <= 200 and cyclic n up to 1000", instances + s.instances);
    gate.report("AC9", "structure", t, problems, detail);
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    ac1(&mut gate);
    ac2(&mut gate);
    ac3(&mut gate);
    ac4(&mut gate);
    ac5(&mut gate);
    ac6(&mut gate);
    ac7(&mut gate);
    ac8(&mut gate);
    ac9(&mut gate);
    if gate.failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failed);
        ExitCode::FAILURE
    }
}
