use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use powergraph::sweep::{self, Check, InstanceResult, SweepOptions};
use powergraph::theory::{self, AnalyzeOptions, KappaMode};
use powergraph::{build_power_graph, Family, GroupSpec, DEFAULT_VERTEX_CAP};

const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

/// Minimum degree and connectivity of power graphs of finite groups.
///
/// Groups are written `cyclic:<n>`, `abelianp:<p>:<e1>,<e2>,...`,
/// `dihedral:<n>` or `dicyclic:<n>`.
#[derive(Parser)]
#[command(name = "pgraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report minimum degree, connectivity and witnesses for one group.
    Analyze(AnalyzeArgs),
    /// Check closed forms against the graphs over a range of one family.
    Sweep(SweepArgs),
    /// Decide whether connectivity equals minimum degree, without building the graph.
    Classify(ClassifyArgs),
    /// Write the power graph in DOT format.
    ExportDot(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Largest group order to build a graph for [env: PG_VERTEX_CAP, default: 5000]
    #[arg(long)]
    vertex_cap: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, short)]
    group: GroupSpec,
    /// Compute vertex connectivity at any order (default: up to 300).
    #[arg(long)]
    kappa: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    family: Family,
    /// Smallest family parameter: n for cyclic, dihedral and dicyclic groups, the order for abelian p-groups.
    #[arg(long, default_value_t = 1)]
    min: u64,
    /// Largest family parameter.
    #[arg(long)]
    max: u64,
    /// Checks to run; repeat for several (default: all).
    #[arg(long = "check")]
    checks: Vec<Check>,
    /// Largest order for which vertex connectivity is computed.
    #[arg(long, default_value_t = theory::KAPPA_AUTO_LIMIT)]
    kappa_limit: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, short)]
    group: GroupSpec,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subgraph {
    /// The whole power graph.
    Full,
    /// Without the identity.
    Proper,
    /// Cyclic groups only: without 0 and the generators.
    Reduced,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, short)]
    group: GroupSpec,
    #[arg(long, value_enum, default_value = "full")]
    subgraph: Subgraph,
    #[command(flatten)]
    common: Common,
}

fn status(clean: bool) -> u8 {
    if clean {
        0
    } else {
        EXIT_VIOLATION
    }
}

fn vertex_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("PG_VERTEX_CAP") {
        Ok(v) => v.trim().parse().with_context(|| format!("PG_VERTEX_CAP={v} is not a vertex count")),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot write {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn analyze(args: AnalyzeArgs) -> Result<u8> {
    let options = AnalyzeOptions {
        vertex_cap: vertex_cap(args.common.vertex_cap)?,
        kappa: if args.kappa { KappaMode::Always } else { KappaMode::Auto },
    };
    let report = theory::analyze(&args.group, &options)?;
    let mut out = open_output(&args.common.output)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text => write!(out, "{}", report.to_text())?,
    }
    out.flush()?;
    Ok(status(report.violations.is_empty()))
}

fn instance_line(r: &InstanceResult) -> String {
    let status = if r.failures.is_empty() { "ok" } else { "FAIL" };
    let mut line = format!("n={} {} {status} passed={} skipped={}", r.n, r.spec, r.passed.len(), r.skipped.len());
    for f in &r.failures {
        line.push_str(&format!("\n  {}: expected {}, got {}", f.invariant, f.expected, f.got));
    }
    line
}

fn sweep(args: SweepArgs) -> Result<u8> {
    if args.min > args.max {
        bail!("--min {} exceeds --max {}", args.min, args.max);
    }
    let checks = if args.checks.is_empty() { Check::ALL.to_vec() } else { args.checks };
    let options = SweepOptions {
        vertex_cap: vertex_cap(args.common.vertex_cap)?,
        kappa_limit: args.kappa_limit,
        ..SweepOptions::default()
    };
    let mut out = open_output(&args.common.output)?;
    let mut write_error = None;
    let summary = sweep::sweep(args.family, args.min, args.max, &checks, &options, |r| {
        let line = match args.format {
            Format::Json => serde_json::to_string(r).expect("results serialize"),
            Format::Text => instance_line(r),
        };
        if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
            write_error.get_or_insert(e);
        }
    })?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::json!({ "summary": summary }))?,
        Format::Text => {
            let names: Vec<&str> = summary.checks.iter().map(|c| c.name()).collect();
            writeln!(
                out,
                "{} {}..={}: {} instances, checks [{}], {} passed, {} skipped, {} failures",
                summary.family,
                summary.min,
                summary.max,
                summary.instances,
                names.join(", "),
                summary.passed,
                summary.skipped,
                summary.failures.len()
            )?;
        }
    }
    out.flush()?;
    Ok(status(summary.ok()))
}

fn classify(args: ClassifyArgs) -> Result<u8> {
    let spec = &args.group;
    let order = spec.order()?;
    let class = theory::kappa_delta_equal(spec)?;
    let delta = theory::min_degree_closed_form(spec)?;
    let kappa = theory::kappa_closed_form(spec)?;
    let mut out = open_output(&args.common.output)?;
    match args.format {
        Format::Json => {
            let v = serde_json::json!({
                "schema_version": theory::SCHEMA_VERSION,
                "spec": spec,
                "order": order,
                "kappa_equals_delta": class,
                "delta_closed_form": delta,
                "kappa_closed_form": kappa,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text => {
            let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
            writeln!(out, "spec: {spec}")?;
            writeln!(out, "order: {order}")?;
            writeln!(out, "kappa_equals_delta: {} ({})", class.value, class.reason)?;
            writeln!(out, "delta_closed_form: {}", opt(delta))?;
            writeln!(out, "kappa_closed_form: {}", opt(kappa))?;
        }
    }
    out.flush()?;
    Ok(0)
}

fn export_dot(args: ExportArgs) -> Result<u8> {
    let bundle = build_power_graph(&args.group, vertex_cap(args.common.vertex_cap)?)?;
    let graph = match args.subgraph {
        Subgraph::Full => bundle.graph().clone(),
        Subgraph::Proper => bundle.proper_power_graph(),
        Subgraph::Reduced => bundle.tilde_graph()?,
    };
    let mut out = open_output(&args.common.output)?;
    write!(out, "{}", graph.to_dot(&args.group.to_string()))?;
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Sweep(a) => sweep(a),
        Command::Classify(a) => classify(a),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
