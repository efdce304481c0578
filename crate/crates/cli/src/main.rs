use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use grpconn::group::{DEFAULT_ORDER_CAP, ORDER_CAP_ENV};
use grpconn::oracle_harness::{compare_with_oracles, random_cases, structured_cases};
use grpconn::theorem_suite::{default_corpus, parse_corpus, run_corpus, ClaimId};
use grpconn::{
    build_family, build_graph, connectivity_values, dominating_vertex_criterion, is_minimally_connected,
    is_minimally_edge_connected, shape_profile, FamilySpec, FiniteGroup, GraphKind, MinimalityVerdict, SimpleGraph,
};

#[derive(Parser)]
#[command(name = "grpconn", version, about = "Connectivity of graphs defined on finite groups")]
struct Cli {
    /// Largest group order to build.
    #[arg(long, global = true, env = ORDER_CAP_ENV, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and export it as DOT and/or edge-list CSV.
    Graph {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print size, degree, connectivity and shape invariants.
    Invariants {
        #[command(flatten)]
        target: Target,
    },
    /// Decide minimal edge connectivity and/or minimal connectivity.
    Minimality {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Print the measure after each single-edge deletion.
        #[arg(long)]
        per_edge: bool,
    },
    /// Evaluate the claim registry over a corpus of groups.
    Verify {
        /// File with one group spec per line (default: built-in corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated claim ids (default: all).
        #[arg(long)]
        claims: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check max-flow connectivity against brute force on random graphs.
    Oracle {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_n: u64,
    },
}

#[derive(clap::Args)]
struct Target {
    /// e.g. cyclic:6, dihedral:5, dicyclic:2, symmetric:4, ea:2,3,
    /// product:cyclic:3*cyclic:5, file:PATH
    #[arg(long)]
    group: FamilySpec,
    #[arg(long)]
    kind: GraphKind,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Vertex,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl Target {
    fn build(&self, cap: usize) -> Result<(FiniteGroup, SimpleGraph)> {
        let group = build_family(&self.group, cap)?;
        let graph = build_graph(&group, self.kind);
        Ok((group, graph))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cap = cli.order_cap;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Graph { target, dot, csv } => {
            let (group, graph) = target.build(cap)?;
            let dot_text = graph.to_dot(Some(group.element_orders()));
            if let Some(path) = &dot {
                std::fs::write(path, &dot_text).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = &csv {
                std::fs::write(path, graph.to_csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            if dot.is_none() && csv.is_none() {
                out.write_all(dot_text.as_bytes())?;
            } else {
                writeln!(out, "{} {}: n={} edges={}", group.label(), target.kind, graph.n(), graph.edge_count())?;
            }
        }
        Command::Invariants { target } => {
            let (group, graph) = target.build(cap)?;
            let shape = shape_profile(&graph);
            let values = connectivity_values(&graph);
            writeln!(out, "group: {}", group.label())?;
            writeln!(out, "graph: {}", target.kind)?;
            writeln!(out, "n: {}", shape.n)?;
            writeln!(out, "edges: {}", shape.edge_count)?;
            writeln!(out, "min_degree: {}", values.min_degree)?;
            writeln!(out, "kappa: {}", values.kappa_vertex)?;
            writeln!(out, "kappa_edge: {}", values.kappa_edge)?;
            writeln!(out, "diameter: {}", shape.diameter)?;
            writeln!(out, "dominating_vertices: {:?}", shape.dominating_vertices)?;
            writeln!(out, "connected: {}", shape.is_connected)?;
            writeln!(out, "regular: {}", shape.is_regular)?;
            writeln!(out, "complete: {}", shape.is_complete)?;
            match shape.star_center {
                Some(c) => writeln!(out, "star: true (center {c})")?,
                None => writeln!(out, "star: false")?,
            }
        }
        Command::Minimality { target, mode, per_edge } => {
            let (group, graph) = target.build(cap)?;
            writeln!(out, "group: {}", group.label())?;
            writeln!(out, "graph: {}", target.kind)?;
            if matches!(mode, Mode::Edge | Mode::Both) {
                print_verdict(&mut out, "minimally edge connected", &is_minimally_edge_connected(&graph), per_edge)?;
                writeln!(out, "dominating criterion: {:?}", dominating_vertex_criterion(&graph))?;
            }
            if matches!(mode, Mode::Vertex | Mode::Both) {
                print_verdict(&mut out, "minimally connected", &is_minimally_connected(&graph), per_edge)?;
            }
        }
        Command::Verify { corpus, claims, out: out_path, format } => {
            let specs = match &corpus {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    parse_corpus(&text).with_context(|| format!("in {}", path.display()))?
                }
                None => default_corpus(),
            };
            let claims = match &claims {
                Some(list) => ClaimId::parse_list(list).map_err(anyhow::Error::msg)?,
                None => ClaimId::ALL.to_vec(),
            };
            let report = run_corpus(&specs, &claims, cap)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            match &out_path {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    let inconsistent: usize = report.claims.iter().map(|t| t.inconsistent).sum();
                    writeln!(
                        out,
                        "{} groups, {} verdicts, {} inconsistent, {} invariant failures -> {}",
                        specs.len(),
                        report.verdicts.len(),
                        inconsistent,
                        report.invariants.total_failures(),
                        path.display()
                    )?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            if report.invariants.total_failures() > 0 {
                bail!("{} invariant checks failed", report.invariants.total_failures());
            }
        }
        Command::Oracle { trials, seed, max_n } => {
            let max_n = max_n as usize;
            let mut graphs = structured_cases(max_n);
            let structured = graphs.len();
            graphs.extend(random_cases(trials, seed, max_n));
            let run = compare_with_oracles(&graphs)?;
            writeln!(out, "cases: {} ({structured} structured, {trials} random, seed {seed}, max n {max_n})", run.cases)?;
            for m in &run.mismatches {
                writeln!(
                    out,
                    "MISMATCH case {} n={} flow(kappa',kappa)={:?} oracle={:?} edges={:?}",
                    m.case, m.n, m.flow, m.oracle, m.edges
                )?;
            }
            writeln!(out, "mismatches: {}", run.mismatches.len())?;
            if !run.mismatches.is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_verdict(out: &mut impl Write, name: &str, v: &MinimalityVerdict, per_edge: bool) -> Result<()> {
    writeln!(out, "{name}: {}", v.holds)?;
    writeln!(out, "  applicable: {}", v.applicable)?;
    writeln!(out, "  base value: {}", v.base_value)?;
    writeln!(out, "  violating edges: {:?}", v.violating_edges)?;
    if per_edge {
        for ((a, b), value) in &v.per_edge_values {
            writeln!(out, "  delete {{{a},{b}}}: {value}")?;
        }
    }
    Ok(())
}
