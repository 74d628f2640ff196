//! `toric`: T¹ dimensions, inseparability, semi-rigidity and rigidity scans
//! from the command line.

mod degree;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use toric_core::bipartite::{
    all_cycles, build_gn, cycle_vector, edge_ring, graph_separation, inseparability_report, rigidity_scan,
    semirigid_report, BipartiteGraph, GraphFile,
};
use toric_core::numsgp3::{build_separation, literal_readings, structure, t1_at_generators};
use toric_core::polyomino::{analyze, PolyominoCheck, PolyominoFile};
use toric_core::semigroup::SemigroupFile;
use toric_core::separation::{verify_separation, CandidateFile};
use toric_core::t1::GeneratorsFile;
use toric_core::{AffineSemigroup, Error, IntMatrix, Presentation, Result};

use report::Outcome;

const DEGREE_HELP: &str = "Degree: comma-separated integers (\"-3\", \"1,0,-1\") or a signed sum of \
generators numbered from 1 in the semigroup's generator order (\"-h3\", \"-h(2)-h(5)\", \"h1-2h(4)\")";

#[derive(Parser)]
#[command(name = "toric", version, about = "Graded T¹ computations for affine semigroup rings")]
#[command(after_help = "Exit codes: 0 ok, 1 invalid input, 2 precondition not met (e.g. degree outside the group), \
3 internal assertion or a guaranteed property failed to hold. Indices in reports are 1-based.")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Convex,
    Inseparable,
    Semirigid,
}

#[derive(Subcommand)]
enum Command {
    /// dim T¹ in one degree.
    T1 {
        #[arg(long)]
        semigroup: PathBuf,
        #[arg(long, allow_hyphen_values = true, help = DEGREE_HELP)]
        degree: String,
        /// Generating set of the relation lattice, `{"vectors": [...]}`. Defaults to
        /// the minimal relations for three-generated numerical semigroups, the
        /// induced cycles for edge rings, and a lattice basis otherwise.
        #[arg(long)]
        gens: Option<PathBuf>,
        /// Edge rings only: add every cycle up to this length to the induced cycles.
        #[arg(long)]
        extra_cycles: Option<usize>,
    },
    /// Edge-by-edge separability of a bipartite edge ring.
    Inseparable {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Semi-rigidity of the edge ring of an inseparable bipartite graph.
    Semirigid {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Degrees in [-1, upper]^m with nonzero T¹.
    Scan {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        upper: i64,
    },
    /// Criteria for the ring of a polyomino.
    Polyomino {
        #[arg(long)]
        cells: PathBuf,
        #[arg(long, value_enum)]
        check: CheckArg,
    },
    /// Structure, T¹ at the generators and separations of ⟨h1, h2, h3⟩.
    Numsgp { h1: u64, h2: u64, h3: u64 },
    /// Commands on the graph Gₙ (K_{n,n} minus one edge).
    Gn {
        #[arg(long)]
        n: usize,
        #[command(subcommand)]
        action: GnAction,
    },
    /// Checks a separation candidate, `{"base_dim", "sep_index", "lattice", "base_gens", "lifted_gens"}`.
    VerifySeparation {
        #[arg(long)]
        candidate: PathBuf,
        /// Basis of the base lattice, `{"vectors": [...]}`. Defaults to the span of `base_gens`.
        #[arg(long)]
        base_lattice: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GnAction {
    Scan {
        #[arg(long, default_value_t = 2)]
        upper: i64,
    },
    Inseparable,
    Semirigid,
    T1 {
        #[arg(long, allow_hyphen_values = true, help = DEGREE_HELP)]
        degree: String,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(BipartiteGraph, Value)> {
    let file = GraphFile::from_json(&read(path)?)?;
    let g = file.build()?;
    Ok((g, json!({ "graph": path.display().to_string() })))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::DimensionMismatch { .. } | Error::OutOfRange(_) => 1,
        Error::NotInGroup(_) | Error::Precondition(_) => 2,
        Error::Assertion(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.report).expect("report serializes") + "\n",
                Format::Text => report::render_text(&out.report),
            };
            // a closed pipe is not an error for the computation
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.violated {
                eprintln!("error: a guaranteed property failed to hold; see the report");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.jobs == 0 {
        return Err(Error::Input("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::T1 { semigroup, degree, gens, extra_cycles } => {
            let file = SemigroupFile::from_json(&read(semigroup)?)?;
            let s = file.build()?;
            let inputs = json!({
                "semigroup": semigroup.display().to_string(),
                "ambient_dim": file.ambient_dim,
                "generators": file.generators,
                "degree": degree,
                "gens": gens.as_ref().map(|p| p.display().to_string()),
                "extra_cycles": extra_cycles,
            });
            let (pres, source) = match gens {
                Some(path) => {
                    if extra_cycles.is_some() {
                        return Err(Error::Input("--extra-cycles cannot be combined with --gens".into()));
                    }
                    let g = GeneratorsFile::from_json(&read(path)?)?;
                    (Presentation::new(s, g.vectors)?, "user-supplied")
                }
                None => default_presentation(s, *extra_cycles)?,
            };
            cmd_t1("t1", inputs, &pres, source, degree)
        }
        Command::Inseparable { graph } => {
            let (g, inputs) = load_graph(graph)?;
            cmd_inseparable(inputs, &g)
        }
        Command::Semirigid { graph } => {
            let (g, inputs) = load_graph(graph)?;
            cmd_semirigid(inputs, &g)
        }
        Command::Scan { graph, upper } => {
            let (g, mut inputs) = load_graph(graph)?;
            inputs["upper"] = json!(upper);
            cmd_scan(inputs, &g, *upper, cli.jobs)
        }
        Command::Polyomino { cells, check } => cmd_polyomino(cells, *check),
        Command::Numsgp { h1, h2, h3 } => cmd_numsgp(*h1, *h2, *h3),
        Command::Gn { n, action } => {
            let g = build_gn(*n)?;
            let mut inputs = json!({ "n": n, "graph": report::graph(&g) });
            match action {
                GnAction::Scan { upper } => {
                    inputs["upper"] = json!(upper);
                    cmd_scan(inputs, &g, *upper, cli.jobs)
                }
                GnAction::Inseparable => cmd_inseparable(inputs, &g),
                GnAction::Semirigid => cmd_semirigid(inputs, &g),
                GnAction::T1 { degree } => {
                    inputs["degree"] = json!(degree);
                    let (_, pres) = edge_ring(&g)?;
                    cmd_t1("gn t1", inputs, &pres, "induced cycles", degree)
                }
            }
        }
        Command::VerifySeparation { candidate, base_lattice } => cmd_verify(candidate, base_lattice.as_deref()),
    }
}

fn edge_graph(s: &AffineSemigroup) -> Option<BipartiteGraph> {
    let mut edges = Vec::new();
    for h in s.generators() {
        let e = h.to_i64s()?;
        if e.iter().any(|&x| x != 0 && x != 1) {
            return None;
        }
        let ones: Vec<usize> = (0..e.len()).filter(|&k| e[k] == 1).collect();
        if ones.len() != 2 {
            return None;
        }
        edges.push((ones[0], ones[1]));
    }
    BipartiteGraph::new(s.ambient_dim(), edges).ok()
}

fn default_presentation(s: AffineSemigroup, extra_cycles: Option<usize>) -> Result<(Presentation, &'static str)> {
    if let Some(g) = edge_graph(&s) {
        let (_, pres) = edge_ring(&g)?;
        return match extra_cycles {
            None => Ok((pres, "induced cycles")),
            Some(len) => {
                let mut gens = pres.gens().to_vec();
                for c in all_cycles(&g, len) {
                    let v = cycle_vector(&g, &c);
                    if !gens.contains(&v) && !gens.contains(&-&v) {
                        gens.push(v);
                    }
                }
                Ok((Presentation::new(pres.semigroup().clone(), gens)?, "induced cycles plus all cycles up to the given length"))
            }
        };
    }
    if extra_cycles.is_some() {
        return Err(Error::Input("--extra-cycles needs an edge ring of a bipartite graph".into()));
    }
    if s.ambient_dim() == 1 && s.generator_count() == 3 {
        let h: Option<Vec<u64>> = s.generators().iter().map(|g| g.to_i64s().and_then(|x| u64::try_from(x[0]).ok())).collect();
        if let Some(st) = h.and_then(|h| structure(h[0], h[1], h[2]).ok()) {
            return Ok((st.presentation()?, "minimal relations of the numerical semigroup"));
        }
    }
    Ok((Presentation::from_lattice_basis(s)?, "lattice basis"))
}

fn cmd_t1(command: &str, inputs: Value, pres: &Presentation, source: &str, degree: &str) -> Result<Outcome> {
    let s = pres.semigroup();
    let a = degree::parse_degree(degree, s.generators(), s.ambient_dim())?;
    let r = pres.t1_dim(&a)?;
    let mut results = report::t1(&r);
    results["generating_set"] = json!({ "source": source, "vectors": report::vectors(pres.gens()) });
    let out = Outcome::new(command, inputs, results);
    Ok(if source == "lattice basis" {
        out.warn("no generating set given; a lattice basis of the relation lattice was used, which need not generate the toric ideal")
    } else {
        out
    })
}

fn cmd_inseparable(inputs: Value, g: &BipartiteGraph) -> Result<Outcome> {
    let r = inseparability_report(g)?;
    let mut results = report::inseparability(&r);
    let mut failed = false;
    let mut splits = Vec::new();
    for v in r.verdicts.iter().filter(|v| v.separable) {
        let c = v.witness.as_ref().expect("separable edges carry a witness");
        let s = graph_separation(g, c, v.edge)?;
        let checks = verify_separation(&s.candidate, &s.base_lattice)?;
        failed |= !checks.passed;
        splits.push(json!({
            "edge": v.edge + 1,
            "split_graph": report::graph(&s.graph),
            "identification": s.identification.iter().map(|x| x + 1).collect::<Vec<_>>(),
            "verification": report::checklist(&checks),
        }));
    }
    results["separations"] = json!(splits);
    Ok(Outcome::new("inseparable", inputs, results).violated_if(r.disagreements() > 0 || failed))
}

fn cmd_semirigid(inputs: Value, g: &BipartiteGraph) -> Result<Outcome> {
    let r = semirigid_report(g)?;
    Ok(Outcome::new("semirigid", inputs, report::semirigidity(&r)).violated_if(!r.agrees))
}

fn cmd_scan(inputs: Value, g: &BipartiteGraph, upper: i64, jobs: usize) -> Result<Outcome> {
    let r = rigidity_scan(g, upper, jobs)?;
    Ok(Outcome::new("scan", inputs, report::scan(&r)).warn(r.note))
}

fn cmd_polyomino(path: &Path, check: CheckArg) -> Result<Outcome> {
    let file = PolyominoFile::from_json(&read(path)?)?;
    let p = file.build()?;
    let check = match check {
        CheckArg::Convex => PolyominoCheck::Convex,
        CheckArg::Inseparable => PolyominoCheck::Inseparable,
        CheckArg::Semirigid => PolyominoCheck::Semirigid,
    };
    let a = analyze(&p, check)?;
    let inputs = json!({ "cells": path.display().to_string(), "cell_list": file.cells, "check": check });
    let violated = a.inseparability.as_ref().is_some_and(|r| r.disagreements() > 0)
        || a.semirigidity.as_ref().is_some_and(|r| !r.agrees);
    let results = json!({
        "cell_count": a.cell_count,
        "convex": a.convex,
        "inner_intervals": p.inner_intervals(),
        "vertex_labels": p.vertex_labels(),
        "graph": report::graph(&p.to_bipartite()),
        "inseparability": a.inseparability.as_ref().map(report::inseparability),
        "semirigidity": a.semirigidity.as_ref().map(report::semirigidity),
    });
    let mut out = Outcome::new("polyomino", inputs, results).violated_if(violated);
    for w in a.warnings {
        out = out.warn(w);
    }
    Ok(out)
}

fn cmd_numsgp(h1: u64, h2: u64, h3: u64) -> Result<Outcome> {
    let st = structure(h1, h2, h3)?;
    let t1 = t1_at_generators(&st)?;
    let pres = st.presentation()?;
    let base = st.relation_lattice();
    let mut violated = false;
    let mut separations = Vec::new();
    for i in st.separable_indices() {
        let cand = build_separation(&st, i)?;
        let checks = verify_separation(&cand, &base)?;
        violated |= !checks.passed || t1[i].t1_dim == 0;
        separations.push(json!({
            "index": i + 1,
            "lattice": cand.lattice,
            "lifted_gens": cand.lifted_gens,
            "base_gens": cand.base_gens,
            "verification": report::checklist(&checks),
        }));
    }
    if let Some(ci) = st.ci_index {
        violated |= t1[ci].t1_dim != 0;
    }
    let mut literal = Vec::new();
    for (label, cand) in literal_readings(&st) {
        let checks = verify_separation(&cand, &base)?;
        literal.push(json!({ "label": label, "lifted_gens": cand.lifted_gens, "verification": report::checklist(&checks) }));
    }
    let results = json!({
        "case": st.case,
        "c": st.c,
        "r": st.r,
        "ci_index": st.ci_index.map(|i| i + 1),
        "relations": st.v,
        "generating_set": report::vectors(pres.gens()),
        "t1_at_generators": t1.iter().map(report::t1).collect::<Vec<_>>(),
        "separations": separations,
        "literal_readings": literal,
    });
    Ok(Outcome::new("numsgp", json!({ "generators": [h1, h2, h3] }), results).violated_if(violated))
}

fn cmd_verify(candidate: &Path, base_lattice: Option<&Path>) -> Result<Outcome> {
    let file = CandidateFile::from_json(&read(candidate)?)?;
    let cand = file.build()?;
    let (base, from_gens) = match base_lattice {
        Some(p) => {
            let g = GeneratorsFile::from_json(&read(p)?)?;
            (IntMatrix::from_rows(cand.base_dim, &g.vectors)?, false)
        }
        None => (IntMatrix::from_rows(cand.base_dim, &cand.base_gens)?, true),
    };
    let checks = verify_separation(&cand, &base)?;
    let inputs = json!({
        "candidate": candidate.display().to_string(),
        "base_lattice": base_lattice.map(|p| p.display().to_string()),
        "sep_index": cand.sep_index + 1,
    });
    let out = Outcome::new("verify-separation", inputs, report::checklist(&checks));
    Ok(if from_gens { out.warn("no base lattice given; using the span of base_gens") } else { out })
}
