//! Report envelope, 1-based JSON views of library results, text rendering.

use serde::Serialize;
use serde_json::{json, Value};

use toric_core::bipartite::criteria::{InseparabilityReport, SemirigidReport};
use toric_core::bipartite::{BipartiteGraph, Cycle, ScanReport};
use toric_core::separation::Checklist;
use toric_core::{IntVector, T1Report};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    pub version: &'static str,
}

/// A report plus whether a guaranteed property failed to hold.
pub struct Outcome {
    pub report: Report,
    pub violated: bool,
}

impl Outcome {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Outcome {
            report: Report { command: command.into(), inputs, results, warnings: Vec::new(), version: VERSION },
            violated: false,
        }
    }

    pub fn warn(mut self, w: impl Into<String>) -> Self {
        self.report.warnings.push(w.into());
        self
    }

    pub fn violated_if(mut self, v: bool) -> Self {
        self.violated |= v;
        self
    }
}

fn plus_one(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

pub fn vectors(v: &[IntVector]) -> Value {
    json!(v)
}

pub fn t1(r: &T1Report) -> Value {
    json!({
        "degree": r.degree,
        "l": r.l,
        "l_a": r.l_a,
        "d_a": r.d_a,
        "t1_dim": r.t1_dim,
        "f_set": plus_one(&r.f_set),
        "g_set": plus_one(&r.g_set),
    })
}

pub fn cycle(c: &Cycle) -> Value {
    json!({ "vertices": c.one_based(), "edges": plus_one(&c.edge_indices) })
}

pub fn graph(g: &BipartiteGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    json!({ "vertices": g.vertex_count(), "edges": edges })
}

pub fn inseparability(r: &InseparabilityReport) -> Value {
    let verdicts: Vec<Value> = r
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "edge": v.edge + 1,
                "endpoints": [v.endpoints.0 + 1, v.endpoints.1 + 1],
                "separable": v.separable,
                "witness": v.witness.as_ref().map(cycle),
                "criterion": v.criterion,
                "t1_dim": v.t1_dim,
                "agrees": v.agrees,
            })
        })
        .collect();
    json!({
        "inseparable": r.inseparable,
        "separable_edges": plus_one(&r.separable_edges()),
        "pruned_edges": plus_one(&r.pruned_edges),
        "disagreements": r.disagreements(),
        "edges": verdicts,
    })
}

pub fn semirigidity(r: &SemirigidReport) -> Value {
    let pairs: Vec<Value> = r
        .positive_pairs
        .iter()
        .map(|p| json!({ "edges": [p.edges.0 + 1, p.edges.1 + 1], "t1_dim": p.t1_dim }))
        .collect();
    json!({
        "semirigid": r.semirigid,
        "witness": r.witness.as_ref().map(|w| json!({
            "edges": [w.e + 1, w.f + 1],
            "cycle": cycle(&w.cycle),
        })),
        "witness_t1_dim": r.witness_t1_dim,
        "pairs_checked": r.pairs_checked,
        "positive_pairs": pairs,
        "agrees": r.agrees,
    })
}

pub fn scan(r: &ScanReport) -> Value {
    json!({
        "upper": r.upper,
        "degrees_in_box": r.degrees_in_box,
        "degrees_in_group": r.degrees_in_group,
        "nonzero": r.nonzero.iter().map(t1).collect::<Vec<_>>(),
        "note": r.note,
    })
}

pub fn checklist(c: &Checklist) -> Value {
    json!({
        "passed": c.passed,
        "checks": c.checks.iter().map(|k| json!({ "name": k.name, "passed": k.passed, "detail": k.detail })).collect::<Vec<_>>(),
        "failures": c.failures(),
        "note": c.note,
    })
}

/// Indented `key: value` rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = format!("toric {} (version {})\n", r.command, r.version);
    out.push_str("inputs:\n");
    render_value(&r.inputs, 1, &mut out);
    out.push_str("results:\n");
    render_value(&r.results, 1, &mut out);
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) && a.iter().all(|x| scalar(x).is_some_and(|s| !s.contains('\n'))) => {
            Some(v.to_string())
        }
        _ => None,
    }
}

fn render_value(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{pad}(none)\n"));
            }
            for (n, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{}]\n", n + 1));
                        render_value(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}
