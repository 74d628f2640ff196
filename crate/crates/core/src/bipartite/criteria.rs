//! Combinatorial criteria for inseparability and semi-rigidity of edge
//! rings, each cross-checked against the rank formula for T¹.

use std::collections::VecDeque;

use serde::Serialize;

use super::cycles::{induced_cycles, Cycle};
use super::{edge_ring, BipartiteGraph};
use crate::error::{input, Error, Result};
use crate::t1::Presentation;

pub const NOT_ON_CYCLE: &str = "not on any cycle";
pub const NO_UNIQUE_CHORD_CYCLE: &str = "no cycle has this edge as its only chord";
pub const ALL_CROSSED: &str = "every cycle with this edge as its only chord has a crossing path chord";

/// Splits `c` at the chord `j = {u, w}`: returns `(u, w, arc₁, arc₂)` where
/// walking `c` from `u` passes `arc₁`, then `w`, then `arc₂`.
pub(crate) fn split_at_chord(
    g: &BipartiteGraph,
    c: &Cycle,
    j: usize,
) -> Result<(usize, usize, Vec<usize>, Vec<usize>)> {
    if j >= g.edge_count() {
        return input(format!("edge {} out of range", j + 1));
    }
    let (u, w) = g.edge(j);
    if !c.contains_vertex(u) || !c.contains_vertex(w) || c.contains_edge(j) {
        return input(format!("edge {{{}, {}}} is not a chord of the cycle {:?}", u + 1, w + 1, c.one_based()));
    }
    let len = c.len();
    let start = c.vertex_seq.iter().position(|&x| x == u).unwrap();
    let seq: Vec<usize> = (0..len).map(|k| c.vertex_seq[(start + k) % len]).collect();
    let k = seq.iter().position(|&x| x == w).unwrap();
    Ok((u, w, seq[1..k].to_vec(), seq[k + 1..].to_vec()))
}

/// A path from one arc of `c` (cut at the chord `j`) to the other whose inner
/// vertices avoid `c`, found by breadth-first search. Vertices are 0-based.
pub fn crossing_path_chord(g: &BipartiteGraph, c: &Cycle, j: usize) -> Result<Option<Vec<usize>>> {
    let (_, _, arc1, arc2) = split_at_chord(g, c, j)?;
    if arc1.is_empty() || arc2.is_empty() {
        return Ok(None);
    }
    let m = g.vertex_count();
    let mut on_cycle = vec![false; m];
    c.vertex_seq.iter().for_each(|&v| on_cycle[v] = true);
    let mut in_arc2 = vec![false; m];
    arc2.iter().for_each(|&v| in_arc2[v] = true);

    let mut parent = vec![usize::MAX; m];
    let mut seen = vec![false; m];
    let mut queue = VecDeque::new();
    for &a in &arc1 {
        seen[a] = true;
        queue.push_back(a);
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if in_arc2[y] {
                let mut path = vec![y, x];
                let mut cur = x;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Ok(Some(path));
            }
            if !on_cycle[y] && !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

/// Rotates `c` to start at `from`, walking away from `to` first, so that it
/// reads `from, …, to`.
fn arc_between(c: &Cycle, from: usize, to: usize) -> Vec<usize> {
    let len = c.len();
    let s = c.vertex_seq.iter().position(|&x| x == from).unwrap();
    let fwd: Vec<usize> = (0..len).map(|k| c.vertex_seq[(s + k) % len]).collect();
    if fwd[1] == to {
        (0..len).map(|k| c.vertex_seq[(s + len - k) % len]).collect()
    } else {
        fwd
    }
}

/// A cycle with `eⱼ` as its only chord and no crossing path chord, if any.
///
/// Such a cycle is the union of two induced cycles through `eⱼ` meeting only
/// in its endpoints with no edges between their remaining vertices; and if
/// any cycle with chord `eⱼ` lacks a crossing path chord, shortcutting along
/// its other chords yields one with `eⱼ` as the only chord that still lacks
/// one.
pub fn separability_witness(g: &BipartiteGraph, induced: &[Cycle], j: usize) -> Option<Cycle> {
    let (u, w) = g.edge(j);
    glued_pairs(g, induced, j).into_iter().find_map(|(c1, c2)| {
        let mut seq = arc_between(c1, u, w);
        let back = arc_between(c2, w, u);
        seq.extend_from_slice(&back[1..back.len() - 1]);
        let c = Cycle::from_vertices(g, &seq).expect("union of two cycles glued along an edge");
        matches!(crossing_path_chord(g, &c, j), Ok(None)).then_some(c)
    })
}

/// Pairs of induced cycles through `eⱼ` whose union minus `eⱼ` is a cycle
/// with `eⱼ` as its only chord.
fn glued_pairs<'a>(g: &BipartiteGraph, induced: &'a [Cycle], j: usize) -> Vec<(&'a Cycle, &'a Cycle)> {
    let (u, w) = g.edge(j);
    let through: Vec<(&Cycle, Vec<usize>)> = induced
        .iter()
        .filter(|c| c.contains_edge(j))
        .map(|c| (c, c.vertex_seq.iter().copied().filter(|&x| x != u && x != w).collect()))
        .collect();
    let mut out = Vec::new();
    for (a, (c1, inner1)) in through.iter().enumerate() {
        for (c2, inner2) in &through[a + 1..] {
            let apart = inner2.iter().all(|&y| !inner1.contains(&y) && inner1.iter().all(|&x| !g.adjacent(x, y)));
            if apart {
                out.push((*c1, *c2));
            }
        }
    }
    out
}

/// Verdict for one edge of the input graph. Edge indices are 0-based
/// positions in the input edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    pub edge: usize,
    pub endpoints: (usize, usize),
    pub separable: bool,
    /// The cycle with this edge as a chord and no crossing path chord.
    pub witness: Option<Cycle>,
    /// Why the edge is inseparable.
    pub criterion: Option<String>,
    /// `dim T¹` at `−hⱼ`, absent for pruned edges.
    pub t1_dim: Option<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InseparabilityReport {
    pub inseparable: bool,
    pub verdicts: Vec<EdgeVerdict>,
    pub pruned_edges: Vec<usize>,
}

impl InseparabilityReport {
    pub fn disagreements(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.agrees).count()
    }

    pub fn separable_edges(&self) -> Vec<usize> {
        self.verdicts.iter().filter(|v| v.separable).map(|v| v.edge).collect()
    }
}

/// Cycle of the pruned graph rewritten with the input graph's edge indices.
fn remap(c: &Cycle, kept: &[usize]) -> Cycle {
    Cycle { vertex_seq: c.vertex_seq.clone(), edge_indices: c.edge_indices.iter().map(|&j| kept[j]).collect() }
}

struct Pruned {
    graph: BipartiteGraph,
    kept: Vec<usize>,
    induced: Vec<Cycle>,
    presentation: Presentation,
}

fn prune(g: &BipartiteGraph) -> Result<Pruned> {
    let (graph, kept) = g.prune_cycle_free_edges();
    let (_, presentation) = edge_ring(&graph)?;
    let induced = induced_cycles(&graph);
    Ok(Pruned { graph, kept, induced, presentation })
}

/// Per-edge separability by the cycle criterion, with `dim T¹(−hⱼ)` alongside.
pub fn inseparability_report(g: &BipartiteGraph) -> Result<InseparabilityReport> {
    let p = prune(g)?;
    let mut verdicts = Vec::with_capacity(g.edge_count());
    let mut pruned_edges = Vec::new();
    let mut pos = 0;
    for j in 0..g.edge_count() {
        if pos >= p.kept.len() || p.kept[pos] != j {
            pruned_edges.push(j);
            verdicts.push(EdgeVerdict {
                edge: j,
                endpoints: g.edge(j),
                separable: false,
                witness: None,
                criterion: Some(NOT_ON_CYCLE.to_string()),
                t1_dim: None,
                agrees: true,
            });
            continue;
        }
        let jp = pos;
        pos += 1;
        let witness = separability_witness(&p.graph, &p.induced, jp);
        let criterion = match &witness {
            Some(_) => None,
            None if unique_chord_cycle_exists(&p.graph, &p.induced, jp) => Some(ALL_CROSSED.to_string()),
            None => Some(NO_UNIQUE_CHORD_CYCLE.to_string()),
        };
        let a = p.presentation.negative_generator_sum(&[jp])?;
        let t1 = p.presentation.report_in_group(&a)?.t1_dim;
        let separable = witness.is_some();
        verdicts.push(EdgeVerdict {
            edge: j,
            endpoints: g.edge(j),
            separable,
            witness: witness.map(|c| remap(&c, &p.kept)),
            criterion,
            t1_dim: Some(t1),
            agrees: separable == (t1 > 0),
        });
    }
    let inseparable = verdicts.iter().all(|v| !v.separable);
    Ok(InseparabilityReport { inseparable, verdicts, pruned_edges })
}

fn unique_chord_cycle_exists(g: &BipartiteGraph, induced: &[Cycle], j: usize) -> bool {
    !glued_pairs(g, induced, j).is_empty()
}

/// Edges `e`, `f` of the induced cycle `cycle`, an even number of steps
/// apart, such that every induced cycle contains both or neither.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemirigidWitness {
    pub e: usize,
    pub f: usize,
    pub cycle: Cycle,
}

fn find_semirigid_witness(induced: &[Cycle]) -> Option<(usize, usize, &Cycle)> {
    for c in induced {
        let len = c.edge_indices.len();
        for p in 0..len {
            for q in (p + 2..len).step_by(2) {
                let (e, f) = (c.edge_indices[p], c.edge_indices[q]);
                if induced.iter().all(|d| d.contains_edge(e) == d.contains_edge(f)) {
                    return Some((e, f, c));
                }
            }
        }
    }
    None
}

/// Absent iff the edge ring is semi-rigid. Needs an inseparable graph.
pub fn semirigid_witness(g: &BipartiteGraph) -> Result<Option<SemirigidWitness>> {
    let report = inseparability_report(g)?;
    if !report.inseparable {
        return Err(Error::Precondition(format!(
            "graph is separable at edge(s) {:?}; the semi-rigidity criterion needs an inseparable graph",
            report.separable_edges().iter().map(|j| j + 1).collect::<Vec<_>>()
        )));
    }
    let p = prune(g)?;
    Ok(find_semirigid_witness(&p.induced)
        .map(|(e, f, c)| SemirigidWitness { e: p.kept[e], f: p.kept[f], cycle: remap(c, &p.kept) }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDegree {
    pub edges: (usize, usize),
    pub t1_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemirigidReport {
    pub semirigid: bool,
    pub witness: Option<SemirigidWitness>,
    /// `dim T¹` at `−h(e) − h(f)` for the witness pair.
    pub witness_t1_dim: Option<usize>,
    pub pairs_checked: usize,
    /// Pair degrees `−hⱼ − hₖ` (`j < k`) with nonzero T¹.
    pub positive_pairs: Vec<PairDegree>,
    pub agrees: bool,
}

/// The witness search together with the scan of all pair degrees.
pub fn semirigid_report(g: &BipartiteGraph) -> Result<SemirigidReport> {
    let witness = semirigid_witness(g)?;
    let p = prune(g)?;
    let n = p.graph.edge_count();
    let mut positive_pairs = Vec::new();
    let mut witness_t1_dim = None;
    let mut pairs_checked = 0;
    for j in 0..n {
        for k in j + 1..n {
            let a = p.presentation.negative_generator_sum(&[j, k])?;
            let t1 = p.presentation.report_in_group(&a)?.t1_dim;
            pairs_checked += 1;
            let pair = (p.kept[j], p.kept[k]);
            if let Some(w) = &witness {
                if (w.e.min(w.f), w.e.max(w.f)) == pair {
                    witness_t1_dim = Some(t1);
                }
            }
            if t1 > 0 {
                positive_pairs.push(PairDegree { edges: pair, t1_dim: t1 });
            }
        }
    }
    let agrees = witness.is_some() == !positive_pairs.is_empty() && witness_t1_dim.is_none_or(|t| t > 0);
    Ok(SemirigidReport {
        semirigid: witness.is_none(),
        witness,
        witness_t1_dim,
        pairs_checked,
        positive_pairs,
        agrees,
    })
}
