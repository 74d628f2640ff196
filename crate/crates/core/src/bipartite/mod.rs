//! Bipartite graphs and their edge rings.

pub mod criteria;
pub mod cycles;
pub mod flow;
pub mod gn;
pub mod scan;
pub mod split;

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::linalg::IntVector;
use crate::semigroup::AffineSemigroup;
use crate::t1::Presentation;

pub use criteria::{
    crossing_path_chord, inseparability_report, semirigid_report, semirigid_witness, EdgeVerdict,
    InseparabilityReport, SemirigidReport, SemirigidWitness,
};
pub use cycles::{all_cycles, cycle_vector, induced_cycles, Cycle};
pub use gn::{build_gn, gn_membership};
pub use scan::{rigidity_scan, ScanReport};
pub use split::{graph_separation, GraphSeparation};

/// A simple bipartite graph on vertices `0..m` with an ordered edge list.
/// Part 0 is the color class of the smallest vertex of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    side: Vec<u8>,
    component: Vec<usize>,
    component_count: usize,
}

impl BipartiteGraph {
    /// Edges are 0-based vertex pairs; the order given is the edge order.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return input(format!("edge {} mentions a vertex outside 1..={}", k + 1, vertex_count));
            }
            if a == b {
                return input(format!("edge {} is a loop at vertex {}", k + 1, a + 1));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return input(format!("edge {} = {{{}, {}}} is repeated", k + 1, e.0 + 1, e.1 + 1));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            normalized.push(e);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }

        let mut side = vec![u8::MAX; vertex_count];
        let mut component = vec![usize::MAX; vertex_count];
        let mut component_count = 0;
        for start in 0..vertex_count {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            component[start] = component_count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adjacency[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        component[y] = component_count;
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return input(format!(
                            "graph is not bipartite: odd cycle through {{{}, {}}}",
                            x.min(y) + 1,
                            x.max(y) + 1
                        ));
                    }
                }
            }
            component_count += 1;
        }
        Ok(BipartiteGraph { vertex_count, edges: normalized, adjacency, side, component, component_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints as `(smaller, larger)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.edges[j]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of the edge `{a, b}` in the edge order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.iter().position(|&f| f == e)
    }

    /// 0 or 1 for each vertex.
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn parts(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.vertex_count).partition(|&v| self.side[v] == 0)
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// `|E| − |V| + c(G)`.
    pub fn cycle_space_dim(&self) -> usize {
        self.edges.len() + self.component_count - self.vertex_count
    }

    /// The generators `δᵢ + δⱼ`, one per edge.
    pub fn edge_vectors(&self) -> Vec<IntVector> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                let mut v = vec![0i64; self.vertex_count];
                v[a] = 1;
                v[b] = 1;
                IntVector::from_i64s(&v)
            })
            .collect()
    }

    /// Whether `a` lies in the group generated by the edge vectors: on every
    /// component the two sides carry equal weight, and isolated vertices
    /// carry none.
    pub fn in_edge_group_i64(&self, a: &[i64]) -> bool {
        let mut balance = vec![0i64; self.component_count];
        for v in 0..self.vertex_count {
            if self.adjacency[v].is_empty() {
                if a[v] != 0 {
                    return false;
                }
                continue;
            }
            let c = self.component[v];
            balance[c] += if self.side[v] == 0 { a[v] } else { -a[v] };
        }
        balance.iter().all(|&b| b == 0)
    }

    /// Whether edge `j` lies on some cycle, i.e. its endpoints stay connected
    /// without it.
    pub fn edge_on_cycle(&self, j: usize) -> bool {
        let (a, b) = self.edges[j];
        let mut seen = vec![false; self.vertex_count];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if x == a && y == b {
                    continue;
                }
                if y == b {
                    return true;
                }
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Drops every edge lying on no cycle. Returns the pruned graph (same
    /// vertices) and, for each kept edge, its original index.
    pub fn prune_cycle_free_edges(&self) -> (BipartiteGraph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.edges.len()).filter(|&j| self.edge_on_cycle(j)).collect();
        if kept.len() < self.edges.len() {
            log::info!("pruned {} edge(s) lying on no cycle", self.edges.len() - kept.len());
        }
        let edges = kept.iter().map(|&j| self.edges[j]).collect();
        let g = BipartiteGraph::new(self.vertex_count, edges).expect("subgraph of a valid graph");
        (g, kept)
    }

    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> BipartiteGraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (k, &v) in sorted.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        BipartiteGraph::new(sorted.len(), edges).expect("subgraph of a valid graph")
    }
}

/// Graph file layout; vertices are 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("graph file: {e}")))
    }

    pub fn from_graph(g: &BipartiteGraph) -> Self {
        GraphFile { vertices: g.vertex_count(), edges: g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect() }
    }

    pub fn build(&self) -> Result<BipartiteGraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (k, &[a, b]) in self.edges.iter().enumerate() {
            if a == 0 || b == 0 {
                return input(format!("edge {} uses vertex 0; vertices are numbered from 1", k + 1));
            }
            edges.push((a - 1, b - 1));
        }
        BipartiteGraph::new(self.vertices, edges)
    }
}

/// The edge ring semigroup with the induced-cycle presentation.
pub fn edge_ring(g: &BipartiteGraph) -> Result<(AffineSemigroup, Presentation)> {
    let semigroup = AffineSemigroup::edge_ring(g);
    let gens = induced_cycles(g).iter().map(|c| cycle_vector(g, c)).collect();
    let presentation = Presentation::new(semigroup.clone(), gens)?;
    Ok((semigroup, presentation))
}
