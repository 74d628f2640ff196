use serde::Serialize;

use super::BipartiteGraph;
use crate::linalg::IntVector;

/// A cycle as a cyclic vertex sequence. `edge_indices[k]` joins
/// `vertex_seq[k]` and `vertex_seq[k + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cycle {
    pub vertex_seq: Vec<usize>,
    pub edge_indices: Vec<usize>,
}

impl Cycle {
    /// Builds the canonical form from any cyclic vertex sequence of `g`.
    pub fn from_vertices(g: &BipartiteGraph, seq: &[usize]) -> Option<Cycle> {
        let len = seq.len();
        if len < 4 || len % 2 == 1 {
            return None;
        }
        let start = (0..len).min_by_key(|&k| seq[k])?;
        let next = seq[(start + 1) % len];
        let prev = seq[(start + len - 1) % len];
        let vertex_seq: Vec<usize> = if next < prev {
            (0..len).map(|k| seq[(start + k) % len]).collect()
        } else {
            (0..len).map(|k| seq[(start + len - k) % len]).collect()
        };
        let mut sorted = vertex_seq.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return None;
        }
        let edge_indices = (0..len)
            .map(|k| g.edge_index(vertex_seq[k], vertex_seq[(k + 1) % len]))
            .collect::<Option<Vec<_>>>()?;
        Some(Cycle { vertex_seq, edge_indices })
    }

    pub fn len(&self) -> usize {
        self.vertex_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_seq.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertex_seq.contains(&v)
    }

    pub fn contains_edge(&self, j: usize) -> bool {
        self.edge_indices.contains(&j)
    }

    /// Position of edge `j` along the cycle.
    pub fn edge_position(&self, j: usize) -> Option<usize> {
        self.edge_indices.iter().position(|&e| e == j)
    }

    /// Edges of `g` joining two vertices of the cycle without being on it.
    pub fn chords(&self, g: &BipartiteGraph) -> Vec<usize> {
        (0..g.edge_count())
            .filter(|&j| {
                let (a, b) = g.edge(j);
                self.contains_vertex(a) && self.contains_vertex(b) && !self.contains_edge(j)
            })
            .collect()
    }

    /// Whether edges `j` and `k` of the cycle sit an even number of steps apart.
    pub fn same_parity(&self, j: usize, k: usize) -> Option<bool> {
        Some((self.edge_position(j)? + self.edge_position(k)?) % 2 == 0)
    }

    /// 1-based vertex labels, for reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.vertex_seq.iter().map(|v| v + 1).collect()
    }
}

/// All chordless cycles in canonical form, sorted.
pub fn induced_cycles(g: &BipartiteGraph) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        path.push(s);
        on_path[s] = true;
        for &x in g.neighbors(s) {
            if x > s {
                path.push(x);
                on_path[x] = true;
                extend_chordless(g, &mut path, &mut on_path, &mut out);
                on_path[x] = false;
                path.pop();
            }
        }
        on_path[s] = false;
        path.pop();
    }
    out.sort();
    out
}

// `path` is an induced path starting at its minimum vertex.
fn extend_chordless(g: &BipartiteGraph, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
    let s = path[0];
    let last = *path.last().unwrap();
    let inner_len = path.len() - 1;
    for &x in g.neighbors(last) {
        if x <= s || on_path[x] {
            continue;
        }
        if path[1..inner_len].iter().any(|&p| g.adjacent(p, x)) {
            continue;
        }
        if g.adjacent(s, x) {
            // closes a chordless cycle; record one orientation only
            if path[1] < x {
                path.push(x);
                out.push(Cycle::from_vertices(g, path).expect("chordless closed path is a cycle"));
                path.pop();
            }
            continue;
        }
        path.push(x);
        on_path[x] = true;
        extend_chordless(g, path, on_path, out);
        on_path[x] = false;
        path.pop();
    }
}

/// All cycles of length at most `max_len`, canonical and sorted.
pub fn all_cycles(g: &BipartiteGraph, max_len: usize) -> Vec<Cycle> {
    fn walk(g: &BipartiteGraph, max_len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &x in g.neighbors(last) {
            if x == s && path.len() >= 4 && path[1] < last {
                out.push(Cycle::from_vertices(g, path).expect("closed simple path"));
            }
            if x <= s || on_path[x] || path.len() == max_len {
                continue;
            }
            path.push(x);
            on_path[x] = true;
            walk(g, max_len, path, on_path, out);
            on_path[x] = false;
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        on_path[s] = true;
        walk(g, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

/// `v(C)`: `+1, −1, +1, …` along the cycle's edges, starting at its first edge.
pub fn cycle_vector(g: &BipartiteGraph, c: &Cycle) -> IntVector {
    let mut v = vec![0i64; g.edge_count()];
    for (k, &j) in c.edge_indices.iter().enumerate() {
        v[j] = if k % 2 == 0 { 1 } else { -1 };
    }
    IntVector::from_i64s(&v)
}
