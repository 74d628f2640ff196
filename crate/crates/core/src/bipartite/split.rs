//! Splitting a graph along a chord with no crossing path chord, which yields
//! an explicit separation of the edge ring at that chord.

use std::collections::VecDeque;

use serde::Serialize;

use super::criteria::{crossing_path_chord, split_at_chord};
use super::cycles::{cycle_vector, induced_cycles, Cycle};
use super::BipartiteGraph;
use crate::error::{input, Error, Result};
use crate::linalg::{kernel_basis, IntMatrix, IntVector};
use crate::semigroup::AffineSemigroup;
use crate::separation::{fold, SeparationCandidate};

#[derive(Clone, Debug)]
pub struct GraphSeparation {
    /// `G′ = G₁ ∪ G₂` on `m + 2` vertices; the copies of the chord endpoints
    /// `u`, `w` on the `G₁` side are vertices `m` and `m + 1`.
    pub graph: BipartiteGraph,
    /// Vertex map `G′ → G`.
    pub identification: Vec<usize>,
    /// Position of the chord in both edge orders.
    pub chord: usize,
    /// Position of the chord's copy in `G′` (always `n`).
    pub duplicate_edge: usize,
    /// Vertices outside the cycle that go with the first arc.
    pub x_set: Vec<usize>,
    pub y_set: Vec<usize>,
    pub candidate: SeparationCandidate,
    /// Relation lattice of `G`.
    pub base_lattice: IntMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitChecks {
    pub quotient_matches: bool,
    pub cycle_space_dims: (usize, usize),
    pub chord_copies_apart: bool,
}

/// Builds `G′` for the chord `eⱼ` of `c`. Fails with an input error when `c`
/// has a crossing path chord for `eⱼ`.
pub fn graph_separation(g: &BipartiteGraph, c: &Cycle, j: usize) -> Result<GraphSeparation> {
    if let Some(path) = crossing_path_chord(g, c, j)? {
        return input(format!(
            "cycle {:?} has the crossing path chord {:?} for edge {}",
            c.one_based(),
            path.iter().map(|v| v + 1).collect::<Vec<_>>(),
            j + 1
        ));
    }
    let (u, w, arc1, arc2) = split_at_chord(g, c, j)?;
    let m = g.vertex_count();
    let n = g.edge_count();

    let mut on_cycle = vec![false; m];
    c.vertex_seq.iter().for_each(|&v| on_cycle[v] = true);
    let mut first = vec![false; m];
    arc1.iter().for_each(|&v| first[v] = true);
    let mut queue: VecDeque<usize> = arc1.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !on_cycle[y] && !first[y] {
                first[y] = true;
                queue.push_back(y);
            }
        }
    }
    let x_set: Vec<usize> = (0..m).filter(|&v| first[v] && !on_cycle[v]).collect();
    let y_set: Vec<usize> = (0..m).filter(|&v| !first[v] && !on_cycle[v]).collect();
    let mut second = vec![false; m];
    y_set.iter().chain(&arc2).for_each(|&v| second[v] = true);

    let copy = |v: usize| {
        if v == u {
            m
        } else if v == w {
            m + 1
        } else {
            v
        }
    };
    let mut edges = Vec::with_capacity(n + 1);
    for t in 0..n {
        let (a, b) = g.edge(t);
        if t == j || first[a] || first[b] {
            if second[a] || second[b] {
                return Err(Error::Assertion(format!("edge {{{}, {}}} joins both sides of the split", a + 1, b + 1)));
            }
            edges.push((a, b));
        } else {
            edges.push((copy(a), copy(b)));
        }
    }
    edges.push((m, m + 1));
    let split = BipartiteGraph::new(m + 2, edges)?;
    let mut identification: Vec<usize> = (0..m).collect();
    identification.extend([u, w]);

    let checks = split_checks(g, &split, &identification, j);
    if !checks.quotient_matches || checks.cycle_space_dims.0 != checks.cycle_space_dims.1 || !checks.chord_copies_apart {
        return Err(Error::Assertion(format!("graph split failed its postconditions: {checks:?}")));
    }

    let gm = AffineSemigroup::edge_ring(&split).generator_matrix();
    let lattice = kernel_basis(&gm);
    let lifted_gens: Vec<IntVector> = induced_cycles(&split).iter().map(|cy| cycle_vector(&split, cy)).collect();
    let base_gens = lifted_gens.iter().map(|wv| fold(wv, j)).collect();
    let base_lattice = kernel_basis(&AffineSemigroup::edge_ring(g).generator_matrix());
    let candidate = SeparationCandidate { base_dim: n, sep_index: j, lattice, base_gens, lifted_gens };
    Ok(GraphSeparation {
        graph: split,
        identification,
        chord: j,
        duplicate_edge: n,
        x_set,
        y_set,
        candidate,
        base_lattice,
    })
}

/// Postconditions of the split: collapsing the copies gives back `G` (with
/// the chord doubled), the cycle space keeps its dimension, and the chord
/// and its copy lie in different components.
pub fn split_checks(g: &BipartiteGraph, split: &BipartiteGraph, identification: &[usize], j: usize) -> SplitChecks {
    let n = g.edge_count();
    let image = |t: usize| {
        let (a, b) = split.edge(t);
        let (a, b) = (identification[a], identification[b]);
        (a.min(b), a.max(b))
    };
    let quotient_matches = split.edge_count() == n + 1 && (0..n).all(|t| image(t) == g.edge(t)) && image(n) == g.edge(j);
    let chord_copies_apart = split.component_of(split.edge(j).0) != split.component_of(split.edge(n).0);
    SplitChecks { quotient_matches, cycle_space_dims: (g.cycle_space_dim(), split.cycle_space_dim()), chord_copies_apart }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::verify_separation;

    fn hexagon_with_chord() -> BipartiteGraph {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        BipartiteGraph::new(6, edges).unwrap()
    }

    #[test]
    fn hexagon_splits_into_two_squares() {
        let g = hexagon_with_chord();
        let c = Cycle::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let s = graph_separation(&g, &c, 6).unwrap();
        assert_eq!(s.graph.vertex_count(), 8);
        assert_eq!(s.graph.component_count(), 2);
        assert_eq!(induced_cycles(&s.graph).len(), 2);
        assert!(induced_cycles(&s.graph).iter().all(|cy| cy.len() == 4));
        assert!(s.x_set.is_empty() && s.y_set.is_empty());
        let checks = verify_separation(&s.candidate, &s.base_lattice).unwrap();
        assert!(checks.passed, "{checks:?}");
    }

    #[test]
    fn crossing_chord_is_rejected() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 3), (1, 4)]);
        let g = BipartiteGraph::new(6, edges).unwrap();
        let c = Cycle::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(matches!(graph_separation(&g, &c, 6), Err(Error::Input(_))));
    }

    #[test]
    fn outside_vertices_follow_their_arc() {
        // a square hanging off the first arc of the hexagon
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 3), (1, 6), (6, 7), (7, 2)]);
        let g = BipartiteGraph::new(8, edges).unwrap();
        let c = Cycle::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let s = graph_separation(&g, &c, 6).unwrap();
        let (_, _, arc1, _) = split_at_chord(&g, &c, 6).unwrap();
        assert!(arc1.contains(&1));
        assert_eq!(s.x_set, vec![6, 7]);
        assert!(verify_separation(&s.candidate, &s.base_lattice).unwrap().passed);
    }
}
