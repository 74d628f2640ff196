//! Edge-ring membership as a transportation problem: `a ∈ H` iff `a ≥ 0`
//! and the supplies `a` on one side can be shipped along edges to meet the
//! demands `a` on the other side exactly.

use petgraph::algo::ford_fulkerson;
use petgraph::graph::{Graph, NodeIndex};

use super::BipartiteGraph;
use crate::error::{check_dim, Result};
use crate::linalg::IntVector;

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    graph: BipartiteGraph,
}

impl FlowNetwork {
    pub fn new(g: &BipartiteGraph) -> Self {
        FlowNetwork { graph: g.clone() }
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        let g = &self.graph;
        if a.iter().any(|&x| x < 0) {
            return false;
        }
        let mut supply = 0i64;
        let mut demand = 0i64;
        for v in 0..g.vertex_count() {
            if a[v] == 0 {
                continue;
            }
            if g.neighbors(v).is_empty() {
                return false;
            }
            if g.side(v) == 0 {
                supply += a[v];
            } else {
                demand += a[v];
            }
        }
        if supply != demand {
            return false;
        }
        if supply == 0 {
            return true;
        }

        let mut net: Graph<(), u64> = Graph::with_capacity(g.vertex_count() + 2, g.edge_count() + g.vertex_count());
        let nodes: Vec<NodeIndex> = (0..g.vertex_count()).map(|_| net.add_node(())).collect();
        let source = net.add_node(());
        let sink = net.add_node(());
        let big = supply as u64;
        for v in 0..g.vertex_count() {
            if a[v] == 0 {
                continue;
            }
            if g.side(v) == 0 {
                net.add_edge(source, nodes[v], a[v] as u64);
            } else {
                net.add_edge(nodes[v], sink, a[v] as u64);
            }
        }
        for &(x, y) in g.edges() {
            if a[x] == 0 || a[y] == 0 {
                continue;
            }
            let (l, r) = if g.side(x) == 0 { (x, y) } else { (y, x) };
            net.add_edge(nodes[l], nodes[r], big);
        }
        let (value, _) = ford_fulkerson(&net, source, sink);
        value == supply as u64
    }
}

/// Whether `a` lies in the edge ring semigroup of `g`.
pub fn membership_flow(g: &BipartiteGraph, a: &IntVector) -> Result<bool> {
    check_dim(g.vertex_count(), a.len())?;
    match a.to_i64s() {
        Some(small) => Ok(FlowNetwork::new(g).contains(&small)),
        None => Err(crate::error::Error::OutOfRange(a.to_string())),
    }
}
