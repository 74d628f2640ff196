//! `Gₙ`: the complete bipartite graph `K_{n,n}` minus the edge `{1, 2n}`.

use super::BipartiteGraph;
use crate::error::{check_dim, input, Error, Result};
use crate::linalg::IntVector;

/// Vertices `1..2n` (stored 0-based); edges `{i, j}` with `i − j` odd except
/// `{1, 2n}`, in lexicographic order. Odd vertices form the first part.
pub fn build_gn(n: usize) -> Result<BipartiteGraph> {
    if n < 3 {
        return input(format!("G_n needs n ≥ 3, got {n}"));
    }
    let m = 2 * n;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if (j - i) % 2 == 1 && !(i == 0 && j == m - 1) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::new(m, edges)
}

/// Closed-form membership in `H(Gₙ)`: `a ≥ 0`, the odd and even vertex sums
/// agree, and `a₁ + a₂ₙ` does not exceed the sum of the other entries.
pub fn gn_membership_i64(n: usize, a: &[i64]) -> bool {
    debug_assert_eq!(a.len(), 2 * n);
    if a.iter().any(|&x| x < 0) {
        return false;
    }
    // 0-based even positions are the odd vertices
    let odd: i64 = a.iter().step_by(2).sum();
    let even: i64 = a.iter().skip(1).step_by(2).sum();
    let ell = a[0] + a[2 * n - 1];
    odd == even && ell <= odd + even - ell
}

pub fn gn_membership(n: usize, a: &IntVector) -> Result<bool> {
    check_dim(2 * n, a.len())?;
    let small = a.to_i64s().ok_or_else(|| Error::OutOfRange(a.to_string()))?;
    Ok(gn_membership_i64(n, &small))
}
