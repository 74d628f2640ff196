//! Bounded search for degrees with nonzero T¹.

use rayon::prelude::*;
use serde::Serialize;

use super::{edge_ring, BipartiteGraph};
use crate::error::{input, Error, Result};
use crate::t1::T1Report;

pub const SCAN_NOTE: &str =
    "bounded scan over the box [-1, upper]^m; an empty result is not a proof of rigidity";

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub upper: i64,
    /// Size of the box.
    pub degrees_in_box: u64,
    /// Box degrees lying in the group generated by the semigroup.
    pub degrees_in_group: u64,
    pub nonzero: Vec<T1Report>,
    pub note: &'static str,
}

// Degrees per parallel work item.
const CHUNK: u64 = 1 << 12;

/// All `a ∈ ℤH` with `−1 ≤ aⱼ ≤ upper` and `dim T¹ₐ > 0`, sorted by degree.
/// Cycle-free edges are pruned first.
pub fn rigidity_scan(g: &BipartiteGraph, upper: i64, jobs: usize) -> Result<ScanReport> {
    if upper < 0 {
        return input(format!("upper bound must be ≥ 0, got {upper}"));
    }
    let (g, _) = g.prune_cycle_free_edges();
    let (_, presentation) = edge_ring(&g)?;
    let m = g.vertex_count();
    let radix = (upper + 2) as u64;
    let total = radix.checked_pow(m as u32).ok_or_else(|| Error::Input("scan box too large".into()))?;
    let chunks = total.div_ceil(CHUNK);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("thread pool: {e}")))?;
    let per_chunk: Vec<Result<(u64, Vec<T1Report>)>> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map_init(
                || presentation.clone(),
                |p, chunk| {
                    let mut a = vec![0i64; m];
                    let mut in_group = 0;
                    let mut found = Vec::new();
                    for index in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                        let mut rest = index;
                        // first coordinate varies slowest, so index order is
                        // lexicographic order on degrees
                        for x in a.iter_mut().rev() {
                            *x = (rest % radix) as i64 - 1;
                            rest /= radix;
                        }
                        if !g.in_edge_group_i64(&a) {
                            continue;
                        }
                        in_group += 1;
                        if let Some(r) = p.report_if_candidate(&a)? {
                            if r.t1_dim > 0 {
                                found.push(r);
                            }
                        }
                    }
                    Ok((in_group, found))
                },
            )
            .collect()
    });
    let mut degrees_in_group = 0;
    let mut nonzero = Vec::new();
    for r in per_chunk {
        let (count, found) = r?;
        degrees_in_group += count;
        nonzero.extend(found);
    }
    Ok(ScanReport { upper, degrees_in_box: total, degrees_in_group, nonzero, note: SCAN_NOTE })
}
