//! Cluster graphs of a given partition.

use super::pair::{eps_regular_exact_capped, eps_regular_refute, DEFAULT_EXACT_CAP};
use super::params::SrlParams;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::cmp_fraction_f64;
use crate::rng::splitmix64;
use std::cmp::Ordering;

/// How pair regularity is decided while classifying.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    Exact {
        cap: usize,
    },
    /// Pair `(i, j)` uses a seed derived from `seed` and the pair index.
    Randomized {
        trials: u64,
        seed: u64,
    },
}

impl Default for RegularityMode {
    fn default() -> Self {
        RegularityMode::Exact {
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    Irregular,
    /// Regular, `d(V_i,V_j) <= d`.
    Low,
    /// Regular, `d < d(V_i,V_j) <= 1 - δ`.
    Mid,
    /// Regular, `d(V_i,V_j) > 1 - δ`.
    High,
}

/// Four graphs on the part indices `0..k` whose edge sets partition `K_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterGraphs {
    pub k: usize,
    pub h_irr: Graph,
    pub h_lo: Graph,
    pub h_mid: Graph,
    pub h_hi: Graph,
}

impl ClusterGraphs {
    pub fn edge_counts(&self) -> [usize; 4] {
        [
            self.h_irr.edge_count(),
            self.h_lo.edge_count(),
            self.h_mid.edge_count(),
            self.h_hi.edge_count(),
        ]
    }

    pub fn class_of(&self, i: usize, j: usize) -> Option<PairClass> {
        if self.h_irr.has_edge(i, j) {
            Some(PairClass::Irregular)
        } else if self.h_lo.has_edge(i, j) {
            Some(PairClass::Low)
        } else if self.h_mid.has_edge(i, j) {
            Some(PairClass::Mid)
        } else if self.h_hi.has_edge(i, j) {
            Some(PairClass::High)
        } else {
            None
        }
    }
}

/// Classifies the density of a regular pair with `e` edges between parts
/// of size `s`. All comparisons are exact.
pub fn density_class(e: usize, s: usize, params: &SrlParams) -> PairClass {
    let cells = (s * s) as i128;
    if cmp_fraction_f64(e as i128, cells, params.d) != Ordering::Greater {
        PairClass::Low
    } else if cmp_fraction_f64(cells - e as i128, cells, params.delta) == Ordering::Less {
        // 1 - e/s² < δ  <=>  e/s² > 1 - δ
        PairClass::High
    } else {
        PairClass::Mid
    }
}

pub fn classify_partition(
    g: &Graph,
    part: &Partition,
    params: &SrlParams,
    mode: &RegularityMode,
) -> Result<ClusterGraphs> {
    if part.order() != g.order() {
        return Err(Error::arg("partition and graph orders differ"));
    }
    let k = part.k();
    let s = part.part_size();
    let mut cg = ClusterGraphs {
        k,
        h_irr: Graph::empty(k),
        h_lo: Graph::empty(k),
        h_mid: Graph::empty(k),
        h_hi: Graph::empty(k),
    };
    let mut pair_index = 0u64;
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&part.parts[i], &part.parts[j]);
            let verdict = match *mode {
                RegularityMode::Exact { cap } => {
                    eps_regular_exact_capped(g, a, b, params.epsilon, cap).map_err(|e| match e {
                        Error::CapExceeded { value, cap, .. } => Error::cap(
                            format!("pair (V_{i}, V_{j}) part size"),
                            value,
                            cap,
                            "switch to randomized mode",
                        ),
                        other => other,
                    })?
                }
                RegularityMode::Randomized { trials, seed } => eps_regular_refute(
                    g,
                    a,
                    b,
                    params.epsilon,
                    trials,
                    splitmix64(seed ^ pair_index),
                )?,
            };
            pair_index += 1;
            let class = if verdict.regular {
                density_class(g.edges_between(a, b), s, params)
            } else {
                PairClass::Irregular
            };
            let target = match class {
                PairClass::Irregular => &mut cg.h_irr,
                PairClass::Low => &mut cg.h_lo,
                PairClass::Mid => &mut cg.h_mid,
                PairClass::High => &mut cg.h_hi,
            };
            target.add_edge(i, j);
        }
    }
    let total: usize = cg.edge_counts().iter().sum();
    if total != k * k.saturating_sub(1) / 2 {
        return Err(Error::contract("cluster graphs do not partition the pairs"));
    }
    Ok(cg)
}

/// Lower bound on `bs^(r)(complement of G) / n` from cluster statistics:
///
/// `f · (1 - εr/c_pr) · [ (2e_lo/k²)(1-d-ε)^r + (2e_mid/k²)(δ-ε)^r ]`
///
/// where `f = k|V_i|/n` is `part_size_fraction`. A partition with
/// `|V_0| < εn` has `f > 1 - ε`; pass `1 - ε` for the worst case.
pub fn cluster_book_bound(cg: &ClusterGraphs, params: &SrlParams, part_size_fraction: f64) -> f64 {
    if cg.k == 0 {
        return 0.0;
    }
    let k2 = (cg.k * cg.k) as f64;
    let r = params.r as i32;
    let eps = params.epsilon;
    let lo = 2.0 * cg.h_lo.edge_count() as f64 / k2 * (1.0 - params.d - eps).powi(r);
    let mid = 2.0 * cg.h_mid.edge_count() as f64 / k2 * (params.delta - eps).powi(r);
    part_size_fraction * (1.0 - eps * params.r as f64 / params.c_pr) * (lo + mid)
}
