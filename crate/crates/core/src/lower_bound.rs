//! Random lower-bound construction for `r(K_m, B_{m^k}^(r))`.
//!
//! With `C = 2(k+r-1)`, `c = 1/(3C^r)`, `N = ⌊c m^{k+r} / (ln m)^r⌋` and
//! `𝔭 = (C/m) ln m`, the random graph `G(N, 1-𝔭)` avoids `K_m` and its
//! complement avoids `B_{m^k}^(r)` with probability tending to one. This
//! module evaluates the two failure bounds at finite `m` and samples the
//! model directly. Logarithms are natural.

use crate::cliques::{book_size, find_clique};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{stream, StreamRng};
use num_rational::Ratio;
use rand::RngCore;
use rayon::prelude::*;
use std::f64::consts::E;

/// Largest sampled order accepted by [`monte_carlo_witness`].
pub const MC_ORDER_CAP: u64 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct LbParams {
    pub m: u64,
    pub k: u32,
    pub r: u32,
    /// `C = 2(k + r - 1)`.
    pub big_c: u64,
    /// `c = 1/(3C^r)`.
    pub c: Ratio<u64>,
    /// `N = ⌊c m^{k+r} / (ln m)^r⌋`.
    pub n: u64,
    /// `𝔭 = (C/m) ln m`, the non-edge probability of the model.
    pub edge_prob_complement: f64,
}

impl LbParams {
    /// `c · C^r`, which is `1/3` by construction.
    pub fn c_times_c_pow_r(&self) -> Ratio<u64> {
        self.c * Ratio::from_integer(self.big_c.pow(self.r))
    }

    pub fn c_f64(&self) -> f64 {
        *self.c.numer() as f64 / *self.c.denom() as f64
    }

    /// `m^k`, the book size in the target.
    pub fn book_target(&self) -> u64 {
        self.m.pow(self.k)
    }
}

pub fn lb_parameters(m: u64, k: u32, r: u32) -> Result<LbParams> {
    if m < 3 || k < 1 || r < 2 {
        return Err(Error::arg("need m >= 3, k >= 1 and r >= 2"));
    }
    let big_c = 2 * (k as u64 + r as u64 - 1);
    let c_pow = big_c
        .checked_pow(r)
        .and_then(|x| x.checked_mul(3))
        .ok_or_else(|| Error::arg("3C^r overflows 64 bits"))?;
    m.checked_pow(k)
        .ok_or_else(|| Error::arg("m^k overflows 64 bits"))?;
    let ln_m = (m as f64).ln();
    let prob = big_c as f64 / m as f64 * ln_m;
    if prob >= 1.0 {
        return Err(Error::arg(format!(
            "m too small for C = {big_c}: (C/m) ln m = {prob:.4} >= 1; need m / ln m > {big_c}"
        )));
    }
    let n_real = ((k + r) as f64 * ln_m - (c_pow as f64).ln() - r as f64 * ln_m.ln()).exp();
    if n_real >= u64::MAX as f64 {
        return Err(Error::arg("N overflows 64 bits"));
    }
    let n = n_real.floor() as u64;
    if n == 0 {
        return Err(Error::arg("N = 0 for these parameters"));
    }
    Ok(LbParams {
        m,
        k,
        r,
        big_c,
        c: Ratio::new(1, c_pow),
        n,
        edge_prob_complement: prob,
    })
}

fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let (n, k) = (n as f64, k as f64);
    libm::lgamma(n + 1.0) - libm::lgamma(k + 1.0) - libm::lgamma(n - k + 1.0)
}

/// `P(X >= M) <= (n·prob·e/M)^M` for `X ~ Bin(n, prob)` and `M >= n·prob`.
pub fn chernoff_tail(n: u64, prob: f64, big_m: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::arg("prob must lie in [0, 1]"));
    }
    let mean = n as f64 * prob;
    if big_m.is_nan() || big_m < mean * (1.0 - 1e-12) {
        return Err(Error::arg(format!("M = {big_m} is below n·prob = {mean}")));
    }
    if big_m == 0.0 {
        return Ok(1.0);
    }
    Ok((big_m * (mean * E / big_m).ln()).exp())
}

/// Bounds on `P(K_m ⊂ G)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CliqueBound {
    /// `ln[ C(N,m) (1-𝔭)^{C(m,2)} ]`.
    pub log_value: f64,
    pub value: f64,
    /// `m · ln[ N e^{1+𝔭/2} m^{-(k+r-1)} / m ]`.
    pub weaker_log: f64,
    pub weaker: f64,
}

pub fn bound_km_probability(params: &LbParams) -> CliqueBound {
    let (n, m) = (params.n, params.m);
    let pr = params.edge_prob_complement;
    let mf = m as f64;
    let weaker_log = mf
        * ((n as f64).ln() + 1.0 + pr / 2.0 - (params.k + params.r - 1) as f64 * mf.ln() - mf.ln());
    let log_value = if n < m {
        f64::NEG_INFINITY
    } else {
        ln_binomial(n, m) + (mf * (mf - 1.0) / 2.0) * (1.0 - pr).ln()
    };
    CliqueBound {
        log_value,
        value: log_value.exp(),
        weaker_log,
        weaker: weaker_log.exp(),
    }
}

/// Bound on `P(B_{m^k}^(r) ⊂ complement of G)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BookBound {
    /// `ln[ C(N,r) 𝔭^{r(r-1)/2} L^{m^k} ]`.
    pub log_value: f64,
    pub value: f64,
    /// `L = (N - r) 𝔭^r e / m^k`.
    pub last_factor: f64,
}

pub fn bound_book_probability(params: &LbParams) -> Result<BookBound> {
    let r = params.r as u64;
    let pr = params.edge_prob_complement;
    let q = params.book_target() as f64;
    let last_factor = params.n.saturating_sub(r) as f64 * pr.powi(params.r as i32) * E / q;
    if last_factor > E / 3.0 * (1.0 + 1e-12) {
        return Err(Error::contract(format!(
            "last factor {last_factor} exceeds e/3 with c = 1/(3C^r)"
        )));
    }
    let log_value = if params.n <= r {
        f64::NEG_INFINITY
    } else {
        ln_binomial(params.n, r) + (r * (r - 1) / 2) as f64 * pr.ln() + q * last_factor.ln()
    };
    Ok(BookBound {
        log_value,
        value: log_value.exp(),
        last_factor,
    })
}

fn sample_with(n: usize, edge_prob: f64, rng: &mut StreamRng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < edge_prob {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `G(n, edge_prob)`. Pairs `(u, v)`, `u < v`, are visited in lexicographic
/// order; each consumes one 64-bit output `x` of `stream(seed, 0)` and the
/// edge is present iff `(x >> 11) / 2^53 < edge_prob`.
pub fn sample_random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::arg("edge probability must lie in [0, 1]"));
    }
    Ok(sample_with(n, edge_prob, &mut stream(seed, 0)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialStats {
    pub trials: u64,
    /// Trials whose graph contains `K_m`.
    pub clique_hits: u64,
    /// Trials whose complement contains `B_q^(r)`.
    pub book_hits: u64,
    /// Trials with neither.
    pub witnesses: u64,
    /// Lowest-index witness trial and its graph.
    pub best_witness: Option<(u64, Graph)>,
    pub q_target: u64,
    pub seed: u64,
}

/// Samples `G(N, 1-𝔭)` once per trial, trial `t` drawing from
/// `stream(seed, t)` as in [`sample_random_graph`]. A trial with no `K_m`
/// and no `B_q^(r)` in the complement certifies `r(K_m, B_q^(r)) > N`.
pub fn monte_carlo_witness(
    params: &LbParams,
    q_target: Option<u64>,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    if params.n > MC_ORDER_CAP {
        return Err(Error::cap(
            "sampled order N",
            params.n as usize,
            MC_ORDER_CAP as usize,
            "clique and book checks are exact",
        ));
    }
    let q = q_target.unwrap_or_else(|| params.book_target());
    if q == 0 {
        return Err(Error::arg("q_target must be positive"));
    }
    let n = params.n as usize;
    let m = params.m as usize;
    let r = params.r as usize;
    let p_edge = 1.0 - params.edge_prob_complement;
    let has_clique = |g: &Graph| m <= n && find_clique(g, m).is_some();
    let has_book = |g: &Graph| book_size(&g.complement(), r).size as u64 >= q;
    let outcomes: Vec<(bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = sample_with(n, p_edge, &mut stream(seed, t));
            (has_clique(&g), has_book(&g))
        })
        .collect();
    let clique_hits = outcomes.iter().filter(|o| o.0).count() as u64;
    let book_hits = outcomes.iter().filter(|o| o.1).count() as u64;
    let witnesses = outcomes.iter().filter(|o| !o.0 && !o.1).count() as u64;
    let best_witness = outcomes.iter().position(|o| !o.0 && !o.1).map(|t| {
        (
            t as u64,
            sample_with(n, p_edge, &mut stream(seed, t as u64)),
        )
    });
    if let Some((_, g)) = &best_witness {
        if find_clique(g, m).is_some() || book_size(&g.complement(), r).size as u64 >= q {
            return Err(Error::contract(
                "Monte-Carlo witness failed re-verification",
            ));
        }
    }
    Ok(TrialStats {
        trials,
        clique_hits,
        book_hits,
        witnesses,
        best_witness,
        q_target: q,
        seed,
    })
}
