//! Stability of near-extremal `K_{p+1}`-free graphs.
//!
//! A `K_{p+1}`-free graph with at least `((p-1)/(2p) - α) n²` edges, where
//! `0 < α <= c(p)`, loses its low-degree vertices in a single pass and what
//! remains is `p`-chromatic with large minimum degree. This module computes
//! `c(p)`, runs that deletion pass and checks every stated guarantee.

mod coloring;

pub use coloring::{
    is_p_colorable, is_proper_coloring, Colorability, ColoringConfig, DEFAULT_COLORING_CAP,
};

use crate::cliques::is_clique_free;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::ExactReal;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Absolute tolerance on real-valued threshold comparisons.
pub const THRESHOLD_TOL: f64 = 1e-9;
/// Required residual of the cubic root.
pub const ROOT_TOL: f64 = 1e-12;

/// Linear coefficient `1 + (3/(3p-1)) ((p-1)/p)²` of the defining cubic.
pub fn cubic_linear_coefficient(p: usize) -> f64 {
    let p = p as f64;
    1.0 + 3.0 / (3.0 * p - 1.0) * ((p - 1.0) / p).powi(2)
}

/// Constant term magnitude `1/(2(3p-1)p)`.
pub fn cubic_constant(p: usize) -> f64 {
    let p = p as f64;
    1.0 / (2.0 * (3.0 * p - 1.0) * p)
}

fn cubic(p: usize, x: f64) -> f64 {
    x * x * x + cubic_linear_coefficient(p) * x - cubic_constant(p)
}

/// `y + a y^{1/3} <= 1/(2(3p-1)p)`, evaluated with [`ROOT_TOL`] slack.
pub fn root_inequality_holds(p: usize, y: f64) -> bool {
    y + cubic_linear_coefficient(p) * y.cbrt() <= cubic_constant(p) + ROOT_TOL
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityConstants {
    pub p: usize,
    /// Positive root of `x³ + a x - b`.
    pub c0: f64,
    /// `c(p) = c0³`.
    pub c: f64,
    /// `1/(2p(3p+2))³`.
    pub lower: f64,
    /// `1/(2p(3p-1))³`.
    pub upper: f64,
    /// The large-`p` approximation `6⁻³ p⁻⁶`.
    pub rough: f64,
    pub residual: f64,
    pub root_inequality_at_c: bool,
}

/// Computes `c(p)` by bisection on `(0, 1/(2p(3p-1)))`.
///
/// The cubic is strictly increasing for `x > 0`, negative at 0 and positive
/// at the right end of the bracket, so the root is unique.
pub fn compute_c(p: usize) -> Result<StabilityConstants> {
    if p < 2 {
        return Err(Error::arg("c(p) is defined for p >= 2"));
    }
    let pf = p as f64;
    let mut lo = 0.0f64;
    let mut hi = 1.0 / (2.0 * pf * (3.0 * pf - 1.0));
    debug_assert!(cubic(p, hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if cubic(p, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c0 = if cubic(p, hi).abs() < cubic(p, lo).abs() {
        hi
    } else {
        lo
    };
    let residual = cubic(p, c0).abs();
    let c = c0 * c0 * c0;
    let lower = (2.0 * pf * (3.0 * pf + 2.0)).powi(-3);
    let upper = (2.0 * pf * (3.0 * pf - 1.0)).powi(-3);
    let consts = StabilityConstants {
        p,
        c0,
        c,
        lower,
        upper,
        rough: 6f64.powi(-3) * pf.powi(-6),
        residual,
        root_inequality_at_c: root_inequality_holds(p, c),
    };
    if residual >= ROOT_TOL {
        return Err(Error::contract(format!(
            "c({p}) root residual {residual:e}"
        )));
    }
    if !(lower < c && c < upper) {
        return Err(Error::contract(format!(
            "c({p}) = {c:e} outside ({lower:e}, {upper:e})"
        )));
    }
    if !consts.root_inequality_at_c {
        return Err(Error::contract(format!(
            "root inequality fails at y = c({p})"
        )));
    }
    Ok(consts)
}

/// Outcome of the single-pass low-degree deletion.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityResult {
    pub p: usize,
    pub alpha: ExactReal,
    /// `ε = 2 α^{1/3}`.
    pub epsilon: f64,
    pub c: f64,
    pub order: usize,
    pub edges: usize,
    /// Vertices with original degree below this value are deleted.
    pub threshold: f64,
    pub clique_free: bool,
    pub alpha_within_c: bool,
    /// `m >= ((p-1)/(2p) - α) n²`, decided exactly.
    pub edge_condition: bool,
    pub hypothesis_met: bool,
    pub deleted: VertexSet,
    pub kept: VertexSet,
    pub kept_graph: Graph,
    /// `(1 - 2α^{1/3}) n`.
    pub size_bound: f64,
    pub size_bound_met: bool,
    /// `(1 - 1/p - 4α^{1/3}) n`.
    pub degree_bound: f64,
    pub kept_min_degree: Option<usize>,
    pub degree_bound_met: bool,
    pub p_chromatic: Colorability,
}

/// Whether `m >= ((p-1)/(2p) - α) n²`, in exact arithmetic.
pub fn edge_condition(n: usize, m: usize, p: usize, alpha: &BigRational) -> bool {
    let p_big = BigInt::from(p);
    let lhs = BigRational::from_integer(BigInt::from(m));
    let density = BigRational::new(p_big.clone() - 1, p_big * 2) - alpha.clone();
    lhs >= density * BigRational::from_integer(BigInt::from(n) * BigInt::from(n))
}

/// Deletes every vertex of original degree `< 2m/n - εn` with `ε = 2α^{1/3}`
/// (one pass, never iterated) and checks the size, minimum-degree and
/// `p`-colourability guarantees.
///
/// Returns [`Error::ContractViolation`] if the hypothesis holds and a
/// guarantee fails.
pub fn extract_stable_subgraph(
    g: &Graph,
    p: usize,
    alpha: &ExactReal,
    coloring: &ColoringConfig,
) -> Result<StabilityResult> {
    if !alpha.is_positive() {
        return Err(Error::arg("alpha must be positive"));
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::arg("graph must be nonempty"));
    }
    let consts = compute_c(p)?;
    let m = g.edge_count();
    let nf = n as f64;
    let a = alpha.approx;
    let cube_root = a.cbrt();
    let epsilon = 2.0 * cube_root;
    let threshold = 2.0 * m as f64 / nf - epsilon * nf;

    let mut deleted = VertexSet::empty(n);
    for u in 0..n {
        if (g.degree(u) as f64) < threshold {
            deleted.insert(u);
        }
    }
    let kept = deleted.complement();
    let kept_graph = g.induced(&kept);

    let clique_free = is_clique_free(g, p + 1);
    let alpha_within_c = a <= consts.c * (1.0 + THRESHOLD_TOL);
    let edge_condition = edge_condition(n, m, p, &alpha.exact);
    let hypothesis_met = clique_free && alpha_within_c && edge_condition;

    let size_bound = (1.0 - 2.0 * cube_root) * nf;
    let size_bound_met = kept.len() as f64 >= size_bound - THRESHOLD_TOL;
    let degree_bound = (1.0 - 1.0 / p as f64 - 4.0 * cube_root) * nf;
    let kept_min_degree = kept_graph.min_degree();
    let degree_bound_met = kept_min_degree.is_none_or(|d| d as f64 >= degree_bound - THRESHOLD_TOL);
    let p_chromatic = is_p_colorable(&kept_graph, p, coloring);

    if hypothesis_met {
        let mut failures = Vec::new();
        if !size_bound_met {
            failures.push(format!("|V(G0)| = {} < {size_bound}", kept.len()));
        }
        if !degree_bound_met {
            failures.push(format!("δ(G0) = {kept_min_degree:?} < {degree_bound}"));
        }
        if p_chromatic == Colorability::NotColorable {
            failures.push(format!("G0 is not {p}-colorable"));
        }
        if !failures.is_empty() {
            return Err(Error::contract(format!(
                "stability guarantee failed: {}",
                failures.join("; ")
            )));
        }
    }

    Ok(StabilityResult {
        p,
        alpha: alpha.clone(),
        epsilon,
        c: consts.c,
        order: n,
        edges: m,
        threshold,
        clique_free,
        alpha_within_c,
        edge_condition,
        hypothesis_met,
        deleted,
        kept,
        kept_graph,
        size_bound,
        size_bound_met,
        degree_bound,
        kept_min_degree,
        degree_bound_met,
        p_chromatic,
    })
}

/// Premises and verdict of the Andrásfai–Erdős–Sós criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AesVerdict {
    pub clique_free: bool,
    /// `δ(G) > (1 - 3/(3p-1)) n`, strict, decided in integers.
    pub min_degree_ok: bool,
    pub premises_hold: bool,
    pub p_chromatic: Colorability,
}

/// A `K_{p+1}`-free graph with `δ > (1 - 3/(3p-1)) n` is `p`-chromatic.
pub fn aes_check(g: &Graph, p: usize, coloring: &ColoringConfig) -> Result<AesVerdict> {
    if p < 2 {
        return Err(Error::arg("aes_check needs p >= 2"));
    }
    let n = g.order();
    let clique_free = is_clique_free(g, p + 1);
    // δ (3p - 1) > (3p - 4) n
    let min_degree_ok = g
        .min_degree()
        .is_none_or(|d| d * (3 * p - 1) > (3 * p - 4) * n);
    let premises_hold = clique_free && min_degree_ok;
    let p_chromatic = is_p_colorable(g, p, coloring);
    if premises_hold && p_chromatic == Colorability::NotColorable {
        return Err(Error::contract(format!(
            "graph satisfies the minimum-degree criterion but is not {p}-colorable"
        )));
    }
    Ok(AesVerdict {
        clique_free,
        min_degree_ok,
        premises_hold,
        p_chromatic,
    })
}
