//! Parameter selection for the regularity argument.

use crate::error::{Error, Result};
use crate::stability::compute_c;

/// Comparison slack for the real-valued parameter formulas.
pub const PARAM_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct SrlParams {
    pub p: usize,
    pub r: usize,
    pub xi: f64,
    /// Density constant of independent `r`-sets, caller supplied.
    pub c_pr: f64,
    pub delta: f64,
    pub d: f64,
    pub epsilon: f64,
}

impl SrlParams {
    /// Hand-picked `(δ, d, ε)`, e.g. for classifying small test partitions.
    /// Only the ranges `0 < ε < d <= 1` and `0 < δ < 1` are enforced.
    pub fn manual(p: usize, r: usize, c_pr: f64, delta: f64, d: f64, epsilon: f64) -> Result<Self> {
        if !(0.0 < epsilon && epsilon < d && d <= 1.0 && 0.0 < delta && delta < 1.0) {
            return Err(Error::arg("need 0 < epsilon < d <= 1 and 0 < delta < 1"));
        }
        if c_pr <= 0.0 {
            return Err(Error::arg("c_pr must be positive"));
        }
        Ok(SrlParams {
            p,
            r,
            xi: f64::NAN,
            c_pr,
            delta,
            d,
            epsilon,
        })
    }

    /// `0 < 2ε < d < δ < 1`.
    pub fn ordering_holds(&self) -> bool {
        0.0 < 2.0 * self.epsilon
            && 2.0 * self.epsilon < self.d
            && self.d < self.delta
            && self.delta < 1.0
    }

    /// `(d - ε)^p > (p + 2) ε`.
    pub fn dbnd_holds(&self) -> bool {
        (self.d - self.epsilon).powi(self.p as i32) > (self.p as f64 + 2.0) * self.epsilon
    }

    /// `ε <= (d - ε)^p / (p + 2)`, the clique-finding threshold.
    pub fn key_lemma_threshold_holds(&self) -> bool {
        self.epsilon
            <= (self.d - self.epsilon).powi(self.p as i32) / (self.p as f64 + 2.0) + PARAM_TOL
    }
}

/// `δ = min{ξ³/32, c(p)/4}`,
/// `d = min{(δ/2)^{r+1} / (r/c + 2r + 1 + 2p), (pδ/(1+pδ)) / (r/c + 2r + 1)}`,
/// `ε = min{δ, d^p / (2(p+1))}`, with `c = c_{p,r}`.
pub fn select_srl_parameters(p: usize, r: usize, xi: f64, c_pr: f64) -> Result<SrlParams> {
    if p < 2 || r < 2 {
        return Err(Error::arg("need p >= 2 and r >= 2"));
    }
    if !(xi > 0.0 && xi.is_finite()) || !(c_pr > 0.0 && c_pr.is_finite()) {
        return Err(Error::arg("need xi > 0 and c_pr > 0"));
    }
    let cp = compute_c(p)?.c;
    let (pf, rf) = (p as f64, r as f64);
    let delta = (xi.powi(3) / 32.0).min(cp / 4.0);
    let base = rf / c_pr + 2.0 * rf + 1.0;
    let d1 = (delta / 2.0).powi(r as i32 + 1) / (base + 2.0 * pf);
    let d2 = pf * delta / (1.0 + pf * delta) / base;
    let d = d1.min(d2);
    let epsilon = delta.min(d.powi(p as i32) / (2.0 * (pf + 1.0)));
    let params = SrlParams {
        p,
        r,
        xi,
        c_pr,
        delta,
        d,
        epsilon,
    };
    if !params.ordering_holds() {
        return Err(Error::contract(format!(
            "parameter ordering 0 < 2ε < d < δ < 1 fails: ε={epsilon:e}, d={d:e}, δ={delta:e}"
        )));
    }
    if !params.dbnd_holds() {
        return Err(Error::contract(format!(
            "(d-ε)^p > (p+2)ε fails: ε={epsilon:e}, d={d:e}"
        )));
    }
    Ok(params)
}
