//! Checkers for the counting lemmas on regular pairs and the clique-finding
//! form of the Key Lemma. Each checker computes the exact quantity, the
//! claimed bound and the lemma's premises; when every premise holds and the
//! conclusion fails, a contract error is returned.

use super::pair::{eps_regular_exact, DEFAULT_EXACT_CAP};
use super::params::PARAM_TOL;
use crate::cliques::for_each_clique_in;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::cmp_fraction_f64;
use std::cmp::Ordering;

fn check_disjoint(sets: &[&VertexSet]) -> Result<()> {
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::arg(format!("set {i} is empty")));
        }
        for t in &sets[i + 1..] {
            if !s.is_disjoint(t) {
                return Err(Error::arg("sets must be pairwise disjoint"));
            }
        }
    }
    Ok(())
}

/// `e(A,B) >= d|A||B|`, decided exactly.
fn dense_enough(g: &Graph, a: &VertexSet, b: &VertexSet, d: f64) -> bool {
    let e = g.edges_between(a, b) as i128;
    cmp_fraction_f64(e, (a.len() * b.len()) as i128, d) != Ordering::Less
}

/// Exact regularity, or `None` when a side is above the exact cap.
fn regular_if_small(g: &Graph, a: &VertexSet, b: &VertexSet, eps: f64) -> Result<Option<bool>> {
    if a.len().max(b.len()) > DEFAULT_EXACT_CAP {
        return Ok(None);
    }
    Ok(Some(eps_regular_exact(g, a, b, eps)?.regular))
}

fn eps_d_range(eps: f64, d: f64) -> bool {
    0.0 < eps && eps < d && d <= 1.0
}

/// Visits every `r`-subset of `a` with its common neighbourhood.
fn for_each_rset<F: FnMut(&[usize], &VertexSet)>(g: &Graph, a: &VertexSet, r: usize, mut f: F) {
    fn rec<F: FnMut(&[usize], &VertexSet)>(
        g: &Graph,
        members: &[usize],
        start: usize,
        k: usize,
        common: &VertexSet,
        stack: &mut Vec<usize>,
        f: &mut F,
    ) {
        if k == 0 {
            f(stack, common);
            return;
        }
        for i in start..=members.len() - k {
            let v = members[i];
            stack.push(v);
            rec(
                g,
                members,
                i + 1,
                k - 1,
                &common.intersection(&g.neighbors(v)),
                stack,
                f,
            );
            stack.pop();
        }
    }
    let members = a.to_vec();
    if r > members.len() {
        return;
    }
    let mut stack = Vec::with_capacity(r);
    rec(
        g,
        &members,
        0,
        r,
        &VertexSet::full(g.order()),
        &mut stack,
        &mut f,
    );
}

#[derive(Clone, Debug, PartialEq)]
pub struct BadSetReport {
    /// `r`-sets `R ⊆ A` with `|∩N(u) ∩ Y| <= (d-ε)^r |Y|`.
    pub bad: u64,
    /// `ε r |A|^r`.
    pub bound: f64,
    /// `(d-ε)^{r-1} |Y| > ε|B|`.
    pub premise_ok: bool,
    /// Exact regularity of `(A,B)`; `None` above the exact cap.
    pub regular: Option<bool>,
    /// `e(A,B) >= d|A||B|`.
    pub dense: bool,
    /// All premises hold, so `bad <= bound` is asserted.
    pub applies: bool,
}

/// Counts the `r`-sets of `a` whose common neighbourhood inside `y` is small.
/// `b` is the host side of the pair, with `y ⊆ b`.
pub fn bad_rset_count(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    y: &VertexSet,
    eps: f64,
    d: f64,
    r: usize,
) -> Result<BadSetReport> {
    check_disjoint(&[a, b])?;
    if !y.is_subset(b) {
        return Err(Error::arg("Y must be a subset of B"));
    }
    if r < 2 {
        return Err(Error::arg("r must be at least 2"));
    }
    let base = (d - eps).max(0.0);
    let threshold = base.powi(r as i32) * y.len() as f64;
    let mut bad = 0u64;
    for_each_rset(g, a, r, |_, common| {
        if common.intersection_len(y) as f64 <= threshold + PARAM_TOL {
            bad += 1;
        }
    });
    let bound = eps * r as f64 * (a.len() as f64).powi(r as i32);
    let premise_ok =
        d > eps && base.powi(r as i32 - 1) * y.len() as f64 > eps * b.len() as f64 + PARAM_TOL;
    let regular = regular_if_small(g, a, b, eps)?;
    let dense = dense_enough(g, a, b, d);
    let applies = eps_d_range(eps, d) && premise_ok && dense && regular == Some(true);
    if applies && bad as f64 > bound {
        return Err(Error::contract(format!(
            "{bad} bad r-sets exceed the bound {bound} on a premise-validated pair"
        )));
    }
    Ok(BadSetReport {
        bad,
        bound,
        premise_ok,
        regular,
        dense,
        applies,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliqueCountReport {
    /// `(r+1)`-cliques with exactly `r` vertices in `A`, one in `∪B_i`.
    pub actual: u64,
    /// Number of `r`-cliques inside `A`.
    pub m: u64,
    /// `t|A|(m - εr|A|^r)(d-ε)^r`.
    pub bound: f64,
    /// `(d-ε)^{r-2} > ε`, as the lemma states it.
    pub stated_premise: bool,
    /// `(d-ε)^{r-1} > ε`, what the counting argument uses.
    pub strong_premise: bool,
    /// Every `(A,B_i)` is ε-regular; `None` when a pair is above the exact cap.
    pub pairs_regular: Option<bool>,
    pub pairs_dense: bool,
    /// `actual >= bound` is asserted.
    pub applies: bool,
}

pub fn counting_bound_dle(
    g: &Graph,
    a: &VertexSet,
    bs: &[VertexSet],
    eps: f64,
    d: f64,
    r: usize,
) -> Result<CliqueCountReport> {
    if r < 2 {
        return Err(Error::arg("r must be at least 2"));
    }
    if bs.iter().any(|b| b.len() != a.len()) {
        return Err(Error::arg("A and every B_i must have the same size"));
    }
    let mut all: Vec<&VertexSet> = vec![a];
    all.extend(bs);
    check_disjoint(&all)?;

    let union = bs
        .iter()
        .fold(VertexSet::empty(g.order()), |acc, b| acc.union(b));
    let (mut m, mut actual) = (0u64, 0u64);
    for_each_clique_in(g, a, r, |_, common| {
        m += 1;
        actual += common.intersection_len(&union) as u64;
    });

    let size = a.len() as f64;
    let base = (d - eps).max(0.0);
    let bound = bs.len() as f64
        * size
        * (m as f64 - eps * r as f64 * size.powi(r as i32))
        * base.powi(r as i32);
    let stated_premise = base.powi(r as i32 - 2) > eps + PARAM_TOL;
    let strong_premise = base.powi(r as i32 - 1) > eps + PARAM_TOL;

    let mut pairs_regular = Some(true);
    for b in bs {
        match regular_if_small(g, a, b, eps)? {
            None => pairs_regular = None,
            Some(false) if pairs_regular.is_some() => pairs_regular = Some(false),
            _ => {}
        }
    }
    let pairs_dense = bs.iter().all(|b| dense_enough(g, a, b, d));
    let applies =
        eps_d_range(eps, d) && strong_premise && pairs_dense && pairs_regular == Some(true);
    if applies && (actual as f64) < bound {
        return Err(Error::contract(format!(
            "{actual} cliques fall below the bound {bound} on a premise-validated stack"
        )));
    }
    Ok(CliqueCountReport {
        actual,
        m,
        bound,
        stated_premise,
        strong_premise,
        pairs_regular,
        pairs_dense,
        applies,
    })
}

/// A premise of the clique-finding lemma that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeyLemmaPremise {
    /// `0 < ε < d < 1` fails.
    Range,
    /// `ε <= (d-ε)^p / (p+2)` fails.
    Threshold,
    Irregular {
        i: usize,
        j: usize,
    },
    Sparse {
        i: usize,
        j: usize,
    },
}

impl std::fmt::Display for KeyLemmaPremise {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KeyLemmaPremise::Range => write!(f, "0 < eps < d < 1"),
            KeyLemmaPremise::Threshold => write!(f, "eps <= (d-eps)^p/(p+2)"),
            KeyLemmaPremise::Irregular { i, j } => write!(f, "pair ({i},{j}) not eps-regular"),
            KeyLemmaPremise::Sparse { i, j } => write!(f, "pair ({i},{j}) density below d"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeyLemmaOutcome {
    /// One vertex from each part, pairwise adjacent; `clique[i] ∈ parts[i]`.
    Clique(Vec<usize>),
    PremisesFailed(Vec<KeyLemmaPremise>),
}

/// Transversal clique search: picks a vertex of each part in turn and
/// narrows the later parts to its neighbours.
fn transversal(g: &Graph, cands: &[VertexSet], stack: &mut Vec<usize>) -> bool {
    let i = stack.len();
    if i == cands.len() {
        return true;
    }
    for v in cands[i].iter() {
        let nv = g.neighbors(v);
        let next: Vec<VertexSet> = cands
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j > i {
                    c.intersection(&nv)
                } else {
                    c.clone()
                }
            })
            .collect();
        if next[i + 1..].iter().any(VertexSet::is_empty) {
            continue;
        }
        stack.push(v);
        if transversal(g, &next, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

/// The lexicographically first transversal clique of `parts`, if any.
pub fn find_transversal_clique(g: &Graph, parts: &[VertexSet]) -> Option<Vec<usize>> {
    let mut stack = Vec::with_capacity(parts.len());
    transversal(g, parts, &mut stack).then_some(stack)
}

/// With `p + 1` parts of equal size, every pair ε-regular of density at
/// least `d` and `ε <= (d-ε)^p/(p+2)`, the graph contains a transversal
/// `K_{p+1}`. Pairs are checked exactly.
pub fn key_lemma_check(
    g: &Graph,
    parts: &[VertexSet],
    eps: f64,
    d: f64,
) -> Result<KeyLemmaOutcome> {
    if parts.len() < 2 {
        return Err(Error::arg("need at least two parts"));
    }
    if parts.iter().any(|s| s.len() != parts[0].len()) {
        return Err(Error::arg("parts must have equal size"));
    }
    let refs: Vec<&VertexSet> = parts.iter().collect();
    check_disjoint(&refs)?;
    let p = parts.len() - 1;
    let mut failed = Vec::new();
    if !(0.0 < eps && eps < d && d < 1.0) {
        failed.push(KeyLemmaPremise::Range);
    }
    let limit = (d - eps).max(0.0).powi(p as i32) / (p as f64 + 2.0) + PARAM_TOL;
    if eps.is_nan() || limit.is_nan() || eps > limit {
        failed.push(KeyLemmaPremise::Threshold);
    }
    if eps > 0.0 && eps.is_finite() {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if !eps_regular_exact(g, &parts[i], &parts[j], eps)?.regular {
                    failed.push(KeyLemmaPremise::Irregular { i, j });
                }
                if !dense_enough(g, &parts[i], &parts[j], d) {
                    failed.push(KeyLemmaPremise::Sparse { i, j });
                }
            }
        }
    }
    if !failed.is_empty() {
        return Ok(KeyLemmaOutcome::PremisesFailed(failed));
    }
    match find_transversal_clique(g, parts) {
        Some(c) => Ok(KeyLemmaOutcome::Clique(c)),
        None => Err(Error::contract(
            "premises hold but no transversal clique exists",
        )),
    }
}
