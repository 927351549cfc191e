//! Densities and ε-regularity of vertex-set pairs.
//!
//! A pair `(A, B)` is ε-regular when `|d(X,Y) - d(A,B)| < ε` for all
//! `X ⊆ A`, `Y ⊆ B` with `|X| >= ε|A|` and `|Y| >= ε|B|`.
//!
//! Only subsets of the threshold sizes `s_A = ⌈ε|A|⌉`, `s_B = ⌈ε|B|⌉` need
//! to be scanned. For a fixed `Y`, `d(X,Y)` is the average of `d(X',Y)` over
//! the `s_A`-subsets `X' ⊆ X`, so some `X'` deviates from `d(A,B)` at least as
//! much, in the same direction, as `X` does; the same holds for `Y`. For a
//! fixed `X`, the extreme values of `e(X,Y)` over `|Y| = s_B` are attained
//! by taking the `s_B` vertices of `B` with the most (or fewest) neighbours
//! in `X`, so only `X` is enumerated.

use crate::error::{Error, Result};
use crate::graph::{and_count, Graph, VertexSet};
use crate::rational::exact_f64;
use crate::rng::stream;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use rand::seq::index::sample;
use rayon::prelude::*;

/// Default largest side handled by [`eps_regular_exact`].
pub const DEFAULT_EXACT_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMode {
    Exact,
    /// One-sided: `regular == true` only means no witness turned up.
    Randomized {
        trials: u64,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub regular: bool,
    /// `(X, Y)` with `|X| >= ε|A|`, `|Y| >= ε|B|`, `|d(X,Y) - d(A,B)| >= ε`.
    pub witness: Option<(VertexSet, VertexSet)>,
    pub mode: VerdictMode,
}

fn check_pair(a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::arg("density of a pair needs nonempty sets"));
    }
    if !a.is_disjoint(b) {
        return Err(Error::arg("density of a pair needs disjoint sets"));
    }
    Ok(())
}

/// `e(A,B) / (|A||B|)` as an exact fraction.
pub fn pair_density(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Ratio<u64>> {
    check_pair(a, b)?;
    let e = g.edges_between(a, b) as u64;
    Ok(Ratio::new(e, (a.len() * b.len()) as u64))
}

/// Smallest integer `s >= eps * size`, at least 1. A `1e-9` slack absorbs
/// float noise such as `0.3 * 10 = 3.0000000000000004`.
pub fn threshold_size(eps: f64, size: usize) -> usize {
    ((eps * size as f64) - 1e-9).ceil().max(1.0) as usize
}

/// Integer window for `e(X,Y)` at fixed `|X|`, `|Y|`: a pair violates
/// regularity iff `e(X,Y) >= hi` or `e(X,Y) <= lo`.
#[derive(Clone, Copy, Debug)]
struct Window {
    lo: i128,
    hi: i128,
}

fn window(e_ab: usize, a: usize, b: usize, x: usize, y: usize, eps: f64) -> Window {
    // e·|A||B| - e_ab·|X||Y| >= ε·|X||Y||A||B| and the mirror image.
    let xy = BigInt::from(x * y);
    let ab = BigInt::from(a * b);
    let centre = BigRational::new(BigInt::from(e_ab) * &xy, ab);
    let slack = exact_f64(eps) * BigRational::from_integer(xy);
    let hi = (centre.clone() + slack.clone()).ceil().to_integer();
    let lo = (centre - slack).floor().to_integer();
    let clamp = |v: BigInt| -> i128 {
        v.clamp(BigInt::from(-1), BigInt::from(i64::MAX))
            .try_into()
            .expect("clamped")
    };
    Window {
        lo: clamp(lo),
        hi: clamp(hi),
    }
}

/// Exact check of a single candidate witness.
pub fn violates(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
    eps: f64,
) -> bool {
    if x.is_empty() || y.is_empty() || !x.is_subset(a) || !y.is_subset(b) {
        return false;
    }
    if (x.len() as f64) < eps * a.len() as f64 - 1e-9
        || (y.len() as f64) < eps * b.len() as f64 - 1e-9
    {
        return false;
    }
    let w = window(
        g.edges_between(a, b),
        a.len(),
        b.len(),
        x.len(),
        y.len(),
        eps,
    );
    let e = g.edges_between(x, y) as i128;
    e >= w.hi || e <= w.lo
}

struct Scanner<'a> {
    g: &'a Graph,
    b_members: Vec<usize>,
    sy: usize,
    window: Window,
}

impl Scanner<'_> {
    /// Best `Y` for a fixed `X`, if the pair `(X, Y)` violates.
    fn probe(&self, x: &VertexSet) -> Option<VertexSet> {
        let mut counts: Vec<(usize, usize)> = self
            .b_members
            .iter()
            .map(|&y| (and_count(self.g.row(y), x.words()), y))
            .collect();
        // Descending by count, ties by vertex index.
        counts.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
        let top: usize = counts[..self.sy].iter().map(|c| c.0).sum();
        let n = self.g.order();
        if top as i128 >= self.window.hi {
            return Some(VertexSet::from_indices(
                n,
                counts[..self.sy].iter().map(|c| c.1),
            ));
        }
        let tail = &counts[counts.len() - self.sy..];
        let bottom: usize = tail.iter().map(|c| c.0).sum();
        if bottom as i128 <= self.window.lo {
            return Some(VertexSet::from_indices(n, tail.iter().map(|c| c.1)));
        }
        None
    }
}

fn scanner<'a>(
    g: &'a Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: f64,
) -> Option<(Scanner<'a>, usize)> {
    let sx = threshold_size(eps, a.len());
    let sy = threshold_size(eps, b.len());
    if sx > a.len() || sy > b.len() {
        return None;
    }
    let window = window(g.edges_between(a, b), a.len(), b.len(), sx, sy, eps);
    Some((
        Scanner {
            g,
            b_members: b.to_vec(),
            sy,
            window,
        },
        sx,
    ))
}

fn validate_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::arg("epsilon must be positive and finite"));
    }
    Ok(())
}

/// Exact ε-regularity decision with the default cap of 14 per side.
pub fn eps_regular_exact(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: f64,
) -> Result<RegularityVerdict> {
    eps_regular_exact_capped(g, a, b, eps, DEFAULT_EXACT_CAP)
}

pub fn eps_regular_exact_capped(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: f64,
    cap: usize,
) -> Result<RegularityVerdict> {
    check_pair(a, b)?;
    validate_eps(eps)?;
    let side = a.len().max(b.len());
    if side > cap {
        return Err(Error::cap(
            "pair side",
            side,
            cap,
            "use eps_regular_refute for larger parts",
        ));
    }
    let regular = RegularityVerdict {
        regular: true,
        witness: None,
        mode: VerdictMode::Exact,
    };
    let Some((scan, sx)) = scanner(g, a, b, eps) else {
        return Ok(regular);
    };
    let a_members = a.to_vec();
    let n = g.order();
    // Gosper's hack over |A|-bit masks, increasing order.
    let limit = 1u64 << a_members.len();
    let mut mask: u64 = (1u64 << sx) - 1;
    while mask < limit {
        let x = VertexSet::from_indices(
            n,
            (0..a_members.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| a_members[i]),
        );
        if let Some(y) = scan.probe(&x) {
            return Ok(RegularityVerdict {
                regular: false,
                witness: Some((x, y)),
                mode: VerdictMode::Exact,
            });
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(regular)
}

/// One-sided randomized check for parts above the exact cap: each trial
/// draws a random threshold-size `X ⊆ A` and pairs it with the extreme `Y`.
/// Any witness returned is re-verified exactly.
pub fn eps_regular_refute(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: f64,
    trials: u64,
    seed: u64,
) -> Result<RegularityVerdict> {
    check_pair(a, b)?;
    validate_eps(eps)?;
    let mode = VerdictMode::Randomized { trials, seed };
    let Some((scan, sx)) = scanner(g, a, b, eps) else {
        return Ok(RegularityVerdict {
            regular: true,
            witness: None,
            mode,
        });
    };
    let a_members = a.to_vec();
    let n = g.order();
    let found = (0..trials).into_par_iter().find_map_first(|t| {
        let mut rng = stream(seed, t);
        let picks = sample(&mut rng, a_members.len(), sx);
        let x = VertexSet::from_indices(n, picks.iter().map(|i| a_members[i]));
        scan.probe(&x).map(|y| (x, y))
    });
    if let Some((x, y)) = &found {
        if !violates(g, a, b, x, y, eps) {
            return Err(Error::contract(
                "randomized regularity witness failed re-verification",
            ));
        }
    }
    Ok(RegularityVerdict {
        regular: found.is_none(),
        witness: found,
        mode,
    })
}

/// `gcd`-reduced density of a witness pair, for reports.
pub fn witness_density(g: &Graph, x: &VertexSet, y: &VertexSet) -> Ratio<u64> {
    let e = g.edges_between(x, y) as u64;
    let d = (x.len() * y.len()) as u64;
    let k = e.gcd(&d).max(1);
    Ratio::new_raw(e / k, d / k)
}
