//! Order-`n` estimates of the independent `r`-set density of
//! `K_{p+1}`-free graphs.
//!
//! The estimate is the minimum of `i_r(G)/n^r` over the searched graphs, so
//! an exhaustive run gives the exact order-`n` minimum while a random run
//! only gives an upper estimate of it.

use crate::cliques::{count_independent_rsets, find_clique, turan_parts};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::stream;
use num_rational::Ratio;
use rand::seq::SliceRandom;

/// Largest order accepted by [`DensityMode::Exhaustive`].
pub const EXHAUSTIVE_CAP: usize = 8;

/// Largest order accepted by [`DensityMode::Random`].
pub const RANDOM_CAP: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityMode {
    Exhaustive,
    Random { budget: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityEstimate {
    pub p: usize,
    pub r: usize,
    pub n: usize,
    /// `min i_r(G) / n^r`.
    pub value: Ratio<u64>,
    /// `min i_r(G)`.
    pub count: u64,
    /// A graph attaining `count`.
    pub extremal: Graph,
    pub graphs_examined: u64,
    pub mode: DensityMode,
}

/// Known values of `r(K_s, K_t)` for `s <= t`.
const RAMSEY_TABLE: &[(usize, usize, usize)] = &[
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (3, 7, 23),
    (3, 8, 28),
    (3, 9, 36),
    (4, 4, 18),
    (4, 5, 25),
];

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `r(K_{p+1}, K_r)` when known, else the upper bound `C(p+r-1, p)`.
/// Orders at or above this value are covered by the density lemma.
pub fn ramsey_floor(p: usize, r: usize) -> usize {
    let (s, t) = (p + 1, r);
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    if s <= 1 {
        return 1;
    }
    if s == 2 {
        return t;
    }
    RAMSEY_TABLE
        .iter()
        .find(|&&(a, b, _)| (a, b) == (s, t))
        .map(|&(_, _, v)| v)
        .unwrap_or_else(|| binomial(s + t - 2, s - 1).unwrap_or(usize::MAX))
}

/// Independent `k`-sets inside `set` of a graph given by `u8` rows.
fn indep_in(adj: &[u8], set: u8, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if (set.count_ones() as usize) < k {
        return 0;
    }
    let mut total = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += indep_in(adj, rest & !adj[v], k - 1);
    }
    total
}

fn has_clique(adj: &[u8], set: u8, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let mut rest = set;
    while rest.count_ones() as usize >= k {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], k - 1) {
            return true;
        }
    }
    false
}

struct Exhaustive {
    n: usize,
    p: usize,
    r: usize,
    masks: Vec<Vec<u8>>,
    adj: Vec<u8>,
    best: u64,
    best_adj: Option<Vec<u8>>,
    examined: u64,
}

impl Exhaustive {
    fn run(&mut self, k: usize, current: u64) {
        self.examined += 1;
        if k == self.n {
            if current < self.best {
                self.best = current;
                self.best_adj = Some(self.adj.clone());
            }
            return;
        }
        let prev: u8 = ((1u16 << k) - 1) as u8;
        for i in 0..self.masks[k].len() {
            let nb = self.masks[k][i];
            if has_clique(&self.adj, nb, self.p) {
                continue;
            }
            let next = current + indep_in(&self.adj, prev & !nb, self.r - 1);
            if next >= self.best {
                continue;
            }
            self.adj[k] = nb;
            let mut bit = nb;
            while bit != 0 {
                let u = bit.trailing_zeros() as usize;
                bit &= bit - 1;
                self.adj[u] |= 1 << k;
            }
            self.run(k + 1, next);
            let mut bit = nb;
            while bit != 0 {
                let u = bit.trailing_zeros() as usize;
                bit &= bit - 1;
                self.adj[u] &= !(1 << k);
            }
            self.adj[k] = 0;
        }
    }
}

fn maximal_random(n: usize, p: usize, seed: u64, index: u64) -> Graph {
    let mut rng = stream(seed, index);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        let mut common = g.neighbors(u);
        common.intersect_with(&g.neighbors(v));
        if p < 2 || find_clique(&g.induced(&common), p - 1).is_none() {
            g.add_edge(u, v);
        }
    }
    g
}

/// Minimum of `i_r(G)/n^r` over `K_{p+1}`-free graphs `G` of order `n`,
/// exactly (exhaustive, `n <= 8`) or over `budget` random maximal
/// `K_{p+1}`-free graphs seeded by `seed`. The balanced `p`-partite graph
/// is always among the candidates.
pub fn independent_rset_density(
    p: usize,
    r: usize,
    n: usize,
    mode: DensityMode,
) -> Result<DensityEstimate> {
    if p < 2 || r < 2 {
        return Err(Error::arg("need p >= 2 and r >= 2"));
    }
    let floor = ramsey_floor(p, r);
    if n < floor {
        return Err(Error::arg(format!(
            "order {n} is below r(K_{}, K_{r}) <= {floor}",
            p + 1
        )));
    }
    let denom = (n as u64)
        .checked_pow(r as u32)
        .ok_or_else(|| Error::arg("n^r overflows 64 bits"))?;
    let turan = Graph::complete_multipartite(&turan_parts(n, p));
    let turan_count = count_independent_rsets(&turan, r);
    let (count, extremal, examined) = match mode {
        DensityMode::Exhaustive => {
            if n > EXHAUSTIVE_CAP {
                return Err(Error::cap(
                    "exhaustive density order",
                    n,
                    EXHAUSTIVE_CAP,
                    "use the random mode",
                ));
            }
            let masks = (0..n)
                .map(|k| {
                    let mut m: Vec<u8> = (0..1u16 << k).map(|x| x as u8).collect();
                    m.sort_by_key(|x| (std::cmp::Reverse(x.count_ones()), *x));
                    m
                })
                .collect();
            let mut search = Exhaustive {
                n,
                p,
                r,
                masks,
                adj: vec![0; n],
                best: turan_count,
                best_adj: None,
                examined: 0,
            };
            search.run(0, 0);
            let g = match search.best_adj {
                Some(rows) => {
                    let mut g = Graph::empty(n);
                    for (u, row) in rows.iter().enumerate() {
                        for v in 0..u {
                            if row >> v & 1 == 1 {
                                g.add_edge(u, v);
                            }
                        }
                    }
                    g
                }
                None => turan,
            };
            (search.best, g, search.examined)
        }
        DensityMode::Random { budget, seed } => {
            if n > RANDOM_CAP {
                return Err(Error::cap("random density order", n, RANDOM_CAP, ""));
            }
            let mut best = (turan_count, turan);
            for t in 0..budget {
                let g = maximal_random(n, p, seed, t);
                let c = count_independent_rsets(&g, r);
                if c < best.0 {
                    best = (c, g);
                }
            }
            (best.0, best.1, budget + 1)
        }
    };
    if find_clique(&extremal, p + 1).is_some() || count_independent_rsets(&extremal, r) != count {
        return Err(Error::contract(
            "density extremal graph failed re-verification",
        ));
    }
    Ok(DensityEstimate {
        p,
        r,
        n,
        value: Ratio::new(count, denom),
        count,
        extremal,
        graphs_examined: examined,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_free_pairs_order_six() {
        let est = independent_rset_density(2, 2, 6, DensityMode::Exhaustive).unwrap();
        assert_eq!(est.value, Ratio::new(1, 6));
        assert_eq!(est.extremal, Graph::complete_balanced_multipartite(2, 3));
    }

    #[test]
    fn triangle_free_pairs_order_five() {
        let est = independent_rset_density(2, 2, 5, DensityMode::Exhaustive).unwrap();
        assert_eq!(est.value, Ratio::new(4, 25));
    }

    #[test]
    fn exhaustive_matches_brute_force_order_six() {
        // Every labelled graph on 6 vertices.
        for (p, r) in [(2, 3), (3, 2)] {
            let mut best = u64::MAX;
            for mask in 0u32..1 << 15 {
                let mut g = Graph::empty(6);
                let mut bit = 0;
                for u in 0..6 {
                    for v in u + 1..6 {
                        if mask >> bit & 1 == 1 {
                            g.add_edge(u, v);
                        }
                        bit += 1;
                    }
                }
                if find_clique(&g, p + 1).is_none() {
                    best = best.min(count_independent_rsets(&g, r));
                }
            }
            if ramsey_floor(p, r) <= 6 {
                let est = independent_rset_density(p, r, 6, DensityMode::Exhaustive).unwrap();
                assert_eq!(est.count, best, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn random_mode_is_reproducible() {
        let mode = DensityMode::Random {
            budget: 20,
            seed: 9,
        };
        let a = independent_rset_density(2, 3, 12, mode).unwrap();
        let b = independent_rset_density(2, 3, 12, mode).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn caps_and_floor() {
        assert!(independent_rset_density(2, 2, 9, DensityMode::Exhaustive).is_err());
        assert!(independent_rset_density(2, 3, 5, DensityMode::Exhaustive).is_err());
        assert_eq!(ramsey_floor(2, 3), 6);
        assert_eq!(ramsey_floor(3, 3), 9);
        assert_eq!(ramsey_floor(2, 2), 3);
        assert_eq!(ramsey_floor(5, 5), 126);
    }
}
