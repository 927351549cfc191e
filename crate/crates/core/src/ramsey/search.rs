//! Exhaustive arrowing search `n -> (K_{p+1}, B_q^(r))`.
//!
//! Edges of `K_n` are decided in graph6 order `(0,1), (0,2), (1,2), (0,3), ..`
//! with "absent" tried before "present", so the first counterexample reached
//! is the lexicographically least by edge bit-string. A branch is cut as soon
//! as the decided edges contain `K_{p+1}` or the decided non-edges contain
//! `B_q^(r)`; both properties are monotone, so no counterexample is lost.
//!
//! With symmetry reduction on, a branch is also cut when the prefix graph on
//! `0..=v`, just completed, becomes lexicographically smaller under some
//! transposition of prefix vertices. Applying that transposition to any
//! completion gives an isomorphic graph with a smaller bit-string, so the
//! least counterexample never lies below a cut.

use crate::cliques::{book_size, is_clique_free};
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// Orders above this are never searched; rows are 32-bit and prefix keys
/// 128-bit.
pub const HARD_ORDER_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest order searched without complaint.
    pub n_cap: usize,
    pub symmetry: bool,
    /// Edge decisions made sequentially before subtrees go parallel.
    pub split_level: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_cap: 9,
            symmetry: true,
            split_level: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowingVerdict {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub arrows: bool,
    /// Lexicographically least graph with no `K_{p+1}` whose complement has
    /// no `B_q^(r)`; present iff `!arrows`.
    pub counterexample: Option<Graph>,
    /// Partial graphs tested, counting every edge decision.
    pub graphs_examined: u64,
    pub elapsed: Duration,
}

fn has_clique(rows: &[u32], set: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let mut rest = set;
    while rest.count_ones() as usize >= k {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[v], k - 1) {
            return true;
        }
    }
    false
}

/// Some `k`-clique inside `cand` whose common neighbourhood, intersected
/// with `common`, has at least `q` vertices.
fn has_book(rows: &[u32], cand: u32, common: u32, k: usize, q: usize) -> bool {
    if (common.count_ones() as usize) < q {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= k {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_book(rows, rest & rows[v], common & rows[v], k - 1, q) {
            return true;
        }
    }
    false
}

#[derive(Clone)]
struct State {
    /// Decided edges.
    g: [u32; HARD_ORDER_LIMIT],
    /// Decided non-edges.
    h: [u32; HARD_ORDER_LIMIT],
    /// Next edge to decide, as an index into `Search::edges`.
    idx: usize,
}

struct Search {
    n: usize,
    p: usize,
    q: usize,
    r: usize,
    symmetry: bool,
    edges: Vec<(usize, usize)>,
}

enum Step {
    Found(State),
    Exhausted,
}

impl Search {
    fn new(n: usize, p: usize, q: usize, r: usize, symmetry: bool) -> Self {
        let edges = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        Search {
            n,
            p,
            q,
            r,
            symmetry,
            edges,
        }
    }

    /// Whether adding edge `uv` to `g` completes a `K_{p+1}`.
    fn edge_kills(&self, g: &[u32], u: usize, v: usize) -> bool {
        has_clique(g, g[u] & g[v], self.p - 1)
    }

    /// Whether adding non-edge `uv` to `h` completes a `B_q^(r)`. Any new
    /// book uses `uv`, so its base contains `u` or `v`.
    fn nonedge_kills(&self, h: &[u32], u: usize, v: usize) -> bool {
        [u, v]
            .iter()
            .any(|&x| has_book(h, h[x], h[x], self.r - 1, self.q))
    }

    fn prefix_key(&self, rows: &[u32], k: usize, perm: &[usize]) -> u128 {
        let mut key = 0u128;
        for w in 1..k {
            for u in 0..w {
                key = key << 1 | ((rows[perm[u]] >> perm[w]) & 1) as u128;
            }
        }
        key
    }

    /// Whether the prefix on `0..k` is minimal under transpositions.
    fn prefix_is_canonical(&self, rows: &[u32], k: usize) -> bool {
        let mut perm: Vec<usize> = (0..k).collect();
        let base = self.prefix_key(rows, k, &perm);
        for a in 0..k {
            for b in a + 1..k {
                perm.swap(a, b);
                let smaller = self.prefix_key(rows, k, &perm) < base;
                perm.swap(a, b);
                if smaller {
                    return false;
                }
            }
        }
        true
    }

    /// The children of `s` that survive pruning, absent edge first.
    fn children(&self, s: &State, examined: &mut u64) -> Vec<State> {
        let (u, v) = self.edges[s.idx];
        let completes_vertex = u + 1 == v;
        let mut out = Vec::with_capacity(2);
        for present in [false, true] {
            *examined += 1;
            let mut t = s.clone();
            t.idx += 1;
            let dead = if present {
                t.g[u] |= 1 << v;
                t.g[v] |= 1 << u;
                self.edge_kills(&t.g, u, v)
            } else {
                t.h[u] |= 1 << v;
                t.h[v] |= 1 << u;
                self.nonedge_kills(&t.h, u, v)
            };
            if dead {
                continue;
            }
            if self.symmetry && completes_vertex && !self.prefix_is_canonical(&t.g, v + 1) {
                continue;
            }
            out.push(t);
        }
        out
    }

    fn dfs(&self, s: State, examined: &mut u64) -> Step {
        if s.idx == self.edges.len() {
            return Step::Found(s);
        }
        for t in self.children(&s, examined) {
            if let Step::Found(f) = self.dfs(t, examined) {
                return Step::Found(f);
            }
        }
        Step::Exhausted
    }

    /// Breadth-first expansion to `depth` edge decisions, in DFS order.
    fn frontier(&self, depth: usize, examined: &mut u64) -> Vec<State> {
        let mut level = vec![self.root()];
        for _ in 0..depth.min(self.edges.len()) {
            let mut next = Vec::new();
            for s in &level {
                next.extend(self.children(s, examined));
            }
            level = next;
        }
        level
    }

    fn root(&self) -> State {
        State {
            g: [0; HARD_ORDER_LIMIT],
            h: [0; HARD_ORDER_LIMIT],
            idx: 0,
        }
    }

    fn to_graph(&self, s: &State) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            for u in 0..v {
                if s.g[v] >> u & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Decides whether every graph of order `n` contains `K_{p+1}` or has
/// `B_q^(r)` in its complement.
pub fn arrows(
    n: usize,
    p: usize,
    q: usize,
    r: usize,
    config: &SearchConfig,
) -> Result<ArrowingVerdict> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::arg("need p, q, r >= 1"));
    }
    let cap = config.n_cap.min(HARD_ORDER_LIMIT);
    if n > cap {
        return Err(Error::cap(
            "search order",
            n,
            cap,
            &format!(
                "raise the search cap (hard limit {HARD_ORDER_LIMIT}); distributed search is not supported"
            ),
        ));
    }
    let start = Instant::now();
    let search = Search::new(n, p, q, r, config.symmetry);
    let mut examined = 0u64;
    let frontier = search.frontier(config.split_level, &mut examined);
    // Every subtree runs to its own first hit, so counts do not depend on
    // scheduling; the first hit in frontier order is the least one.
    let results: Vec<(Option<State>, u64)> = frontier
        .into_par_iter()
        .map(|s| {
            let mut count = 0;
            match search.dfs(s, &mut count) {
                Step::Found(f) => (Some(f), count),
                Step::Exhausted => (None, count),
            }
        })
        .collect();
    examined += results.iter().map(|r| r.1).sum::<u64>();
    let counterexample = results
        .into_iter()
        .find_map(|r| r.0)
        .map(|s| search.to_graph(&s));
    if let Some(g) = &counterexample {
        if !is_clique_free(g, p + 1) || book_size(&g.complement(), r).size >= q {
            return Err(Error::contract(
                "arrowing counterexample failed re-verification",
            ));
        }
    }
    Ok(ArrowingVerdict {
        n,
        p,
        q,
        r,
        arrows: counterexample.is_none(),
        counterexample,
        graphs_examined: examined,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph6;

    /// First graph in edge bit-string order with no triangle and no
    /// complement edge having two common complement neighbours.
    fn brute_force_least(n: usize) -> Option<Vec<(usize, usize)>> {
        let edges: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let m = edges.len();
        (0u64..1 << m).find_map(|code| {
            let mut adj = vec![vec![false; n]; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                // The first edge is the most significant bit.
                let on = code >> (m - 1 - i) & 1 == 1;
                adj[u][v] = on;
                adj[v][u] = on;
            }
            let triangle = (0..n).any(|a| {
                (a + 1..n).any(|b| adj[a][b] && (b + 1..n).any(|c| adj[a][c] && adj[b][c]))
            });
            let book = (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    !adj[a][b]
                        && (0..n)
                            .filter(|&w| w != a && w != b && !adj[a][w] && !adj[b][w])
                            .count()
                            >= 2
                })
            });
            (!triangle && !book)
                .then(|| edges.iter().copied().filter(|&(u, v)| adj[u][v]).collect())
        })
    }

    #[test]
    fn six_does_not_arrow_k3_b2() {
        let v = arrows(6, 2, 2, 2, &SearchConfig::default()).unwrap();
        assert!(!v.arrows);
        let g = v.counterexample.unwrap();
        let want = brute_force_least(6).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>().len(), want.len());
        assert_eq!(g, Graph::from_edges(6, &want).unwrap());
        // The least counterexample is a hexagon.
        assert_eq!(g.degrees(), vec![2; 6]);
        assert!(is_clique_free(&g, 3));
        assert!(brute_force_least(7).is_none());
    }

    #[test]
    fn seven_arrows_k3_b2() {
        let v = arrows(7, 2, 2, 2, &SearchConfig::default()).unwrap();
        assert!(v.arrows && v.counterexample.is_none());
    }

    #[test]
    fn five_does_not_arrow_k3_k3() {
        let v = arrows(5, 2, 1, 2, &SearchConfig::default()).unwrap();
        let g = v.counterexample.unwrap();
        assert_eq!(g.degrees(), vec![2; 5]);
        assert!(is_clique_free(&g, 3) && is_clique_free(&g.complement(), 3));
        assert!(arrows(6, 2, 1, 2, &SearchConfig::default()).unwrap().arrows);
    }

    #[test]
    fn symmetry_does_not_change_answers() {
        let off = SearchConfig {
            symmetry: false,
            ..SearchConfig::default()
        };
        for (n, p, q, r) in [
            (5, 2, 1, 2),
            (6, 2, 2, 2),
            (6, 2, 1, 2),
            (5, 2, 2, 1),
            (6, 3, 1, 2),
        ] {
            let a = arrows(n, p, q, r, &SearchConfig::default()).unwrap();
            let b = arrows(n, p, q, r, &off).unwrap();
            assert_eq!(a.arrows, b.arrows);
            assert_eq!(
                a.counterexample.as_ref().map(serialize_graph6),
                b.counterexample.as_ref().map(serialize_graph6)
            );
            assert!(a.graphs_examined <= b.graphs_examined);
        }
    }

    #[test]
    fn split_level_does_not_change_answers() {
        let mut cfg = SearchConfig::default();
        let base = arrows(6, 2, 2, 2, &cfg).unwrap();
        for split in [0, 3, 15] {
            cfg.split_level = split;
            let v = arrows(6, 2, 2, 2, &cfg).unwrap();
            assert_eq!(v.counterexample, base.counterexample);
        }
    }

    #[test]
    fn repeated_runs_agree() {
        let a = arrows(6, 2, 2, 2, &SearchConfig::default()).unwrap();
        let b = arrows(6, 2, 2, 2, &SearchConfig::default()).unwrap();
        assert_eq!(a.graphs_examined, b.graphs_examined);
        assert_eq!(a.counterexample, b.counterexample);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(arrows(10, 2, 2, 2, &SearchConfig::default()).is_err());
        let cfg = SearchConfig {
            n_cap: 40,
            ..SearchConfig::default()
        };
        assert!(arrows(17, 2, 2, 2, &cfg).is_err());
    }
}
