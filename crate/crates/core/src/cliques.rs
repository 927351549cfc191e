//! Exact clique counting, book sizes and the counting inequalities used by
//! the stability argument.

use crate::error::{Error, Result};
use crate::graph::{and_count, bits, count, Graph, VertexSet};
use num_rational::Ratio;
use rayon::prelude::*;

/// Below this order the top-level clique loops stay sequential.
const PAR_THRESHOLD: usize = 48;

/// Largest `r`-book found in a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookMeasure {
    pub r: usize,
    /// Number of pages, `|common_neighbors(base)|`.
    pub size: usize,
    /// Lexicographically smallest base attaining `size`; `None` iff the graph
    /// has no `r`-clique.
    pub base: Option<VertexSet>,
}

fn and_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn clear_bit(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1u64 << (v % 64));
}

/// Counts `k`-cliques inside `cand`; every vertex of `cand` is already
/// adjacent to the clique built so far.
fn count_in(g: &Graph, cand: &[u64], k: usize) -> u64 {
    match k {
        0 => 1,
        1 => count(cand) as u64,
        _ => {
            let mut rest = cand.to_vec();
            let mut total = 0;
            for v in bits(cand) {
                clear_bit(&mut rest, v);
                if count(&rest) < k - 1 {
                    break;
                }
                let next = and_words(&rest, g.row(v));
                total += count_in(g, &next, k - 1);
            }
            total
        }
    }
}

/// Vertices after `v` in `v`'s neighbourhood.
fn forward_neighbors(g: &Graph, v: usize) -> Vec<u64> {
    let mut row = g.row(v).to_vec();
    for (i, w) in row.iter_mut().enumerate() {
        let lo = i * 64;
        if lo + 64 <= v + 1 {
            *w = 0;
        } else if lo <= v {
            *w &= !((1u64 << (v + 1 - lo)) - 1);
        }
    }
    row
}

/// Exact number of `r`-vertex complete subgraphs.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    let n = g.order();
    match r {
        0 => 1,
        1 => n as u64,
        2 => g.edge_count() as u64,
        _ if r > n => 0,
        _ => {
            let per_vertex = |v: usize| count_in(g, &forward_neighbors(g, v), r - 1);
            if n >= PAR_THRESHOLD {
                (0..n).into_par_iter().map(per_vertex).sum()
            } else {
                (0..n).map(per_vertex).sum()
            }
        }
    }
}

/// Number of independent `r`-sets, i.e. `r`-cliques of the complement.
pub fn count_independent_rsets(g: &Graph, r: usize) -> u64 {
    count_cliques(&g.complement(), r)
}

fn find_in(g: &Graph, cand: &[u64], k: usize, stack: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    let mut rest = cand.to_vec();
    for v in bits(cand) {
        clear_bit(&mut rest, v);
        stack.push(v);
        if k == 1 {
            return true;
        }
        if count(&rest) >= k - 1 {
            let next = and_words(&rest, g.row(v));
            if count(&next) >= k - 1 && find_in(g, &next, k - 1, stack) {
                return true;
            }
        }
        stack.pop();
    }
    false
}

/// The lexicographically first `k`-clique, if any.
pub fn find_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.order();
    if k > n {
        return None;
    }
    let mut stack = Vec::with_capacity(k);
    let all = VertexSet::full(n);
    find_in(g, all.words(), k, &mut stack).then(|| VertexSet::from_indices(n, stack))
}

/// `true` iff `g` contains no `K_k`.
pub fn is_clique_free(g: &Graph, k: usize) -> bool {
    find_clique(g, k).is_none()
}

#[derive(Clone)]
struct BestBook {
    size: usize,
    base: Option<Vec<usize>>,
}

impl BestBook {
    fn none() -> Self {
        BestBook {
            size: 0,
            base: None,
        }
    }

    /// Larger size wins; ties go to the lexicographically smaller base.
    fn merge(self, other: BestBook) -> BestBook {
        match (&self.base, &other.base) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) => {
                if other.size > self.size || (other.size == self.size && b < a) {
                    other
                } else {
                    self
                }
            }
        }
    }
}

fn books_in(
    g: &Graph,
    cand: &[u64],
    common: &[u64],
    k: usize,
    stack: &mut Vec<usize>,
    best: &mut BestBook,
) {
    if k == 0 {
        let pages = count(common);
        if best.base.is_none() || pages > best.size {
            best.size = pages;
            best.base = Some(stack.clone());
        }
        return;
    }
    let mut rest = cand.to_vec();
    for v in bits(cand) {
        clear_bit(&mut rest, v);
        if count(&rest) < k - 1 {
            break;
        }
        let next_cand = and_words(&rest, g.row(v));
        let next_common = and_words(common, g.row(v));
        stack.push(v);
        books_in(g, &next_cand, &next_common, k - 1, stack, best);
        stack.pop();
    }
}

fn visit_in<F: FnMut(&[usize], &[u64])>(
    g: &Graph,
    cand: &[u64],
    common: &[u64],
    k: usize,
    stack: &mut Vec<usize>,
    f: &mut F,
) {
    if k == 0 {
        f(stack, common);
        return;
    }
    let mut rest = cand.to_vec();
    for v in bits(cand) {
        clear_bit(&mut rest, v);
        if count(&rest) < k - 1 {
            break;
        }
        stack.push(v);
        visit_in(
            g,
            &and_words(&rest, g.row(v)),
            &and_words(common, g.row(v)),
            k - 1,
            stack,
            f,
        );
        stack.pop();
    }
}

/// Calls `f(clique, common)` for every `r`-clique inside `within`, in
/// lexicographic order, where `common` is the clique's common neighbourhood
/// in the whole graph.
pub fn for_each_clique_in<F: FnMut(&[usize], &VertexSet)>(
    g: &Graph,
    within: &VertexSet,
    r: usize,
    mut f: F,
) {
    let n = g.order();
    let mut stack = Vec::with_capacity(r);
    let all = VertexSet::full(n);
    let mut wrap = |c: &[usize], common: &[u64]| {
        f(c, &VertexSet::from_words(n, common.to_vec()));
    };
    visit_in(g, within.words(), all.words(), r, &mut stack, &mut wrap);
}

/// `bs^(r)(g)`: the maximum over all `r`-cliques `R` of
/// `|common_neighbors(R)|`. Pages need not be independent of each other.
pub fn book_size(g: &Graph, r: usize) -> BookMeasure {
    assert!(r >= 1, "book base order must be positive");
    let n = g.order();
    let per_vertex = |v: usize| {
        let mut best = BestBook::none();
        let mut stack = vec![v];
        books_in(
            g,
            &forward_neighbors(g, v),
            g.row(v),
            r - 1,
            &mut stack,
            &mut best,
        );
        best
    };
    let best = if r > n {
        BestBook::none()
    } else if n >= PAR_THRESHOLD {
        (0..n)
            .into_par_iter()
            .map(per_vertex)
            .reduce(BestBook::none, BestBook::merge)
    } else {
        (0..n)
            .map(per_vertex)
            .fold(BestBook::none(), BestBook::merge)
    };
    BookMeasure {
        r,
        size: best.size,
        base: best.base.map(|b| VertexSet::from_indices(n, b)),
    }
}

/// Whether `g` contains the generalized book `B_q^(r)`.
pub fn contains_book(g: &Graph, q: usize, r: usize) -> Result<bool> {
    if q == 0 {
        return Err(Error::arg("book size q must be at least 1"));
    }
    if r == 0 {
        return Err(Error::arg("book base order r must be at least 1"));
    }
    Ok(book_size(g, r).size >= q)
}

/// Both sides of `3 k_3(G) = sum over edges uv of |N(u) ∩ N(v)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleIdentity {
    pub lhs: u64,
    pub rhs: u64,
}

pub fn triangle_identity(g: &Graph) -> TriangleIdentity {
    let lhs = 3 * count_cliques(g, 3);
    let rhs = g
        .edges()
        .map(|(u, v)| and_count(g.row(u), g.row(v)) as u64)
        .sum();
    TriangleIdentity { lhs, rhs }
}

/// `sum d(u)^2 <= 2((p-1)/p) m n`, which every `K_{p+1}`-free graph
/// satisfies. A violation certifies a `K_{p+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeSquareBound {
    pub lhs: u64,
    pub rhs: Ratio<u64>,
    pub holds: bool,
}

pub fn degree_square_bound(g: &Graph, p: usize) -> Result<DegreeSquareBound> {
    if p < 2 {
        return Err(Error::arg("degree_square_bound needs p >= 2"));
    }
    let n = g.order() as u64;
    let m = g.edge_count() as u64;
    let p = p as u64;
    let lhs: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let numer = 2 * (p - 1) * m * n;
    Ok(DegreeSquareBound {
        lhs,
        rhs: Ratio::new(numer, p),
        holds: lhs * p <= numer,
    })
}

/// Part sizes of the balanced complete `p`-partite graph on `n` vertices,
/// larger parts first.
pub fn turan_parts(n: usize, p: usize) -> Vec<usize> {
    assert!(p >= 1, "Turán graph needs at least one part");
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

/// Edge count of the Turán graph `T(n, p)`.
pub fn turan_edge_max(n: usize, p: usize) -> Result<u64> {
    if p == 0 {
        return Err(Error::arg("turan_edge_max needs p >= 1"));
    }
    let squares: u64 = turan_parts(n, p).iter().map(|&s| (s * s) as u64).sum();
    Ok(((n * n) as u64 - squares) / 2)
}
