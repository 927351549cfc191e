//! The pigeonhole step: from a copy of `K_p(r)` to a book in the complement
//! or a `K_{p+1}`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn independent_sets_in(
    g: &Graph,
    cand: &VertexSet,
    r: usize,
    out: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if out.len() == r {
        return found(out);
    }
    let need = r - out.len();
    let members = cand.to_vec();
    for (i, &v) in members.iter().enumerate() {
        if members.len() - i < need {
            break;
        }
        let mut rest = VertexSet::from_indices(g.order(), members[i + 1..].iter().copied());
        rest.difference_with(&g.neighbors(v));
        out.push(v);
        if independent_sets_in(g, &rest, r, out, found) {
            return true;
        }
        out.pop();
    }
    false
}

fn kpr_rec(g: &Graph, pool: &VertexSet, p: usize, r: usize, classes: &mut Vec<VertexSet>) -> bool {
    if classes.len() == p {
        return true;
    }
    let n = g.order();
    // Smallest vertices of successive classes increase.
    let floor = classes
        .last()
        .and_then(VertexSet::first)
        .map_or(0, |m| m + 1);
    let cand = VertexSet::from_indices(n, pool.iter().filter(|&v| v >= floor));
    let mut out = Vec::with_capacity(r);
    independent_sets_in(g, &cand, r, &mut out, &mut |set| {
        let class = VertexSet::from_indices(n, set.iter().copied());
        let mut next = pool.clone();
        for &v in set {
            next.intersect_with(&g.neighbors(v));
        }
        classes.push(class);
        if kpr_rec(g, &next, p, r, classes) {
            return true;
        }
        classes.pop();
        false
    })
}

/// `p` disjoint independent `r`-sets, completely joined to each other, or
/// `None`. Classes are listed by increasing smallest vertex; the search is
/// lexicographic, so the result is deterministic.
pub fn find_kpr(g: &Graph, p: usize, r: usize) -> Option<Vec<VertexSet>> {
    if p == 0 || r == 0 {
        return Some(vec![VertexSet::empty(g.order()); p]);
    }
    let mut classes = Vec::with_capacity(p);
    kpr_rec(g, &VertexSet::full(g.order()), p, r, &mut classes).then_some(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PigeonholeOutcome {
    /// `base` is a class of the embedding; every page has no neighbour in it,
    /// so `base + pages` is a book in the complement.
    Book {
        class: usize,
        base: VertexSet,
        pages: VertexSet,
        /// `⌈(n - pr)/p⌉`.
        floor: usize,
    },
    /// An outside vertex with a neighbour in every class, plus one such
    /// neighbour per class.
    Clique(VertexSet),
}

fn validate(g: &Graph, p: usize, r: usize, classes: &[VertexSet]) -> Result<()> {
    if classes.len() != p {
        return Err(Error::arg(format!(
            "embedding has {} classes, expected {p}",
            classes.len()
        )));
    }
    for (i, a) in classes.iter().enumerate() {
        if a.len() != r || a.universe() != g.order() {
            return Err(Error::arg(format!(
                "class {i} does not have {r} vertices of the graph"
            )));
        }
        if !g.is_independent(a) {
            return Err(Error::arg(format!("class {i} is not independent")));
        }
        for (j, b) in classes.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) || g.edges_between(a, b) != r * r {
                return Err(Error::arg(format!(
                    "classes {i} and {j} are not completely joined"
                )));
            }
        }
    }
    Ok(())
}

/// Every vertex outside the embedding either has a neighbour in every class
/// (giving `K_{p+1}`) or misses some class entirely; in the second case it
/// is assigned to the first class it misses. The most loaded class, ties to
/// the lowest index, is the base.
pub fn pigeonhole_book(
    g: &Graph,
    p: usize,
    r: usize,
    classes: &[VertexSet],
) -> Result<PigeonholeOutcome> {
    if p == 0 || r == 0 {
        return Err(Error::arg("need p, r >= 1"));
    }
    validate(g, p, r, classes)?;
    let n = g.order();
    let used = classes
        .iter()
        .fold(VertexSet::empty(n), |acc, c| acc.union(c));
    let mut loads = vec![VertexSet::empty(n); p];
    for u in used.complement().iter() {
        let nb = g.neighbors(u);
        match classes.iter().position(|c| c.is_disjoint(&nb)) {
            Some(i) => loads[i].insert(u),
            None => {
                let mut clique = VertexSet::from_indices(n, [u]);
                for c in classes {
                    clique.insert(c.intersection(&nb).first().expect("neighbour in class"));
                }
                if !g.is_clique(&clique) {
                    return Err(Error::contract("pigeonhole clique is not complete"));
                }
                return Ok(PigeonholeOutcome::Clique(clique));
            }
        }
    }
    let class = (0..p)
        .max_by_key(|&i| (loads[i].len(), std::cmp::Reverse(i)))
        .expect("p >= 1");
    let floor = (n - p * r).div_ceil(p);
    let pages = loads.swap_remove(class);
    let base = classes[class].clone();
    if pages.len() < floor || g.edges_between(&base, &pages) != 0 {
        return Err(Error::contract("pigeonhole book misses its guarantee"));
    }
    Ok(PigeonholeOutcome::Book {
        class,
        base,
        pages,
        floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::book_size;

    #[test]
    fn find_kpr_examples() {
        let k33 = Graph::complete_balanced_multipartite(2, 3);
        let e = find_kpr(&k33, 2, 3).unwrap();
        assert_eq!(e[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(e[1].to_vec(), vec![3, 4, 5]);
        assert!(find_kpr(&Graph::cycle(5), 2, 2).is_none());
        let k3_3 = Graph::complete_balanced_multipartite(3, 3);
        let e = find_kpr(&k3_3, 3, 3).unwrap();
        assert_eq!(
            e.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]
        );
    }

    #[test]
    fn k33_with_two_by_two_embedding() {
        let g = Graph::complete_balanced_multipartite(2, 3);
        let e = find_kpr(&g, 2, 2).unwrap();
        match pigeonhole_book(&g, 2, 2, &e).unwrap() {
            PigeonholeOutcome::Book { pages, floor, .. } => {
                assert_eq!(floor, 1);
                assert!(!pages.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k44_pages_match_complement_books() {
        let g = Graph::complete_balanced_multipartite(2, 4);
        let e = find_kpr(&g, 2, 2).unwrap();
        match pigeonhole_book(&g, 2, 2, &e).unwrap() {
            PigeonholeOutcome::Book {
                pages, floor, base, ..
            } => {
                assert_eq!(floor, 2);
                assert_eq!(pages.len(), 2);
                let comp = g.complement();
                assert_eq!(comp.common_neighbors(&base).unwrap().len(), 2);
                assert_eq!(book_size(&comp, 2).size, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn transversal_vertex_gives_clique() {
        let mut g = Graph::complete_balanced_multipartite(2, 2).disjoint_union(&Graph::empty(1));
        g.add_edge(4, 0);
        g.add_edge(4, 2);
        let e = vec![
            VertexSet::from_indices(5, [0, 1]),
            VertexSet::from_indices(5, [2, 3]),
        ];
        match pigeonhole_book(&g, 2, 2, &e).unwrap() {
            PigeonholeOutcome::Clique(c) => assert_eq!(c.to_vec(), vec![0, 2, 4]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_embeddings_rejected() {
        let g = Graph::complete_balanced_multipartite(2, 3);
        let bad = vec![
            VertexSet::from_indices(6, [0, 3]),
            VertexSet::from_indices(6, [1, 4]),
        ];
        assert!(pigeonhole_book(&g, 2, 2, &bad).is_err());
        assert!(pigeonhole_book(&g, 2, 2, &bad[..1]).is_err());
    }
}
