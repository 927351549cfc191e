//! Exact `p`-colouring by DSATUR-ordered backtracking.

use crate::graph::{and_count, Graph};
use std::collections::VecDeque;

pub const DEFAULT_COLORING_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringConfig {
    /// Largest order handed to the exponential search. Orders above it
    /// yield [`Colorability::Unchecked`]. Two colours are always decided
    /// exactly by breadth-first search, regardless of the cap.
    pub cap: usize,
}

impl Default for ColoringConfig {
    fn default() -> Self {
        ColoringConfig {
            cap: DEFAULT_COLORING_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colorability {
    /// A proper colouring, `coloring[v] < p`.
    Colorable(Vec<usize>),
    NotColorable,
    /// The order exceeds the configured cap; no verdict is given.
    Unchecked {
        order: usize,
        cap: usize,
    },
}

impl Colorability {
    pub fn is_colorable(&self) -> Option<bool> {
        match self {
            Colorability::Colorable(_) => Some(true),
            Colorability::NotColorable => Some(false),
            Colorability::Unchecked { .. } => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Colorability::Colorable(_) => "true",
            Colorability::NotColorable => "false",
            Colorability::Unchecked { .. } => "unchecked",
        }
    }
}

pub fn is_proper_coloring(g: &Graph, coloring: &[usize], p: usize) -> bool {
    coloring.len() == g.order()
        && coloring.iter().all(|&c| c < p)
        && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// Decides whether `g` admits a proper colouring with `p` colours.
pub fn is_p_colorable(g: &Graph, p: usize, config: &ColoringConfig) -> Colorability {
    let n = g.order();
    if n == 0 {
        return Colorability::Colorable(Vec::new());
    }
    match p {
        0 => Colorability::NotColorable,
        1 if g.edge_count() == 0 => Colorability::Colorable(vec![0; n]),
        1 => Colorability::NotColorable,
        2 => two_color(g),
        _ if n > config.cap => Colorability::Unchecked {
            order: n,
            cap: config.cap,
        },
        _ => {
            let mut search = Dsatur::new(g, p);
            if search.solve(n) {
                Colorability::Colorable(
                    search
                        .colors
                        .iter()
                        .map(|c| c.expect("all colored"))
                        .collect(),
                )
            } else {
                Colorability::NotColorable
            }
        }
    }
}

fn two_color(g: &Graph) -> Colorability {
    let n = g.order();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u).iter() {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Colorability::NotColorable,
                    Some(_) => {}
                }
            }
        }
    }
    Colorability::Colorable(color.into_iter().map(Option::unwrap).collect())
}

struct Dsatur<'g> {
    g: &'g Graph,
    p: usize,
    colors: Vec<Option<usize>>,
    classes: Vec<Vec<u64>>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, p: usize) -> Self {
        Dsatur {
            g,
            p,
            colors: vec![None; g.order()],
            classes: vec![vec![0; g.row_words()]; p],
        }
    }

    fn saturation(&self, v: usize) -> usize {
        let row = self.g.row(v);
        self.classes
            .iter()
            .filter(|c| and_count(row, c) > 0)
            .count()
    }

    fn pick(&self) -> (usize, usize) {
        let mut best = (0, 0, 0);
        let mut found = None;
        for v in 0..self.g.order() {
            if self.colors[v].is_some() {
                continue;
            }
            let key = (self.saturation(v), self.g.degree(v), usize::MAX - v);
            if found.is_none() || key > best {
                best = key;
                found = Some(v);
            }
        }
        (found.expect("an uncolored vertex remains"), best.0)
    }

    fn set(&mut self, v: usize, c: Option<usize>) {
        let (w, b) = (v / 64, 1u64 << (v % 64));
        match (self.colors[v], c) {
            (Some(old), None) => self.classes[old][w] &= !b,
            (None, Some(new)) => self.classes[new][w] |= b,
            _ => unreachable!("recolor without clearing"),
        }
        self.colors[v] = c;
    }

    fn solve(&mut self, uncolored: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        let (v, sat) = self.pick();
        if sat == self.p {
            return false;
        }
        let used = self
            .classes
            .iter()
            .filter(|c| c.iter().any(|&w| w != 0))
            .count();
        let limit = (used + 1).min(self.p);
        for c in 0..limit {
            if and_count(self.g.row(v), &self.classes[c]) > 0 {
                continue;
            }
            self.set(v, Some(c));
            if self.solve(uncolored - 1) {
                return true;
            }
            self.set(v, None);
        }
        false
    }
}
