//! Partitions `V_0 ∪ V_1 ∪ .. ∪ V_k` and their text exchange format.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! order 12
//! exceptional 0 5
//! part 1 2 3
//! part 4 6 7
//! ```
//!
//! Indices are 0-based. `order` is optional and, when present, must match
//! the graph. `exceptional` may be omitted or appear once.

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub exceptional: VertexSet,
    pub parts: Vec<VertexSet>,
}

impl Partition {
    /// Validates equal part sizes, pairwise disjointness and coverage.
    pub fn new(exceptional: VertexSet, parts: Vec<VertexSet>) -> Result<Self> {
        let n = exceptional.universe();
        let mut seen = exceptional.clone();
        let size = parts.first().map(VertexSet::len);
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != n {
                return Err(Error::arg(format!(
                    "part {i} lives over a different vertex range"
                )));
            }
            if Some(part.len()) != size {
                return Err(Error::arg(format!(
                    "part {i} has {} vertices, part 0 has {}",
                    part.len(),
                    size.unwrap_or(0)
                )));
            }
            if part.is_empty() {
                return Err(Error::arg("parts must be nonempty"));
            }
            if !seen.is_disjoint(part) {
                return Err(Error::arg(format!("part {i} overlaps an earlier class")));
            }
            seen.union_with(part);
        }
        if seen.len() != n {
            return Err(Error::arg(format!(
                "partition covers {} of {n} vertices",
                seen.len()
            )));
        }
        Ok(Partition { exceptional, parts })
    }

    /// Consecutive blocks of `size` vertices; the remainder is exceptional.
    pub fn consecutive(n: usize, k: usize, size: usize) -> Result<Self> {
        if k * size > n {
            return Err(Error::arg("parts do not fit"));
        }
        let parts = (0..k)
            .map(|i| VertexSet::from_indices(n, i * size..(i + 1) * size))
            .collect();
        Partition::new(VertexSet::from_indices(n, k * size..n), parts)
    }

    pub fn order(&self) -> usize {
        self.exceptional.universe()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part_size(&self) -> usize {
        self.parts.first().map_or(0, VertexSet::len)
    }

    /// `k |V_i| / n`, the fraction of vertices outside `V_0`.
    pub fn covered_fraction(&self) -> f64 {
        if self.order() == 0 {
            return 0.0;
        }
        (self.k() * self.part_size()) as f64 / self.order() as f64
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut exceptional: Option<VertexSet> = None;
        let mut parts = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let keyword = fields.next().unwrap_or_default();
            let mut indices = Vec::new();
            for f in fields {
                let v: usize = f.parse().map_err(|_| {
                    Error::arg(format!("line {}: bad vertex index {f:?}", lineno + 1))
                })?;
                indices.push(v);
            }
            if keyword != "order" {
                if let Some(v) = indices.iter().find(|&&v| v >= n) {
                    return Err(Error::arg(format!(
                        "line {}: vertex {v} out of range for order {n}",
                        lineno + 1
                    )));
                }
            }
            match keyword {
                "order" => {
                    if indices != [n] {
                        return Err(Error::arg(format!(
                            "line {}: partition order does not match graph order {n}",
                            lineno + 1
                        )));
                    }
                }
                "exceptional" => {
                    if exceptional.is_some() {
                        return Err(Error::arg(format!(
                            "line {}: repeated exceptional set",
                            lineno + 1
                        )));
                    }
                    exceptional = Some(VertexSet::from_indices(n, indices));
                }
                "part" => parts.push(VertexSet::from_indices(n, indices)),
                other => {
                    return Err(Error::arg(format!(
                        "line {}: unknown keyword {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Partition::new(exceptional.unwrap_or_else(|| VertexSet::empty(n)), parts)
    }

    pub fn to_text(&self) -> String {
        let join = |s: &VertexSet| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("order {}\n", self.order());
        out.push_str(format!("exceptional {}", join(&self.exceptional)).trim_end());
        out.push('\n');
        for p in &self.parts {
            out.push_str(&format!("part {}\n", join(p)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "# demo\norder 8\nexceptional 7\npart 0 1 2\npart 3 4 5 # trailing\n\npart\n";
        assert!(Partition::parse(text, 8).is_err(), "empty part is invalid");
        let text = "order 7\nexceptional 6\npart 0 1 2\npart 3 4 5\n";
        let p = Partition::parse(text, 7).unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(p.part_size(), 3);
        assert_eq!(Partition::parse(&p.to_text(), 7).unwrap(), p);
        assert_eq!(p.to_text(), text);
    }

    #[test]
    fn validation() {
        assert!(Partition::parse("part 0 1\npart 2\n", 3).is_err());
        assert!(Partition::parse("part 0 1\npart 1 2\n", 3).is_err());
        assert!(Partition::parse("part 0 1\n", 3).is_err());
        assert!(Partition::parse("part 0 9\n", 3).is_err());
        assert!(Partition::parse("order 4\npart 0 1 2\n", 3).is_err());
        assert!(Partition::parse("block 0\n", 3).is_err());
        assert_eq!(
            Partition::consecutive(10, 3, 3)
                .unwrap()
                .exceptional
                .to_vec(),
            vec![9]
        );
    }
}
