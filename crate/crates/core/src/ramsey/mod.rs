//! Ramsey numbers `r(K_{p+1}, B_q^(r))` at small parameters: the extremal
//! witness `K_p(q+r-1)`, exhaustive certification and the pigeonhole step.

mod pigeonhole;
mod search;

pub use pigeonhole::{find_kpr, pigeonhole_book, PigeonholeOutcome};
pub use search::{arrows, ArrowingVerdict, SearchConfig, HARD_ORDER_LIMIT};

use crate::cliques::{contains_book, is_clique_free};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, serialize_graph6, Graph};
use std::fmt::Write;

/// `p(q+r-1)+1`.
pub fn formula_value(p: usize, q: usize, r: usize) -> usize {
    p * (q + r - 1) + 1
}

/// The complete `p`-partite graph with parts of size `q+r-1`.
pub fn build_witness(p: usize, q: usize, r: usize) -> Result<Graph> {
    if p < 2 || q < 1 || r < 1 {
        return Err(Error::arg("need p >= 2, q >= 1, r >= 1"));
    }
    Ok(Graph::complete_balanced_multipartite(p, q + r - 1))
}

/// `g` has no `K_{p+1}` and its complement has no `B_q^(r)`.
pub fn verify_witness(g: &Graph, p: usize, q: usize, r: usize) -> bool {
    q >= 1
        && r >= 1
        && is_clique_free(g, p + 1)
        && !contains_book(&g.complement(), q, r).unwrap_or(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLogEntry {
    pub n: usize,
    pub arrows: bool,
    pub graphs_examined: u64,
    pub counterexample: Option<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyCertificate {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub value: usize,
    /// Order `value - 1`, no `K_{p+1}`, complement free of `B_q^(r)`.
    pub witness: Graph,
    pub search_log: Vec<SearchLogEntry>,
}

const HEADER: &str = "# gbooks ramsey certificate v1";

impl RamseyCertificate {
    pub fn formula(&self) -> usize {
        formula_value(self.p, self.q, self.r)
    }

    pub fn matches_formula(&self) -> bool {
        self.value == self.formula()
    }

    /// Stable line-oriented report; see `docs/formats.md`.
    pub fn to_report(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{HEADER}").unwrap();
        writeln!(s, "p {}", self.p).unwrap();
        writeln!(s, "q {}", self.q).unwrap();
        writeln!(s, "r {}", self.r).unwrap();
        writeln!(s, "value {}", self.value).unwrap();
        writeln!(s, "formula {}", self.formula()).unwrap();
        writeln!(s, "formula_matches {}", self.matches_formula()).unwrap();
        writeln!(s, "witness {}", serialize_graph6(&self.witness)).unwrap();
        for e in &self.search_log {
            write!(
                s,
                "n {} arrows {} examined {}",
                e.n, e.arrows, e.graphs_examined
            )
            .unwrap();
            if let Some(g) = &e.counterexample {
                write!(s, " counterexample {}", serialize_graph6(g)).unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        if lines.next().map(str::trim) != Some(HEADER) {
            return Err(Error::arg("missing certificate header"));
        }
        let bad = |l: &str| Error::arg(format!("malformed certificate line: {l}"));
        let num = |l: &str, key: &str| -> Result<usize> {
            let rest = l
                .strip_prefix(key)
                .and_then(|x| x.strip_prefix(' '))
                .ok_or_else(|| bad(l))?;
            rest.trim().parse().map_err(|_| bad(l))
        };
        let mut field = |key: &str| -> Result<String> {
            let l = lines
                .next()
                .ok_or_else(|| Error::arg(format!("missing {key} line")))?;
            l.strip_prefix(key)
                .and_then(|x| x.strip_prefix(' '))
                .map(|x| x.trim().to_string())
                .ok_or_else(|| bad(l))
        };
        let p: usize = field("p")?.parse().map_err(|_| Error::arg("bad p"))?;
        let q: usize = field("q")?.parse().map_err(|_| Error::arg("bad q"))?;
        let r: usize = field("r")?.parse().map_err(|_| Error::arg("bad r"))?;
        let value: usize = field("value")?
            .parse()
            .map_err(|_| Error::arg("bad value"))?;
        let formula: usize = field("formula")?
            .parse()
            .map_err(|_| Error::arg("bad formula"))?;
        let matches: bool = field("formula_matches")?
            .parse()
            .map_err(|_| Error::arg("bad formula_matches"))?;
        let witness = parse_graph6(&field("witness")?)?;
        let mut search_log = Vec::new();
        for l in lines {
            let t: Vec<&str> = l.split_whitespace().collect();
            if !(t.len() == 6 || t.len() == 8)
                || t[0] != "n"
                || t[2] != "arrows"
                || t[4] != "examined"
            {
                return Err(bad(l));
            }
            let counterexample = match t.get(6..8) {
                Some(&["counterexample", g6]) => Some(parse_graph6(g6)?),
                None => None,
                _ => return Err(bad(l)),
            };
            search_log.push(SearchLogEntry {
                n: num(&format!("n {}", t[1]), "n")?,
                arrows: t[3].parse().map_err(|_| bad(l))?,
                graphs_examined: t[5].parse().map_err(|_| bad(l))?,
                counterexample,
            });
        }
        let cert = RamseyCertificate {
            p,
            q,
            r,
            value,
            witness,
            search_log,
        };
        if formula != cert.formula() || matches != cert.matches_formula() {
            return Err(Error::arg("formula fields are inconsistent with p, q, r"));
        }
        Ok(cert)
    }

    /// Re-checks the stored witness and the shape of the log.
    pub fn check(&self) -> bool {
        let last = self.search_log.last();
        self.witness.order() + 1 == self.value
            && verify_witness(&self.witness, self.p, self.q, self.r)
            && last.is_some_and(|e| e.n == self.value && e.arrows)
            && self.search_log[..self.search_log.len() - 1]
                .iter()
                .all(|e| {
                    !e.arrows
                        && e.counterexample
                            .as_ref()
                            .is_some_and(|g| verify_witness(g, self.p, self.q, self.r))
                })
    }
}

/// Smallest `n` such that every graph of order `n` contains `K_{p+1}` or
/// has `B_q^(r)` in its complement, found by scanning `n = 1, 2, ..` up to
/// `config.n_cap`.
pub fn ramsey_number(
    p: usize,
    q: usize,
    r: usize,
    config: &SearchConfig,
) -> Result<RamseyCertificate> {
    if p < 2 || q < 1 || r < 1 {
        return Err(Error::arg("need p >= 2, q >= 1, r >= 1"));
    }
    let mut log: Vec<SearchLogEntry> = Vec::new();
    for n in 1..=config.n_cap {
        let v = arrows(n, p, q, r, config)?;
        log.push(SearchLogEntry {
            n,
            arrows: v.arrows,
            graphs_examined: v.graphs_examined,
            counterexample: v.counterexample,
        });
        if v.arrows {
            // The extremal construction is preferred when it has the right
            // order; otherwise the least counterexample found by the search.
            let extremal = build_witness(p, q, r)?;
            let witness = if extremal.order() + 1 == n && verify_witness(&extremal, p, q, r) {
                extremal
            } else {
                log.iter()
                    .rev()
                    .nth(1)
                    .and_then(|e| e.counterexample.clone())
                    .ok_or_else(|| Error::contract("arrowing at order 1"))?
            };
            let cert = RamseyCertificate {
                p,
                q,
                r,
                value: n,
                witness,
                search_log: log,
            };
            let formula_witness = build_witness(p, q, r)?;
            if verify_witness(&formula_witness, p, q, r) && cert.value < cert.formula() {
                return Err(Error::contract("search value is below a verified witness"));
            }
            return Ok(cert);
        }
    }
    let mut text = String::new();
    for e in &log {
        writeln!(
            text,
            "n {} arrows {} examined {}",
            e.n, e.arrows, e.graphs_examined
        )
        .unwrap();
    }
    Err(Error::SearchIncomplete {
        cap: config.n_cap,
        lower_bound: config.n_cap + 1,
        log: text,
    })
}
