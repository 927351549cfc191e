use std::path::Path;

use gbooks::graph::parse_graph6;
use gbooks::{Error, Graph, Result, VertexSet};

/// A path to an existing file yields one graph per nonempty line; anything
/// else is parsed as an inline graph6 string.
pub fn load_graphs(spec: &str) -> Result<Vec<Graph>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {spec}: {e}")))?;
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect::<Result<Vec<_>>>()?;
        if graphs.is_empty() {
            return Err(Error::InvalidArgument(format!("{spec} holds no graphs")));
        }
        Ok(graphs)
    } else {
        Ok(vec![parse_graph6(spec.trim())?])
    }
}

pub fn load_one(spec: &str) -> Result<Graph> {
    let mut graphs = load_graphs(spec)?;
    if graphs.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "expected one graph, {spec} holds {}",
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

pub fn vertex_set(n: usize, members: &[usize], name: &str) -> Result<VertexSet> {
    if let Some(&v) = members.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidArgument(format!(
            "{name}: vertex {v} out of range for order {n}"
        )));
    }
    Ok(VertexSet::from_indices(n, members.iter().copied()))
}

/// Seed from the flag, or a fresh one mixed from the clock and process id.
pub fn resolve_seed(seed: Option<u64>) -> (u64, bool) {
    match seed {
        Some(s) => (s, false),
        None => {
            let nanos = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_nanos() as u64)
                .unwrap_or(0);
            (
                gbooks::rng::splitmix64(nanos ^ u64::from(std::process::id())),
                true,
            )
        }
    }
}
