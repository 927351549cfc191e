use std::fs;

use serde_json::{json, Value};

use gbooks::cliques::{book_size, contains_book};
use gbooks::graph::serialize_graph6;
use gbooks::lower_bound::{
    bound_book_probability, bound_km_probability, chernoff_tail, lb_parameters, monte_carlo_witness,
};
use gbooks::ramsey::{
    arrows, build_witness, find_kpr, pigeonhole_book, ramsey_number, verify_witness,
    PigeonholeOutcome, SearchConfig,
};
use gbooks::rational::ExactReal;
use gbooks::regularity::{
    classify_partition, cluster_book_bound, eps_regular_exact_capped, eps_regular_refute,
    pair_density, witness_density, Partition, RegularityMode, SrlParams, VerdictMode,
};
use gbooks::stability::{compute_c, extract_stable_subgraph, ColoringConfig};
use gbooks::{Error, Graph, Result, VertexSet};

use crate::args::*;
use crate::input::{load_graphs, load_one, resolve_seed, vertex_set};
use crate::report::Record;

pub struct Outcome {
    pub records: Vec<Record>,
    /// A domain verdict the command treats as failure.
    pub failed: bool,
}

fn ok(records: Vec<Record>) -> Result<Outcome> {
    Ok(Outcome {
        records,
        failed: false,
    })
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn float(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

fn edge_list(g: &Graph) -> Value {
    g.edges().map(|(u, v)| json!([u, v])).collect()
}

pub fn books(a: &BooksArgs) -> Result<Outcome> {
    let graphs = load_graphs(&a.input.graph)?;
    let params = json!({ "graph": a.input.graph, "r": a.r, "q": a.q });
    let mut records = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let bm = book_size(g, a.r);
        let mut rec = Record::new("books", params.clone());
        rec.set("index", i)
            .set("order", g.order())
            .set("edges", g.edge_count())
            .set("bs", bm.size)
            .set("base", bm.base.as_ref().map_or(Value::Null, set_json));
        let mut summary = format!("bs={}", bm.size);
        if let Some(q) = a.q {
            let has = contains_book(g, q, a.r)?;
            rec.set("contains_book", has);
            summary.push_str(&format!(", contains_book={has}"));
        }
        rec.summary(summary);
        records.push(rec);
    }
    ok(records)
}

pub fn stability(a: &StabilityArgs) -> Result<Outcome> {
    let g = load_one(&a.input.graph)?;
    let alpha = ExactReal::parse(&a.alpha)?;
    let cfg = ColoringConfig {
        cap: a.coloring_cap,
    };
    let res = extract_stable_subgraph(&g, a.p, &alpha, &cfg)?;
    let params = json!({
        "graph": a.input.graph,
        "p": a.p,
        "alpha": a.alpha,
        "alpha_exact": alpha.exact.to_string(),
        "coloring_cap": a.coloring_cap,
    });
    let mut rec = Record::new("stability", params);
    let colorable = res.p_chromatic.is_colorable();
    let triple = res.size_bound_met && res.degree_bound_met && colorable == Some(true);
    rec.set("order", res.order)
        .set("edges", res.edges)
        .set("c", float(res.c))
        .set("epsilon", float(res.epsilon))
        .set("threshold", float(res.threshold))
        .set("clique_free", res.clique_free)
        .set("alpha_within_c", res.alpha_within_c)
        .set("edge_condition", res.edge_condition)
        .set("hypothesis_met", res.hypothesis_met)
        .set("deleted", set_json(&res.deleted))
        .set("kept_order", res.kept.len())
        .set("size_bound", float(res.size_bound))
        .set("size_bound_met", res.size_bound_met)
        .set("degree_bound", float(res.degree_bound))
        .set("kept_min_degree", json!(res.kept_min_degree))
        .set("degree_bound_met", res.degree_bound_met)
        .set("p_chromatic", res.p_chromatic.label())
        .set("guarantees_hold", triple);
    rec.summary(format!(
        "hypothesis_met={}, kept={}/{}, size_bound_met={}, degree_bound_met={}, p_chromatic={}",
        res.hypothesis_met,
        res.kept.len(),
        res.order,
        res.size_bound_met,
        res.degree_bound_met,
        res.p_chromatic.label()
    ));
    ok(vec![rec])
}

pub fn constants(a: &ConstantsArgs) -> Result<Outcome> {
    let last = a.to.unwrap_or(a.p);
    if last < a.p {
        return Err(Error::InvalidArgument("--to must be at least --p".into()));
    }
    let mut records = Vec::new();
    let mut failed = false;
    for p in a.p..=last {
        let k = compute_c(p)?;
        let sandwich = k.lower < k.c && k.c < k.upper;
        let residual_ok = k.residual.abs() < 1e-12;
        failed |= !(sandwich && residual_ok && k.root_inequality_at_c);
        let mut rec = Record::new("constants", json!({ "p": p }));
        rec.set("c0", float(k.c0))
            .set("c", float(k.c))
            .set("lower", float(k.lower))
            .set("upper", float(k.upper))
            .set("rough", float(k.rough))
            .set("residual", float(k.residual))
            .set("sandwich", sandwich)
            .set("root_inequality_at_c", k.root_inequality_at_c);
        let mut summary = format!("p={p}, c0={:.6}, c={:.6e}, sandwich={sandwich}", k.c0, k.c);
        if p == 2 {
            let twenty = 20f64.powi(-3);
            rec.set("upper_equals_20_pow_minus_3", k.upper == twenty)
                .set("c_at_most_20_pow_minus_3", k.c <= twenty);
            summary.push_str(&format!(", upper=20^-3: {}", k.upper == twenty));
        }
        rec.summary(summary);
        records.push(rec);
    }
    Ok(Outcome { records, failed })
}

pub fn regularity(a: &RegularityArgs) -> Result<Outcome> {
    let g = load_one(&a.input.graph)?;
    let n = g.order();
    let seed = a.trials.map(|_| resolve_seed(a.seed));
    let mode_json = match (a.trials, seed) {
        (Some(t), Some((s, generated))) => {
            json!({ "kind": "randomized", "trials": t, "seed": s, "seed_generated": generated })
        }
        _ => json!({ "kind": "exact", "cap": a.exact_cap }),
    };
    if let Some(path) = &a.partition {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
        let part = Partition::parse(&text, n)?;
        let srl = SrlParams::manual(a.p, a.r, a.c_pr.unwrap_or(1.0), a.delta, a.d, a.epsilon)?;
        let mode = match (a.trials, seed) {
            (Some(trials), Some((seed, _))) => RegularityMode::Randomized { trials, seed },
            _ => RegularityMode::Exact { cap: a.exact_cap },
        };
        let cg = classify_partition(&g, &part, &srl, &mode)?;
        let params = json!({
            "graph": a.input.graph, "partition": path, "epsilon": a.epsilon, "d": a.d,
            "delta": a.delta, "p": a.p, "r": a.r, "c_pr": a.c_pr, "mode": mode_json,
        });
        let [irr, lo, mid, hi] = cg.edge_counts();
        let mut rec = Record::new("regularity", params);
        rec.set("k", cg.k)
            .set("part_size", part.part_size())
            .set("covered_fraction", float(part.covered_fraction()))
            .set(
                "edge_counts",
                json!({ "irregular": irr, "low": lo, "mid": mid, "high": hi }),
            )
            .set("irregular", edge_list(&cg.h_irr))
            .set("low", edge_list(&cg.h_lo))
            .set("mid", edge_list(&cg.h_mid))
            .set("high", edge_list(&cg.h_hi));
        let mut summary = format!(
            "k={}, irregular={irr}, low={lo}, mid={mid}, high={hi}",
            cg.k
        );
        if a.c_pr.is_some() {
            let bound = cluster_book_bound(&cg, &srl, part.covered_fraction());
            rec.set("book_bound_fraction", float(bound));
            summary.push_str(&format!(", book_bound={bound:.6e}"));
        }
        rec.summary(summary);
        return ok(vec![rec]);
    }
    let (Some(av), Some(bv)) = (&a.a, &a.b) else {
        return Err(Error::InvalidArgument(
            "give --partition or both --a and --b".into(),
        ));
    };
    let sa = vertex_set(n, av, "--a")?;
    let sb = vertex_set(n, bv, "--b")?;
    let density = pair_density(&g, &sa, &sb)?;
    let verdict = match (a.trials, seed) {
        (Some(trials), Some((seed, _))) => {
            eps_regular_refute(&g, &sa, &sb, a.epsilon, trials, seed)?
        }
        _ => eps_regular_exact_capped(&g, &sa, &sb, a.epsilon, a.exact_cap)?,
    };
    let params = json!({
        "graph": a.input.graph, "a": av, "b": bv, "epsilon": a.epsilon, "mode": mode_json,
    });
    let mut rec = Record::new("regularity", params);
    rec.set("density", density.to_string())
        .set("regular", verdict.regular)
        .set(
            "one_sided",
            matches!(verdict.mode, VerdictMode::Randomized { .. }),
        );
    match &verdict.witness {
        Some((x, y)) => {
            let wd = witness_density(&g, x, y);
            rec.set(
                "witness",
                json!({ "x": x.to_vec(), "y": y.to_vec(), "density": wd.to_string() }),
            );
            rec.summary(format!(
                "regular=false, d(A,B)={density}, witness d(X,Y)={wd}"
            ));
        }
        None => {
            rec.set("witness", Value::Null);
            rec.summary(format!("regular=true, d(A,B)={density}"));
        }
    }
    Ok(Outcome {
        records: vec![rec],
        failed: !verdict.regular,
    })
}

pub fn ramsey(a: &RamseyArgs) -> Result<Outcome> {
    let config = SearchConfig {
        n_cap: a.n_cap,
        symmetry: !a.no_symmetry,
        split_level: a.split_level,
    };
    let params = json!({
        "p": a.p, "q": a.q, "r": a.r, "n_cap": a.n_cap, "order": a.order,
        "symmetry": config.symmetry, "split_level": a.split_level,
    });
    if let Some(n) = a.order {
        let v = arrows(n, a.p, a.q, a.r, &config)?;
        let ce = v.counterexample.as_ref().map(serialize_graph6);
        let mut rec = Record::new("ramsey", params);
        rec.set("n", n)
            .set("arrows", v.arrows)
            .set("graphs_examined", v.graphs_examined)
            .set("counterexample", json!(ce));
        rec.summary(match &ce {
            Some(g6) => format!("arrows=false at n={n}, counterexample={g6}"),
            None => format!("arrows=true at n={n}"),
        });
        return Ok(Outcome {
            records: vec![rec],
            failed: !v.arrows,
        });
    }
    let cert = ramsey_number(a.p, a.q, a.r, &config)?;
    if let Some(path) = &a.certificate_out {
        fs::write(path, cert.to_report())
            .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))?;
    }
    let witness = serialize_graph6(&cert.witness);
    let log: Vec<Value> = cert
        .search_log
        .iter()
        .map(|e| {
            json!({
                "n": e.n,
                "arrows": e.arrows,
                "graphs_examined": e.graphs_examined,
                "counterexample": e.counterexample.as_ref().map(serialize_graph6),
            })
        })
        .collect();
    let mut rec = Record::new("ramsey", params);
    rec.set("value", cert.value)
        .set("formula", cert.formula())
        .set("formula_matches", cert.matches_formula())
        .set("witness", witness.clone())
        .set("witness_order", cert.witness.order())
        .set("search_log", log);
    rec.summary(format!(
        "value={}, formula={}, witness={witness}",
        cert.value,
        cert.formula()
    ));
    ok(vec![rec])
}

pub fn witness(a: &WitnessArgs) -> Result<Outcome> {
    let g = match &a.graph {
        Some(spec) => load_one(spec)?,
        None => build_witness(a.p, a.q, a.r)?,
    };
    let verified = verify_witness(&g, a.p, a.q, a.r);
    let bs = book_size(&g.complement(), a.r);
    let params =
        json!({ "p": a.p, "q": a.q, "r": a.r, "graph": a.graph, "pigeonhole": a.pigeonhole });
    let mut rec = Record::new("witness", params);
    let g6 = serialize_graph6(&g);
    rec.set("graph6", g6.clone())
        .set("order", g.order())
        .set("verified", verified)
        .set("complement_bs", bs.size);
    if a.pigeonhole {
        let value = match find_kpr(&g, a.p, a.r) {
            None => Value::Null,
            Some(classes) => match pigeonhole_book(&g, a.p, a.r, &classes)? {
                PigeonholeOutcome::Book {
                    class,
                    base,
                    pages,
                    floor,
                } => json!({
                    "embedding": classes.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
                    "kind": "book", "class": class, "base": base.to_vec(),
                    "pages": pages.to_vec(), "floor": floor,
                }),
                PigeonholeOutcome::Clique(c) => json!({
                    "embedding": classes.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
                    "kind": "clique", "clique": c.to_vec(),
                }),
            },
        };
        rec.set("pigeonhole_result", value);
    }
    rec.summary(format!(
        "verified={verified}, order={}, complement_bs={}, graph6={g6}",
        g.order(),
        bs.size
    ));
    Ok(Outcome {
        records: vec![rec],
        failed: !verified,
    })
}

pub fn lower_bound(a: &LowerBoundArgs) -> Result<Outcome> {
    let lb = lb_parameters(a.m, a.k, a.r)?;
    let seed = (a.trials > 0).then(|| resolve_seed(a.seed));
    let params = json!({
        "m": a.m, "k": a.k, "r": a.r, "trials": a.trials,
        "seed": seed.map(|s| s.0), "seed_generated": seed.map(|s| s.1),
        "q_target": a.q_target, "chernoff": a.chernoff,
    });
    let km = bound_km_probability(&lb);
    let book = bound_book_probability(&lb)?;
    let mut rec = Record::new("lower-bound", params);
    rec.set("big_c", lb.big_c)
        .set("c", lb.c.to_string())
        .set("c_times_big_c_pow_r", lb.c_times_c_pow_r().to_string())
        .set("n", lb.n)
        .set("edge_prob_complement", float(lb.edge_prob_complement))
        .set("book_target", lb.book_target())
        .set(
            "clique_bound",
            json!({ "log_value": float(km.log_value), "value": float(km.value),
                    "weaker_log": float(km.weaker_log), "weaker": float(km.weaker) }),
        )
        .set(
            "book_bound",
            json!({ "log_value": float(book.log_value), "value": float(book.value),
                    "last_factor": float(book.last_factor) }),
        );
    let mut summary = format!(
        "N={}, c={}, c*C^r={}, last_factor={:.6}",
        lb.n,
        lb.c,
        lb.c_times_c_pow_r(),
        book.last_factor
    );
    if let Some(ch) = &a.chernoff {
        let &[n, prob, big_m] = ch.as_slice() else {
            return Err(Error::InvalidArgument("--chernoff takes n,prob,M".into()));
        };
        if n < 0.0 || n.fract() != 0.0 {
            return Err(Error::InvalidArgument(
                "chernoff n must be a nonnegative integer".into(),
            ));
        }
        let tail = chernoff_tail(n as u64, prob, big_m)?;
        rec.set("chernoff_tail", float(tail));
        summary.push_str(&format!(", chernoff_tail={tail:.6e}"));
    }
    if let Some((seed, _)) = seed {
        let st = monte_carlo_witness(&lb, a.q_target, a.trials, seed)?;
        rec.set(
            "trials",
            json!({
                "trials": st.trials, "clique_hits": st.clique_hits, "book_hits": st.book_hits,
                "witnesses": st.witnesses, "q_target": st.q_target, "seed": st.seed,
                "best_witness": st.best_witness.as_ref().map(|(t, g)| json!({ "trial": t, "graph6": serialize_graph6(g) })),
            }),
        );
        summary.push_str(&format!(", witnesses={}/{}", st.witnesses, st.trials));
    }
    rec.summary(summary);
    ok(vec![rec])
}
