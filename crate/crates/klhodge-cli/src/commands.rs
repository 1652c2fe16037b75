use std::thread;

use klhodge::counts::{a_count, b_count, d_count, q_coeffs, small_n, small_n_table, KlFamily};
use klhodge::exact::SparseVec;
use klhodge::hodge::{
    dims_airy, dims_kl, hodge_airy_closed, hodge_airy_from_basis, hodge_kl3_div3, hodge_kl_closed, hodge_kl_from_basis,
    hodge_tilde_from_basis, hodge_tilde_kl3_pure, hodge_v21, level_string, mixed_hodge_kl3, mixed_hodge_tilde_kl3,
    verify, ConsistencyReport, DimReport, HodgeDiamond,
};
use klhodge::sympower::{build_chain, coker_slice_dims, w_basis, w_mid_basis, ChainFamily, GradedChain};
use klhodge::weyl::v21_chain;
use serde_json::{json, Map, Value};

use crate::args::{BasisArgs, CountKind, CountsArgs, DimsArgs, Family, HodgeArgs, Route, VerifyArgs};
use crate::render::Table;
use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

/// A computed document plus its flat rendering and success flag.
pub struct Outcome {
    pub doc: Value,
    pub table: Table,
    pub ok: bool,
}

fn document(request: Map<String, Value>, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "payload": payload,
    })
}

fn request(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn need(v: Option<u32>, flag: &str, family: Family) -> Result<u32, CliError> {
    let v = v.ok_or_else(|| invalid(format!("{flag} is required for family {}", family.name())))?;
    if v == 0 {
        return Err(invalid(format!("{flag} must be positive")));
    }
    Ok(v)
}

fn positive(v: u32, flag: &str) -> Result<u32, CliError> {
    if v == 0 {
        Err(invalid(format!("{flag} must be positive")))
    } else {
        Ok(v)
    }
}

/// `(n, k)` for a family; V_{2,1} is fixed to `(2, 4)`.
fn params(family: Family, n: Option<u32>, k: Option<u32>) -> Result<(u32, u32), CliError> {
    if family == Family::V21 {
        if n.is_some_and(|n| n != 2) || k.is_some_and(|k| k != 4) {
            return Err(invalid("v21 is only defined for n = 2, k = 4"));
        }
        return Ok((2, 4));
    }
    Ok((need(n, "--n", family)?, need(k, "--k", family)?))
}

/// Integers go to JSON numbers when they fit, strings otherwise.
fn big(v: &impl ToString) -> Value {
    let s = v.to_string();
    s.parse::<serde_json::Number>()
        .map(Value::Number)
        .unwrap_or(Value::String(s))
}

pub fn diamond_json(d: &HodgeDiamond) -> Value {
    let entries: Vec<Value> = d
        .levels
        .iter()
        .map(|((p, q), h)| json!({"p": level_string(p), "q": level_string(q), "h": h}))
        .collect();
    json!({
        "family": d.family.name(),
        "n": d.n,
        "k": d.k,
        "weight": d.weight,
        "mixed": d.mixed,
        "entries": entries,
        "h_tuple": d.pure_tuple(),
        "total": d.total(),
        "symmetric": d.is_symmetric(),
    })
}

fn closed_route(family: Family, n: u32, k: u32, mixed: bool) -> Result<HodgeDiamond, CliError> {
    let d = match family {
        Family::Kl if mixed => {
            if n != 2 {
                return Err(invalid("the mixed kl table needs n = 2"));
            }
            mixed_hodge_kl3(k)?
        }
        Family::Kl if n == 2 && k.is_multiple_of(3) => hodge_kl3_div3(k)?,
        Family::Kl => hodge_kl_closed(n, k)?,
        Family::KlTilde => {
            if n != 2 {
                return Err(invalid("kl-tilde tables need n = 2"));
            }
            if mixed {
                mixed_hodge_tilde_kl3(k)?
            } else {
                hodge_tilde_kl3_pure(k)?
            }
        }
        Family::Airy => hodge_airy_closed(n, k)?,
        Family::V21 => return Err(invalid("v21 has no closed formula; use --route basis")),
    };
    Ok(d)
}

fn basis_route(family: Family, n: u32, k: u32) -> Result<HodgeDiamond, CliError> {
    let d = match family {
        Family::Kl => hodge_kl_from_basis(n, k)?,
        Family::KlTilde => {
            if n != 2 {
                return Err(invalid("kl-tilde tables need n = 2"));
            }
            hodge_tilde_from_basis(k)?
        }
        Family::Airy => hodge_airy_from_basis(n, k)?,
        Family::V21 => hodge_v21()?,
    };
    Ok(d)
}

pub fn cmd_hodge(a: &HodgeArgs) -> Result<Outcome, CliError> {
    let (n, k) = params(a.family, a.n, a.k)?;
    let route = a.route.unwrap_or(if a.family == Family::V21 {
        Route::Basis
    } else {
        Route::Closed
    });
    if a.mixed && route != Route::Closed {
        return Err(invalid("--mixed is only available with --route closed"));
    }
    let mut req = request("hodge");
    req.insert("family".into(), json!(a.family.name()));
    req.insert("n".into(), json!(n));
    req.insert("k".into(), json!(k));
    req.insert("route".into(), json!(route.name()));
    req.insert("mixed".into(), json!(a.mixed));

    let mut diamonds = Vec::new();
    if matches!(route, Route::Closed | Route::Both) {
        diamonds.push(("closed", closed_route(a.family, n, k, a.mixed)?));
    }
    if matches!(route, Route::Basis | Route::Both) {
        diamonds.push(("basis", basis_route(a.family, n, k)?));
    }

    let mut table = Table::new(vec!["route", "p", "q", "h"]);
    let mut routes = Map::new();
    for (name, d) in &diamonds {
        for ((p, q), h) in &d.levels {
            table.push(vec![name.to_string(), level_string(p), level_string(q), h.to_string()]);
        }
        let tuple: Vec<String> = d.pure_tuple().iter().map(u64::to_string).collect();
        table
            .notes
            .push(format!("{name}: weight {}, h = ({})", d.weight, tuple.join(",")));
        routes.insert(name.to_string(), diamond_json(d));
    }
    let mut payload = Map::new();
    payload.insert("routes".into(), Value::Object(routes));
    let mut ok = true;
    if let [(_, c), (_, b)] = diamonds.as_slice() {
        ok = c == b;
        payload.insert("routes_agree".into(), json!(ok));
        table.notes.push(format!("routes agree: {ok}"));
    }
    Ok(Outcome {
        doc: document(req, Value::Object(payload)),
        table,
        ok,
    })
}

fn dims_payload(r: &DimReport) -> Value {
    json!({
        "dim_h1": r.dim_h1,
        "dim_mid": r.dim_mid,
        "soln_0": r.soln_0,
        "soln_inf": r.soln_inf,
        "irregularity": r.irregularity.as_ref().map(level_string),
    })
}

pub fn cmd_dims(a: &DimsArgs) -> Result<Outcome, CliError> {
    let n = positive(a.n, "--n")?;
    let k = positive(a.k, "--k")?;
    let report = match a.family {
        Family::Kl => dims_kl(n, k, KlFamily::Kl)?,
        Family::KlTilde => dims_kl(n, k, KlFamily::KlTilde)?,
        Family::Airy => dims_airy(n, k)?,
        Family::V21 => return Err(invalid("dims is defined for kl, kl-tilde and airy")),
    };
    let mut req = request("dims");
    req.insert("family".into(), json!(a.family.name()));
    req.insert("n".into(), json!(n));
    req.insert("k".into(), json!(k));
    let payload = dims_payload(&report);
    let mut table = Table::new(vec!["quantity", "value"]);
    for (key, v) in payload.as_object().expect("object literal") {
        table.push(vec![key.clone(), crate::render::plain(v)]);
    }
    Ok(Outcome {
        doc: document(req, payload),
        table,
        ok: true,
    })
}

pub fn cmd_counts(a: &CountsArgs) -> Result<Outcome, CliError> {
    let n = positive(a.n, "--n")?;
    let k = positive(a.k, "--k")?;
    let nk = i64::from(n * k);
    let mut req = request("counts");
    req.insert("what".into(), json!(what_name(a.what)));
    req.insert("n".into(), json!(n));
    req.insert("k".into(), json!(k));
    if let Some(d) = a.d {
        req.insert("d".into(), json!(d));
    }
    let mut table = Table::new(vec!["d", "value"]);
    let payload = match (a.what, a.d) {
        (CountKind::Q, d) => {
            let q = q_coeffs(n, k)?;
            let at = |d: i64| {
                usize::try_from(d)
                    .ok()
                    .and_then(|i| q.get(i))
                    .map_or(Value::from(0), big)
            };
            table_values(&mut table, d, 0..=nk + 1, at)
        }
        (CountKind::N, Some(d)) => table_values(&mut table, Some(d), 0..=0, |d| big(&small_n(n, k, d))),
        (CountKind::N, None) => {
            let t = small_n_table(n, k, (nk + 1) as usize);
            table_values(&mut table, None, 0..=nk + 1, |d| big(&t[d as usize]))
        }
        (_, Some(_)) => return Err(invalid("--d applies to --what q and --what n only")),
        (what, None) => {
            let m = n + 1;
            let v = match what {
                CountKind::D => d_count(m, k),
                CountKind::A => a_count(m, k).0,
                _ => b_count(m, k),
            };
            table.headers = vec!["m", "k", "value"];
            table.push(vec![m.to_string(), k.to_string(), v.to_string()]);
            json!({"m": m, "value": v})
        }
    };
    Ok(Outcome {
        doc: document(req, payload),
        table,
        ok: true,
    })
}

fn what_name(w: CountKind) -> &'static str {
    match w {
        CountKind::Q => "q",
        CountKind::N => "n",
        CountKind::D => "d",
        CountKind::A => "a",
        CountKind::B => "b",
    }
}

fn table_values(
    table: &mut Table,
    single: Option<i64>,
    range: std::ops::RangeInclusive<i64>,
    at: impl Fn(i64) -> Value,
) -> Value {
    if let Some(d) = single {
        let v = at(d);
        table.push(vec![d.to_string(), crate::render::plain(&v)]);
        return json!({"d": d, "value": v});
    }
    let values: Vec<Value> = range.map(&at).collect();
    for (d, v) in values.iter().enumerate() {
        table.push(vec![d.to_string(), crate::render::plain(v)]);
    }
    json!({"values": values})
}

fn chain_for(family: Family, n: u32, k: u32, max: Option<usize>) -> Result<GradedChain, CliError> {
    let fam = match family {
        Family::Kl => ChainFamily::KlZ,
        Family::KlTilde => ChainFamily::KlTildeT,
        Family::Airy => ChainFamily::AiryZ,
        Family::V21 => return Ok(v21_chain(max)?),
    };
    Ok(build_chain(fam, n, k, max)?)
}

fn vector_json(chain: &GradedChain, d: usize, v: &SparseVec) -> Value {
    let terms: Vec<Value> = v
        .entries()
        .iter()
        .map(|(i, c)| json!({"coefficient": big(c), "monomial": chain.render_elem(chain.slice(d)[*i])}))
        .collect();
    json!({"degree": d, "terms": terms})
}

fn vector_text(chain: &GradedChain, d: usize, v: &SparseVec) -> String {
    v.entries()
        .iter()
        .map(|(i, c)| format!("{c}*{}", chain.render_elem(chain.slice(d)[*i])))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn cmd_basis(a: &BasisArgs) -> Result<Outcome, CliError> {
    let (n, k) = params(a.family, a.n, a.k)?;
    let chain = chain_for(a.family, n, k, a.max_degree)?;
    coker_slice_dims(&chain)?;
    let set = if a.mid { w_mid_basis(&chain)? } else { w_basis(&chain) };
    let mut req = request("basis");
    req.insert("family".into(), json!(a.family.name()));
    req.insert("n".into(), json!(n));
    req.insert("k".into(), json!(k));
    req.insert("mid".into(), json!(a.mid));
    req.insert("max_degree".into(), json!(chain.max_degree()));

    let cards = set.cardinalities();
    let mut table = Table::new(if a.vectors {
        vec!["degree", "cardinality", "vectors"]
    } else {
        vec!["degree", "cardinality"]
    });
    for (d, c) in cards.iter().enumerate() {
        let mut row = vec![d.to_string(), c.to_string()];
        if a.vectors {
            let vs: Vec<String> = set.per_degree[d].iter().map(|v| vector_text(&chain, d, v)).collect();
            row.push(vs.join("; "));
        }
        table.push(row);
    }
    table.notes.push(format!("total: {}", set.total()));
    let mut payload = Map::new();
    payload.insert("kind".into(), json!(if a.mid { "mid" } else { "full" }));
    payload.insert("cardinalities".into(), json!(cards));
    payload.insert("total".into(), json!(set.total()));
    if a.vectors {
        let vs: Vec<Value> = set
            .per_degree
            .iter()
            .enumerate()
            .flat_map(|(d, vs)| vs.iter().map(move |v| (d, v)))
            .map(|(d, v)| vector_json(&chain, d, v))
            .collect();
        payload.insert("vectors".into(), Value::Array(vs));
    }
    Ok(Outcome {
        doc: document(req, Value::Object(payload)),
        table,
        ok: true,
    })
}

fn report_json(r: &ConsistencyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "left": c.left, "right": c.right}))
        .collect();
    json!({
        "n": r.n,
        "k": r.k,
        "all_passed": r.all_passed(),
        "checks": checks,
        "notes": r.notes,
    })
}

/// Runs [`verify`] on every cell, spreading cells across threads; the
/// result keeps the order of `cells`.
fn verify_cells(cells: &[(u32, u32)]) -> Vec<ConsistencyReport> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(cells.len().max(1));
    let mut slots: Vec<Option<ConsistencyReport>> = vec![None; cells.len()];
    thread::scope(|s| {
        let chunks = slots.chunks_mut(1).zip(cells).collect::<Vec<_>>();
        let mut lanes: Vec<Vec<_>> = (0..workers).map(|_| Vec::new()).collect();
        for (i, job) in chunks.into_iter().enumerate() {
            lanes[i % workers].push(job);
        }
        for lane in lanes {
            s.spawn(move || {
                for (slot, &(n, k)) in lane {
                    slot[0] = Some(verify(n, k));
                }
            });
        }
    });
    slots.into_iter().map(|r| r.expect("every cell is filled")).collect()
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut req = request("verify");
    let cells: Vec<(u32, u32)> = if a.sweep {
        positive(a.max_n, "--max-n")?;
        positive(a.max_k, "--max-k")?;
        req.insert("sweep".into(), json!(true));
        req.insert("max_n".into(), json!(a.max_n));
        req.insert("max_k".into(), json!(a.max_k));
        (1..=a.max_n).flat_map(|n| (1..=a.max_k).map(move |k| (n, k))).collect()
    } else {
        let n = positive(a.n.unwrap_or(0), "--n")?;
        let k = positive(a.k.unwrap_or(0), "--k")?;
        req.insert("n".into(), json!(n));
        req.insert("k".into(), json!(k));
        vec![(n, k)]
    };
    let reports = verify_cells(&cells);
    let mut table = Table::new(vec!["n", "k", "check", "passed", "left", "right"]);
    let mut failed = 0usize;
    let mut run = 0usize;
    for r in &reports {
        for c in &r.checks {
            run += 1;
            failed += usize::from(!c.passed);
            table.push(vec![
                r.n.to_string(),
                r.k.to_string(),
                c.name.clone(),
                c.passed.to_string(),
                c.left.clone(),
                c.right.clone(),
            ]);
        }
        for note in &r.notes {
            table.notes.push(format!("(n={}, k={}) {note}", r.n, r.k));
        }
    }
    table.notes.push(format!("{run} checks, {failed} failed"));
    let ok = failed == 0;
    let payload = json!({
        "cells": reports.iter().map(report_json).collect::<Vec<_>>(),
        "all_passed": ok,
        "checks_run": run,
        "checks_failed": failed,
    });
    Ok(Outcome {
        doc: document(req, payload),
        table,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hodge(family: Family, n: u32, k: u32, route: Route) -> Result<Outcome, CliError> {
        cmd_hodge(&HodgeArgs {
            family,
            n: Some(n),
            k: Some(k),
            route: Some(route),
            mixed: false,
        })
    }

    #[test]
    fn both_routes_flag_agreement() {
        let o = hodge(Family::Kl, 2, 10, Route::Both).unwrap();
        assert!(o.ok);
        assert_eq!(o.doc["payload"]["routes_agree"], json!(true));
        assert_eq!(o.doc["schema_version"], json!("1"));
    }

    #[test]
    fn v21_rejects_other_params() {
        assert!(matches!(
            hodge(Family::V21, 3, 4, Route::Basis),
            Err(CliError::Invalid(_))
        ));
        assert!(matches!(
            hodge(Family::V21, 2, 4, Route::Closed),
            Err(CliError::Invalid(_))
        ));
    }

    #[test]
    fn coprimality_is_an_input_error() {
        let e = hodge(Family::Kl, 3, 4, Route::Closed).err().unwrap();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn verify_keeps_cell_order() {
        let cells = [(2, 3), (1, 1), (2, 1)];
        let got: Vec<_> = verify_cells(&cells).iter().map(|r| (r.n, r.k)).collect();
        assert_eq!(got, cells);
    }
}
