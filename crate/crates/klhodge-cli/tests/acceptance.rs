//! Acceptance run: one PASS/FAIL line per criterion, every comparison exact.
//!
//! Criteria 2 and 7 each contain a clause that is false as written: the
//! support bound `nk-n-k+1` and the kernel shape `d(k,n+1)·[d ≥ nk]`. They are
//! evaluated literally and print FAIL together with
//! the counterexample and the result of the corrected statement. The process
//! exits 0 only when every FAIL is one of those known clauses failing in
//! exactly the recorded way.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use klhodge::counts::{binomial, d_count, gcd, q_coeffs, small_n, KlFamily, MultiIndex};
use klhodge::hodge::{
    dims_airy, dims_kl, hodge_airy_closed, hodge_airy_from_basis, hodge_kl3_div3, hodge_kl_closed, hodge_kl_from_basis,
    hodge_v21, mixed_hodge_kl3, mixed_hodge_tilde_kl3,
};
use klhodge::sympower::{
    apply_tilde_theta, build_chain, coker_slice_dims, eigen_rhs, f_vector, jordan_blocks, kernel_slice_dims, w_basis,
    w_mid_basis, ChainFamily,
};
use klhodge::weyl::{v21_chain, v21_jordan_blocks, young_projector};
use num_bigint::BigInt;
use serde_json::Value;

const GOLDEN: [u64; 22] = [0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0];

struct Outcome {
    passed: bool,
    detail: String,
    /// Set when the failure is the documented one and the corrected statement holds.
    known_failure: bool,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Self {
            passed: true,
            detail: detail.into(),
            known_failure: false,
        }
    }

    fn from(ok: bool, detail: impl Into<String>) -> Self {
        Self {
            passed: ok,
            detail: detail.into(),
            known_failure: false,
        }
    }
}

fn kl_sweep() -> Vec<(u32, u32)> {
    (1..=4)
        .flat_map(|n| (1..=12).map(move |k| (n, k)))
        .filter(|&(n, k)| gcd(u64::from(k), u64::from(n + 1)) == 1)
        .collect()
}

fn airy_sweep() -> Vec<(u32, u32)> {
    (2..=4)
        .flat_map(|n| (1..=12).map(move |k| (n, k)))
        .filter(|&(n, k)| gcd(u64::from(k), u64::from(n)) == 1)
        .collect()
}

type Criterion = (&'static str, fn() -> Outcome);

fn zero() -> BigInt {
    BigInt::from(0)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let closed = hodge_kl_closed(2, 10).map(|d| d.pure_tuple());
    let basis = hodge_kl_from_basis(2, 10).map(|d| d.pure_tuple());
    let elapsed = start.elapsed();
    let ok = closed.as_deref() == Ok(&GOLDEN[..])
        && basis.as_deref() == Ok(&GOLDEN[..])
        && elapsed < Duration::from_secs(60);
    Outcome::from(ok, format!("both routes give the 22-entry tuple in {:.2?}", elapsed))
}

/// First `(n, k, d)` violating the three counting clauses for a given support bound.
fn counting_violation(bound: impl Fn(i64, i64, i64) -> i64) -> Option<(u32, u32, i64, &'static str)> {
    for (n, k) in kl_sweep() {
        let nk = i64::from(n * k);
        let top = bound(nk, i64::from(n), i64::from(k));
        let q = q_coeffs(n, k).ok()?;
        for d in 0..=nk + 1 {
            let v = small_n(n, k, d);
            if d > top && v != zero() {
                return Some((n, k, d, "vanishing"));
            }
            if d <= top && v != small_n(n, k, top - d) {
                return Some((n, k, d, "mirror"));
            }
            if v - small_n(n, k, nk + 1 - d) != q[d as usize] {
                return Some((n, k, d, "difference"));
            }
        }
    }
    None
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let literal = counting_violation(|nk, n, k| nk - n - k + 1);
    let corrected = counting_violation(|nk, n, _| nk - n);
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(30);
    let corrected_txt = if corrected.is_none() { "PASS" } else { "FAIL" };
    match literal {
        None => Outcome::from(fast, format!("all three clauses hold in {elapsed:.2?}")),
        Some((n, k, d, clause)) => Outcome {
            passed: false,
            detail: format!(
                "literal bound nk-n-k+1: {clause} clause fails first at (n,k,d)=({n},{k},{d}), also n_2 = {} at (2,2); corrected bound nk-n with mirror d <-> nk-n-d: {corrected_txt} ({elapsed:.2?})",
                small_n(2, 2, 2)
            ),
            known_failure: small_n(2, 2, 2) == BigInt::from(1) && corrected.is_none() && fast,
        },
    }
}

fn criterion_3() -> Outcome {
    for (n, k) in kl_sweep() {
        let Ok(chain) = build_chain(ChainFamily::KlZ, n, k, None) else {
            return Outcome::from(false, format!("chain failed at ({n},{k})"));
        };
        let Ok(coker) = coker_slice_dims(&chain) else {
            return Outcome::from(false, format!("stabilization failed at ({n},{k})"));
        };
        if let Some(d) = (0..coker.len()).find(|&d| BigInt::from(coker[d]) != small_n(n, k, d as i64)) {
            return Outcome::from(false, format!("mismatch at (n,k,d)=({n},{k},{d})"));
        }
        let total = (binomial(u64::from(n + k), u64::from(n)) - d_count(n + 1, k) as u128) / u128::from(n + 1);
        if coker.iter().sum::<usize>() as u128 != total || w_basis(&chain).total() as u128 != total {
            return Outcome::from(false, format!("total mismatch at ({n},{k})"));
        }
    }
    Outcome::pass(format!("{} coprime cells, pointwise and totals", kl_sweep().len()))
}

fn criterion_4() -> Outcome {
    for (n, k) in kl_sweep() {
        let (c, b) = (hodge_kl_closed(n, k), hodge_kl_from_basis(n, k));
        if c.is_err() || c != b {
            return Outcome::from(false, format!("kl routes differ at ({n},{k})"));
        }
    }
    for k in [3, 6, 9, 12] {
        let (c, b) = (hodge_kl3_div3(k), hodge_kl_from_basis(2, k));
        if c.is_err() || c != b {
            return Outcome::from(false, format!("3 | k routes differ at k={k}"));
        }
    }
    for (n, k) in airy_sweep() {
        let (c, b) = (hodge_airy_closed(n, k), hodge_airy_from_basis(n, k));
        if c.is_err() || c != b {
            return Outcome::from(false, format!("airy routes differ at ({n},{k})"));
        }
    }
    Outcome::pass(format!(
        "{} kl cells, 4 cells with 3 | k, {} airy cells",
        kl_sweep().len(),
        airy_sweep().len()
    ))
}

fn criterion_5() -> Outcome {
    let mid = dims_kl(2, 3, KlFamily::Kl).map(|r| r.dim_mid);
    let all_zero =
        |d: klhodge::Result<klhodge::hodge::HodgeDiamond>| d.is_ok_and(|d| d.levels.values().all(|&h| h == 0));
    let ok = mid == Ok(0) && all_zero(hodge_kl3_div3(3)) && all_zero(hodge_kl_from_basis(2, 3));
    Outcome::from(ok, "dim_mid = 0 and both diamonds vanish")
}

fn criterion_6() -> Outcome {
    for n in 1..=3u32 {
        for k in 1..=8u32 {
            let Ok(q) = q_coeffs(n, k) else {
                return Outcome::from(false, format!("q failed at ({n},{k})"));
            };
            let mut expect = Vec::new();
            for d in 0..=(n * k / 2) {
                let mult: usize = q[d as usize].to_string().parse().unwrap_or(usize::MAX);
                expect.extend(std::iter::repeat_n((n * k - 2 * d + 1) as usize, mult));
            }
            expect.sort_unstable_by(|a, b| b.cmp(a));
            if jordan_blocks(n, k) != expect {
                return Outcome::from(false, format!("blocks differ at ({n},{k})"));
            }
        }
    }
    let v21 = v21_jordan_blocks();
    Outcome::from(
        v21 == Ok(vec![7, 5, 3]),
        format!("24 cells match q; V_2,1 blocks {v21:?}"),
    )
}

fn criterion_7() -> Outcome {
    let mut eigen_ok = true;
    let mut literal_fail = None;
    let mut corrected_ok = true;
    for n in 1..=3u32 {
        for k in 1..=6u32 {
            eigen_ok &= MultiIndex::all(n as usize + 1, k).iter().all(|i| {
                let f = f_vector(n, i);
                apply_tilde_theta(&f) == eigen_rhs(n, i, &f)
            });
            let Ok(chain) = build_chain(ChainFamily::KlTildeT, n, k, None) else {
                return Outcome::from(false, format!("chain failed at ({n},{k})"));
            };
            let dk = d_count(n + 1, k);
            let nk = (n * k) as usize;
            let dims = kernel_slice_dims(&chain);
            let literal = dims
                .iter()
                .enumerate()
                .position(|(d, &x)| x != if d >= nk { dk } else { 0 });
            if let (Some(d), None) = (literal, literal_fail) {
                literal_fail = Some((n, k, d, dims[d]));
            }
            corrected_ok &= dims[nk..].iter().all(|&x| x == dk) && dims.windows(2).all(|w| w[0] <= w[1]);
        }
    }
    let eigen_txt = if eigen_ok { "PASS" } else { "FAIL" };
    let corrected_txt = if corrected_ok { "PASS" } else { "FAIL" };
    match literal_fail {
        None => Outcome::from(eigen_ok, "eigen-relation and kernel shape hold for n <= 3, k <= 6"),
        Some((n, k, d, x)) => Outcome {
            passed: false,
            detail: format!(
                "eigen-relation: {eigen_txt}; literal kernel shape d(k,n+1)*[d >= nk] fails at (n,k,d)=({n},{k},{d}) with dim {x}; corrected shape (stable value d(k,n+1) from nk, nondecreasing): {corrected_txt}"
            ),
            known_failure: eigen_ok && corrected_ok && (n, k, d, x) == (3, 2, 4, 1),
        },
    }
}

fn criterion_8() -> Outcome {
    for k in 1..=12u32 {
        let dk = d_count(3, k) as u64;
        let Ok(t) = mixed_hodge_tilde_kl3(k) else {
            return Outcome::from(false, format!("tilde table failed at k={k}"));
        };
        if t.total() != binomial(u64::from(k + 2), 2) as u64 - dk {
            return Outcome::from(false, format!("tilde sum wrong at k={k}"));
        }
        if t.off_weight().values().sum::<u64>() != 1 + u64::from(k / 2) + dk {
            return Outcome::from(false, format!("tilde diagonal wrong at k={k}"));
        }
    }
    for k in [3, 6, 9, 12] {
        let (Ok(m), Ok(dims)) = (mixed_hodge_kl3(k), dims_kl(2, k, KlFamily::Kl)) else {
            return Outcome::from(false, format!("kl3 table failed at k={k}"));
        };
        let diag: u64 = m.off_weight().values().sum();
        if m.total() != dims.dim_h1 || diag != 1 + u64::from(k / 2) + d_count(3, k) as u64 {
            return Outcome::from(false, format!("kl3 sums wrong at k={k}"));
        }
    }
    Outcome::pass("tilde sums for k <= 12, kl3 sums for k in {3,6,9,12}, diagonals 1 + floor(k/2) + d(k,3)")
}

fn criterion_9() -> Outcome {
    let dim = young_projector().map(|p| p.dim);
    let Ok(chain) = v21_chain(None) else {
        return Outcome::from(false, "V_2,1 chain failed");
    };
    let w = w_basis(&chain).cardinalities();
    let w_ok = w
        .iter()
        .enumerate()
        .all(|(d, &c)| c == usize::from((1..=5).contains(&d)));
    let mid_degrees: Vec<usize> = w_mid_basis(&chain)
        .map(|m| {
            m.cardinalities()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(d, _)| d)
                .collect()
        })
        .unwrap_or_default();
    let h = hodge_v21();
    let h_ok = h
        .as_ref()
        .is_ok_and(|h| h.support().len() == 2 && h.get_int(4, 5) == 1 && h.get_int(5, 4) == 1);
    let ok = dim == Ok(15) && w_ok && mid_degrees == [4, 5] && h_ok;
    Outcome::from(
        ok,
        format!("dim {dim:?}, W {:?}, mid at {mid_degrees:?}", &w[..w.len().min(7)]),
    )
}

fn criterion_10() -> Outcome {
    let Ok(d) = hodge_airy_closed(3, 2) else {
        return Outcome::from(false, "airy table failed");
    };
    let got: Vec<(String, u64)> = d
        .levels
        .iter()
        .map(|((p, _), &h)| (klhodge::hodge::level_string(p), h))
        .collect();
    let expect = vec![("5/4".to_string(), 1), ("3/2".to_string(), 0), ("7/4".to_string(), 1)];
    let sum_ok = dims_airy(3, 2).is_ok_and(|r| r.dim_h1 == 2) && d.total() == 2;
    Outcome::from(got == expect && sum_ok, format!("{got:?}"))
}

fn criterion_11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_klhodge");
    let run = |args: &[&str]| Command::new(bin).args(args).output();
    let sweep = run(&["verify", "--sweep", "--max-n", "3", "--max-k", "10"]).map(|o| o.status.code());
    let both = run(&["hodge", "--family", "kl", "--n", "2", "--k", "10", "--route", "both"]);
    let both_ok = both.as_ref().is_ok_and(|o| {
        o.status.code() == Some(0)
            && serde_json::from_slice::<Value>(&o.stdout)
                .is_ok_and(|v| v["payload"]["routes_agree"] == Value::Bool(true))
    });
    let bad = run(&["hodge", "--family", "kl", "--n", "two"]).map(|o| o.status.code());
    let ok = matches!(sweep, Ok(Some(0))) && both_ok && matches!(bad, Ok(Some(2)));
    Outcome::from(
        ok,
        format!("sweep exit {sweep:?}, routes agree {both_ok}, malformed exit {bad:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("golden tuple", criterion_1),
        ("counting clauses sweep", criterion_2),
        ("cokernel oracle", criterion_3),
        ("route equality", criterion_4),
        ("degenerate case (2,3)", criterion_5),
        ("Jordan multiplicities", criterion_6),
        ("tilde eigenstructure", criterion_7),
        ("mixed tables", criterion_8),
        ("V_2,1", criterion_9),
        ("Airy diamond (3,2)", criterion_10),
        ("CLI end-to-end", criterion_11),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name}: {}", i + 1, o.detail);
        if !o.passed && !o.known_failure {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
