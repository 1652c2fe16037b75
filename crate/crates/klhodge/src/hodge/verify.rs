use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::closed::{
    hodge_airy_closed, hodge_kl3_div3, hodge_kl_closed, hodge_tilde_kl3_pure, mixed_hodge_kl3, mixed_hodge_tilde_kl3,
};
use super::dims::{dims_airy, dims_kl};
use super::from_basis::{
    hodge_airy_from_basis, hodge_kl_from_basis, hodge_tilde_from_basis, kl_mid_counts, tilde_mid_counts,
};
use crate::counts::{
    binomial, d_count, gcd, h_series, q_bar, q_coeffs, small_n, small_n_table, soln_zero, KlFamily, MultiIndex,
};
use crate::sympower::{
    apply_tilde_theta, build_chain, coker_nk_dims, coker_slice_dims, eigen_relation_via_chain, eigen_rhs, f_vector,
    jordan_blocks, kernel_slice_dims, w_basis, ChainFamily,
};
use crate::Result;

/// One named comparison between two independently computed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub left: String,
    pub right: String,
}

/// All checks run for one `(n, k)`, sorted by name, plus free-form notes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub n: u32,
    pub k: u32,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl ConsistencyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Builder {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Builder {
    fn eq<T: PartialEq + Debug>(&mut self, name: &str, left: T, right: T) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: left == right,
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        });
    }

    fn truth(&mut self, name: &str, ok: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: ok,
            left: detail,
            right: "true".to_string(),
        });
    }

    /// Records an error from a computation as a failed check.
    fn run<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.truth(name, false, format!("error: {e}"));
                None
            }
        }
    }
}

fn first_violation(range: impl Iterator<Item = i64>, bad: impl Fn(i64) -> bool) -> Option<i64> {
    range.into_iter().find(|&d| bad(d))
}

fn detail(v: Option<i64>) -> String {
    match v {
        None => "no violation".to_string(),
        Some(d) => format!("violated at d={d}"),
    }
}

/// Largest symmetric-power dimension for which the expensive chain checks run.
const CHAIN_CHECK_LIMIT: u128 = 600;
/// Eigen-relations are checked for `n ≤ 3` and `k ≤ 6`.
const EIGEN_LIMIT: (u32, u32) = (3, 6);

/// Runs every cross-route check applicable to `(n, k)`.
///
/// Failures are reported as data. Checks that need coprimality, `n = 2`, or
/// an Airy rank `n ≥ 2` with `gcd(k, n) = 1` only run in those cases.
pub fn verify(n: u32, k: u32) -> ConsistencyReport {
    let mut b = Builder::default();
    if n == 0 || k == 0 {
        b.truth("input/positive", false, format!("n={n}, k={k}"));
        return finish(b, n, k);
    }
    let nk = i64::from(n * k);
    let dk = d_count(n + 1, k);
    let coprime = gcd(u64::from(k), u64::from(n + 1)) == 1 && dk == 0;
    if gcd(u64::from(k), u64::from(n + 1)) == 1 && dk != 0 {
        b.notes.push(format!(
            "gcd(k, n+1) = 1 but d(k, n+1) = {dk}: n+1 is not a prime power, so the coprime-case tables are skipped"
        ));
    }
    let sym_dim = binomial(u64::from(n + k), u64::from(n));

    if let Some(q) = b.run("q/antisymmetry", q_coeffs(n, k)) {
        let v = first_violation(0..=nk + 1, |d| q[d as usize] != -q[(nk + 1 - d) as usize].clone());
        b.truth("q/antisymmetry", v.is_none(), detail(v));
        expected_blocks(&mut b, n, k, &q);
    }
    if let Some(s0) = b.run("coker_n/total", soln_zero(n, k)) {
        b.eq("coker_n/total", coker_nk_dims(n, k).iter().sum::<usize>() as u64, s0);
    }
    for fam in [KlFamily::Kl, KlFamily::KlTilde] {
        let name = match fam {
            KlFamily::Kl => "dims/irregularity_kl",
            KlFamily::KlTilde => "dims/irregularity_tilde",
        };
        if coprime || fam == KlFamily::KlTilde {
            if let Some(r) = b.run(name, dims_kl(n, k, fam)) {
                let irr = r.irregularity.clone().and_then(|x| x.to_integer().to_u64());
                b.eq(name, irr, Some(r.dim_h1));
            }
        }
    }
    if n <= EIGEN_LIMIT.0 && k <= EIGEN_LIMIT.1 {
        eigen_checks(&mut b, n, k);
    }
    if sym_dim <= CHAIN_CHECK_LIMIT {
        tilde_kernel_check(&mut b, n, k);
    }
    if coprime {
        coprime_checks(&mut b, n, k);
    }
    if n == 2 {
        mixed_tilde_checks(&mut b, k);
        if k.is_multiple_of(3) {
            kl3_checks(&mut b, k);
        }
    }
    if n >= 2 && gcd(u64::from(k), u64::from(n)) == 1 {
        airy_checks(&mut b, n, k);
    }
    finish(b, n, k)
}

fn finish(b: Builder, n: u32, k: u32) -> ConsistencyReport {
    let mut checks = b.checks;
    checks.sort_by(|a, c| a.name.cmp(&c.name));
    ConsistencyReport {
        n,
        k,
        checks,
        notes: b.notes,
    }
}

fn expected_blocks(b: &mut Builder, n: u32, k: u32, q: &[BigInt]) {
    let mut expect = Vec::new();
    for d in 0..=(n * k / 2) {
        let mult = q[d as usize].to_usize().unwrap_or(usize::MAX);
        expect.extend(core::iter::repeat_n((n * k - 2 * d + 1) as usize, mult));
    }
    expect.sort_unstable_by(|a, c| c.cmp(a));
    b.eq("jordan/multiplicities", jordan_blocks(n, k), expect);
}

fn eigen_checks(b: &mut Builder, n: u32, k: u32) {
    let all = MultiIndex::all(n as usize + 1, k);
    let direct = all.iter().all(|i| {
        let f = f_vector(n, i);
        apply_tilde_theta(&f) == eigen_rhs(n, i, &f)
    });
    b.truth("eigen/derivation", direct, format!("{} multi-indices", all.len()));
    if let Some(chain) = b.run("eigen/slice_matrix", build_chain(ChainFamily::KlTildeT, n, k, None)) {
        let via = all.iter().all(|i| eigen_relation_via_chain(&chain, i));
        b.truth("eigen/slice_matrix", via, format!("{} multi-indices", all.len()));
    }
}

fn tilde_kernel_check(b: &mut Builder, n: u32, k: u32) {
    let Some(chain) = b.run("kernel/tilde_stable", build_chain(ChainFamily::KlTildeT, n, k, None)) else {
        return;
    };
    let dk = d_count(n + 1, k);
    let nk = (n * k) as usize;
    let dims = kernel_slice_dims(&chain);
    b.eq(
        "kernel/tilde_stable",
        dims[nk..].to_vec(),
        alloc::vec![dk; dims.len() - nk],
    );
    let v = first_violation(1..dims.len() as i64, |d| dims[d as usize] < dims[d as usize - 1]);
    b.truth("kernel/tilde_monotone", v.is_none(), detail(v));
    if let Some(first) = dims.iter().position(|&x| x > 0).filter(|&d| d < nk) {
        b.notes.push(format!(
            "the tilde kernel is already nonzero at degree {first} < nk = {nk}: the f^I generate it over C(t) but not over C[t]"
        ));
    }
}

fn coprime_checks(b: &mut Builder, n: u32, k: u32) {
    let nk = i64::from(n * k);
    let Some(q) = b.run("counting/difference", q_coeffs(n, k)) else {
        return;
    };
    let sn = |d: i64| small_n(n, k, d);
    let top = nk - i64::from(n);
    let v = first_violation(top + 1..=nk + 4, |d| sn(d) != BigInt::from(0));
    b.truth("counting/support", v.is_none(), detail(v));
    let v = first_violation(0..=top, |d| sn(d) != sn(top - d));
    b.truth("counting/mirror", v.is_none(), detail(v));
    let v = first_violation(0..=nk + 1, |d| sn(d) - sn(nk + 1 - d) != q[d as usize]);
    b.truth("counting/difference", v.is_none(), detail(v));
    let v = first_violation(0..=(nk + 1) / 2, |p| {
        sn(p) - q_bar(&q, n, k, p) != sn(p - i64::from(n) - 1)
    });
    b.truth("counting/hidden_identity", v.is_none(), detail(v));
    let stated = nk - i64::from(n) - i64::from(k) + 1;
    if let Some(d) = first_violation(stated + 1..=top, |d| sn(d) != BigInt::from(0)) {
        b.notes.push(format!(
            "n_d vanishes only beyond nk-n = {top}; the bound nk-n-k+1 = {stated} fails at d = {d}"
        ));
    }
    if n == 2 {
        let v = first_violation(0..=i64::from(k), |d| {
            let expect = d / 6 + i64::from(d % 6 != 1);
            sn(d) != BigInt::from(expect)
        });
        b.truth("counting/n2_closed_form", v.is_none(), detail(v));
    }
    if let Some(h) = b.run("h_series/two_route", h_series(n, (nk + 2) as usize, k as usize + 1)) {
        let table = small_n_table(n, k, (nk + 1) as usize);
        let series: Vec<BigInt> = (0..=(nk + 1) as usize).map(|d| h.get(d, k as usize).clone()).collect();
        b.eq("h_series/two_route", series, table);
    }

    let Some(dims) = b.run("coker/total", dims_kl(n, k, KlFamily::Kl)) else {
        return;
    };
    if let Some(chain) = b.run("coker/oracle", build_chain(ChainFamily::KlZ, n, k, None)) {
        if let Some(coker) = b.run("coker/oracle", coker_slice_dims(&chain)) {
            let lattice: Vec<BigInt> = (0..coker.len()).map(|d| sn(d as i64)).collect();
            let ours: Vec<BigInt> = coker.iter().map(|&c| BigInt::from(c)).collect();
            b.eq("coker/oracle", ours, lattice);
            b.eq("coker/total", coker.iter().sum::<usize>() as u64, dims.dim_h1);
            b.eq("coker/basis_size", w_basis(&chain).total() as u64, dims.dim_h1);
        }
        b.eq("kernel/kl_z", kernel_slice_dims(&chain).iter().all(|&x| x == 0), true);
    }
    if let Some(mid) = b.run("mid/count", kl_mid_counts(n, k, None)) {
        let expect: Vec<BigInt> = (0..mid.len() as i64).map(|d| sn(d) - q_bar(&q, n, k, d)).collect();
        let ours: Vec<BigInt> = mid.iter().map(|&c| BigInt::from(c)).collect();
        b.eq("mid/count", ours, expect);
        let w = (nk + 1) as usize;
        let v = first_violation(0..=nk + 1, |d| {
            mid.get(d as usize).copied().unwrap_or(0) != mid.get(w - d as usize).copied().unwrap_or(0)
        });
        b.truth("mid/mirror", v.is_none(), detail(v));
    }
    let closed = b.run("hodge/closed_vs_basis", hodge_kl_closed(n, k));
    let basis = b.run("hodge/closed_vs_basis", hodge_kl_from_basis(n, k));
    if let (Some(c), Some(bs)) = (closed, basis) {
        b.eq("hodge/closed_sum", c.total(), dims.dim_mid);
        b.eq("hodge/symmetry", c.is_symmetric() && bs.is_symmetric(), true);
        b.eq("hodge/closed_vs_basis", c, bs);
    }
}

fn mixed_tilde_checks(b: &mut Builder, k: u32) {
    let dk = d_count(3, k) as u64;
    if let Some(t) = b.run("mixed/tilde_sum", mixed_hodge_tilde_kl3(k)) {
        b.eq("mixed/tilde_sum", t.total(), binomial(u64::from(k + 2), 2) as u64 - dk);
        let diag: u64 = t.off_weight().values().sum();
        b.eq("mixed/tilde_diagonal", diag, 1 + u64::from(k / 2) + dk);
        if let Some(dims) = b.run("mixed/tilde_pure_sum", dims_kl(2, k, KlFamily::KlTilde)) {
            b.eq("mixed/tilde_pure_sum", t.pure_tuple().iter().sum::<u64>(), dims.dim_mid);
        }
        b.eq("mixed/tilde_symmetry", t.is_symmetric(), true);
    }
    let closed = b.run("hodge/tilde_closed_vs_basis", hodge_tilde_kl3_pure(k));
    let basis = b.run("hodge/tilde_closed_vs_basis", hodge_tilde_from_basis(k));
    if let (Some(c), Some(bs)) = (closed, basis) {
        b.eq("hodge/tilde_closed_vs_basis", c, bs);
    }
}

fn kl3_checks(b: &mut Builder, k: u32) {
    let kk = k as usize;
    let delta = |d: usize| usize::from(d == kk);
    if let Some(chain) = b.run("coker/kl3_low", build_chain(ChainFamily::KlZ, 2, k, None)) {
        if let Some(coker) = b.run("coker/kl3_low", coker_slice_dims(&chain)) {
            let expect: Vec<usize> = (0..=kk).map(|d| d / 6 + usize::from(d % 6 != 1)).collect();
            b.eq("coker/kl3_low", coker[..=kk].to_vec(), expect);
            if let Some(dims) = b.run("coker/kl3_total", dims_kl(2, k, KlFamily::Kl)) {
                b.eq("coker/kl3_total", coker.iter().sum::<usize>() as u64, dims.dim_h1);
            }
        }
    }
    if let Some(chain) = b.run("coker/tilde3_low", build_chain(ChainFamily::KlTildeT, 2, k, None)) {
        if let Some(coker) = b.run("coker/tilde3_low", coker_slice_dims(&chain)) {
            let expect: Vec<usize> = (0..=kk).map(|d| d / 2 + 1).collect();
            b.eq("coker/tilde3_low", coker[..=kk].to_vec(), expect);
            if let Some(dims) = b.run("coker/tilde3_total", dims_kl(2, k, KlFamily::KlTilde)) {
                b.eq("coker/tilde3_total", coker.iter().sum::<usize>() as u64, dims.dim_h1);
            }
        }
    }
    if let Some(mid) = b.run("mid/kl3_low", kl_mid_counts(2, k, None)) {
        let expect: Vec<usize> = (0..=kk)
            .map(|d| d / 6 + usize::from(matches!(d % 6, 3 | 5)) - delta(d))
            .collect();
        b.eq("mid/kl3_low", mid[..=kk].to_vec(), expect.clone());
        if let Some(dims) = b.run("mid/kl3_total", dims_kl(2, k, KlFamily::Kl)) {
            b.eq("mid/kl3_total", mid.iter().sum::<usize>() as u64, dims.dim_mid);
        }
        let w = 2 * kk + 1;
        let upper: Vec<usize> = (kk + 1..=w).map(|d| mid.get(d).copied().unwrap_or(0)).collect();
        let mirrored: Vec<usize> = (kk + 1..=w).map(|d| mid[w - d]).collect();
        if upper != mirrored {
            b.notes.push(format!(
                "middle-basis counts above degree k are {upper:?} for degrees {}..={w}; the Hodge table uses degrees 0..=k and symmetry",
                kk + 1
            ));
        }
    }
    if let Some(mid) = b.run("mid/tilde3_low", tilde_mid_counts(k, None)) {
        let expect: Vec<usize> = (0..=kk).map(|d| d.div_ceil(2) - delta(d)).collect();
        b.eq("mid/tilde3_low", mid[..=kk].to_vec(), expect);
        if let Some(dims) = b.run("mid/tilde3_total", dims_kl(2, k, KlFamily::KlTilde)) {
            b.eq("mid/tilde3_total", mid.iter().sum::<usize>() as u64, dims.dim_mid);
        }
    }
    let closed = b.run("hodge/kl3_closed_vs_basis", hodge_kl3_div3(k));
    let basis = b.run("hodge/kl3_closed_vs_basis", hodge_kl_from_basis(2, k));
    if let (Some(c), Some(bs)) = (closed, basis) {
        if let Some(dims) = b.run("hodge/kl3_sum", dims_kl(2, k, KlFamily::Kl)) {
            b.eq("hodge/kl3_sum", c.total(), dims.dim_mid);
        }
        b.eq("hodge/kl3_closed_vs_basis", c, bs);
    }
    if let Some(m) = b.run("mixed/kl3_sum", mixed_hodge_kl3(k)) {
        if let Some(dims) = b.run("mixed/kl3_sum", dims_kl(2, k, KlFamily::Kl)) {
            b.eq("mixed/kl3_sum", m.total(), dims.dim_h1);
        }
        b.eq(
            "mixed/kl3_diagonal",
            m.off_weight().values().sum::<u64>(),
            2 + u64::from(k / 2),
        );
    }
    b.notes.push(
        "3 | k: the Kronecker term δ_{p,k} is applied in both congruence classes; applying it only to p ≢ 3, 5 (mod 6) breaks the sum rule at k ≡ 3 (mod 6)"
            .to_string(),
    );
}

fn airy_checks(b: &mut Builder, n: u32, k: u32) {
    let closed = b.run("airy/closed_vs_basis", hodge_airy_closed(n, k));
    let basis = b.run("airy/closed_vs_basis", hodge_airy_from_basis(n, k));
    if let Some(dims) = b.run("airy/sum", dims_airy(n, k)) {
        if let Some(c) = &closed {
            b.eq("airy/sum", c.total(), dims.dim_h1);
        }
    }
    if let (Some(c), Some(bs)) = (closed, basis) {
        b.eq("airy/symmetry", c.is_symmetric(), true);
        b.eq("airy/closed_vs_basis", c, bs);
    }
    if let Some(chain) = b.run("airy/mirror", build_chain(ChainFamily::AiryZ, n, k, None)) {
        let counts = w_basis(&chain).cardinalities();
        let top = (n * k + 1 - n - k) as usize;
        let v = first_violation(0..=top as i64, |d| counts[d as usize] != counts[top - d as usize]);
        b.truth("airy/mirror", v.is_none(), detail(v));
    }
}
