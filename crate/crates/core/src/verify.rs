//! Executable checks over finite ranges, with structured reports.
//!
//! Each check enumerates everything in its range exhaustively and either
//! passes or returns the first counterexample it meets (in
//! reverse-lexicographic order, so reruns report the same one).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bijections::{check_psi_params, phi, phi_with, psi_inverse, psi_k1, psi_with};
use crate::durfee::{decompose, rank_2m, Comparison, RankHistogram};
use crate::fault::Fault;
use crate::partition::{count_p_signed, count_q, Partition, Partitions};
use crate::qseries::{
    euler_inverse_product, jtp_lhs, jtp_rhs, jtp_specialized_check, maltese_series_with,
    pentagonal_pair_series, rr_product_side, rr_sum_side, schur_rhs, TruncatedSeries,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check on one parameter tuple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    /// Number of objects (partitions, coefficients) the check looked at.
    pub examined: u64,
    /// Present exactly when the check failed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    fn new(check: &str, params: &[(&str, i64)]) -> Self {
        VerificationReport {
            check: check.to_owned(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: Status::Pass,
            examined: 0,
            counterexample: None,
            elapsed_ms: None,
        }
    }

    fn fail(&mut self, counterexample: Value) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.counterexample = Some(counterexample);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON object on a single line. Timing is left out unless asked for,
    /// so that identical runs print identical lines.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        let mut r = self.clone();
        if !with_timing {
            r.elapsed_ms = None;
        }
        serde_json::to_string(&r).expect("reports always serialize")
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        self
    }
}

/// Lazily tabulated rank histograms shared between checks.
#[derive(Default)]
pub struct RankTable {
    cache: Mutex<HashMap<(usize, usize), Arc<RankHistogram>>>,
}

impl RankTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize, m: usize) -> Result<Arc<RankHistogram>> {
        if let Some(h) = self.cache.lock().unwrap().get(&(n, m)) {
            return Ok(h.clone());
        }
        let h = Arc::new(RankHistogram::tabulate(n, m)?);
        self.cache.lock().unwrap().insert((n, m), h.clone());
        Ok(h)
    }

    /// `h(n, m, cmp r)` with `h = 0` for negative `n`.
    pub fn h(&self, n: i64, m: usize, cmp: Comparison, r: i64) -> Result<BigUint> {
        match usize::try_from(n) {
            Ok(n) => Ok(self.get(n, m)?.count(cmp, r)),
            Err(_) => Ok(BigUint::default()),
        }
    }
}

/// Partitions of `n` satisfying `keep`, in reverse-lexicographic order.
fn collect_partitions<F>(n: usize, keep: F) -> Vec<Partition>
where
    F: Fn(&Partition) -> bool + Sync,
{
    if n == 0 {
        return std::iter::once(Partition::empty())
            .filter(|p| keep(p))
            .collect();
    }
    (1..=n)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| {
            Partitions::with_largest_part(n, a)
                .filter(|p| keep(p))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .concat()
}

fn err_json(e: &Error) -> Value {
    Value::String(e.to_string())
}

/// First symmetry: `h(n,0,r) = h(n,0,-r)` by counting, and `phi` is a
/// size- and square-preserving, rank-negating involution on every
/// non-Rogers-Ramanujan partition of `n`.
pub fn verify_first_symmetry(n: usize) -> VerificationReport {
    verify_first_symmetry_with(n, None)
}

#[doc(hidden)]
pub fn verify_first_symmetry_with(n: usize, fault: Option<Fault>) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("first_symmetry", &[("n", n as i64)]);

    // (a) counting, independent of phi
    match RankHistogram::tabulate(n, 0) {
        Ok(hist) => {
            for (&r, &c) in &hist.counts {
                let mirror = hist.counts.get(&-r).copied().unwrap_or(0);
                if c != mirror {
                    report.fail(json!({
                        "reason": "rank histogram is not symmetric",
                        "r": r, "h_r": c, "h_minus_r": mirror,
                    }));
                    break;
                }
            }
        }
        Err(e) => report.fail(json!({ "reason": err_json(&e) })),
    }

    // (b) the involution itself
    let domain = collect_partitions(n, |p| !p.is_rogers_ramanujan());
    report.examined = domain.len() as u64;
    let failures: Vec<Option<Value>> = domain
        .par_iter()
        .map(|lambda| check_phi_at(lambda, fault).err())
        .collect();
    if let Some(cx) = failures.into_iter().flatten().next() {
        report.fail(cx);
    }
    report.timed(start)
}

fn check_phi_at(lambda: &Partition, fault: Option<Fault>) -> Result<(), Value> {
    let cx = |reason: &str, image: Option<&Partition>| json!({ "reason": reason, "lambda": lambda, "image": image });
    let d = decompose(lambda, 0).ok_or_else(|| cx("no second Durfee square", None))?;
    let hat = phi_with(lambda, fault)
        .map_err(|e| json!({ "reason": "phi failed", "lambda": lambda, "error": err_json(&e) }))?;
    if hat.size() != lambda.size() {
        return Err(cx("size changed", Some(&hat)));
    }
    let dh = decompose(&hat, 0).ok_or_else(|| cx("image is Rogers-Ramanujan", Some(&hat)))?;
    if (dh.s, dh.t) != (d.s, d.t) {
        return Err(cx("Durfee squares changed", Some(&hat)));
    }
    if dh.rank() != -d.rank() {
        return Err(cx("rank not negated", Some(&hat)));
    }
    match phi_with(&hat, fault) {
        Ok(back) if &back == lambda => Ok(()),
        Ok(_) => Err(cx("phi(phi(lambda)) != lambda", Some(&hat))),
        Err(e) => Err(json!({
            "reason": "phi failed on the image", "lambda": lambda, "image": hat,
            "error": err_json(&e),
        })),
    }
}

/// Second symmetry: `psi_{m,r}` maps `H_{n,m,≤-r}` one-to-one onto the
/// independently enumerated `H_{n-r-2m-2,m+2,≥-r}`, and both compositions
/// with `psi⁻¹` are identities.
pub fn verify_second_symmetry(n: usize, m: usize, r: i64) -> Result<VerificationReport> {
    verify_second_symmetry_with(n, m, r, None)
}

#[doc(hidden)]
pub fn verify_second_symmetry_with(
    n: usize,
    m: usize,
    r: i64,
    fault: Option<Fault>,
) -> Result<VerificationReport> {
    check_psi_params(m, r)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "second_symmetry",
        &[("n", n as i64), ("m", m as i64), ("r", r)],
    );
    let target_n = n as i64 - r - 2 * m as i64 - 2;

    let domain = collect_partitions(n, |p| rank_2m(p, m).is_some_and(|k| k <= -r));
    let codomain = match usize::try_from(target_n) {
        Ok(tn) => collect_partitions(tn, |p| rank_2m(p, m + 2).is_some_and(|k| k >= -r)),
        Err(_) => Vec::new(),
    };
    report.examined = (domain.len() + codomain.len()) as u64;

    let images: Vec<Result<Partition, Value>> = domain
        .par_iter()
        .map(|lambda| check_psi_at(lambda, m, r, target_n, fault))
        .collect();
    let mut mapped = Vec::with_capacity(images.len());
    for img in images {
        match img {
            Ok(p) => mapped.push(p),
            Err(cx) => {
                report.fail(cx);
                return Ok(report.timed(start));
            }
        }
    }

    let mut sorted_images = mapped.clone();
    sorted_images.sort();
    if let Some(w) = sorted_images.windows(2).find(|w| w[0] == w[1]) {
        let preimages: Vec<&Partition> = domain
            .iter()
            .zip(&mapped)
            .filter(|(_, img)| **img == w[0])
            .map(|(d, _)| d)
            .collect();
        report.fail(json!({
            "reason": "psi is not injective", "image": w[0], "preimages": preimages,
        }));
        return Ok(report.timed(start));
    }
    let mut sorted_codomain = codomain.clone();
    sorted_codomain.sort();
    if sorted_images != sorted_codomain {
        let missing = sorted_codomain
            .iter()
            .find(|p| sorted_images.binary_search(p).is_err());
        let extra = sorted_images
            .iter()
            .find(|p| sorted_codomain.binary_search(p).is_err());
        report.fail(json!({
            "reason": "image of psi differs from the codomain",
            "domain_size": domain.len(), "codomain_size": codomain.len(),
            "missing_from_image": missing, "outside_codomain": extra,
        }));
        return Ok(report.timed(start));
    }

    let back: Vec<Option<Value>> = codomain
        .par_iter()
        .map(|hat| match psi_inverse(hat, m, r) {
            Ok(pre) => match psi_with(&pre, m, r, fault) {
                Ok(again) if &again == hat => None,
                Ok(again) => Some(json!({
                    "reason": "psi(psi_inverse(x)) != x", "x": hat, "preimage": pre, "got": again,
                })),
                Err(e) => Some(json!({
                    "reason": "psi failed on psi_inverse(x)", "x": hat, "error": err_json(&e),
                })),
            },
            Err(e) => {
                Some(json!({ "reason": "psi_inverse failed", "x": hat, "error": err_json(&e) }))
            }
        })
        .collect();
    if let Some(cx) = back.into_iter().flatten().next() {
        report.fail(cx);
    }
    Ok(report.timed(start))
}

fn check_psi_at(
    lambda: &Partition,
    m: usize,
    r: i64,
    target_n: i64,
    fault: Option<Fault>,
) -> Result<Partition, Value> {
    let cx = |reason: &str, image: Option<&Partition>| json!({ "reason": reason, "lambda": lambda, "image": image });
    let d = decompose(lambda, m).ok_or_else(|| cx("no decomposition", None))?;
    if d.s == d.m || d.t == d.m {
        return Err(cx("a Durfee rectangle of the domain has width 0", None));
    }
    if let Some(k1) = psi_k1(&d, r) {
        if k1 < d.beta.largest() {
            return Err(cx("k_1 < beta_1", None));
        }
    }
    let hat = psi_with(lambda, m, r, fault)
        .map_err(|e| json!({ "reason": "psi failed", "lambda": lambda, "error": err_json(&e) }))?;
    if hat.size() as i64 != target_n {
        return Err(cx("wrong image size", Some(&hat)));
    }
    let dh = decompose(&hat, m + 2).ok_or_else(|| cx("image has no decomposition", Some(&hat)))?;
    if (dh.s, dh.t) != (d.s + 1, d.t + 1) {
        return Err(cx("image rectangles are not (s+1, t+1)", Some(&hat)));
    }
    if dh.rank() < -r {
        return Err(cx("image rank below -r", Some(&hat)));
    }
    match psi_inverse(&hat, m, r) {
        Ok(back) if &back == lambda => Ok(hat),
        Ok(_) => Err(cx("psi_inverse(psi(lambda)) != lambda", Some(&hat))),
        Err(e) => Err(json!({
            "reason": "psi_inverse failed", "lambda": lambda, "image": hat, "error": err_json(&e),
        })),
    }
}

/// `h(n,m,≤r) + h(n,m,≥r+1)` equals `p(n)` for `m > 0` and `p(n) - q(n)` for `m = 0`.
pub fn verify_dividetimes(n: usize, m: usize, r: i64) -> VerificationReport {
    verify_dividetimes_in(&RankTable::new(), n, m, r)
}

fn verify_dividetimes_in(table: &RankTable, n: usize, m: usize, r: i64) -> VerificationReport {
    let start = Instant::now();
    let mut report =
        VerificationReport::new("dividetimes", &[("n", n as i64), ("m", m as i64), ("r", r)]);
    let outcome = (|| -> Result<(BigInt, BigInt, u64)> {
        let hist = table.get(n, m)?;
        let lhs = BigInt::from(hist.count(Comparison::Le, r) + hist.count(Comparison::Ge, r + 1));
        let mut rhs = BigInt::from(count_p_signed(n as i64));
        if m == 0 {
            rhs -= BigInt::from(count_q(n)?);
        }
        Ok((lhs, rhs, hist.ranked() + hist.unranked))
    })();
    match outcome {
        Ok((lhs, rhs, examined)) => {
            report.examined = examined;
            if lhs != rhs {
                report.fail(json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
            }
        }
        Err(e) => report.fail(json!({ "reason": err_json(&e) })),
    }
    report.timed(start)
}

/// `n - jr - 2jm - j(5j-1)/2`.
pub fn telescoping_argument(n: usize, m: usize, r: i64, j: usize) -> i64 {
    let (n, m, j) = (n as i64, m as i64, j as i64);
    n - j * r - 2 * j * m - j * (5 * j - 1) / 2
}

/// Recounts `a_j = h(n_j, m+2j, ≤ -r-j)` and `b_j = h(n_j, m+2j, ≥ -r-j+1)`
/// directly and checks `a_j = b_{j+1}`, `a_j + b_j = p(n_j)` for `j ≥ 1`,
/// every partial alternating sum, and the closed form
/// `h(n,m,≤-r) = Σ_{j≥1} (-1)^{j-1} p(n_j)`.
pub fn verify_telescoping(n: usize, m: usize, r: i64, depth: usize) -> Result<VerificationReport> {
    verify_telescoping_in(&RankTable::new(), n, m, r, depth)
}

fn verify_telescoping_in(
    table: &RankTable,
    n: usize,
    m: usize,
    r: i64,
    depth: usize,
) -> Result<VerificationReport> {
    check_psi_params(m, r)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "telescoping",
        &[
            ("n", n as i64),
            ("m", m as i64),
            ("r", r),
            ("J", depth as i64),
        ],
    );
    let a = |j: usize| -> Result<BigInt> {
        let nj = telescoping_argument(n, m, r, j);
        Ok(table
            .h(nj, m + 2 * j, Comparison::Le, -r - j as i64)?
            .into())
    };
    let b = |j: usize| -> Result<BigInt> {
        let nj = telescoping_argument(n, m, r, j);
        Ok(table
            .h(nj, m + 2 * j, Comparison::Ge, -r - j as i64 + 1)?
            .into())
    };
    let p = |j: usize| BigInt::from(count_p_signed(telescoping_argument(n, m, r, j)));

    let outcome = (|| -> Result<Option<Value>> {
        let av: Vec<BigInt> = (0..=depth + 1).map(a).collect::<Result<_>>()?;
        let bv: Vec<BigInt> = (0..=depth + 1).map(b).collect::<Result<_>>()?;
        for j in 0..=depth {
            if av[j] != bv[j + 1] {
                return Ok(Some(json!({
                    "reason": "a_j != b_{j+1}", "j": j,
                    "a_j": av[j].to_string(), "b_j+1": bv[j + 1].to_string(),
                })));
            }
        }
        for j in 1..=depth + 1 {
            if av[j].clone() + &bv[j] != p(j) {
                return Ok(Some(json!({
                    "reason": "a_j + b_j != p(n_j)", "j": j,
                    "a_j": av[j].to_string(), "b_j": bv[j].to_string(), "p": p(j).to_string(),
                })));
            }
        }
        let mut partial = BigInt::default();
        for j in 1..=depth {
            let term = av[j].clone() + &bv[j];
            if j % 2 == 1 {
                partial += term;
            } else {
                partial -= term;
            }
            let remainder = if j % 2 == 1 {
                -av[j].clone()
            } else {
                av[j].clone()
            };
            if partial.clone() + remainder != av[0] {
                return Ok(Some(json!({ "reason": "partial alternating sum", "J": j })));
            }
        }
        let mut closed = BigInt::default();
        for j in 1.. {
            if telescoping_argument(n, m, r, j) < 0 {
                break;
            }
            if j % 2 == 1 {
                closed += p(j);
            } else {
                closed -= p(j);
            }
        }
        if closed != av[0] {
            return Ok(Some(json!({
                "reason": "closed form", "h": av[0].to_string(), "sum": closed.to_string(),
            })));
        }
        Ok(None)
    })();
    report.examined = (depth + 2) as u64;
    match outcome {
        Ok(None) => {}
        Ok(Some(cx)) => report.fail(cx),
        Err(e) => report.fail(json!({ "reason": err_json(&e) })),
    }
    Ok(report.timed(start))
}

fn series_report(
    check: &str,
    params: &[(&str, i64)],
    left: &TruncatedSeries,
    right: &TruncatedSeries,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(check, params);
    report.examined = left.order().min(right.order()) as u64 + 1;
    if let Some(e) = left.first_difference(right) {
        report.fail(json!({
            "exponent": e,
            "left": left.coeff(e).to_string(),
            "right": right.coeff(e).to_string(),
        }));
    }
    report.timed(start)
}

/// Sum side equals product side of the Rogers-Ramanujan identity to order `N`.
pub fn check_rr_identity(order: usize) -> VerificationReport {
    series_report(
        "rr_identity",
        &[("N", order as i64)],
        &rr_sum_side(order),
        &rr_product_side(order),
    )
}

/// Sum side equals `P(t)·Σ (-1)^m t^{m(5m-1)/2}` to order `N`.
pub fn check_schur_identity(order: usize) -> VerificationReport {
    series_report(
        "schur_identity",
        &[("N", order as i64)],
        &rr_sum_side(order),
        &schur_rhs(order),
    )
}

/// The bivariate triple product to `q`-order `N`.
pub fn check_jtp_bivariate(order: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("jtp_bivariate", &[("N", order as i64)]);
    let (lhs, rhs) = (jtp_lhs(order), jtp_rhs(order));
    report.examined = ((2 * lhs.radius() + 1) * (order + 1)) as u64;
    if let Some((z, q)) = lhs.first_difference(&rhs) {
        report.fail(json!({
            "z_exponent": z, "q_exponent": q,
            "left": lhs.coeff(z, q).to_string(), "right": rhs.coeff(z, q).to_string(),
        }));
    }
    report.timed(start)
}

/// The specialized triple product and the rewrite of the product side.
pub fn check_jtp_specialized(order: usize) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("jtp_specialized", &[("N", order as i64)]);
    report.examined = order as u64 + 1;
    if let Err(mm) = jtp_specialized_check(order) {
        report.fail(json!({
            "stage": mm.stage, "exponent": mm.exponent, "left": mm.left, "right": mm.right,
        }));
    }
    report.timed(start)
}

/// `H_{0,≤0} + H_{0,≤-1} = P - Q` from the two displayed sums, to order `N`.
pub fn check_p_minus_q(order: usize) -> VerificationReport {
    let diff = &euler_inverse_product(order) - &rr_sum_side(order);
    series_report(
        "p_minus_q",
        &[("N", order as i64)],
        &pentagonal_pair_series(order),
        &diff,
    )
}

/// Coefficients of the rank generating function against brute-force `h(n,m,≤-r)`.
pub fn check_maltese_vs_count(m: usize, r: i64, n_max: usize) -> Result<VerificationReport> {
    check_maltese_vs_count_in(&RankTable::new(), m, r, n_max, None)
}

fn check_maltese_vs_count_in(
    table: &RankTable,
    m: usize,
    r: i64,
    n_max: usize,
    fault: Option<Fault>,
) -> Result<VerificationReport> {
    let series = maltese_series_with(m, r, n_max, fault)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "maltese_vs_count",
        &[("m", m as i64), ("r", r), ("n_max", n_max as i64)],
    );
    for n in 1..=n_max {
        report.examined += 1;
        let count = BigInt::from(table.h(n as i64, m, Comparison::Le, -r)?);
        if series.coeff(n) != &count {
            report.fail(json!({
                "n": n, "series": series.coeff(n).to_string(), "count": count.to_string(),
            }));
            break;
        }
    }
    Ok(report.timed(start))
}

pub const MALTESE_GRID: [(usize, i64); 5] = [(0, 0), (0, 1), (0, 2), (1, 1), (2, 1)];

/// All series identities at order `N`; the count comparison runs to `min(N, 32)`.
pub fn verify_series_suite(order: usize) -> Vec<VerificationReport> {
    verify_series_suite_in(&RankTable::new(), order, order.min(32), None)
}

fn verify_series_suite_in(
    table: &RankTable,
    order: usize,
    count_max: usize,
    fault: Option<Fault>,
) -> Vec<VerificationReport> {
    let mut out = vec![
        check_rr_identity(order),
        check_schur_identity(order),
        check_jtp_bivariate(order),
        check_jtp_specialized(order),
        check_p_minus_q(order),
    ];
    for (m, r) in MALTESE_GRID {
        out.push(
            check_maltese_vs_count_in(table, m, r, count_max, fault)
                .expect("grid parameters are valid"),
        );
    }
    out
}

/// Five worked examples, compared exactly.
pub fn verify_golden_examples() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("golden_examples", &[]);
    let mut check = |name: &str, ok: bool, got: Value| {
        report.examined += 1;
        if !ok {
            report.fail(json!({ "example": name, "got": got }));
        }
    };
    let p = |v: &[usize]| Partition::new(v.to_vec()).expect("literal partitions are valid");

    let ex1 = p(&[5, 5, 4, 1]).conjugate();
    check("1", ex1 == p(&[4, 3, 3, 3, 2]), json!(ex1));

    let ex2 = p(&[10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1]);
    let d2 = decompose(&ex2, 0);
    let ok2 = d2.as_ref().is_some_and(|d| {
        (d.s, d.t, d.rank()) == (6, 3, 1)
            && d.alpha == p(&[4, 4, 3, 3, 1])
            && d.beta == p(&[2, 1, 1])
            && d.gamma == p(&[2, 2, 1, 1, 1])
    });
    check("2", ok2, json!(d2));

    let ex3 = p(&[7, 6, 4, 4, 3, 3, 1]);
    let d3 = decompose(&ex3, 2);
    let ok3 = d3.as_ref().is_some_and(|d| {
        (d.s, d.t, d.rank()) == (5, 2, 7)
            && d.alpha == p(&[4, 3, 1, 1])
            && d.beta == p(&[3, 1])
            && d.gamma.is_empty()
    });
    check("3", ok3, json!(d3));

    let ex4 = phi(&ex2);
    let want4 = p(&[10, 9, 9, 7, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1]);
    let ok4 = ex4
        .as_ref()
        .is_ok_and(|h| *h == want4 && rank_2m(h, 0) == Some(-1));
    check("4", ok4, json!(ex4.ok()));

    let ex5 = p(&[14, 10, 9, 9, 8, 7, 7, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1]);
    let want5 = p(&[13, 10, 9, 8, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1]);
    let d5 = decompose(&ex5, 0);
    let k1 = d5.as_ref().and_then(|d| psi_k1(d, 2));
    let img5 = psi_with(&ex5, 0, 2, None);
    let ok5 = ex5.size() == 92
        && rank_2m(&ex5, 0) == Some(-5)
        && k1 == Some(3)
        && img5
            .as_ref()
            .is_ok_and(|h| *h == want5 && h.size() == 88 && rank_2m(h, 2) == Some(1))
        && psi_inverse(&want5, 0, 2).is_ok_and(|back| back == ex5);
    check("5", ok5, json!({ "k1": k1, "image": img5.ok() }));

    report.timed(start)
}

/// Ranges for a full run. Missing fields take the defaults; unknown fields are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Exhaustive checks run for every `1 ≤ n ≤ n_max`.
    pub n_max: usize,
    /// Offsets for the second-symmetry and telescoping checks.
    pub m_values: Vec<usize>,
    /// Shifts for the second-symmetry and telescoping checks; invalid `(m, r)` pairs are skipped.
    pub r_values: Vec<i64>,
    /// Offsets for the `p(n)` split check.
    pub dividetimes_m_values: Vec<usize>,
    /// The split check runs for `r ∈ [-rank_window, rank_window]`.
    pub rank_window: i64,
    /// Depth `J` of the telescoping check.
    pub telescoping_depth: usize,
    /// Truncation order of the series identities; `null` skips them.
    pub series_order: Option<usize>,
    /// Largest `n` compared between the rank generating function and brute-force counts.
    pub maltese_n_max: usize,
    pub golden: bool,
    #[doc(hidden)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inject_fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 35,
            m_values: vec![0, 1, 2],
            r_values: vec![0, 1, 2, 3],
            dividetimes_m_values: vec![0, 1, 2, 3],
            rank_window: 5,
            telescoping_depth: 4,
            series_order: Some(120),
            maltese_n_max: 32,
            golden: true,
            inject_fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// A config that runs nothing.
    pub fn empty() -> Self {
        SuiteConfig {
            n_max: 0,
            m_values: vec![],
            r_values: vec![],
            dividetimes_m_values: vec![],
            rank_window: 0,
            telescoping_depth: 0,
            series_order: None,
            maltese_n_max: 0,
            golden: false,
            inject_fault: None,
        }
    }

    fn psi_grid(&self) -> Vec<(usize, i64)> {
        let mut grid = Vec::new();
        for &m in &self.m_values {
            for &r in &self.r_values {
                if check_psi_params(m, r).is_ok() {
                    grid.push((m, r));
                }
            }
        }
        grid
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn to_json_lines(&self, with_timing: bool) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_json_line(with_timing));
            out.push('\n');
        }
        out
    }

    /// Per-check pass/fail totals as a fixed-width table.
    pub fn summary_table(&self) -> String {
        let mut rows: BTreeMap<&str, (usize, usize, u64, f64)> = BTreeMap::new();
        for r in &self.reports {
            let e = rows.entry(r.check.as_str()).or_default();
            if r.passed() {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
            e.2 += r.examined;
            e.3 += r.elapsed_ms.unwrap_or(0.0);
        }
        let mut out = format!(
            "{:<20} {:>6} {:>6} {:>12} {:>10}\n",
            "check", "pass", "fail", "examined", "ms"
        );
        for (check, (pass, fail, examined, ms)) in rows {
            out.push_str(&format!(
                "{check:<20} {pass:>6} {fail:>6} {examined:>12} {ms:>10.1}\n"
            ));
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "overall: {verdict} ({} reports)\n",
            self.reports.len()
        ));
        out
    }
}

enum Job {
    Golden,
    First(usize),
    Second(usize, usize, i64),
    Divide(usize, usize, i64),
    Telescope(usize, usize, i64),
    Series(usize),
}

/// Runs every check the config asks for. Jobs run in parallel; the report
/// order is fixed by the config alone.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let fault = config.inject_fault;
    if config.rank_window < 0 {
        return Err(Error::Config("rank_window must be non-negative".into()));
    }
    let mut jobs = Vec::new();
    if config.golden {
        jobs.push(Job::Golden);
    }
    let grid = config.psi_grid();
    for n in 1..=config.n_max {
        jobs.push(Job::First(n));
        for &(m, r) in &grid {
            jobs.push(Job::Second(n, m, r));
        }
        for &m in &config.dividetimes_m_values {
            for r in -config.rank_window..=config.rank_window {
                jobs.push(Job::Divide(n, m, r));
            }
        }
        for &(m, r) in &grid {
            jobs.push(Job::Telescope(n, m, r));
        }
    }
    if let Some(order) = config.series_order {
        jobs.push(Job::Series(order));
    }

    let table = RankTable::new();
    let batches: Vec<Result<Vec<VerificationReport>>> = jobs
        .par_iter()
        .map(|job| {
            Ok(match *job {
                Job::Golden => vec![verify_golden_examples()],
                Job::First(n) => vec![verify_first_symmetry_with(n, fault)],
                Job::Second(n, m, r) => vec![verify_second_symmetry_with(n, m, r, fault)?],
                Job::Divide(n, m, r) => vec![verify_dividetimes_in(&table, n, m, r)],
                Job::Telescope(n, m, r) => {
                    vec![verify_telescoping_in(
                        &table,
                        n,
                        m,
                        r,
                        config.telescoping_depth,
                    )?]
                }
                Job::Series(order) => {
                    verify_series_suite_in(&table, order, config.maltese_n_max.min(order), fault)
                }
            })
        })
        .collect();
    let mut reports = Vec::new();
    for b in batches {
        reports.extend(b?);
    }
    Ok(SuiteReport { reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_symmetry_small() {
        let r = verify_first_symmetry(3);
        assert!(r.passed());
        assert_eq!(r.examined, 2);
        let hist = RankHistogram::tabulate(3, 0).unwrap();
        assert_eq!(hist.counts, BTreeMap::from([(-1, 1), (1, 1)]));
    }

    #[test]
    fn second_symmetry_examples() {
        assert!(verify_second_symmetry(20, 0, 0).unwrap().passed());
        assert!(verify_second_symmetry(20, 1, 1).unwrap().passed());
        assert!(verify_second_symmetry(20, 1, 0).is_err());
    }

    #[test]
    fn dividetimes_examples() {
        assert!(verify_dividetimes(10, 0, 0).passed());
        assert!(verify_dividetimes(10, 2, -3).passed());
        assert!(verify_dividetimes(1, 1, 0).passed());
    }

    #[test]
    fn telescoping_examples() {
        assert!(verify_telescoping(25, 0, 0, 4).unwrap().passed());
        assert!(verify_telescoping(25, 0, 1, 4).unwrap().passed());
        assert_eq!(telescoping_argument(5, 0, 0, 2), -4);
        assert_eq!(
            count_p_signed(telescoping_argument(5, 0, 0, 2)),
            BigUint::default()
        );
    }

    #[test]
    fn series_suite_edges() {
        assert!(verify_series_suite(0)
            .iter()
            .all(VerificationReport::passed));
        assert!(verify_series_suite(40)
            .iter()
            .all(VerificationReport::passed));
    }

    #[test]
    fn golden() {
        let r = verify_golden_examples();
        assert!(r.passed(), "{:?}", r.counterexample);
        assert_eq!(r.examined, 5);
    }

    #[test]
    fn empty_config_runs_nothing() {
        let rep = run_suite(&SuiteConfig::empty()).unwrap();
        assert!(rep.reports.is_empty() && rep.passed());
    }

    #[test]
    fn config_parsing() {
        let c = SuiteConfig::from_json(r#"{"n_max": 5, "series_order": null}"#).unwrap();
        assert_eq!(c.n_max, 5);
        assert_eq!(c.series_order, None);
        assert_eq!(c.m_values, vec![0, 1, 2]);
        assert!(matches!(
            SuiteConfig::from_json(r#"{"n_maxx": 5}"#),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SuiteConfig::from_json("not json"),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SuiteConfig::from_json(r#"{"n_max": -1}"#),
            Err(Error::Config(_))
        ));
        let c = SuiteConfig::from_json(r#"{"inject_fault": "psi-tie-direction"}"#).unwrap();
        assert_eq!(c.inject_fault, Some(Fault::PsiTieDirection));
    }

    #[test]
    fn report_lines_omit_timing() {
        let r = verify_dividetimes(4, 0, 0);
        let line = r.to_json_line(false);
        assert!(!line.contains("elapsed_ms"));
        assert!(r.to_json_line(true).contains("elapsed_ms"));
        let back: VerificationReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back.check, "dividetimes");
    }
}
