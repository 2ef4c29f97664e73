//! Numerical oracles for the auxiliary inequalities the proofs rely on.

use serde::{Deserialize, Serialize};

use super::lhs::truncation_for;
use crate::analytic::{random_member, CoefficientSeries, DiskFunction};
use crate::error::Result;
use crate::radius::{lemma5_log_ratio, psi3, solve, Equation, RadiusQuery, DEFAULT_TOL};

pub const SERIES_TOLERANCE: f64 = 1e-10;
pub const LEMMA4_TOLERANCE: f64 = 1e-12;
pub const LEMMA5_TOLERANCE: f64 = 1e-12;
pub const LEMMA5_GRID: usize = 10_000;
pub const LEMMA5_MAX_M: u32 = 30;

const SERIES_R_GRID: [f64; 9] = [0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.7, 0.8, 0.9];
const RANDOM_MEMBERS: u64 = 24;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub points: usize,
    /// Largest value of `lhs - bound` (the check passes when it is <= tolerance).
    pub worst_excess: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub violation: Option<String>,
}

impl LemmaCheck {
    fn new(name: &str, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            points: 0,
            worst_excess: f64::NEG_INFINITY,
            tolerance,
            passed: true,
            violation: None,
        }
    }

    fn record(&mut self, excess: f64, at: impl FnOnce() -> String) {
        self.points += 1;
        if excess > self.worst_excess {
            self.worst_excess = excess;
        }
        if self.passed && !(excess <= self.tolerance) {
            self.passed = false;
            self.violation = Some(at());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| check | points | worst excess | verdict |\n|---|---|---|---|\n");
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {:.3e} | {} |\n",
                c.name,
                c.points,
                c.worst_excess,
                if c.passed { "pass" } else { "fail" }
            ));
            if let Some(v) = &c.violation {
                out.push_str(&format!("| | violation: {v} | | |\n"));
            }
        }
        out
    }
}

/// Right-hand side of the two-case majorant bound for `sum_{j>=1} |a_j| r^j`.
pub fn lemma1_bound(a: f64, r: f64) -> f64 {
    if a >= r {
        r * (1.0 - a * a) / (1.0 - r * a)
    } else {
        r * ((1.0 - a * a) / (1.0 - r * r)).sqrt()
    }
}

/// Right-hand side `(1 - a^2) r / (1 - r)` of the refined majorant bound.
pub fn lemma2_bound(a: f64, r: f64) -> f64 {
    (1.0 - a * a) * r / (1.0 - r)
}

/// `Psi_6(r) = 11 r^{2m+k} - 6 r^{2m} - 8 r^{k+m} + 2 r^m + r^k`.
pub fn psi6(r: f64, k: u32, m: u32) -> f64 {
    let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
    11.0 * rm * rm * rk - 6.0 * rm * rm - 8.0 * rk * rm + 2.0 * rm + rk
}

/// `D_{p,m}(a) = ((a + r^m)/(1 + a r^m))^p - 1 + (1 - a^2) lambda r^k/(1 - r^k)`.
pub fn lemma4_d(a: f64, r: f64, lambda: f64, p: f64, k: u32, m: u32) -> f64 {
    let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
    ((a + rm) / (1.0 + a * rm)).powf(p) - 1.0 + (1.0 - a * a) * lambda * rk / (1.0 - rk)
}

/// Pairs `(k, m)` with `2 <= k <= m / log_3(2 sqrt 2 + 1)` and `m <= max_m`.
pub fn lemma5_pairs(max_m: u32) -> Vec<(u32, u32)> {
    let ratio = lemma5_log_ratio();
    (1..=max_m)
        .flat_map(|m| (2..=m).filter(move |&k| k as f64 <= m as f64 / ratio).map(move |k| (k, m)))
        .collect()
}

fn lemma_family() -> Vec<DiskFunction> {
    let mut family: Vec<DiskFunction> = [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99]
        .iter()
        .flat_map(|&a| [DiskFunction::MobiusPhi { a }, DiskFunction::MobiusF { a }])
        .collect();
    family.extend((0..RANDOM_MEMBERS).map(|seed| random_member(seed, 1 + (seed % 5) as usize, (seed % 3) as u32)));
    family
}

fn series_checks() -> Result<(LemmaCheck, LemmaCheck)> {
    let mut l1 = LemmaCheck::new("majorant two-case bound", SERIES_TOLERANCE);
    let mut l2 = LemmaCheck::new("refined majorant bound", SERIES_TOLERANCE);
    let n_max = truncation_for(*SERIES_R_GRID.last().unwrap());
    for (index, f) in lemma_family().iter().enumerate() {
        let series: CoefficientSeries = f.taylor_coefficients(n_max)?;
        let a = series.constant_modulus();
        for &r in &SERIES_R_GRID {
            let b1 = series.majorant_sum(1, r)?;
            let refined = series.refined_term(r)?;
            let at = || format!("member {index} (a = {a:.6}), r = {r}");
            l1.record(b1 - lemma1_bound(a, r), at);
            l2.record(b1 + refined - lemma2_bound(a, r), at);
        }
    }
    Ok((l1, l2))
}

fn lemma4_check() -> Result<LemmaCheck> {
    let mut check = LemmaCheck::new("D_{p,m}(a) <= 0 below the radius", LEMMA4_TOLERANCE);
    let a_grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
    for &p in &[0.5, 1.0, 1.5, 2.0] {
        for &lambda in &[0.5, 1.0, 2.0] {
            for k in [1, 2, 3] {
                for m in [1, 2, 3, 5] {
                    let query = RadiusQuery::new(Equation::R3).k(k).m(m).p(p).lambda(lambda);
                    let radius = solve(&query, DEFAULT_TOL)?.value;
                    for i in 1..=20 {
                        let r = radius * i as f64 / 20.0;
                        // The hypothesis of the lemma: Psi >= 0 on [0, r].
                        debug_assert!(psi3(r, lambda, p, k, m)? >= -1e-10);
                        for &a in &a_grid {
                            check.record(lemma4_d(a, r, lambda, p, k, m), || {
                                format!("p = {p}, lambda = {lambda}, k = {k}, m = {m}, r = {r}, a = {a}")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(check)
}

fn lemma5_check() -> LemmaCheck {
    let mut check = LemmaCheck::new("Psi_6 >= 0 on [0, 3^(-1/k)]", LEMMA5_TOLERANCE);
    for (k, m) in lemma5_pairs(LEMMA5_MAX_M) {
        let upper = 3f64.powf(-1.0 / k as f64);
        for i in 0..LEMMA5_GRID {
            let r = upper * i as f64 / (LEMMA5_GRID - 1) as f64;
            check.record(-psi6(r, k, m), || format!("k = {k}, m = {m}, r = {r}"));
        }
    }
    check
}

/// Runs every lemma oracle.
pub fn lemma_checks() -> Result<LemmaReport> {
    let (l1, l2) = series_checks()?;
    Ok(LemmaReport {
        checks: vec![l1, l2, lemma4_check()?, lemma5_check()],
    })
}
