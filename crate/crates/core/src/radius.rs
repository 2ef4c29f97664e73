//! Radius-determining equations and a scan-then-bisect solver for their
//! minimal positive roots in `(0, 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, check_radius, check_unit_param, Error, Result};

/// Step of the left-to-right sign scan.
pub const SCAN_STEP: f64 = 1e-4;
/// Default bisection tolerance on the final bracket width.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Smallest accepted bisection tolerance.
pub const MIN_TOL: f64 = 1e-14;
/// The scan never evaluates beyond this point; `1 - r^k` vanishes at 1.
pub const SCAN_UPPER: f64 = 1.0 - 1e-9;
/// Contract on `|defining function(value)|` for every returned root.
pub const RESIDUAL_BOUND: f64 = 1e-10;

/// Which defining equation a [`RadiusQuery`] selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equation {
    /// `Psi_1`: radius of inequality T1 `R^p_{k,m}`.
    R1,
    /// `Psi_2`: radius of inequality T2.
    R2,
    /// `Psi_3`: radius of inequality T3.
    R3,
    /// `Psi_4`: radius of inequality T4, depends on `a = |f(0)|`.
    R4,
    /// `r^{qk} = min(p,2) / (2 + min(p,2))`: radius of inequality T5.
    R5,
    /// `r^m (3 - 5r) + 3r - 1`.
    ZetaM,
    /// `r^m (2 - 3r) + 2r - 1`.
    EtaM,
    /// `2 r^k (1 + r^m) - p (1 - r^m)(1 - r^k)`, roots `alpha_{k,m,p}`.
    AlphaKMP,
    /// `1 - 2 r^k - r^{mp} (1 - r^k)`, roots `beta_{k,m,p}`.
    BetaKMP,
}

impl Equation {
    pub const ALL: [Equation; 9] = [
        Equation::R1,
        Equation::R2,
        Equation::R3,
        Equation::R4,
        Equation::R5,
        Equation::ZetaM,
        Equation::EtaM,
        Equation::AlphaKMP,
        Equation::BetaKMP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Equation::R1 => "R1",
            Equation::R2 => "R2",
            Equation::R3 => "R3",
            Equation::R4 => "R4",
            Equation::R5 => "R5",
            Equation::ZetaM => "ZetaM",
            Equation::EtaM => "EtaM",
            Equation::AlphaKMP => "AlphaKMP",
            Equation::BetaKMP => "BetaKMP",
        }
    }
}

impl std::str::FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Equation::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown equation `{s}`")))
    }
}

/// Equation selector plus every parameter any equation reads. Only the
/// parameters relevant to `theorem` are consulted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery {
    pub theorem: Equation,
    pub k: u32,
    pub m: u32,
    pub p: f64,
    pub q: u32,
    pub s: u32,
    pub t: u32,
    pub lambda: f64,
    pub a: f64,
}

impl RadiusQuery {
    pub fn new(theorem: Equation) -> Self {
        Self {
            theorem,
            k: 1,
            m: 1,
            p: 1.0,
            q: 1,
            s: 1,
            t: 0,
            lambda: 1.0,
            a: 0.0,
        }
    }

    pub fn k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }
    pub fn m(mut self, m: u32) -> Self {
        self.m = m;
        self
    }
    pub fn p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }
    pub fn q(mut self, q: u32) -> Self {
        self.q = q;
        self
    }
    pub fn s(mut self, s: u32) -> Self {
        self.s = s;
        self
    }
    pub fn t(mut self, t: u32) -> Self {
        self.t = t;
        self
    }
    pub fn lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }
    pub fn a(mut self, a: f64) -> Self {
        self.a = a;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive_int = |name: &str, v: u32| {
            if v >= 1 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must be >= 1")))
            }
        };
        let p_up_to_two = |p: f64| {
            if p.is_finite() && p > 0.0 && p <= 2.0 {
                Ok(())
            } else {
                Err(Error::Domain {
                    what: "p",
                    value: p,
                    expected: "0 < p <= 2",
                })
            }
        };
        match self.theorem {
            Equation::R1 => {
                positive_int("k", self.k)?;
                positive_int("m", self.m)?;
                p_up_to_two(self.p)
            }
            Equation::R2 => {
                positive_int("k", self.k)?;
                positive_int("m", self.m)?;
                positive_int("s", self.s)?;
                if self.t >= self.s {
                    return Err(Error::InvalidParameter("t must satisfy 0 <= t < s".into()));
                }
                check_positive("lambda", self.lambda)?;
                p_up_to_two(self.p)
            }
            Equation::R3 => {
                positive_int("k", self.k)?;
                positive_int("m", self.m)?;
                check_positive("lambda", self.lambda)?;
                p_up_to_two(self.p)
            }
            Equation::R4 => {
                positive_int("k", self.k)?;
                positive_int("m", self.m)?;
                check_positive("lambda", self.lambda)?;
                check_unit_param("a", self.a)?;
                check_positive("p", self.p)
            }
            Equation::R5 => {
                positive_int("k", self.k)?;
                positive_int("q", self.q)?;
                check_positive("p", self.p)
            }
            Equation::ZetaM | Equation::EtaM => positive_int("m", self.m),
            Equation::AlphaKMP | Equation::BetaKMP => {
                positive_int("k", self.k)?;
                positive_int("m", self.m)?;
                check_positive("p", self.p)
            }
        }
    }

    /// Value of the selected defining function at `r`; no domain checks.
    pub fn defining_function(&self, r: f64) -> f64 {
        let (k, m) = (self.k as i32, self.m as i32);
        match self.theorem {
            Equation::R1 => psi1_raw(r, k, m, self.p),
            Equation::R2 => psi2_raw(r, self.lambda, self.s as i32, self.t as i32, self.p, m, k),
            Equation::R3 => psi3_raw(r, self.lambda, self.p, k, m),
            Equation::R4 => psi4_raw(r, self.lambda, self.p, self.a, k, m),
            Equation::R5 => {
                let c = self.p.min(2.0);
                r.powi((self.q * self.k) as i32) - c / (2.0 + c)
            }
            Equation::ZetaM => r.powi(m) * (3.0 - 5.0 * r) + 3.0 * r - 1.0,
            Equation::EtaM => r.powi(m) * (2.0 - 3.0 * r) + 2.0 * r - 1.0,
            Equation::AlphaKMP => {
                let (rk, rm) = (r.powi(k), r.powi(m));
                2.0 * rk * (1.0 + rm) - self.p * (1.0 - rm) * (1.0 - rk)
            }
            Equation::BetaKMP => {
                let rk = r.powi(k);
                1.0 - 2.0 * rk - r.powf(self.m as f64 * self.p) * (1.0 - rk)
            }
        }
    }
}

impl fmt::Display for RadiusQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.theorem.name();
        match self.theorem {
            Equation::R1 => write!(f, "{name}(k={}, m={}, p={})", self.k, self.m, self.p),
            Equation::R2 => write!(
                f,
                "{name}(lambda={}, s={}, t={}, p={}, m={}, k={})",
                self.lambda, self.s, self.t, self.p, self.m, self.k
            ),
            Equation::R3 => write!(f, "{name}(lambda={}, p={}, k={}, m={})", self.lambda, self.p, self.k, self.m),
            Equation::R4 => write!(
                f,
                "{name}(lambda={}, p={}, a={}, k={}, m={})",
                self.lambda, self.p, self.a, self.k, self.m
            ),
            Equation::R5 => write!(f, "{name}(k={}, p={}, q={})", self.k, self.p, self.q),
            Equation::ZetaM | Equation::EtaM => write!(f, "{name}(m={})", self.m),
            Equation::AlphaKMP | Equation::BetaKMP => {
                write!(f, "{name}(k={}, m={}, p={})", self.k, self.m, self.p)
            }
        }
    }
}

/// A root of a defining function with its final bisection bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub scan_step: f64,
}

fn psi1_raw(r: f64, k: i32, m: i32, p: f64) -> f64 {
    let (rk, rm) = (r.powi(k), r.powi(m));
    rk / (1.0 - rk) + rm / (1.0 - rm) - p / 2.0
}

fn psi2_raw(r: f64, lambda: f64, s: i32, t: i32, p: f64, m: i32, k: i32) -> f64 {
    let rm = r.powi(m);
    2.0 * lambda * r.powi(k * (s + t)) / (1.0 - r.powi(k * s)) - p * (1.0 - rm) / (1.0 + rm)
}

fn psi3_raw(r: f64, lambda: f64, p: f64, k: i32, m: i32) -> f64 {
    let (rk, rm) = (r.powi(k), r.powi(m));
    p * (1.0 - rm) / (1.0 + rm) - 2.0 * lambda * rk / (1.0 - rk)
}

fn psi4_raw(r: f64, lambda: f64, p: f64, a: f64, k: i32, m: i32) -> f64 {
    let (rk, rm) = (r.powi(k), r.powi(m));
    (1.0 + a * rm).powf(p) * (1.0 + (lambda * a * a - lambda - 1.0) * rk) - (1.0 - rk) * (a + rm).powf(p)
}

fn to_exponent(what: &'static str, v: u32) -> Result<i32> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{what} must be >= 1")));
    }
    Ok(v as i32)
}

/// `r^k/(1-r^k) + r^m/(1-r^m) - p/2`.
pub fn psi1(r: f64, k: u32, m: u32, p: f64) -> Result<f64> {
    check_radius("r", r)?;
    Ok(psi1_raw(r, to_exponent("k", k)?, to_exponent("m", m)?, p))
}

/// `2 lambda r^{k(s+t)}/(1-r^{ks}) - p (1-r^m)/(1+r^m)`.
pub fn psi2(r: f64, lambda: f64, s: u32, t: u32, p: f64, m: u32, k: u32) -> Result<f64> {
    check_radius("r", r)?;
    let s = to_exponent("s", s)?;
    if t as i32 >= s {
        return Err(Error::InvalidParameter("t must satisfy 0 <= t < s".into()));
    }
    Ok(psi2_raw(r, lambda, s, t as i32, p, to_exponent("m", m)?, to_exponent("k", k)?))
}

/// `p (1-r^m)/(1+r^m) - 2 lambda r^k/(1-r^k)`.
pub fn psi3(r: f64, lambda: f64, p: f64, k: u32, m: u32) -> Result<f64> {
    check_radius("r", r)?;
    Ok(psi3_raw(r, lambda, p, to_exponent("k", k)?, to_exponent("m", m)?))
}

/// `(1 + a r^m)^p [1 + (lambda a^2 - lambda - 1) r^k] - (1 - r^k)(a + r^m)^p`.
pub fn psi4(r: f64, lambda: f64, p: f64, a: f64, k: u32, m: u32) -> Result<f64> {
    check_radius("r", r)?;
    check_unit_param("a", a)?;
    Ok(psi4_raw(r, lambda, p, a, to_exponent("k", k)?, to_exponent("m", m)?))
}

/// `(2 - a^2 - a^p) r^{qk} + a^p - 1`. Accepts `a = 1`, where it vanishes.
pub fn psi5(r: f64, a: f64, p: f64, q: u32, k: u32) -> Result<f64> {
    check_radius("r", r)?;
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain {
            what: "a",
            value: a,
            expected: "0 <= a <= 1",
        });
    }
    let ap = a.powf(p);
    let exponent = to_exponent("q", q)? * to_exponent("k", k)?;
    Ok((2.0 - a * a - ap) * r.powi(exponent) + ap - 1.0)
}

/// Tuning of [`solve_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub scan_step: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            scan_step: SCAN_STEP,
        }
    }
}

/// Minimal positive root of the query's defining function, bracketed to `tol`.
pub fn solve(query: &RadiusQuery, tol: f64) -> Result<RadiusResult> {
    solve_with(query, SolveOptions { tol, ..Default::default() })
}

pub fn solve_with(query: &RadiusQuery, options: SolveOptions) -> Result<RadiusResult> {
    query.validate()?;
    if !(options.tol >= MIN_TOL) {
        return Err(Error::InvalidParameter(format!("tol must be >= {MIN_TOL:e}")));
    }
    if !(options.scan_step > 0.0 && options.scan_step < 0.5) {
        return Err(Error::InvalidParameter("scan step must lie in (0, 0.5)".into()));
    }
    let f = |r: f64| query.defining_function(r);
    let (lo, hi) = first_sign_change(&f, options.scan_step, SCAN_UPPER).ok_or_else(|| Error::NoRootFound {
        query: query.to_string(),
        upper: SCAN_UPPER,
    })?;
    let (lo, hi) = bisect(&f, lo, hi, options.tol);
    let value = 0.5 * (lo + hi);
    Ok(RadiusResult {
        value,
        bracket_lo: lo,
        bracket_hi: hi,
        residual: f(value),
        scan_step: options.scan_step,
    })
}

/// First grid cell `[r_{i-1}, r_i]` of `0, step, 2 step, ..., upper` over
/// which `f` changes sign. A grid point where `f` is exactly zero yields a
/// degenerate bracket.
pub(crate) fn first_sign_change(f: &impl Fn(f64) -> f64, step: f64, upper: f64) -> Option<(f64, f64)> {
    let mut prev_r = 0.0;
    let mut prev = f(0.0);
    let mut i = 1u64;
    loop {
        let r = (i as f64 * step).min(upper);
        let v = f(r);
        if v == 0.0 {
            return Some((r, r));
        }
        if prev != 0.0 && (v > 0.0) != (prev > 0.0) && !v.is_nan() && !prev.is_nan() {
            return Some((prev_r, r));
        }
        if r >= upper {
            return None;
        }
        prev_r = r;
        prev = v;
        i += 1;
    }
}

pub(crate) fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut f_lo = f(lo);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return (mid, mid);
        }
        if (v > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = v;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Closed form `(min(p,2) / (2 + min(p,2)))^{1/(qk)}`.
pub fn radius_r5(k: u32, p: f64, q: u32) -> Result<f64> {
    check_positive("p", p)?;
    let exponent = to_exponent("q", q)? * to_exponent("k", k)?;
    let c = p.min(2.0);
    Ok((c / (2.0 + c)).powf(1.0 / exponent as f64))
}

/// Grid minimum of `(1 - a^p)/(2 - a^2 - a^p)` over `a in [0, 1 - 1e-6]`,
/// compared with the `a -> 1` limit `p / (2 + p)`.
pub fn infimum_oracle(p: f64, grid_size: usize) -> Result<f64> {
    check_positive("p", p)?;
    if grid_size < 1000 {
        return Err(Error::InvalidParameter("grid_size must be >= 1000".into()));
    }
    let upper = 1.0 - 1e-6;
    let ratio = |a: f64| {
        let ap = a.powf(p);
        (1.0 - ap) / (2.0 - a * a - ap)
    };
    let grid_min = (0..=grid_size)
        .map(|i| ratio(upper * i as f64 / grid_size as f64))
        .fold(f64::INFINITY, f64::min);
    Ok(grid_min.min(p / (2.0 + p)))
}

/// Radius of the `E_f` inequality: `1/3` for `k = 1`, `3^{-1/k}` when
/// `2 <= k <= m / log_3(2 sqrt 2 + 1)`.
pub fn theorem6_radius(k: u32, m: u32) -> Result<f64> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidParameter("k and m must be >= 1".into()));
    }
    if k == 1 {
        return Ok(1.0 / 3.0);
    }
    if (k as f64) <= m as f64 / lemma5_log_ratio() {
        Ok(3f64.powf(-1.0 / k as f64))
    } else {
        Err(Error::InvalidParameter(format!(
            "k = {k} exceeds m / log_3(2 sqrt(2) + 1) for m = {m}"
        )))
    }
}

/// `log_3(2 sqrt 2 + 1)`.
pub fn lemma5_log_ratio() -> f64 {
    (2.0 * 2f64.sqrt() + 1.0).ln() / 3f64.ln()
}

/// `a* = 4 sqrt 2 - 5`.
pub fn a_star() -> f64 {
    4.0 * 2f64.sqrt() - 5.0
}
