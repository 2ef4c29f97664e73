//! Finite-dimensional versions of the inequalities on the unit ball of
//! `C^d`. Functions are of the form `g o T_v` with `T_v` a support functional,
//! so every homogeneous part is `P_j(w) = c_j T_v(w)^j`.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::{DiskFunction, SchwarzFunction};
use crate::error::{check_positive, check_unit_param, Error, Result};
use crate::lab::{truncation_for, ExpandedFunction, TheoremId, TheoremParams};

/// Tolerance on `||v|| = 1` for base points.
pub const UNIT_TOLERANCE: f64 = 1e-12;
/// Agreement required between the vector and scalar left-hand sides.
pub const REDUCTION_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Sup,
    Euclidean,
}

impl std::str::FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sup" | "linf" | "max" => Ok(Norm::Sup),
            "l2" | "euclidean" => Ok(Norm::Euclidean),
            _ => Err(Error::InvalidParameter(format!("unknown norm `{s}`"))),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::Sup => "sup",
            Norm::Euclidean => "l2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormedSpace {
    dimension: usize,
    norm: Norm,
}

impl NormedSpace {
    pub fn new(dimension: usize, norm: Norm) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParameter("dimension must be >= 1".into()));
        }
        Ok(Self { dimension, norm })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn norm_kind(&self) -> Norm {
        self.norm
    }

    pub fn norm(&self, z: &[Complex64]) -> f64 {
        match self.norm {
            Norm::Sup => z.iter().map(|c| c.norm()).fold(0.0, f64::max),
            Norm::Euclidean => z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt(),
        }
    }

    fn check_vector(&self, z: &[Complex64]) -> Result<()> {
        if z.len() != self.dimension {
            return Err(Error::InvalidParameter(format!(
                "vector has {} components, space has dimension {}",
                z.len(),
                self.dimension
            )));
        }
        Ok(())
    }

    fn check_in_ball(&self, z: &[Complex64]) -> Result<f64> {
        self.check_vector(z)?;
        let r = self.norm(z);
        if r < 1.0 {
            Ok(r)
        } else {
            Err(Error::Domain {
                what: "||z||",
                value: r,
                expected: "||z|| < 1",
            })
        }
    }

    /// A fixed unit vector with distinct moduli and phases in its leading
    /// components, so the support functional is not a coordinate projection
    /// in the euclidean case.
    pub fn default_base_point(&self) -> Vec<Complex64> {
        let raw = [
            Complex64::new(0.5, 0.0),
            Complex64::from_polar(1.0, FRAC_PI_4),
            Complex64::new(0.0, -0.25),
        ];
        let mut v: Vec<Complex64> = if self.dimension == 1 {
            vec![raw[1]]
        } else {
            (0..self.dimension).map(|i| raw.get(i).copied().unwrap_or_default()).collect()
        };
        let n = self.norm(&v);
        v.iter_mut().for_each(|c| *c /= n);
        v
    }
}

/// A norm-one linear functional `T_v(z) = sum_i w_i z_i` with `T_v(v) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportFunctional {
    space: NormedSpace,
    base: Vec<Complex64>,
    weights: Vec<Complex64>,
}

/// Support functional at the unit vector `v`. For the sup norm it picks the
/// first coordinate of maximal modulus; for the euclidean norm it is the
/// inner product with `v`.
pub fn support_functional(space: NormedSpace, v: &[Complex64]) -> Result<SupportFunctional> {
    space.check_vector(v)?;
    let n = space.norm(v);
    if (n - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::Domain {
            what: "||v||",
            value: n,
            expected: "||v|| = 1",
        });
    }
    let weights = match space.norm {
        Norm::Sup => {
            let mut index = 0;
            for (i, c) in v.iter().enumerate() {
                if c.norm() > v[index].norm() {
                    index = i;
                }
            }
            let mut w = vec![Complex64::default(); v.len()];
            w[index] = v[index].conj() / v[index].norm();
            w
        }
        Norm::Euclidean => v.iter().map(|c| c.conj()).collect(),
    };
    Ok(SupportFunctional {
        space,
        base: v.to_vec(),
        weights,
    })
}

impl SupportFunctional {
    pub fn space(&self) -> NormedSpace {
        self.space
    }

    pub fn base_point(&self) -> &[Complex64] {
        &self.base
    }

    pub fn apply(&self, z: &[Complex64]) -> Complex64 {
        self.weights.iter().zip(z).map(|(w, c)| w * c).sum()
    }

    /// Operator norm, computed from the dual norm of the weights.
    pub fn operator_norm(&self) -> f64 {
        match self.space.norm {
            Norm::Sup => self.weights.iter().map(|w| w.norm()).sum(),
            Norm::Euclidean => self.weights.iter().map(|w| w.norm_sqr()).sum::<f64>().sqrt(),
        }
    }

    /// The point `r v` on the ray through the base point.
    pub fn ray(&self, r: f64) -> Vec<Complex64> {
        self.base.iter().map(|c| c * r).collect()
    }
}

/// `mu_n(z) = T_v(z)^{n-1} z`, a Schwarz map of order `n` on the ball.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSchwarzMap {
    order: u32,
    functional: SupportFunctional,
}

impl VectorSchwarzMap {
    pub fn new(order: u32, functional: SupportFunctional) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter("Schwarz map order must be >= 1".into()));
        }
        Ok(Self { order, functional })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn eval(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        self.functional.space.check_in_ball(z)?;
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: &[Complex64]) -> Vec<Complex64> {
        let factor = self.functional.apply(z).powu(self.order - 1);
        z.iter().map(|c| factor * c).collect()
    }
}

/// `f = g o T_v` for a disk function `g`.
#[derive(Debug, Clone)]
pub struct BallFunction {
    profile: ExpandedFunction,
    functional: SupportFunctional,
}

impl BallFunction {
    pub fn compose(g: DiskFunction, functional: SupportFunctional, truncation: usize) -> Result<Self> {
        Ok(Self {
            profile: ExpandedFunction::with_truncation(g, truncation)?,
            functional,
        })
    }

    /// `eta_a = (a - T_v)/(1 - a T_v)`.
    pub fn eta(a: f64, functional: SupportFunctional, truncation: usize) -> Result<Self> {
        check_unit_param("a", a)?;
        Self::compose(DiskFunction::MobiusPhi { a }, functional, truncation)
    }

    /// `xi_a = (a + T_v)/(1 + a T_v)`.
    pub fn xi(a: f64, functional: SupportFunctional, truncation: usize) -> Result<Self> {
        check_unit_param("a", a)?;
        Self::compose(DiskFunction::MobiusF { a }, functional, truncation)
    }

    /// `eta*_a = (a - T_v^q)/(1 - a T_v^q)`.
    pub fn eta_star(a: f64, q: u32, functional: SupportFunctional, truncation: usize) -> Result<Self> {
        check_unit_param("a", a)?;
        Self::compose(DiskFunction::LacunaryFStar { a, q }, functional, truncation)
    }

    pub fn profile(&self) -> &DiskFunction {
        &self.profile.function
    }

    pub fn a(&self) -> f64 {
        self.profile.a()
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64> {
        self.functional.space.check_in_ball(z)?;
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: &[Complex64]) -> Complex64 {
        self.profile.function.evaluate(self.functional.apply(z)).expect("|T_v(z)| <= ||z|| < 1")
    }

    /// `P_j(w) = c_j T_v(w)^j`.
    pub fn homogeneous_part(&self, j: usize, w: &[Complex64]) -> Complex64 {
        let c = self.profile.series.coefficients().get(j).copied().unwrap_or_default();
        c * self.functional.apply(w).powu(j as u32)
    }
}

/// The five vector-valued left-hand sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MultidimLhs {
    G,
    H,
    I,
    J,
    K,
}

impl MultidimLhs {
    pub const ALL: [MultidimLhs; 5] = [MultidimLhs::G, MultidimLhs::H, MultidimLhs::I, MultidimLhs::J, MultidimLhs::K];

    /// The one-variable inequality this one reduces to on rays.
    pub fn scalar_theorem(self) -> TheoremId {
        match self {
            MultidimLhs::G => TheoremId::T1,
            MultidimLhs::H => TheoremId::T2,
            MultidimLhs::I => TheoremId::T4,
            MultidimLhs::J => TheoremId::T5,
            MultidimLhs::K => TheoremId::T6,
        }
    }

    /// The extremal ball function used in the sharpness argument.
    pub fn extremal(self, a: f64, q: u32, functional: SupportFunctional, truncation: usize) -> Result<BallFunction> {
        match self {
            MultidimLhs::G | MultidimLhs::K => BallFunction::eta(a, functional, truncation),
            MultidimLhs::H | MultidimLhs::I => BallFunction::xi(a, functional, truncation),
            MultidimLhs::J => BallFunction::eta_star(a, q, functional, truncation),
        }
    }
}

impl fmt::Display for MultidimLhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for MultidimLhs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G" => Ok(MultidimLhs::G),
            "H" => Ok(MultidimLhs::H),
            "I" => Ok(MultidimLhs::I),
            "J" => Ok(MultidimLhs::J),
            "K" => Ok(MultidimLhs::K),
            _ => Err(Error::InvalidParameter(format!("unknown left-hand side `{s}`, expected G, H, I, J or K"))),
        }
    }
}

/// Evaluates the chosen left-hand side at `z`. Sums over homogeneous parts
/// carry the same tail bounds as the one-variable functionals; the
/// `r`-dependent weights use `r = ||z||`.
pub fn multidim_lhs(
    which: MultidimLhs,
    f: &BallFunction,
    mu_k: &VectorSchwarzMap,
    mu_m: &VectorSchwarzMap,
    params: &TheoremParams,
    z: &[Complex64],
) -> Result<f64> {
    let space = f.functional.space;
    let r = space.check_in_ball(z)?;
    check_positive("p", params.p)?;
    let a = f.a();
    let a0 = f.profile.series.coefficients()[0];
    let series = &f.profile.series;
    let wk = mu_k.eval_unchecked(z);
    // |P_j(mu_k(z))| = |c_j| rho^j
    let rho = f.functional.apply(&wk).norm();
    let rk = r.powi(mu_k.order as i32);
    let weight = 1.0 / (1.0 + a) + rk / (1.0 - rk);
    let at_m = || f.eval_unchecked(&mu_m.eval_unchecked(z));

    let value = match which {
        MultidimLhs::G => {
            a.powf(params.p) + series.majorant_sum(1, rho)? + weight * series.quadratic_norm(rho)? + (at_m() - a0).norm()
        }
        MultidimLhs::H => {
            if params.t >= params.s {
                return Err(Error::InvalidParameter("t must be < s".into()));
            }
            at_m().norm().powf(params.p) + params.lambda * series.lattice_majorant(params.s as usize, params.t as usize, rho)?
        }
        MultidimLhs::I => {
            at_m().norm().powf(params.p)
                + params.lambda * (series.majorant_sum(1, rho)? + weight * series.quadratic_norm(rho)?)
        }
        MultidimLhs::J => {
            let q = params.q;
            if q == 0 {
                return Err(Error::InvalidParameter("q must be >= 1".into()));
            }
            let rqk = rk.powi(q as i32);
            let weight = 1.0 / (1.0 + a) + rqk / (1.0 - rqk);
            a.powf(params.p) + series.lattice_majorant(q as usize, 0, rho)? + weight * series.quadratic_norm(rho)?
        }
        MultidimLhs::K => {
            series.majorant_sum(0, rho)? + weight * series.quadratic_norm(rho)? + (at_m() - a0).norm_sqr()
        }
    };
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReductionPoint {
    pub a: f64,
    pub r: f64,
    pub multidim: f64,
    pub scalar: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub which: MultidimLhs,
    pub dimension: usize,
    pub norm: Norm,
    pub points: usize,
    pub max_abs_diff: f64,
    pub passed: bool,
    pub first_mismatch: Option<ReductionPoint>,
}

impl ReductionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "| lhs | d | norm | points | max abs diff | verdict |\n|---|---|---|---|---|---|\n| {} | {} | {} | {} | {:.3e} | {} |\n",
            self.which,
            self.dimension,
            self.norm,
            self.points,
            self.max_abs_diff,
            if self.passed { "pass" } else { "fail" }
        );
        if let Some(p) = &self.first_mismatch {
            out.push_str(&format!(
                "\nfirst mismatch: a = {}, r = {}, vector = {:.15}, scalar = {:.15}\n",
                p.a, p.r, p.multidim, p.scalar
            ));
        }
        out
    }
}

pub const DEFAULT_REDUCTION_A: [f64; 5] = [0.0, 0.25, 0.5, 0.656854, 0.9];
pub const DEFAULT_REDUCTION_R: [f64; 5] = [0.1, 0.2, 0.25, 1.0 / 3.0, 0.5];

/// Compares the vector left-hand side of the extremal data at `z = r v`
/// against the one-variable left-hand side at `z = r` with monomial Schwarz
/// functions, over the `(a, r)` grid.
pub fn reduction_check(
    which: MultidimLhs,
    params: &TheoremParams,
    dimension: usize,
    norm: Norm,
    a_grid: &[f64],
    r_grid: &[f64],
) -> Result<ReductionReport> {
    let space = NormedSpace::new(dimension, norm)?;
    let functional = support_functional(space, &space.default_base_point())?;
    let k = params.k;
    let mu_k = VectorSchwarzMap::new(k, functional.clone())?;
    let mu_m = VectorSchwarzMap::new(params.m, functional.clone())?;
    let omega_k = SchwarzFunction::monomial(k)?;
    let omega_m = SchwarzFunction::monomial(params.m)?;
    let theorem = which.scalar_theorem();

    let mut report = ReductionReport {
        which,
        dimension,
        norm,
        points: 0,
        max_abs_diff: 0.0,
        passed: true,
        first_mismatch: None,
    };
    for &r in r_grid {
        crate::error::check_radius("r", r)?;
        let truncation = truncation_for(r);
        for &a in a_grid {
            let f = which.extremal(a, params.q, functional.clone(), truncation)?;
            let multidim = multidim_lhs(which, &f, &mu_k, &mu_m, params, &functional.ray(r))?;
            let scalar_f = ExpandedFunction::with_truncation(f.profile().clone(), truncation)?;
            let scalar = theorem.lhs(params, &scalar_f, &omega_k, &omega_m, Complex64::new(r, 0.0))?;
            let diff = (multidim - scalar).abs();
            report.points += 1;
            report.max_abs_diff = report.max_abs_diff.max(diff);
            if report.passed && !(diff <= REDUCTION_TOLERANCE) {
                report.passed = false;
                report.first_mismatch = Some(ReductionPoint { a, r, multidim, scalar });
            }
        }
    }
    Ok(report)
}
