//! Left-hand sides of the refined Bohr inequalities, evaluated pointwise
//! with tail-bounded series terms (so every value is an upper estimate).

use num_complex::Complex64;

use crate::analytic::{check_in_disk, CoefficientSeries, DiskFunction, SchwarzFunction, DEFAULT_TRUNCATION};
use crate::error::{check_positive, Error, Result};

/// Off-lattice coefficients below this modulus count as zero.
pub const LACUNARY_TOLERANCE: f64 = 1e-12;

/// Tail bound targeted by [`truncation_for`].
const TARGET_TAIL: f64 = 1e-13;
const MAX_TRUNCATION: usize = 8192;

/// Smallest truncation order (at least the default) for which the geometric
/// tail `r^{N+1}/(1-r)` at `rho_max` falls below `1e-13`.
pub fn truncation_for(rho_max: f64) -> usize {
    if rho_max <= 0.0 {
        return DEFAULT_TRUNCATION;
    }
    let rho = rho_max.min(1.0 - 1e-6);
    let needed = ((TARGET_TAIL * (1.0 - rho)).ln() / rho.ln()).ceil() as usize;
    needed.clamp(DEFAULT_TRUNCATION, MAX_TRUNCATION)
}

/// A disk function together with its coefficient series, expanded once and
/// reused across grid points.
#[derive(Debug, Clone)]
pub struct ExpandedFunction {
    pub function: DiskFunction,
    pub series: CoefficientSeries,
}

impl ExpandedFunction {
    pub fn new(function: DiskFunction) -> Result<Self> {
        Self::with_truncation(function, DEFAULT_TRUNCATION)
    }

    pub fn with_truncation(function: DiskFunction, n_max: usize) -> Result<Self> {
        let series = function.taylor_coefficients(n_max)?;
        Ok(Self { function, series })
    }

    /// `a = |a_0|`.
    pub fn a(&self) -> f64 {
        self.series.constant_modulus()
    }

    fn a0(&self) -> Complex64 {
        self.series.coefficients()[0]
    }

    fn at(&self, w: Complex64) -> Complex64 {
        self.function.eval_unchecked(w)
    }
}

fn schwarz_values(
    omega_k: &SchwarzFunction,
    omega_m: &SchwarzFunction,
    z: Complex64,
) -> Result<(f64, Complex64)> {
    check_in_disk(z)?;
    Ok((omega_k.eval_unchecked(z).norm(), omega_m.eval_unchecked(z)))
}

/// `A_f(z) = a^p + B_1(f, |w_k(z)|) + A(f_0, |w_k(z)|) + |f(w_m(z)) - a_0|`.
pub fn lhs_a(
    f: &ExpandedFunction,
    omega_k: &SchwarzFunction,
    omega_m: &SchwarzFunction,
    p: f64,
    z: Complex64,
) -> Result<f64> {
    check_positive("p", p)?;
    let (rho, wm) = schwarz_values(omega_k, omega_m, z)?;
    let s = &f.series;
    Ok(f.a().powf(p) + s.majorant_sum(1, rho)? + s.refined_term(rho)? + (f.at(wm) - f.a0()).norm())
}

/// `B_f(z) = |f(w_m(z))|^p + lambda sum_{j>=1} |a_{sj+t}| |w_k(z)|^{sj+t}`.
#[allow(clippy::too_many_arguments)]
pub fn lhs_b(
    f: &ExpandedFunction,
    omega_k: &SchwarzFunction,
    omega_m: &SchwarzFunction,
    p: f64,
    lambda: f64,
    s: u32,
    t: u32,
    z: Complex64,
) -> Result<f64> {
    check_positive("p", p)?;
    check_positive("lambda", lambda)?;
    if s == 0 || t >= s {
        return Err(Error::InvalidParameter("need s >= 1 and 0 <= t < s".into()));
    }
    let (rho, wm) = schwarz_values(omega_k, omega_m, z)?;
    let lattice = f.series.lattice_majorant(s as usize, t as usize, rho)?;
    Ok(f.at(wm).norm().powf(p) + lambda * lattice)
}

/// `C_f(z) = |f(w_m(z))|^p + lambda [B_1(f, |w_k(z)|) + A(f_0, |w_k(z)|)]`.
pub fn lhs_c(
    f: &ExpandedFunction,
    omega_k: &SchwarzFunction,
    omega_m: &SchwarzFunction,
    p: f64,
    lambda: f64,
    z: Complex64,
) -> Result<f64> {
    check_positive("p", p)?;
    check_positive("lambda", lambda)?;
    let (rho, wm) = schwarz_values(omega_k, omega_m, z)?;
    let s = &f.series;
    Ok(f.at(wm).norm().powf(p) + lambda * (s.majorant_sum(1, rho)? + s.refined_term(rho)?))
}

/// `D_f(z)` for a lacunary `f = sum a_{qj} z^{qj}`:
/// `a^p + sum |a_{qj}| rho^{qj} + (1/(1+a) + rho^q/(1-rho^q)) sum |a_{qj}|^2 rho^{2qj}`
/// with `rho = |w_k(z)|`.
pub fn lhs_d(f: &ExpandedFunction, omega_k: &SchwarzFunction, p: f64, q: u32, z: Complex64) -> Result<f64> {
    check_positive("p", p)?;
    if q == 0 {
        return Err(Error::InvalidParameter("q must be >= 1".into()));
    }
    check_in_disk(z)?;
    if let Some((index, modulus)) = f.series.max_off_lattice(q as usize) {
        if modulus > LACUNARY_TOLERANCE {
            return Err(Error::NotLacunary { index, q, modulus });
        }
    }
    let rho = omega_k.eval_unchecked(z).norm();
    let a = f.a();
    let rho_q = rho.powi(q as i32);
    let weight = 1.0 / (1.0 + a) + rho_q / (1.0 - rho_q);
    let s = &f.series;
    Ok(a.powf(p) + s.lattice_majorant(q as usize, 0, rho)? + weight * s.quadratic_norm(rho)?)
}

/// `E_f(z) = B_0(f, |w_k(z)|) + A(f_0, |w_k(z)|) + |f(w_m(z)) - a_0|^2`.
pub fn lhs_e(
    f: &ExpandedFunction,
    omega_k: &SchwarzFunction,
    omega_m: &SchwarzFunction,
    z: Complex64,
) -> Result<f64> {
    let (rho, wm) = schwarz_values(omega_k, omega_m, z)?;
    let s = &f.series;
    Ok(s.majorant_sum(0, rho)? + s.refined_term(rho)? + (f.at(wm) - f.a0()).norm_sqr())
}

/// Closed forms of the left-hand sides on the extremal families with
/// monomial Schwarz functions, evaluated at `z = r`.
pub mod closed_form {
    /// `A_{phi_a}(r) = a^p + (1-a^2) r^k/(1-r^k) + (1-a^2) r^m/(1-a r^m)`.
    pub fn a_phi(a: f64, r: f64, k: u32, m: u32, p: f64) -> f64 {
        let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
        let w = 1.0 - a * a;
        a.powf(p) + w * rk / (1.0 - rk) + w * rm / (1.0 - a * rm)
    }

    /// `B_{f_a}(r) = ((a+r^m)/(1+a r^m))^p + lambda (1-a^2) a^{s+t-1} r^{k(s+t)} / (1 - a^s r^{ks})`.
    #[allow(clippy::too_many_arguments)]
    pub fn b_fa(a: f64, r: f64, lambda: f64, s: u32, t: u32, k: u32, m: u32, p: f64) -> f64 {
        let rm = r.powi(m as i32);
        let (s, t, k) = (s as i32, t as i32, k as i32);
        ((a + rm) / (1.0 + a * rm)).powf(p)
            + lambda * (1.0 - a * a) * a.powi(s + t - 1) * r.powi(k * (s + t)) / (1.0 - a.powi(s) * r.powi(k * s))
    }

    /// `C_{f_a}(r) = ((a+r^m)/(1+a r^m))^p + lambda (1-a^2) r^k/(1-r^k)`.
    pub fn c_fa(a: f64, r: f64, lambda: f64, k: u32, m: u32, p: f64) -> f64 {
        let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
        ((a + rm) / (1.0 + a * rm)).powf(p) + lambda * (1.0 - a * a) * rk / (1.0 - rk)
    }

    /// `D_{f*}(r) = a^p + (1-a^2) r^{kq}/(1-r^{kq})`.
    pub fn d_fstar(a: f64, r: f64, k: u32, q: u32, p: f64) -> f64 {
        let x = r.powi((k * q) as i32);
        a.powf(p) + (1.0 - a * a) * x / (1.0 - x)
    }

    /// `E_{phi_a}(r) = a + (1-a^2) r^k/(1-r^k) + (1-a^2)^2 r^{2m}/(1-a r^m)^2`.
    pub fn e_phi(a: f64, r: f64, k: u32, m: u32) -> f64 {
        let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
        let w = 1.0 - a * a;
        a + w * rk / (1.0 - rk) + w * w * rm * rm / ((1.0 - a * rm) * (1.0 - a * rm))
    }

    /// `1 - Psi_4(r) / ((1 - r^k)(1 + a r^m)^p)`, the identity behind `C_{f_a}`.
    pub fn c_via_psi4(a: f64, r: f64, lambda: f64, k: u32, m: u32, p: f64) -> f64 {
        let (rk, rm) = (r.powi(k as i32), r.powi(m as i32));
        let psi4 = (1.0 + a * rm).powf(p) * (1.0 + (lambda * a * a - lambda - 1.0) * rk) - (1.0 - rk) * (a + rm).powf(p);
        1.0 - psi4 / ((1.0 - rk) * (1.0 + a * rm).powf(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn mono(n: u32) -> SchwarzFunction {
        SchwarzFunction::monomial(n).unwrap()
    }

    fn expanded(f: DiskFunction) -> ExpandedFunction {
        ExpandedFunction::new(f).unwrap()
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn truncation_grows_with_radius() {
        assert_eq!(truncation_for(0.5), DEFAULT_TRUNCATION);
        let n = truncation_for(0.95);
        assert!(n > DEFAULT_TRUNCATION);
        assert!(0.95f64.powi(n as i32 + 1) / 0.05 <= 1.01e-13);
    }

    #[test]
    fn lhs_a_phi_zero_geometric_oracle() {
        let f = expanded(DiskFunction::MobiusPhi { a: 0.0 });
        for (k, m, r) in [(1u32, 1u32, 0.2f64), (2, 3, 0.5), (1, 2, 0.7)] {
            let got = lhs_a(&f, &mono(k), &mono(m), 1.0, re(r)).unwrap();
            let rk = r.powi(k as i32);
            // a = 0: B_1 = rho, A = (1 + rho/(1-rho)) rho^2, last term r^m
            let want = rk + rk * rk / (1.0 - rk) + r.powi(m as i32);
            assert_abs_diff_eq!(got, want, epsilon = 1e-12);
            assert_abs_diff_eq!(got, rk / (1.0 - rk) + r.powi(m as i32), epsilon = 1e-12);
        }
    }

    #[test]
    fn lhs_a_at_origin_is_a_power_p() {
        let f = expanded(DiskFunction::MobiusPhi { a: 0.6 });
        let v = lhs_a(&f, &mono(2), &mono(3), 1.5, re(0.0)).unwrap();
        assert_abs_diff_eq!(v, 0.6f64.powf(1.5), epsilon = 1e-15);
    }

    #[test]
    fn lhs_b_constant_function() {
        let f = expanded(DiskFunction::Constant(re(0.4)));
        let z = Complex64::new(0.3, 0.2);
        let v = lhs_b(&f, &mono(1), &mono(2), 2.0, 3.0, 2, 1, z).unwrap();
        assert_abs_diff_eq!(v, 0.16, epsilon = 1e-15);
    }

    #[test]
    fn lhs_b_matches_eq22_for_f_half() {
        let f = expanded(DiskFunction::MobiusF { a: 0.5 });
        let v = lhs_b(&f, &mono(1), &mono(1), 1.0, 1.0, 1, 0, re(0.2)).unwrap();
        assert_abs_diff_eq!(v, closed_form::b_fa(0.5, 0.2, 1.0, 1, 0, 1, 1, 1.0), epsilon = 1e-12);
    }

    #[test]
    fn lhs_c_identity_function() {
        let f = expanded(DiskFunction::MobiusF { a: 0.0 });
        for r in [0.1, 0.3, 0.381] {
            let v = lhs_c(&f, &mono(1), &mono(1), 1.0, 1.0, re(r)).unwrap();
            assert_abs_diff_eq!(v, r + r / (1.0 - r), epsilon = 1e-12);
            assert_abs_diff_eq!(v, closed_form::c_via_psi4(0.0, r, 1.0, 1, 1, 1.0), epsilon = 1e-12);
        }
    }

    #[test]
    fn lhs_d_minus_z_q() {
        let f = expanded(DiskFunction::LacunaryFStar { a: 0.0, q: 2 });
        let (k, q, r) = (2u32, 2u32, 0.6f64);
        let x = r.powi((k * q) as i32);
        let want = x + (1.0 + x / (1.0 - x)) * x * x;
        let got = lhs_d(&f, &mono(k), 1.0, q, re(r)).unwrap();
        assert_abs_diff_eq!(got, want, epsilon = 1e-12);
    }

    #[test]
    fn lhs_d_rejects_non_lacunary() {
        let f = expanded(DiskFunction::MobiusPhi { a: 0.3 });
        let err = lhs_d(&f, &mono(1), 1.0, 2, re(0.2)).unwrap_err();
        assert!(matches!(err, Error::NotLacunary { index: 1, q: 2, .. }));
    }

    #[test]
    fn lhs_e_phi_zero() {
        let f = expanded(DiskFunction::MobiusPhi { a: 0.0 });
        let r = 0.3;
        let v = lhs_e(&f, &mono(1), &mono(1), re(r)).unwrap();
        assert_abs_diff_eq!(v, r / (1.0 - r) + r * r, epsilon = 1e-12);
        let v0 = lhs_e(&expanded(DiskFunction::MobiusPhi { a: 0.4 }), &mono(1), &mono(1), re(0.0)).unwrap();
        assert_abs_diff_eq!(v0, 0.4, epsilon = 1e-15);
    }

    #[test]
    fn domain_errors() {
        let f = expanded(DiskFunction::MobiusPhi { a: 0.2 });
        assert!(lhs_a(&f, &mono(1), &mono(1), 1.0, re(1.0)).is_err());
        assert!(lhs_a(&f, &mono(1), &mono(1), 0.0, re(0.1)).is_err());
        assert!(lhs_b(&f, &mono(1), &mono(1), 1.0, 1.0, 2, 2, re(0.1)).is_err());
        assert!(lhs_c(&f, &mono(1), &mono(1), 1.0, -1.0, re(0.1)).is_err());
        assert!(lhs_e(&f, &mono(1), &mono(1), re(-1.0)).is_err());
    }
}
