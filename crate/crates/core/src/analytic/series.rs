use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_radius, Result};

/// Truncation order used when a caller does not ask for a specific one.
pub const DEFAULT_TRUNCATION: usize = 256;

/// Truncated Taylor coefficients `a_0..a_N` of a disk function together with
/// a bound on the discarded tail `sum_{n>N} |a_n| r^n`.
///
/// The tail bound is the geometric bound `scale * r^{N+1} / (1 - r)`. For
/// members of the unit ball of `H^inf` the Wiener inequality gives
/// `scale = 1 - |a_0|^2`; exact polynomials carry `scale = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSeries {
    coefficients: Vec<Complex64>,
    tail_scale: f64,
}

impl CoefficientSeries {
    /// Series whose discarded tail is controlled by the Wiener bound.
    pub fn with_wiener_tail(coefficients: Vec<Complex64>) -> Self {
        let mut coefficients = coefficients;
        if coefficients.is_empty() {
            coefficients.push(Complex64::new(0.0, 0.0));
        }
        let a0 = coefficients[0].norm();
        let tail_scale = (1.0 - a0 * a0).max(0.0);
        Self {
            coefficients,
            tail_scale,
        }
    }

    /// Series of a polynomial: nothing is discarded.
    pub fn exact(coefficients: Vec<Complex64>) -> Self {
        let mut coefficients = coefficients;
        if coefficients.is_empty() {
            coefficients.push(Complex64::new(0.0, 0.0));
        }
        Self {
            coefficients,
            tail_scale: 0.0,
        }
    }

    /// The identically zero series.
    pub fn zero() -> Self {
        Self::exact(vec![Complex64::new(0.0, 0.0)])
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `|a_0|`.
    pub fn constant_modulus(&self) -> f64 {
        self.coefficients[0].norm()
    }

    pub fn tail_scale(&self) -> f64 {
        self.tail_scale
    }

    /// Upper bound for `sum_{n > N} |a_n| r^n`.
    pub fn tail_bound(&self, r: f64) -> f64 {
        if self.tail_scale == 0.0 || r == 0.0 {
            return 0.0;
        }
        let exponent = self.truncation_order() as f64 + 1.0;
        self.tail_scale * r.powf(exponent) / (1.0 - r)
    }

    /// Upper estimate of `B_N(f, r) = sum_{n >= start} |a_n| r^n`: the
    /// truncated sum plus the tail bound.
    pub fn majorant_sum(&self, start: usize, r: f64) -> Result<f64> {
        check_radius("r", r)?;
        let mut sum = 0.0;
        let mut power = 1.0;
        for (n, c) in self.coefficients.iter().enumerate() {
            if n >= start {
                sum += c.norm() * power;
            }
            power *= r;
        }
        Ok(sum + self.tail_bound(r))
    }

    /// Upper estimate of `sum_{j >= 1} |a_{sj+t}| r^{sj+t}`.
    pub fn lattice_majorant(&self, step: usize, offset: usize, r: f64) -> Result<f64> {
        check_radius("r", r)?;
        assert!(step >= 1, "lattice step must be positive");
        let mut sum = 0.0;
        let mut index = step + offset;
        while index <= self.truncation_order() {
            sum += self.coefficients[index].norm() * r.powi(index as i32);
            index += step;
        }
        Ok(sum + self.tail_bound(r))
    }

    /// Upper estimate of `||f_0||_r^2 = sum_{n >= 1} |a_n|^2 r^{2n}`.
    ///
    /// The tail is bounded by `scale * tail_bound(r^2)`, since every
    /// discarded coefficient obeys `|a_n| <= scale`.
    pub fn quadratic_norm(&self, r: f64) -> Result<f64> {
        check_radius("r", r)?;
        let r2 = r * r;
        let mut sum = 0.0;
        let mut power = r2;
        for c in self.coefficients.iter().skip(1) {
            sum += c.norm_sqr() * power;
            power *= r2;
        }
        Ok(sum + self.tail_scale * self.tail_bound(r2))
    }

    /// `A(f_0, r) = (1/(1 + |a_0|) + r/(1 - r)) * ||f_0||_r^2`.
    pub fn refined_term(&self, r: f64) -> Result<f64> {
        let norm = self.quadratic_norm(r)?;
        let weight = 1.0 / (1.0 + self.constant_modulus()) + r / (1.0 - r);
        Ok(weight * norm)
    }

    /// Horner evaluation of the truncated series.
    pub fn partial_sum(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Largest `|a_n|` over `n` not divisible by `q`.
    pub(crate) fn max_off_lattice(&self, q: usize) -> Option<(usize, f64)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(n, _)| n % q != 0)
            .map(|(n, c)| (n, c.norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn real(xs: &[f64]) -> Vec<Complex64> {
        xs.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn zero_series_functionals_vanish() {
        let s = CoefficientSeries::zero();
        for r in [0.0, 0.3, 0.9] {
            for n in 0..3 {
                assert_eq!(s.majorant_sum(n, r).unwrap(), 0.0);
            }
            assert_eq!(s.quadratic_norm(r).unwrap(), 0.0);
            assert_eq!(s.refined_term(r).unwrap(), 0.0);
        }
    }

    #[test]
    fn radius_one_is_rejected() {
        let s = CoefficientSeries::zero();
        assert!(s.majorant_sum(1, 1.0).is_err());
        assert!(s.quadratic_norm(1.5).is_err());
        assert!(s.refined_term(-0.1).is_err());
        assert!(s.majorant_sum(0, f64::NAN).is_err());
    }

    #[test]
    fn exact_polynomial_has_no_tail() {
        let s = CoefficientSeries::exact(real(&[0.5, 0.25]));
        assert_eq!(s.tail_bound(0.9), 0.0);
        assert_abs_diff_eq!(s.majorant_sum(0, 0.5).unwrap(), 0.625, epsilon = 1e-15);
        assert_abs_diff_eq!(s.majorant_sum(1, 0.5).unwrap(), 0.125, epsilon = 1e-15);
        assert_abs_diff_eq!(s.majorant_sum(5, 0.5).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn wiener_tail_matches_geometric_formula() {
        let s = CoefficientSeries::with_wiener_tail(real(&[0.5, 0.1, 0.1]));
        let r: f64 = 0.5;
        assert_abs_diff_eq!(s.tail_bound(r), 0.75 * r.powi(3) / (1.0 - r), epsilon = 1e-15);
    }

    #[test]
    fn lattice_majorant_picks_arithmetic_progression() {
        let s = CoefficientSeries::exact(real(&[1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]));
        // indices 2j + 1 for j >= 1: 3, 5
        let r: f64 = 0.5;
        let expected = r.powi(3) + r.powi(5);
        assert_abs_diff_eq!(s.lattice_majorant(2, 1, r).unwrap(), expected, epsilon = 1e-15);
    }

    #[test]
    fn partial_sum_is_horner() {
        let s = CoefficientSeries::exact(real(&[1.0, 2.0, 3.0]));
        let z = Complex64::new(0.0, 1.0);
        assert_eq!(s.partial_sum(z), Complex64::new(-2.0, 2.0));
    }
}
