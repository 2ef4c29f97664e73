use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::series::CoefficientSeries;
use crate::error::{check_unit_param, Error, Result};

/// `u * z^n * prod_j (z - c_j) / (1 - conj(c_j) z)` with `|u| = 1` and
/// every `|c_j| < 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
    rotation: Complex64,
    order_at_zero: u32,
}

impl BlaschkeProduct {
    /// `rotation` is the argument (radians) of the unimodular factor.
    pub fn new(zeros: Vec<Complex64>, rotation: f64, order_at_zero: u32) -> Result<Self> {
        let product = Self {
            zeros,
            rotation: Complex64::from_polar(1.0, rotation),
            order_at_zero,
        };
        product.validate()?;
        Ok(product)
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn rotation(&self) -> Complex64 {
        self.rotation
    }

    pub fn order_at_zero(&self) -> u32 {
        self.order_at_zero
    }

    /// Number of zeros counted with multiplicity, including those at 0.
    pub fn degree(&self) -> usize {
        self.zeros.len() + self.order_at_zero as usize
    }

    fn validate(&self) -> Result<()> {
        for c in &self.zeros {
            let m = c.norm();
            if !(m < 1.0) {
                return Err(Error::Domain {
                    what: "Blaschke zero modulus",
                    value: m,
                    expected: "|z_j| < 1",
                });
            }
        }
        Ok(())
    }

    pub(crate) fn eval(&self, z: Complex64) -> Complex64 {
        let mut value = self.rotation * z.powu(self.order_at_zero);
        for c in &self.zeros {
            value *= (z - c) / (1.0 - c.conj() * z);
        }
        value
    }

    /// Coefficients `b_0..b_{n_max}` by long division of
    /// `u z^n prod (z - c_j)` by `prod (1 - conj(c_j) z)`.
    pub(crate) fn coefficients(&self, n_max: usize) -> Vec<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);

        let mut numerator = vec![zero; self.order_at_zero as usize];
        numerator.push(self.rotation);
        let mut denominator = vec![one];
        for c in &self.zeros {
            numerator = poly_mul(&numerator, &[-c, one]);
            denominator = poly_mul(&denominator, &[one, -c.conj()]);
        }

        let mut out = vec![zero; n_max + 1];
        for n in 0..=n_max {
            let mut acc = numerator.get(n).copied().unwrap_or(zero);
            for (i, d) in denominator.iter().enumerate().skip(1).take(n) {
                acc -= d * out[n - i];
            }
            out[n] = acc;
        }
        out
    }
}

fn poly_mul(p: &[Complex64], q: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// An evaluatable self-map of the unit disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiskFunction {
    Blaschke(BlaschkeProduct),
    /// `phi_a(z) = (a - z) / (1 - a z)`.
    MobiusPhi { a: f64 },
    /// `f_a(z) = (z + a) / (1 + a z)`.
    MobiusF { a: f64 },
    /// `f*(z) = (a - z^q) / (1 - a z^q)`.
    LacunaryFStar { a: f64, q: u32 },
    /// A constant of modulus at most one.
    Constant(Complex64),
}

impl DiskFunction {
    pub fn validate(&self) -> Result<()> {
        match self {
            DiskFunction::Blaschke(b) => b.validate(),
            DiskFunction::MobiusPhi { a } | DiskFunction::MobiusF { a } => check_unit_param("a", *a),
            DiskFunction::LacunaryFStar { a, q } => {
                if *q == 0 {
                    return Err(Error::InvalidParameter("lacunary gap q must be >= 1".into()));
                }
                check_unit_param("a", *a)
            }
            DiskFunction::Constant(c) => {
                if c.norm() <= 1.0 {
                    Ok(())
                } else {
                    Err(Error::Domain {
                        what: "|constant|",
                        value: c.norm(),
                        expected: "|c| <= 1",
                    })
                }
            }
        }
    }

    /// Closed-form value at `z`, `|z| < 1`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        self.validate()?;
        Ok(self.eval_unchecked(z))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        match self {
            DiskFunction::Blaschke(b) => b.eval(z),
            DiskFunction::MobiusPhi { a } => (*a - z) / (1.0 - *a * z),
            DiskFunction::MobiusF { a } => (z + *a) / (1.0 + *a * z),
            DiskFunction::LacunaryFStar { a, q } => {
                let w = z.powu(*q);
                (*a - w) / (1.0 - *a * w)
            }
            DiskFunction::Constant(c) => *c,
        }
    }

    /// Taylor coefficients `a_0..a_{n_max}` with the Wiener tail bound.
    pub fn taylor_coefficients(&self, n_max: usize) -> Result<CoefficientSeries> {
        self.validate()?;
        let zero = Complex64::new(0.0, 0.0);
        let real = |x: f64| Complex64::new(x, 0.0);
        let coefficients = match self {
            DiskFunction::Blaschke(b) => b.coefficients(n_max),
            DiskFunction::MobiusPhi { a } => {
                let scale = 1.0 - a * a;
                (0..=n_max)
                    .map(|j| match j {
                        0 => real(*a),
                        _ => real(-scale * a.powi(j as i32 - 1)),
                    })
                    .collect()
            }
            DiskFunction::MobiusF { a } => {
                let scale = 1.0 - a * a;
                (0..=n_max)
                    .map(|j| match j {
                        0 => real(*a),
                        _ => real(scale * (-a).powi(j as i32 - 1)),
                    })
                    .collect()
            }
            DiskFunction::LacunaryFStar { a, q } => {
                let q = *q as usize;
                let scale = 1.0 - a * a;
                (0..=n_max)
                    .map(|n| {
                        if n == 0 {
                            real(*a)
                        } else if n % q == 0 {
                            real(-scale * a.powi((n / q) as i32 - 1))
                        } else {
                            zero
                        }
                    })
                    .collect()
            }
            DiskFunction::Constant(c) => {
                let mut v = vec![zero; n_max + 1];
                v[0] = *c;
                return Ok(CoefficientSeries::exact(v));
            }
        };
        Ok(CoefficientSeries::with_wiener_tail(coefficients))
    }

    /// `|f(0)|`.
    pub fn constant_modulus(&self) -> f64 {
        self.eval_unchecked(Complex64::new(0.0, 0.0)).norm()
    }
}

pub(crate) fn check_in_disk(z: Complex64) -> Result<()> {
    let m = z.norm();
    if m.is_finite() && m < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "|z|",
            value: m,
            expected: "|z| < 1",
        })
    }
}
