use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::disk::{check_in_disk, BlaschkeProduct};
use crate::error::{Error, Result};

/// A self-map of the disk vanishing to order exactly `order` at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchwarzFunction {
    /// `z^order`.
    Monomial { order: u32 },
    /// `z^order * B(z)` where `B` is a finite Blaschke product with `B(0) != 0`.
    BlaschkeTimesMonomial { order: u32, factor: BlaschkeProduct },
}

impl SchwarzFunction {
    pub fn monomial(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter("Schwarz order must be >= 1".into()));
        }
        Ok(SchwarzFunction::Monomial { order })
    }

    /// `z^order` times the Blaschke product with the given (nonzero) zeros.
    pub fn blaschke_times_monomial(order: u32, zeros: Vec<Complex64>, rotation: f64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter("Schwarz order must be >= 1".into()));
        }
        if zeros.iter().any(|c| c.norm() == 0.0) {
            return Err(Error::InvalidParameter(
                "the Blaschke factor of a Schwarz function must not vanish at 0".into(),
            ));
        }
        let factor = BlaschkeProduct::new(zeros, rotation, 0)?;
        Ok(SchwarzFunction::BlaschkeTimesMonomial { order, factor })
    }

    pub fn order(&self) -> u32 {
        match self {
            SchwarzFunction::Monomial { order } => *order,
            SchwarzFunction::BlaschkeTimesMonomial { order, .. } => *order,
        }
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self, SchwarzFunction::Monomial { .. })
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        match self {
            SchwarzFunction::Monomial { order } => z.powu(*order),
            SchwarzFunction::BlaschkeTimesMonomial { order, factor } => z.powu(*order) * factor.eval(z),
        }
    }
}
