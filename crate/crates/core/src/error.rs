use thiserror::Error;

/// Errors raised by the solvers, evaluators and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside its domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no sign change of the defining function in (0, {upper}) for {query}")]
    NoRootFound { query: String, upper: f64 },

    #[error("coefficient a_{index} = {modulus:e} lies off the lattice qZ (q = {q})")]
    NotLacunary { index: usize, q: u32, modulus: f64 },

    #[error("no grid point exceeded 1; best lhs = {best_lhs}")]
    NoWitness { best_lhs: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks `0 <= r < 1`.
pub(crate) fn check_radius(what: &'static str, r: f64) -> Result<()> {
    if r.is_finite() && (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: r,
            expected: "0 <= r < 1",
        })
    }
}

/// Checks `0 <= a < 1`.
pub(crate) fn check_unit_param(what: &'static str, a: f64) -> Result<()> {
    if a.is_finite() && (0.0..1.0).contains(&a) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: a,
            expected: "0 <= a < 1",
        })
    }
}

pub(crate) fn check_positive(what: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: x,
            expected: "x > 0",
        })
    }
}
