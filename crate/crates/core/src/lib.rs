//! Numerical laboratory for refined Bohr-type inequalities with Schwarz
//! functions: radius equations, pointwise left-hand sides, verification and
//! sharpness grids, and their finite-dimensional counterparts.

// Negated comparisons are used on purpose so that NaN fails every check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod lab;
pub mod multidim;
pub mod radius;
pub mod tables;

pub use analytic::{BlaschkeProduct, CoefficientSeries, DiskFunction, SchwarzFunction};
pub use error::{Error, Result};
pub use lab::{TheoremId, TheoremParams, Verdict, VerificationReport};
pub use multidim::{MultidimLhs, Norm, NormedSpace};
pub use radius::{Equation, RadiusQuery, RadiusResult};
pub use tables::{ComputedTable, TableSpec};
