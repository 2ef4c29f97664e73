//! Probes just beyond each radius with the extremal closed forms. A witness
//! (`lhs > 1`) shows the radius cannot be enlarged.

use super::report::{GridPoint, Verdict, VerificationReport, Witness};
use super::theorem::{TheoremId, TheoremParams};
use crate::error::{check_unit_param, Error, Result};
use crate::radius::a_star;

/// Values of `a` approaching 1 from below.
pub const DEFAULT_SHARPNESS_A: [f64; 3] = [1.0 - 1e-2, 1.0 - 1e-3, 1.0 - 1e-4];
pub const DEFAULT_EPSILONS: [f64; 3] = [1e-3, 5e-3, 1e-2];
/// Relative overshoot `r = 1.02 R`.
pub const DEFAULT_FACTOR: f64 = 1.02;
const MAX_EPSILON: f64 = 0.05;

/// Evaluates the extremal closed form at `r = R + eps` for every pair
/// `(eps, a)`. Passes iff some pair gives `lhs > 1`, otherwise returns
/// [`Error::NoWitness`].
pub fn sharpness_probe(
    theorem: TheoremId,
    params: &TheoremParams,
    eps_list: &[f64],
    a_list: &[f64],
) -> Result<VerificationReport> {
    if eps_list.is_empty() || eps_list.iter().any(|&e| !(e > 0.0 && e <= MAX_EPSILON)) {
        return Err(Error::InvalidParameter("epsilons must lie in (0, 0.05]".into()));
    }
    probe(theorem, params, a_list, |radius| eps_list.iter().map(|e| radius + e).collect())
}

/// Like [`sharpness_probe`] with `r = factor * R`.
pub fn sharpness_probe_scaled(
    theorem: TheoremId,
    params: &TheoremParams,
    factor: f64,
    a_list: &[f64],
) -> Result<VerificationReport> {
    if !(factor > 1.0) {
        return Err(Error::InvalidParameter(format!("overshoot factor must exceed 1, got {factor}")));
    }
    probe(theorem, params, a_list, |radius| vec![factor * radius])
}

fn probe(
    theorem: TheoremId,
    params: &TheoremParams,
    a_list: &[f64],
    radii_beyond: impl Fn(f64) -> Vec<f64>,
) -> Result<VerificationReport> {
    theorem.validate(params)?;
    let a_values: Vec<f64> = match params.a {
        Some(a) => vec![a],
        None => a_list.to_vec(),
    };
    if a_values.is_empty() {
        return Err(Error::InvalidParameter("no values of a to probe".into()));
    }
    for &a in &a_values {
        check_unit_param("a", a)?;
    }

    let shared = if theorem.radius_depends_on_a() {
        None
    } else {
        Some(theorem.radius(params, 0.0)?)
    };
    let mut grid = Vec::new();
    let mut best: Option<(GridPoint, f64, f64)> = None;
    for &a in &a_values {
        let radius = match shared {
            Some(r) => r,
            None => theorem.radius(params, a)?,
        };
        for r in radii_beyond(radius) {
            if r >= 1.0 {
                continue;
            }
            let lhs = theorem.closed_form(params, a, r);
            let point = GridPoint {
                fraction: r / radius,
                r,
                theta: 0.0,
                lhs,
            };
            grid.push(point);
            if best.is_none_or(|(b, _, _)| lhs > b.lhs) {
                best = Some((point, a, radius));
            }
        }
    }
    let (point, a, radius) = best.ok_or_else(|| Error::InvalidParameter("every probe radius is >= 1".into()))?;
    if point.lhs <= 1.0 {
        return Err(Error::NoWitness { best_lhs: point.lhs });
    }
    Ok(VerificationReport {
        theorem,
        params: *params,
        radius,
        grid,
        max_lhs: point.lhs,
        margin: 1.0 - point.lhs,
        verdict: Verdict::Pass,
        witness: Some(Witness {
            r: point.r,
            a,
            lhs: point.lhs,
        }),
    })
}

/// The `E_{phi_a}` closed form on both sides of `a*` at the same radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IffBoundary {
    pub r: f64,
    pub below: f64,
    pub above: f64,
}

impl IffBoundary {
    /// `<= 1` just below `a*` and `> 1` just above.
    pub fn holds(&self) -> bool {
        self.below <= 1.0 && self.above > 1.0
    }
}

/// Evaluates the sixth inequality's extremal form at `a* -+ delta`.
pub fn theorem6_boundary(k: u32, m: u32, delta: f64) -> Result<IffBoundary> {
    let params = TheoremParams::km(k, m);
    let r = TheoremId::T6.radius(&params, 0.0)?;
    let a = a_star();
    check_unit_param("a* + delta", a + delta)?;
    check_unit_param("a* - delta", a - delta)?;
    Ok(IffBoundary {
        r,
        below: TheoremId::T6.closed_form(&params, a - delta, r),
        above: TheoremId::T6.closed_form(&params, a + delta, r),
    })
}
