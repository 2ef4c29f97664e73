use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use super::lhs::{truncation_for, ExpandedFunction};
use super::report::{GridPoint, Verdict, VerificationReport, Witness};
use super::theorem::{TheoremId, TheoremParams};
use crate::analytic::{random_lacunary_member, random_member, DiskFunction, SchwarzFunction};
use crate::radius::a_star;
use crate::error::{Error, Result};

/// Slack on the `<= 1` claim.
pub const PASS_TOLERANCE: f64 = 1e-9;

/// Radius fractions of the default verification grid.
pub const DEFAULT_R_FRACTIONS: [f64; 8] = [0.125, 0.25, 0.4, 0.55, 0.7, 0.85, 0.95, 1.0];
pub const DEFAULT_ANGLE_COUNT: usize = 32;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub r_fractions: Vec<f64>,
    pub angle_count: usize,
    /// `(w_k, w_m)` pairs; empty means the monomials `z^k`, `z^m`.
    pub schwarz_pairs: Vec<(SchwarzFunction, SchwarzFunction)>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            r_fractions: DEFAULT_R_FRACTIONS.to_vec(),
            angle_count: DEFAULT_ANGLE_COUNT,
            schwarz_pairs: Vec::new(),
        }
    }
}

/// Largest degree of the random Blaschke members.
const MAX_RANDOM_DEGREE: usize = 4;

/// The extremal family on the theorem's default `a` grid (or the fixed
/// `params.a`) followed by `random_count` Blaschke products drawn from
/// consecutive seeds. Lacunary members are drawn for `T5`; for `T6` only
/// members with `|f(0)| <= a*` are kept, since larger values are excluded by
/// the theorem itself.
pub fn standard_family(theorem: TheoremId, params: &TheoremParams, random_count: usize, seed: u64) -> Vec<DiskFunction> {
    let grid = match params.a {
        Some(a) => vec![a],
        None => theorem.default_extremal_grid(),
    };
    let mut family: Vec<DiskFunction> = grid.into_iter().map(|a| theorem.extremal(params, a)).collect();
    let mut draw = seed;
    let mut added = 0;
    while added < random_count {
        let degree = 1 + (draw % MAX_RANDOM_DEGREE as u64) as usize;
        let member = if theorem == TheoremId::T5 {
            random_lacunary_member(draw, degree, params.q)
        } else {
            random_member(draw, degree, 0)
        };
        draw = draw.wrapping_add(1);
        if theorem == TheoremId::T6 && member.constant_modulus() > a_star() {
            continue;
        }
        family.push(member);
        added += 1;
    }
    family
}

struct MemberOutcome {
    radius: f64,
    a: f64,
    /// indexed by `fraction * angle_count + angle`
    cells: Vec<GridPoint>,
}

/// Evaluates the theorem's left-hand side at `r = fraction * radius` on
/// `angle_count` equally spaced angles for every family member and Schwarz
/// pair. The verdict is pass iff the maximum is at most `1 + 1e-9`.
pub fn verify(
    theorem: TheoremId,
    params: &TheoremParams,
    family: &[DiskFunction],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    theorem.validate(params)?;
    if family.is_empty() {
        return Err(Error::InvalidParameter("verification family is empty".into()));
    }
    if config.angle_count == 0 {
        return Err(Error::InvalidParameter("angle_count must be >= 1".into()));
    }
    if config.r_fractions.is_empty() || config.r_fractions.iter().any(|&f| !(f > 0.0 && f <= 1.0)) {
        return Err(Error::InvalidParameter("radius fractions must lie in (0, 1]".into()));
    }

    let pairs = schwarz_pairs(theorem, params, config)?;
    let shared_radius = if theorem.radius_depends_on_a() {
        None
    } else {
        Some(theorem.radius(params, 0.0)?)
    };

    let outcomes: Vec<MemberOutcome> = family
        .par_iter()
        .map(|f| evaluate_member(theorem, params, f, &pairs, config, shared_radius))
        .collect::<Result<_>>()?;

    let cell_count = config.r_fractions.len() * config.angle_count;
    let mut grid: Vec<GridPoint> = outcomes[0].cells.clone();
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for outcome in &outcomes {
        debug_assert_eq!(outcome.cells.len(), cell_count);
        for (slot, cell) in grid.iter_mut().zip(&outcome.cells) {
            if cell.lhs > slot.lhs {
                *slot = *cell;
            }
            if cell.lhs > best.0 {
                best = (cell.lhs, cell.r, outcome.a);
            }
        }
    }
    let radius = outcomes.iter().map(|o| o.radius).fold(f64::INFINITY, f64::min);
    let max_lhs = best.0;
    let pass = max_lhs <= 1.0 + PASS_TOLERANCE;
    Ok(VerificationReport {
        theorem,
        params: *params,
        radius,
        grid,
        max_lhs,
        margin: 1.0 - max_lhs,
        verdict: Verdict::from_pass(pass),
        witness: (!pass).then_some(Witness {
            r: best.1,
            a: best.2,
            lhs: max_lhs,
        }),
    })
}

fn schwarz_pairs(
    theorem: TheoremId,
    params: &TheoremParams,
    config: &VerifyConfig,
) -> Result<Vec<(SchwarzFunction, SchwarzFunction)>> {
    let k = theorem.series_order(params);
    let identity_k = matches!(theorem, TheoremId::ThmAFirst | TheoremId::ThmASecond);
    if config.schwarz_pairs.is_empty() {
        return Ok(vec![(SchwarzFunction::monomial(k)?, SchwarzFunction::monomial(params.m)?)]);
    }
    config
        .schwarz_pairs
        .iter()
        .map(|(wk, wm)| {
            if wm.order() != params.m {
                return Err(Error::InvalidParameter(format!(
                    "w_m has order {} but m = {}",
                    wm.order(),
                    params.m
                )));
            }
            if identity_k {
                return Ok((SchwarzFunction::monomial(1)?, wm.clone()));
            }
            if wk.order() != k {
                return Err(Error::InvalidParameter(format!("w_k has order {} but k = {k}", wk.order())));
            }
            Ok((wk.clone(), wm.clone()))
        })
        .collect()
}

fn evaluate_member(
    theorem: TheoremId,
    params: &TheoremParams,
    f: &DiskFunction,
    pairs: &[(SchwarzFunction, SchwarzFunction)],
    config: &VerifyConfig,
    shared_radius: Option<f64>,
) -> Result<MemberOutcome> {
    f.validate()?;
    let a = f.constant_modulus();
    let radius = match shared_radius {
        Some(r) => r,
        None => theorem.radius(params, a)?,
    };
    let max_fraction = config.r_fractions.iter().copied().fold(0.0, f64::max);
    let expanded = ExpandedFunction::with_truncation(f.clone(), truncation_for(radius * max_fraction))?;

    let mut cells = Vec::with_capacity(config.r_fractions.len() * config.angle_count);
    for &fraction in &config.r_fractions {
        let r = fraction * radius;
        for j in 0..config.angle_count {
            let theta = TAU * j as f64 / config.angle_count as f64;
            let z = Complex64::from_polar(r, theta);
            let mut lhs = f64::NEG_INFINITY;
            for (wk, wm) in pairs {
                lhs = lhs.max(theorem.lhs(params, &expanded, wk, wm, z)?);
            }
            cells.push(GridPoint { fraction, r, theta, lhs });
        }
    }
    Ok(MemberOutcome { radius, a, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::a_star;
    use num_complex::Complex64;

    fn phi_family(grid: &[f64]) -> Vec<DiskFunction> {
        grid.iter().map(|&a| DiskFunction::MobiusPhi { a }).collect()
    }

    #[test]
    fn theorem1_extremal_family_passes() {
        let params = TheoremParams::km(1, 2).with_p(1.0);
        let config = VerifyConfig {
            r_fractions: vec![0.5, 0.9, 1.0],
            ..Default::default()
        };
        let report = verify(TheoremId::T1, &params, &phi_family(&[0.0, 0.3, 0.656, 0.9]), &config).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!((report.radius - (6f64.sqrt() - 1.0) / 5.0).abs() < 1e-12);
        assert_eq!(report.grid.len(), 3 * DEFAULT_ANGLE_COUNT);
        assert!(report.witness.is_none());
    }

    #[test]
    fn theorem6_fails_above_a_star() {
        let params = TheoremParams::km(1, 1);
        let report = verify(TheoremId::T6, &params, &phi_family(&[0.9]), &VerifyConfig::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert!(w.lhs > 1.0);
        assert!((w.a - 0.9).abs() < 1e-15);
        let ok = verify(TheoremId::T6, &params, &phi_family(&[a_star() - 0.01]), &VerifyConfig::default()).unwrap();
        assert_eq!(ok.verdict, Verdict::Pass);
    }

    #[test]
    fn constant_zero_passes_everywhere() {
        let zero = vec![DiskFunction::Constant(Complex64::new(0.0, 0.0))];
        for id in [TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T6] {
            let report = verify(id, &TheoremParams::km(1, 1), &zero, &VerifyConfig::default()).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "{id}");
            assert_eq!(report.max_lhs, 0.0, "{id}");
        }
    }

    #[test]
    fn mismatched_schwarz_order_rejected() {
        let config = VerifyConfig {
            schwarz_pairs: vec![(SchwarzFunction::monomial(2).unwrap(), SchwarzFunction::monomial(1).unwrap())],
            ..Default::default()
        };
        let err = verify(TheoremId::T1, &TheoremParams::km(1, 1), &phi_family(&[0.5]), &config);
        assert!(err.is_err());
    }

    #[test]
    fn bad_config_rejected() {
        let family = phi_family(&[0.5]);
        let params = TheoremParams::km(1, 1);
        let config = VerifyConfig {
            r_fractions: vec![1.5],
            ..Default::default()
        };
        assert!(verify(TheoremId::T1, &params, &family, &config).is_err());
        assert!(verify(TheoremId::T1, &params, &[], &VerifyConfig::default()).is_err());
    }
}
