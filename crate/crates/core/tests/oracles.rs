//! Worked examples with independently derived or published values.

use approx::assert_abs_diff_eq;
use bohr_core::analytic::{random_member, CoefficientSeries, DiskFunction, SchwarzFunction};
use bohr_core::lab::{
    closed_form, lhs_a, lhs_b, lhs_c, lhs_d, lhs_e, psi6, sharpness_probe, truncation_for, verify, ExpandedFunction,
    TheoremId, TheoremParams, Verdict, VerifyConfig,
};
use bohr_core::multidim::{support_functional, NormedSpace, Norm, VectorSchwarzMap};
use bohr_core::radius::{
    a_star, infimum_oracle, psi1, psi2, psi3, psi4, psi5, radius_r5, solve, Equation, RadiusQuery, DEFAULT_TOL,
    RESIDUAL_BOUND,
};
use bohr_core::{Error, TableSpec};
use num_complex::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn expanded(f: DiskFunction, r: f64) -> ExpandedFunction {
    ExpandedFunction::with_truncation(f, truncation_for(r)).unwrap()
}

fn mono(n: u32) -> SchwarzFunction {
    SchwarzFunction::monomial(n).unwrap()
}

fn value(q: RadiusQuery) -> f64 {
    let res = solve(&q, DEFAULT_TOL).unwrap();
    assert!(res.residual.abs() <= RESIDUAL_BOUND);
    res.value
}

#[test]
fn coefficient_expansions() {
    let coeffs = |f: DiskFunction, n| -> Vec<f64> {
        f.taylor_coefficients(n).unwrap().coefficients().iter().map(|z| z.re).collect()
    };
    assert_eq!(coeffs(DiskFunction::MobiusPhi { a: 0.0 }, 3), vec![0.0, -1.0, 0.0, 0.0]);
    let phi = coeffs(DiskFunction::MobiusPhi { a: 0.5 }, 2);
    let f = coeffs(DiskFunction::MobiusF { a: 0.5 }, 2);
    for (got, want) in phi.iter().zip([0.5, -0.75, -0.375]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
    }
    for (got, want) in f.iter().zip([0.5, 0.75, -0.375]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
    }
}

#[test]
fn series_functionals_match_geometric_sums() {
    let r = 0.25;
    let s = DiskFunction::MobiusF { a: 0.5 }.taylor_coefficients(truncation_for(r)).unwrap();
    assert_abs_diff_eq!(s.majorant_sum(1, r).unwrap(), 0.75 * 0.25 / 0.875, epsilon = 1e-12);
    for a in [0.0, 0.3, 0.8] {
        let r = 0.6;
        let s = DiskFunction::MobiusPhi { a }.taylor_coefficients(truncation_for(r)).unwrap();
        let w = 1.0 - a * a;
        assert_abs_diff_eq!(s.majorant_sum(1, r).unwrap(), w * r / (1.0 - a * r), epsilon = 1e-12);
        assert_abs_diff_eq!(s.quadratic_norm(r).unwrap(), w * w * r * r / (1.0 - a * a * r * r), epsilon = 1e-12);
        assert_abs_diff_eq!(
            s.refined_term(r).unwrap(),
            w * w * r * r / ((1.0 + a) * (1.0 - r) * (1.0 - a * r)),
            epsilon = 1e-12
        );
    }
    let phi0 = DiskFunction::MobiusPhi { a: 0.0 }.taylor_coefficients(64).unwrap();
    assert_abs_diff_eq!(phi0.refined_term(1.0 / 3.0).unwrap(), 1.0 / 6.0, epsilon = 1e-15);
    let zero = CoefficientSeries::zero();
    assert_eq!(zero.majorant_sum(0, 0.9).unwrap(), 0.0);
    assert_eq!(zero.quadratic_norm(0.9).unwrap(), 0.0);
}

#[test]
fn evaluations() {
    assert_abs_diff_eq!(DiskFunction::MobiusPhi { a: 0.5 }.evaluate(c(0.5)).unwrap().norm(), 0.0, epsilon = 1e-16);
    let v = DiskFunction::LacunaryFStar { a: 0.5, q: 2 }.evaluate(c(0.5)).unwrap();
    assert_abs_diff_eq!(v.re, 2.0 / 7.0, epsilon = 1e-15);
    assert!(DiskFunction::MobiusPhi { a: 0.5 }.evaluate(c(1.0)).is_err());
    let w = SchwarzFunction::monomial(3).unwrap().evaluate(c(0.5)).unwrap();
    assert_abs_diff_eq!(w.re, 0.125, epsilon = 1e-16);
    let b = SchwarzFunction::blaschke_times_monomial(2, vec![c(0.5)], 0.0).unwrap();
    assert_abs_diff_eq!(b.evaluate(c(0.25)).unwrap().re, -1.0 / 56.0, epsilon = 1e-16);
}

#[test]
fn random_member_satisfies_wiener() {
    let s = random_member(7, 3, 0).taylor_coefficients(256).unwrap();
    let bound = 1.0 - s.constant_modulus().powi(2);
    assert!(s.coefficients()[1..].iter().all(|a| a.norm() <= bound + 1e-10));
}

#[test]
fn psi_examples() {
    assert_abs_diff_eq!(psi1(0.2, 1, 1, 1.0).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi1(1.0 / 3.0, 1, 1, 2.0).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi2(5f64.sqrt() - 2.0, 1.0, 1, 0, 1.0, 1, 1).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi2(0.5, 1.0, 1, 0, 2.0, 1, 2).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi3(1.0 / 3.0, 1.0, 2.0, 1, 1).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi3(5f64.sqrt() - 2.0, 1.0, 1.0, 1, 1).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi4((3.0 - 5f64.sqrt()) / 2.0, 1.0, 1.0, 0.0, 1, 1).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi4(0.472213, 1.0, 3.0, 0.0, 1, 1).unwrap(), 0.0, epsilon = 1e-6);
    assert_abs_diff_eq!(psi5(0.5, 0.0, 1.0, 1, 1).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(psi5(0.7, 1.0, 2.5, 2, 3).unwrap(), 0.0, epsilon = 1e-15);
    assert!(psi1(1.0, 1, 1, 1.0).is_err());
}

#[test]
fn solve_examples() {
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::R1).k(1).m(2).p(1.0)), 0.289898, epsilon = 5e-7);
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::R1).k(1).m(2).p(2.0)), 0.434259, epsilon = 5e-7);
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::AlphaKMP).k(2).m(1).p(1.0)), 0.414214, epsilon = 5e-7);
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::ZetaM).m(1)), 0.2, epsilon = 1e-12);
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::EtaM).m(1)), 1.0 / 3.0, epsilon = 1e-12);
    assert_abs_diff_eq!(value(RadiusQuery::new(Equation::R5).k(1).q(1).p(2.0)), 0.5, epsilon = 1e-12);
    let err = solve(&RadiusQuery::new(Equation::R1).p(3.0), DEFAULT_TOL).unwrap_err();
    assert!(matches!(err, Error::Domain { .. }));
}

#[test]
fn r5_and_infimum_examples() {
    assert_abs_diff_eq!(radius_r5(1, 2.0, 1).unwrap(), 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(radius_r5(1, 1.0, 1).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
    assert_abs_diff_eq!(radius_r5(1, 1e6, 1).unwrap(), 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(infimum_oracle(2.0, 10_000).unwrap(), 0.5, epsilon = 1e-6);
    assert_abs_diff_eq!(infimum_oracle(1.0, 10_000).unwrap(), 1.0 / 3.0, epsilon = 1e-6);
    assert_abs_diff_eq!(infimum_oracle(4.0, 10_000).unwrap(), 0.5, epsilon = 1e-6);
}

#[test]
fn lhs_a_examples() {
    let (r, k, m) = (0.3, 2, 3);
    let z = c(r);
    let f0 = expanded(DiskFunction::MobiusPhi { a: 0.0 }, r);
    let rk = r.powi(k as i32);
    let got = lhs_a(&f0, &mono(k), &mono(m), 1.0, z).unwrap();
    // The refined term of phi_0 adds rho^2 (1 + rho/(1-rho)) = rho^2/(1-rho).
    assert_abs_diff_eq!(got, rk + rk * rk / (1.0 - rk) + r.powi(m as i32), epsilon = 1e-12);
    assert_abs_diff_eq!(got, rk / (1.0 - rk) + r.powi(m as i32), epsilon = 1e-12);
    for a in [0.2, 0.7, 0.95] {
        let f = expanded(DiskFunction::MobiusPhi { a }, r);
        let got = lhs_a(&f, &mono(k), &mono(m), 1.5, z).unwrap();
        let w = 1.0 - a * a;
        let want = 1.0 + w * (rk / (1.0 - rk) + r.powi(3) / (1.0 - a * r.powi(3)) - (1.0 - a.powf(1.5)) / w);
        assert_abs_diff_eq!(got, want, epsilon = 1e-12);
    }
    let zero = lhs_a(&expanded(DiskFunction::MobiusPhi { a: 0.4 }, 0.0), &mono(1), &mono(1), 2.0, c(0.0)).unwrap();
    assert_abs_diff_eq!(zero, 0.16, epsilon = 1e-15);
}

#[test]
fn lhs_b_example_against_closed_form() {
    let f = expanded(DiskFunction::MobiusF { a: 0.5 }, 0.2);
    let got = lhs_b(&f, &mono(1), &mono(1), 1.0, 1.0, 1, 0, c(0.2)).unwrap();
    assert_abs_diff_eq!(got, closed_form::b_fa(0.5, 0.2, 1.0, 1, 0, 1, 1, 1.0), epsilon = 1e-12);
    let constant = expanded(DiskFunction::Constant(c(0.6)), 0.5);
    let got = lhs_b(&constant, &mono(2), &mono(1), 2.0, 3.0, 2, 1, c(0.5)).unwrap();
    assert_abs_diff_eq!(got, 0.36, epsilon = 1e-15);
}

#[test]
fn lhs_c_examples() {
    let (a, r) = (0.6, 0.35);
    let f = expanded(DiskFunction::MobiusF { a }, r);
    let got = lhs_c(&f, &mono(2), &mono(1), 1.5, 2.0, c(r)).unwrap();
    assert_abs_diff_eq!(got, closed_form::c_fa(a, r, 2.0, 2, 1, 1.5), epsilon = 1e-12);
    let f0 = expanded(DiskFunction::MobiusF { a: 0.0 }, r);
    let got = lhs_c(&f0, &mono(1), &mono(1), 1.0, 1.0, c(r)).unwrap();
    assert_abs_diff_eq!(got, closed_form::c_via_psi4(0.0, r, 1.0, 1, 1, 1.0), epsilon = 1e-12);
    let psi = psi4(r, 1.0, 1.0, 0.0, 1, 1).unwrap();
    assert_abs_diff_eq!(got, 1.0 - psi / (1.0 - r), epsilon = 1e-12);
}

#[test]
fn lhs_d_examples() {
    let (r, k, q): (f64, u32, u32) = (0.5, 2, 2);
    let x = r.powi((k * q) as i32);
    for a in [0.0, 0.5, 0.9] {
        let f = expanded(DiskFunction::LacunaryFStar { a, q }, r);
        let got = lhs_d(&f, &mono(k), 1.0, q, c(r)).unwrap();
        assert_abs_diff_eq!(got, a + (1.0 - a * a) * x / (1.0 - x), epsilon = 1e-12);
    }
    let f = expanded(DiskFunction::LacunaryFStar { a: 0.0, q }, r);
    let got = lhs_d(&f, &mono(k), 1.0, q, c(r)).unwrap();
    assert_abs_diff_eq!(got, x + (1.0 + x / (1.0 - x)) * x * x, epsilon = 1e-12);
    let not_lacunary = expanded(DiskFunction::MobiusPhi { a: 0.5 }, r);
    assert!(matches!(lhs_d(&not_lacunary, &mono(1), 1.0, 2, c(r)), Err(Error::NotLacunary { .. })));
}

#[test]
fn lhs_e_examples() {
    let r = 1.0 / 3.0;
    let f = expanded(DiskFunction::MobiusPhi { a: a_star() }, r);
    let got = lhs_e(&f, &mono(1), &mono(1), c(r)).unwrap();
    assert_abs_diff_eq!(got, 1.0, epsilon = 1e-12);
    let f0 = expanded(DiskFunction::MobiusPhi { a: 0.0 }, r);
    assert_abs_diff_eq!(lhs_e(&f0, &mono(1), &mono(1), c(r)).unwrap(), 0.5 + 1.0 / 9.0, epsilon = 1e-12);
    assert_abs_diff_eq!(lhs_e(&f0, &mono(1), &mono(1), c(0.0)).unwrap(), 0.0, epsilon = 1e-15);
}

#[test]
fn verify_examples() {
    let family: Vec<DiskFunction> = [0.0, 0.3, 0.656, 0.9].iter().map(|&a| DiskFunction::MobiusPhi { a }).collect();
    let config = VerifyConfig {
        r_fractions: vec![0.5, 0.9, 1.0],
        ..VerifyConfig::default()
    };
    let params = TheoremParams::km(1, 2).with_p(1.0);
    let report = verify(TheoremId::T1, &params, &family, &config).unwrap();
    assert_eq!(report.verdict, Verdict::Pass);

    let report = verify(
        TheoremId::T6,
        &TheoremParams::km(1, 1),
        &[DiskFunction::MobiusPhi { a: 0.9 }],
        &VerifyConfig::default(),
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert!(report.max_lhs > 1.0);
}

#[test]
fn sharpness_examples() {
    let t1 = sharpness_probe(TheoremId::T1, &TheoremParams::km(1, 1).with_p(2.0), &[0.01], &[0.999]).unwrap();
    assert!((t1.witness.unwrap().r - 0.343333).abs() < 1e-6);
    let t2 = sharpness_probe(TheoremId::T2, &TheoremParams::km(1, 1), &[0.01], &[0.999]).unwrap();
    assert!(t2.witness.unwrap().r > 5f64.sqrt() - 2.0);
    let t4 = sharpness_probe(TheoremId::T4, &TheoremParams::km(1, 1).with_a(0.0), &[0.01], &[]).unwrap();
    assert!(t4.witness.unwrap().r > (3.0 - 5f64.sqrt()) / 2.0);
    // At R5 itself the closed form approaches 1 from below as a -> 1.
    let params = TheoremParams::km(1, 1).with_p(1.0);
    let r5 = radius_r5(1, 1.0, 1).unwrap();
    for a in [0.9, 0.99, 0.999, 0.9999] {
        let v = TheoremId::T5.closed_form(&params, a, r5);
        assert!(v <= 1.0 + 1e-15);
        assert!(v > 1.0 - (1.0 - a));
    }
}

#[test]
fn psi6_examples() {
    assert_eq!(psi6(0.0, 2, 3), 0.0);
    assert!(psi6(3f64.powf(-0.5), 2, 3) >= 0.0);
}

#[test]
fn multidim_examples() {
    let sup = NormedSpace::new(2, Norm::Sup).unwrap();
    let t = support_functional(sup, &[c(1.0), c(0.0)]).unwrap();
    let mu = VectorSchwarzMap::new(2, t.clone()).unwrap();
    let w = mu.eval(&[c(0.3), c(0.5)]).unwrap();
    assert_abs_diff_eq!(w[0].re, 0.09, epsilon = 1e-15);
    assert_abs_diff_eq!(w[1].re, 0.15, epsilon = 1e-15);
    let id = VectorSchwarzMap::new(1, t).unwrap();
    assert_eq!(id.eval(&[c(0.3), c(0.5)]).unwrap(), vec![c(0.3), c(0.5)]);
}

#[test]
fn table_spot_values() {
    let lookup = |id: u8, column: &str, row: u32| -> f64 {
        let t = TableSpec::new(id).unwrap().compute(DEFAULT_TOL).unwrap();
        t.cells.iter().find(|c| c.column == column && c.row == row).unwrap().value
    };
    assert_abs_diff_eq!(lookup(1, "R^1_{1,m}", 3), 0.318201, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(1, "R^1_{5,m}", 10), 0.780637, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(1, "R^2_{1,m}", 20), 0.500000, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(2, "alpha_{1,m,1}", 1), 0.236068, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(2, "alpha_{5,m,1}", 20), 0.800252, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(2, "alpha_{k,1,1}", 20), 0.850170, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(3, "beta_{k,1,3}", 1), 0.472213, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(3, "beta_{k,1,3}", 8), 0.851600, epsilon = 5e-7);
    assert_abs_diff_eq!(lookup(3, "beta_{1,1,p}", 8), 0.499037, epsilon = 5e-7);
}
