//! Fixtures shared by the criterion benches.

use bohr_core::analytic::random_member;
use bohr_core::{DiskFunction, Equation, RadiusQuery};

/// A spread of radius queries covering every defining equation.
pub fn sample_queries() -> Vec<RadiusQuery> {
    vec![
        RadiusQuery::new(Equation::R1).k(1).m(3).p(1.0),
        RadiusQuery::new(Equation::R2).k(1).m(1).p(1.0),
        RadiusQuery::new(Equation::R3).k(2).m(3).p(2.0),
        RadiusQuery::new(Equation::R4).k(1).m(1).p(3.0).a(0.5),
        RadiusQuery::new(Equation::AlphaKMP).k(5).m(20).p(1.0),
        RadiusQuery::new(Equation::BetaKMP).k(8).m(1).p(3.0),
        RadiusQuery::new(Equation::ZetaM).m(4),
        RadiusQuery::new(Equation::EtaM).m(4),
    ]
}

/// Random Blaschke products of increasing degree.
pub fn sample_functions() -> Vec<DiskFunction> {
    (1..=4).map(|degree| random_member(degree as u64, degree, 0)).collect()
}
