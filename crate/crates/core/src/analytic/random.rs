use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::disk::{BlaschkeProduct, DiskFunction};
use super::schwarz::SchwarzFunction;
use crate::error::Result;

/// Largest modulus of a randomly drawn zero.
pub const MAX_RANDOM_ZERO: f64 = 0.95;
/// Smallest modulus of a zero of the Blaschke factor of a random Schwarz function.
const MIN_SCHWARZ_ZERO: f64 = 0.05;

fn draw_zero(rng: &mut ChaCha8Rng, min_modulus: f64) -> Complex64 {
    let modulus = rng.gen_range(min_modulus..=MAX_RANDOM_ZERO);
    Complex64::from_polar(modulus, rng.gen_range(0.0..TAU))
}

/// A random finite Blaschke product of the given degree times
/// `z^vanishing_order`. Deterministic in `seed`.
pub fn random_member(seed: u64, degree: usize, vanishing_order: u32) -> DiskFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rotation = rng.gen_range(0.0..TAU);
    let zeros = (0..degree).map(|_| draw_zero(&mut rng, 0.0)).collect();
    DiskFunction::Blaschke(
        BlaschkeProduct::new(zeros, rotation, vanishing_order).expect("random zeros lie inside the disk"),
    )
}

/// A random Schwarz function `z^order * B(z)` with `deg B = degree`.
pub fn random_schwarz(seed: u64, degree: usize, order: u32) -> Result<SchwarzFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rotation = rng.gen_range(0.0..TAU);
    let zeros = (0..degree).map(|_| draw_zero(&mut rng, MIN_SCHWARZ_ZERO)).collect();
    SchwarzFunction::blaschke_times_monomial(order, zeros, rotation)
}

/// A random Blaschke product in `z^q`: `g(z^q)` with `deg g = degree`.
/// Every `w` zero of `g` contributes its `q` complex `q`-th roots.
pub fn random_lacunary_member(seed: u64, degree: usize, q: u32) -> DiskFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rotation = rng.gen_range(0.0..TAU);
    let mut zeros = Vec::with_capacity(degree * q as usize);
    for _ in 0..degree {
        let w = draw_zero(&mut rng, 0.0);
        let modulus = w.norm().powf(1.0 / q as f64);
        let arg = w.arg();
        for j in 0..q {
            let theta = (arg + TAU * j as f64) / q as f64;
            zeros.push(Complex64::from_polar(modulus, theta));
        }
    }
    DiskFunction::Blaschke(BlaschkeProduct::new(zeros, rotation, 0).expect("roots lie inside the disk"))
}
